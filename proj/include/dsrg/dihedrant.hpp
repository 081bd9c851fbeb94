#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "dsrg/number_theory.hpp"
#include "dsrg/residue_multiset.hpp"

namespace dsrg {

/// The Cayley graph Dih(n, X, Y) = Cay(D_n, X u Y.t): rotations x^i for i in X
/// and reflections x^i.t for i in Y. Both exponent sets are kept sorted.
struct DihedrantSpec {
  int n = 0;
  std::vector<int> x;
  std::vector<int> y;

  /// Canonicalizes residues mod n and rejects 0 in X (e is never a connection element)
  /// as well as repeated elements.
  static DihedrantSpec make(int n, std::vector<int> x, std::vector<int> y) {
    if (n < 1) throw std::invalid_argument("DihedrantSpec: n must be positive");
    auto canon = [n](std::vector<int>& s, const char* name) {
      for (int& e : s) e = mod(e, n);
      std::sort(s.begin(), s.end());
      if (std::adjacent_find(s.begin(), s.end()) != s.end())
        throw std::invalid_argument(std::string("DihedrantSpec: repeated element in ") + name);
    };
    canon(x, "X");
    canon(y, "Y");
    if (!x.empty() && x.front() == 0) throw std::invalid_argument("DihedrantSpec: 0 in X would add a loop");
    return DihedrantSpec{n, std::move(x), std::move(y)};
  }

  int degree() const { return static_cast<int>(x.size() + y.size()); }
  int vertex_count() const { return 2 * n; }
  ResidueMultiset x_set() const { return ResidueMultiset::from_elements(n, x); }
  ResidueMultiset y_set() const { return ResidueMultiset::from_elements(n, y); }

  friend bool operator==(const DihedrantSpec&, const DihedrantSpec&) = default;
  friend auto operator<=>(const DihedrantSpec&, const DihedrantSpec&) = default;
};

/// "{1,2,3}"
inline std::string format_set(const std::vector<int>& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(s[i]);
  }
  return out + "}";
}

inline std::string to_string(const DihedrantSpec& s) {
  return "Dih(" + std::to_string(s.n) + "," + format_set(s.x) + "," + format_set(s.y) + ")";
}

}  // namespace dsrg
