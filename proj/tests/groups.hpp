#pragma once

// Small concrete matrix groups for the invariants tests.

#include <vector>

#include "weyl/invariants.hpp"

namespace weyl::testing {

inline Matrix mat2(const FieldSpec& k, long a, long b, long c, long d) {
  return Matrix::from_rows(k, {{FieldElem(k, a), FieldElem(k, b)}, {FieldElem(k, c), FieldElem(k, d)}});
}

/// Closure of the generators under products.
inline FiniteGroup generated_group(const PolyRing& ring, const std::vector<Matrix>& gens) {
  std::vector<GroupElement> elems{GroupElement(Matrix::identity(ring.spec(), ring.nvars()))};
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (const auto& g : gens) {
      const GroupElement h = elems[i] * GroupElement(g);
      bool seen = false;
      for (const auto& e : elems) seen = seen || e == h;
      if (!seen) elems.push_back(h);
    }
  }
  return FiniteGroup(ring, elems);
}

/// {I, -I}: the group of the 2-Veronese subring k[s^2, st, t^2].
inline FiniteGroup sign_group(const PolyRing& ring) {
  return generated_group(ring, {mat2(ring.spec(), -1, 0, 0, -1)});
}

/// All of GL_2(F_p), by enumeration.
inline std::vector<Matrix> general_linear_2(const FieldSpec& k) {
  const long p = static_cast<long>(k.characteristic());
  std::vector<Matrix> out;
  for (long a = 0; a < p; ++a)
    for (long b = 0; b < p; ++b)
      for (long c = 0; c < p; ++c)
        for (long d = 0; d < p; ++d)
          if ((a * d - b * c) % p != 0) out.push_back(mat2(k, a, b, c, d));
  return out;
}

}  // namespace weyl::testing
