#pragma once

#include "phecke/bernstein.hpp"
#include "phecke/center.hpp"

namespace phecke {

enum class GlnMode { Universal, AOne, Laurent };

// Affine Hecke algebra of GL_n. Universal mode carries formal (a, b); a=1
// mode sets a = 1 with b formal; laurent mode flags a as invertible.
HeckeAlgebraPtr affine_hecke_gln(int n, GlnMode mode);

// Affine Yokonuma-Hecke algebra: T = (Z/d)^n over GL_n, a = u^2,
// b_{s_i} = (v/d) sum_k (t_i / t_{i+1})^k with the wrap-around convention.
HeckeAlgebraPtr yokonuma_aff(long long d, int n);

// idempotent e_i = (1/d) sum_k (t_i/t_{i+1})^k, supported on T; i is 1-based
// with i = 0 meaning the wrap-around pair (n, 1)
HeckeElem e_idempotent(const HeckeAlgebra& A, int i);

// Jucys-Murphy elements: finite J_1 = 1, J_{i+1} = T_{s_i} J_i T_{s_i};
// affine J_1 = T_{tau^{-e_1}}^{-1} and the same recursion (needs a invertible)
HeckeElem jucys_murphy(const HeckeAlgebra& A, int i, bool affine);

// projection onto the finite subalgebra (the span of basis elements with
// trivial translation part): T_i -> T_{s_i}, the u-image collapses through
// X_1 -> 1; algebra morphism in laurent-type instances
HeckeElem pi_to_finite(const HeckeAlgebra& A, const HeckeElem& h);

// dominant spherical orientation (towards the chamber containing C0)
Orientation dominant_spherical(const HeckeAlgebra& A);

}  // namespace phecke
