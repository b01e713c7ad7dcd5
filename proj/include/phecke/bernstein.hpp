#pragma once

#include "phecke/hecke.hpp"

namespace phecke {

// Orientation-twisted basis maps. theta_hat is integral and defined for all
// parameters; theta needs the a's invertible; theta_tilde additionally needs
// square roots of the a's (available in the a=1 and a=u^2 instances).

Poly gamma_bar(const HeckeAlgebra& A, const Orientation& o, const WElem& w);
Poly sqrt_l_bar(const HeckeAlgebra& A, const WElem& w);
Poly x_bar(const HeckeAlgebra& A, const WElem& w, const WElem& w2);

HeckeElem theta_hat(const HeckeAlgebra& A, const Orientation& o, const ProPElem& g);
// theta_hat evaluated along one chosen expression (for independence tests)
HeckeElem theta_hat_along(const HeckeAlgebra& A, const Orientation& o,
                          const std::vector<int>& letters, const ProPElem& omega);

HeckeElem theta(const HeckeAlgebra& A, const Orientation& o, const ProPElem& g);
HeckeElem theta_tilde(const HeckeAlgebra& A, const Orientation& o, const ProPElem& g);

// canonical element attached to a wall; the presentation (w, s) must satisfy
// pi(w n_s w^-1) = s_H and is derived from a reduced word of s_H by default
struct XiPresentation {
    ProPElem w;
    int gen;
};
XiPresentation xi_presentation(const HeckeAlgebra& A, const Hyperplane& h);
HeckeElem xi(const HeckeAlgebra& A, const Orientation& o, const Hyperplane& h);
HeckeElem xi(const HeckeAlgebra& A, const Orientation& o, const Hyperplane& h,
             const XiPresentation& pres);

// expansion of h in the theta_hat basis for the given orientation (finite by
// triangularity); keys are the group elements, values the coefficients
std::map<ProPElem, Poly> theta_basis_expansion(const HeckeAlgebra& A, const Orientation& o,
                                               const HeckeElem& h);

// exact verification of
//   theta~_o(g) - theta~_o'(g) = (sum_H o(1,H) Xi_o'(H)) theta~_o(g)
// over the separating walls where o and o' disagree; throws when the
// adjacency certificate fails. The cache memoizes Xi per wall for a fixed
// o' across a batch of checks; it is owned by the caller, never shared.
using XiCache = std::map<Hyperplane, HeckeElem>;
bool bernstein_check(const HeckeAlgebra& A, const Orientation& o, const Orientation& o2,
                     const ProPElem& g);
bool bernstein_check(const HeckeAlgebra& A, const Orientation& o, const Orientation& o2,
                     const ProPElem& g, XiCache& cache);

}  // namespace phecke
