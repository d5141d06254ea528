#pragma once

#include <optional>

#include "cmet/domains.hpp"

namespace cmet {

// beta(z) with its witnesses, the extremal annulus BP(z) and the enlarged
// annulus whose boundary circles both meet the domain boundary.
struct BetaReport {
    double value = 0.0;                  // beta(z)
    Complex zeta;                        // nearest boundary point attaining the infimum
    Complex xi;                          // complement witness (circle contact when beta = 0)
    std::optional<Annulus> bp;           // BP(z) = A(zeta; delta(z), beta(z)); absent iff beta = 0
    std::optional<Annulus> enlarged;     // the annulus with both circles on the boundary
};

// beta(z) and witnesses only.
BetaReport beta_at(const Domain& dom, Complex z);

// BP(z); requires beta(z) > 0.
Annulus bp_annulus(const Domain& dom, Complex z);

// The enlargement of BP(z) until both boundary circles meet the domain
// boundary; may degenerate to a punctured disk or a disk complement.
Annulus enlarged_annulus(const Domain& dom, Complex z);

// beta_at with bp and enlarged filled in when beta > 0.
BetaReport beta_full(const Domain& dom, Complex z);

// Predicted window for beta on the circle |z - center| = d e^t inside a
// proper annulus A(o; d, r) whose boundary circles both meet the domain
// boundary.  Requires modulus > 8 log 2 and |t| <= r - log 16.
struct BpepWindow {
    double lower = 0.0;
    double upper = 0.0;
};
BpepWindow bpep_bounds(const Annulus& a, Complex z);

}  // namespace cmet
