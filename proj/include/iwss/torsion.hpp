#pragma once

#include <vector>

#include "iwss/bigint.hpp"
#include "iwss/ec.hpp"

namespace iwss {

enum class TorsionLayer { Base, FirstCyclotomicLayer };

// Certified dim_{F_p} E(K)[p] with K = Q_l or its first cyclotomic layer (the
// unramified degree-p extension of Q_l).
struct TorsionDimension {
    BigInt l;
    BigInt p;
    TorsionLayer layer = TorsionLayer::Base;
    int dim = 0;
    BigInt exact_order_p_points = 0;  // p^dim - 1
};

// psi_n in x (n odd, n <= 13), degree (n^2-1)/2, via the b-invariant
// recurrence. Coefficients low-to-high.
std::vector<BigInt> division_polynomial(const WeierstrassCurve& E, int n);

// dim_{F_p} E(Q_l)[p] for l != p: integral x-roots of psi_p via Hensel
// lifting, then the Weierstrass quadratic in y. The model must be l-minimal.
TorsionDimension torsion_dim_base(const WeierstrassCurve& E, const BigInt& p, const BigInt& l);

// dim over the first layer: returns the base dimension when it is 0 or 2,
// otherwise recounts over the unramified degree-p extension.
TorsionDimension torsion_dim_first_layer(const WeierstrassCurve& E, const BigInt& p,
                                         const BigInt& l);

// Test oracle: number of points of exact order p in E~(F_l) by enumeration;
// requires good reduction at l (and l != p), where it equals the E(Q_l)[p]
// count.
BigInt naive_torsion_count(const WeierstrassCurve& E, const BigInt& p, const BigInt& l);

}  // namespace iwss
