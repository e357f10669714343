#include "iwss/torsion.hpp"

#include <map>
#include <stdexcept>

#include "iwss/padic.hpp"

namespace iwss {

namespace {

// Z[x] arithmetic, coefficients low-to-high.
using ZPoly = std::vector<BigInt>;

ZPoly zmul(const ZPoly& a, const ZPoly& b) {
    if (a.empty() || b.empty()) return {};
    ZPoly r(a.size() + b.size() - 1, BigInt(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return r;
}

ZPoly zsub(const ZPoly& a, const ZPoly& b) {
    ZPoly r(std::max(a.size(), b.size()), BigInt(0));
    for (size_t i = 0; i < r.size(); ++i) {
        if (i < a.size()) r[i] += a[i];
        if (i < b.size()) r[i] -= b[i];
    }
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

ZPoly zpow(const ZPoly& a, int e) {
    ZPoly r{BigInt(1)};
    for (int i = 0; i < e; ++i) r = zmul(r, a);
    return r;
}

// Division polynomials via psi_{2m+1} = psi_{m+2} psi_m^3 - psi_{m-1} psi_{m+1}^3 and
// psi_{2m} = psi_m (psi_{m+2} psi_{m-1}^2 - psi_{m-2} psi_{m+1}^2) / psi_2.
// Odd-index psi are polynomials in x; even-index carry one factor of psi_2,
// so we track phi_k = psi_k / psi_2 for even k and eliminate psi_2^2 = F.
struct DivPolyTable {
    ZPoly F;  // psi_2^2 = 4x^3 + b2 x^2 + 2 b4 x + b6
    std::map<int, ZPoly> odd;   // psi_k, k odd
    std::map<int, ZPoly> even;  // phi_k = psi_k/psi_2, k even

    // returns (poly, carries_psi2)
    std::pair<ZPoly, bool> get(int k) {
        if (k == 0) return {{}, false};
        if (k % 2 == 1) {
            auto it = odd.find(k);
            if (it == odd.end()) throw std::logic_error("divpoly: missing odd index");
            return {it->second, false};
        }
        auto it = even.find(k);
        if (it == even.end()) throw std::logic_error("divpoly: missing even index");
        return {it->second, true};
    }

    void build(int n) {
        for (int k = 5; k <= n; ++k) {
            if (k % 2 == 1 ? odd.count(k) : even.count(k)) continue;
            int m = k / 2;
            if (k % 2 == 1) {
                auto [am, ame] = get(m);
                auto [ap2, ap2e] = get(m + 2);
                auto [am1, am1e] = get(m - 1);
                auto [ap1, ap1e] = get(m + 1);
                ZPoly t1 = zmul(ap2, zpow(am, 3));
                int e1 = (ap2e ? 1 : 0) + 3 * (ame ? 1 : 0);
                ZPoly t2 = zmul(am1, zpow(ap1, 3));
                int e2 = (am1e ? 1 : 0) + 3 * (ap1e ? 1 : 0);
                if (e1 % 2 != e2 % 2) throw std::logic_error("divpoly: parity");
                if (e1 > e2) t1 = zmul(t1, zpow(F, (e1 - e2) / 2));
                if (e2 > e1) t2 = zmul(t2, zpow(F, (e2 - e1) / 2));
                ZPoly r = zsub(t1, t2);
                int e = std::min(e1, e2);
                if (e % 2 != 0) throw std::logic_error("divpoly: odd psi2 power");
                odd[k] = zmul(r, zpow(F, e / 2));
            } else {
                auto [am, ame] = get(m);
                auto [ap2, ap2e] = get(m + 2);
                auto [am1, am1e] = get(m - 1);
                auto [am2, am2e] = get(m - 2);
                auto [ap1, ap1e] = get(m + 1);
                ZPoly t1 = zmul(ap2, zmul(am1, am1));
                int e1 = (ap2e ? 1 : 0) + 2 * (am1e ? 1 : 0);
                ZPoly t2 = zmul(am2, zmul(ap1, ap1));
                int e2 = (am2e ? 1 : 0) + 2 * (ap1e ? 1 : 0);
                if (e1 % 2 != e2 % 2) throw std::logic_error("divpoly: parity");
                if (e1 > e2) t1 = zmul(t1, zpow(F, (e1 - e2) / 2));
                if (e2 > e1) t2 = zmul(t2, zpow(F, (e2 - e1) / 2));
                ZPoly inner = zsub(t1, t2);
                int etot = std::min(e1, e2) + (ame ? 1 : 0);
                if (etot < 1 || (etot - 1) % 2 != 0)
                    throw std::logic_error("divpoly: even-index psi2 power");
                even[k] = zmul(zmul(am, inner), zpow(F, (etot - 1) / 2));
            }
        }
    }
};

}  // namespace

std::vector<BigInt> division_polynomial(const WeierstrassCurve& E, int n) {
    if (n < 1 || n % 2 == 0 || n > 13)
        throw std::domain_error("division_polynomial: n must be odd, 1 <= n <= 13");
    if (n == 1) return {BigInt(1)};
    const BigInt b2 = E.b2(), b4 = E.b4(), b6 = E.b6(), b8 = E.b8();
    DivPolyTable T;
    T.F = {b6, 2 * b4, b2, 4};
    T.odd[1] = {BigInt(1)};
    T.odd[3] = {b8, 3 * b6, 3 * b4, b2, 3};
    T.even[2] = {BigInt(1)};
    T.even[4] = {b4 * b8 - b6 * b6, b2 * b8 - b4 * b6, 10 * b8, 10 * b6, 5 * b4, b2, 2};
    T.build(n);
    ZPoly psi = T.odd.at(n);
    if (static_cast<int>(psi.size()) - 1 != (n * n - 1) / 2)
        throw std::logic_error("division_polynomial: degree check failed");
    return psi;
}

namespace {

constexpr int kTorsionPrec = 24;

int dim_from_count(const BigInt& count, const BigInt& p) {
    if (count == 0) return 0;
    if (count == p - 1) return 1;
    if (count == p * p - 1) return 2;
    throw std::logic_error("torsion: point count not of the form p^d - 1: " + to_string(count));
}

}  // namespace

TorsionDimension torsion_dim_base(const WeierstrassCurve& E, const BigInt& p, const BigInt& l) {
    if (p == l) throw std::domain_error("torsion_dim_base: requires l != p");
    int pn = static_cast<int>(p.convert_to<long>());
    std::vector<BigInt> psi = division_polynomial(E, pn);
    // the search is over Z_l only; a root of negative valuation would need
    // l | lc(psi_p) = p (Newton polygon), impossible for l != p. This turns
    // the formal-group integrality argument into a runtime check.
    if (psi.back() % l == 0)
        throw std::logic_error("torsion: leading coefficient of psi_p not an l-unit");
    BigInt count = 0;
    BigInt mod = 1;
    for (int i = 0; i < kTorsionPrec; ++i) mod *= l;
    for (auto& [root, certified] : lift_roots(psi, l, kTorsionPrec)) {
        (void)certified;
        const BigInt& x = root.residue;
        BigInt A = mod_floor(E.a1() * x + E.a3(), mod);
        BigInt B = mod_floor(((x + E.a2()) * x + E.a4()) * x + E.a6(), mod);
        PadicInt Ap{l, kTorsionPrec, A}, Bp{l, kTorsionPrec, B};
        auto ys = solve_quadratic_in_y(Ap, Bp);
        count += BigInt(ys.size());
    }
    TorsionDimension out;
    out.l = l;
    out.p = p;
    out.layer = TorsionLayer::Base;
    out.exact_order_p_points = count;
    out.dim = dim_from_count(count, p);
    return out;
}

TorsionDimension torsion_dim_first_layer(const WeierstrassCurve& E, const BigInt& p,
                                         const BigInt& l) {
    TorsionDimension base = torsion_dim_base(E, p, l);
    if (base.dim == 0 || base.dim == 2) {
        // dim 0: no fixed point can appear in a pro-p extension of trivial
        // mod-p part; dim 2: all of E[p] is already rational. Either way the
        // first-layer dimension equals the base dimension.
        TorsionDimension out = base;
        out.layer = TorsionLayer::FirstCyclotomicLayer;
        return out;
    }
    int d = static_cast<int>(p.convert_to<long>());
    std::vector<BigInt> psi = division_polynomial(E, d);
    if (psi.back() % l == 0)
        throw std::logic_error("torsion: leading coefficient of psi_p not an l-unit");
    BigInt count = 0;
    for (auto& [root, certified] : lift_roots_ext(psi, l, d, kTorsionPrec)) {
        (void)certified;
        // A = a1*x + a3, B = x^3 + a2 x^2 + a4 x + a6 over O_L
        UnramifiedRing R(l, d, kTorsionPrec, root.defining);
        auto A = R.add(R.scale(root.coeffs, E.a1()), R.from_int(E.a3()));
        auto X2 = R.mul(root.coeffs, root.coeffs);
        auto X3 = R.mul(X2, root.coeffs);
        auto B = R.add(R.add(X3, R.scale(X2, E.a2())),
                       R.add(R.scale(root.coeffs, E.a4()), R.from_int(E.a6())));
        UnramifiedExtElement Ae{l, d, kTorsionPrec, root.defining, A};
        UnramifiedExtElement Be{l, d, kTorsionPrec, root.defining, B};
        count += count_quadratic_roots_ext(Ae, Be);
    }
    TorsionDimension out;
    out.l = l;
    out.p = p;
    out.layer = TorsionLayer::FirstCyclotomicLayer;
    out.exact_order_p_points = count;
    out.dim = dim_from_count(count, p);
    if (out.dim < base.dim)
        throw std::logic_error("torsion: first-layer dimension below base dimension");
    return out;
}

BigInt naive_torsion_count(const WeierstrassCurve& E, const BigInt& p, const BigInt& l) {
    if (l == p) throw std::domain_error("naive_torsion_count: requires l != p");
    if (l > 10000) throw std::domain_error("naive_torsion_count: l too large");
    if (E.discriminant() % l == 0) throw bad_reduction("naive_torsion_count: bad reduction at l");
    int pn = static_cast<int>(p.convert_to<long>());
    std::vector<BigInt> psi = division_polynomial(E, pn);
    // points of exact order p over F_l: x-roots of psi_p with a rational y
    BigInt count = 0;
    for (BigInt x = 0; x < l; ++x) {
        BigInt v = 0;
        for (auto it = psi.rbegin(); it != psi.rend(); ++it) v = mod_floor(v * x + *it, l);
        if (v != 0) continue;
        BigInt A = mod_floor(E.a1() * x + E.a3(), l);
        BigInt B = mod_floor(((x + E.a2()) * x + E.a4()) * x + E.a6(), l);
        if (l == 2) {
            for (BigInt y = 0; y < 2; ++y)
                if (mod_floor(y * y + A * y - B, 2) == 0) ++count;
        } else {
            BigInt disc = mod_floor(A * A + 4 * B, l);
            if (disc == 0)
                count += 1;
            else if (jacobi(disc, l) == 1)
                count += 2;
        }
    }
    return count;
}

}  // namespace iwss
