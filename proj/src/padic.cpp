#include "iwss/padic.hpp"

#include <algorithm>

namespace iwss {

namespace {

constexpr int kDefaultWorkingPrec = 20;
constexpr int kMaxDepth = 40;

BigInt pow_int(const BigInt& b, int e) {
    BigInt r = 1;
    for (int i = 0; i < e; ++i) r *= b;
    return r;
}

}  // namespace

BigInt PadicInt::modulus() const { return pow_int(l, prec); }

std::vector<BigInt> unramified_modulus(const BigInt& l, int d) {
    SeededRng rng(0x1A2B3C4D5E6FULL);
    FpPoly h = random_irreducible(l, d, rng);
    std::vector<BigInt> out(d + 1, BigInt(0));
    for (int i = 0; i <= h.degree(); ++i) out[i] = h[i];
    out[d] = 1;
    return out;
}

bool is_square_ql(const BigInt& l, int val, const BigInt& unit, int unit_known_prec) {
    if (val % 2 != 0) return false;
    if (l == 2) {
        if (unit_known_prec < 3) throw insufficient_precision("is_square_ql: unit needed mod 8");
        return mod_floor(unit, 8) == 1;
    }
    if (unit_known_prec < 1) throw insufficient_precision("is_square_ql: unit needed mod l");
    return jacobi(unit, l) == 1;
}

// ---------------------------------------------------------------------------
// Generic Hensel machinery over a ring adaptor R:
//   Elt              residue ring element (mod l^W)
//   from_int, add, sub, mul, neg
//   val(e)           l-adic valuation (capped at current precision W)
//   shift_down(e, m) divide by l^m (exact)
//   residue_roots(f) roots of f mod l in the residue field, with multiplicity,
//                    returned as lifted Elt representatives
//   invert_unit(e)   inverse mod l^W (e a unit)
// ---------------------------------------------------------------------------

struct ZlRing {
    using Elt = BigInt;
    BigInt l;
    int W;
    BigInt lW;

    ZlRing(BigInt l_, int W_) : l(std::move(l_)), W(W_), lW(pow_int(l, W_)) {}

    Elt from_int(const BigInt& n) const { return mod_floor(n, lW); }
    Elt add(const Elt& a, const Elt& b) const { return mod_floor(a + b, lW); }
    Elt sub(const Elt& a, const Elt& b) const { return mod_floor(a - b, lW); }
    Elt mul(const Elt& a, const Elt& b) const { return a * b % lW; }
    bool is_zero(const Elt& a) const { return a == 0; }
    int val(const Elt& a) const {
        if (a == 0) return W;
        return std::min(W, valuation(a, l));
    }
    Elt shift_down(const Elt& a, int m) const { return a / pow_int(l, m); }
    Elt invert_unit(const Elt& a) const { return inv_mod(a, lW); }

    std::vector<std::pair<Elt, int>> residue_roots(const std::vector<Elt>& f,
                                                   SeededRng& rng) const {
        std::vector<BigInt> red;
        red.reserve(f.size());
        for (const auto& c : f) red.push_back(mod_floor(c, l));
        FpPoly fp(l, red);
        if (fp.is_zero()) throw std::logic_error("residue_roots: zero reduction");
        std::vector<std::pair<Elt, int>> out;
        for (auto& [r, m] : roots_mod_prime(fp, rng)) out.emplace_back(r, m);
        return out;
    }
};

struct OlRing {
    using Elt = std::vector<BigInt>;  // length d, coefficients mod l^W
    BigInt l;
    int d;
    int W;
    BigInt lW;
    std::vector<BigInt> h;  // monic defining polynomial, degree d
    ExtField residue;

    OlRing(BigInt l_, int d_, int W_, std::vector<BigInt> h_)
        : l(std::move(l_)),
          d(d_),
          W(W_),
          lW(pow_int(l, W_)),
          h(std::move(h_)),
          residue(l, FpPoly(l, h)) {}

    Elt zero() const { return Elt(d, BigInt(0)); }
    Elt from_int(const BigInt& n) const {
        Elt e = zero();
        e[0] = mod_floor(n, lW);
        return e;
    }
    Elt add(const Elt& a, const Elt& b) const {
        Elt r(d);
        for (int i = 0; i < d; ++i) r[i] = mod_floor(a[i] + b[i], lW);
        return r;
    }
    Elt sub(const Elt& a, const Elt& b) const {
        Elt r(d);
        for (int i = 0; i < d; ++i) r[i] = mod_floor(a[i] - b[i], lW);
        return r;
    }
    Elt mul(const Elt& a, const Elt& b) const {
        // multiply as polynomials, reduce mod h (monic), coefficients mod l^W
        std::vector<BigInt> prod(2 * d - 1, BigInt(0));
        for (int i = 0; i < d; ++i) {
            if (a[i] == 0) continue;
            for (int j = 0; j < d; ++j) prod[i + j] = (prod[i + j] + a[i] * b[j]) % lW;
        }
        for (int i = 2 * d - 2; i >= d; --i) {
            BigInt c = prod[i];
            if (c == 0) continue;
            prod[i] = 0;
            for (int j = 0; j < d; ++j)
                prod[i - d + j] = mod_floor(prod[i - d + j] - c * h[j], lW);
        }
        prod.resize(d);
        return prod;
    }
    bool is_zero(const Elt& a) const {
        for (const auto& c : a)
            if (c != 0) return false;
        return true;
    }
    int val(const Elt& a) const {
        int v = W;
        for (const auto& c : a)
            if (c != 0) v = std::min(v, valuation(c, l));
        return v;
    }
    Elt shift_down(const Elt& a, int m) const {
        Elt r(d);
        BigInt lm = pow_int(l, m);
        for (int i = 0; i < d; ++i) r[i] = a[i] / lm;
        return r;
    }
    Elt invert_unit(const Elt& a) const {
        // invert in the residue field, then Hensel-lift: z <- z(2 - a z)
        ExtElt abar(d);
        for (int i = 0; i < d; ++i) abar[i] = mod_floor(a[i], l);
        ExtElt zbar = residue.inv(abar);
        Elt z(d);
        for (int i = 0; i < d; ++i) z[i] = zbar[i];
        int prec = 1;
        Elt two = from_int(2);
        while (prec < W) {
            z = mul(z, sub(two, mul(a, z)));
            prec *= 2;
        }
        return z;
    }
    std::vector<std::pair<Elt, int>> residue_roots(const std::vector<Elt>& f,
                                                   SeededRng& rng) const {
        // reduce coefficients into the residue field, find roots there
        std::vector<ExtElt> red;
        for (const auto& c : f) {
            ExtElt e(d);
            for (int i = 0; i < d; ++i) e[i] = mod_floor(c[i], l);
            red.push_back(e);
        }
        // roots of a polynomial with ExtElt coefficients: fall back to the
        // generic splitter in fp_poly via a local implementation
        return ext_poly_roots(red, rng);
    }

    std::vector<std::pair<Elt, int>> ext_poly_roots(const std::vector<ExtElt>& f,
                                                    SeededRng& rng) const;
};

namespace {

// polynomial helpers over ExtField (mirrors fp_poly internals, kept local)
using KPoly = std::vector<ExtElt>;

void ktrim(const ExtField& K, KPoly& f) {
    while (!f.empty() && K.is_zero(f.back())) f.pop_back();
}
KPoly kmul(const ExtField& K, const KPoly& a, const KPoly& b) {
    if (a.empty() || b.empty()) return {};
    KPoly r(a.size() + b.size() - 1, K.zero());
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] = K.add(r[i + j], K.mul(a[i], b[j]));
    ktrim(K, r);
    return r;
}
KPoly ksub(const ExtField& K, const KPoly& a, const KPoly& b) {
    KPoly r(std::max(a.size(), b.size()), K.zero());
    for (size_t i = 0; i < r.size(); ++i)
        r[i] = K.sub(i < a.size() ? a[i] : K.zero(), i < b.size() ? b[i] : K.zero());
    ktrim(K, r);
    return r;
}
KPoly kmod(const ExtField& K, KPoly f, const KPoly& dd) {
    ExtElt inv = K.inv(dd.back());
    ktrim(K, f);
    while (f.size() >= dd.size() && !f.empty()) {
        ExtElt q = K.mul(f.back(), inv);
        size_t sh = f.size() - dd.size();
        for (size_t i = 0; i < dd.size(); ++i) f[sh + i] = K.sub(f[sh + i], K.mul(q, dd[i]));
        ktrim(K, f);
    }
    return f;
}
KPoly kquo(const ExtField& K, KPoly f, const KPoly& dd) {
    ExtElt inv = K.inv(dd.back());
    ktrim(K, f);
    KPoly q(f.size() >= dd.size() ? f.size() - dd.size() + 1 : 0, K.zero());
    while (f.size() >= dd.size() && !f.empty()) {
        ExtElt c = K.mul(f.back(), inv);
        size_t sh = f.size() - dd.size();
        q[sh] = c;
        for (size_t i = 0; i < dd.size(); ++i) f[sh + i] = K.sub(f[sh + i], K.mul(c, dd[i]));
        ktrim(K, f);
    }
    return q;
}
KPoly kgcd(const ExtField& K, KPoly a, KPoly b) {
    ktrim(K, a);
    ktrim(K, b);
    while (!b.empty()) {
        KPoly r = kmod(K, a, b);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        ExtElt inv = K.inv(a.back());
        for (auto& c : a) c = K.mul(c, inv);
    }
    return a;
}
KPoly kpowmod(const ExtField& K, KPoly base, BigInt e, const KPoly& f) {
    KPoly r{K.one()};
    base = kmod(K, std::move(base), f);
    while (e > 0) {
        if (e % 2 == 1) r = kmod(K, kmul(K, r, base), f);
        base = kmod(K, kmul(K, base, base), f);
        e /= 2;
    }
    return r;
}

void ksplit(const ExtField& K, const KPoly& h, SeededRng& rng, std::vector<ExtElt>& out) {
    if (h.size() <= 1) return;
    if (h.size() == 2) {
        out.push_back(K.sub(K.zero(), h[0]));
        return;
    }
    const BigInt order = K.order();
    if (K.l() == 2) {
        while (true) {
            ExtElt c = K.random(rng);
            if (K.is_zero(c)) continue;
            KPoly t = kmod(K, KPoly{K.zero(), c}, h);
            KPoly acc = t;
            BigInt qq = 2;
            while (qq < order) {
                t = kmod(K, kmul(K, t, t), h);
                acc = ksub(K, acc, ksub(K, KPoly{}, t));
                qq *= 2;
            }
            KPoly g = kgcd(K, h, acc);
            if (g.size() > 1 && g.size() < h.size()) {
                ksplit(K, g, rng, out);
                ksplit(K, kquo(K, h, g), rng, out);
                return;
            }
        }
    }
    while (true) {
        ExtElt a = K.random(rng);
        KPoly t = kpowmod(K, KPoly{a, K.one()}, (order - 1) / 2, h);
        t = ksub(K, t, KPoly{K.one()});
        KPoly g = kgcd(K, h, t);
        if (g.size() > 1 && g.size() < h.size()) {
            ksplit(K, g, rng, out);
            ksplit(K, kquo(K, h, g), rng, out);
            return;
        }
    }
}

}  // namespace

std::vector<std::pair<OlRing::Elt, int>> OlRing::ext_poly_roots(const std::vector<ExtElt>& f0,
                                                                SeededRng& rng) const {
    const ExtField& K = residue;
    KPoly g = f0;
    ktrim(K, g);
    if (g.empty()) throw std::logic_error("ext_poly_roots: zero reduction");
    {
        ExtElt inv = K.inv(g.back());
        for (auto& c : g) c = K.mul(c, inv);
    }
    KPoly xp = kpowmod(K, KPoly{K.zero(), K.one()}, K.order(), g);
    KPoly lin = kgcd(K, g, ksub(K, xp, KPoly{K.zero(), K.one()}));
    std::vector<ExtElt> roots;
    ksplit(K, lin, rng, roots);
    std::vector<std::pair<Elt, int>> out;
    for (const ExtElt& r : roots) {
        KPoly lin1{K.sub(K.zero(), r), K.one()};
        int mult = 0;
        KPoly cur = g;
        while (cur.size() > 1) {
            KPoly rem = kmod(K, cur, lin1);
            if (!rem.empty()) break;
            cur = kquo(K, cur, lin1);
            ++mult;
        }
        Elt rep(d);
        for (int i = 0; i < d; ++i) rep[i] = r[i];
        out.emplace_back(rep, mult);
    }
    return out;
}

namespace {

template <class Ring>
typename Ring::Elt poly_eval(const Ring& R, const std::vector<typename Ring::Elt>& f,
                             const typename Ring::Elt& x) {
    typename Ring::Elt acc = R.from_int(0);
    for (auto it = f.rbegin(); it != f.rend(); ++it) acc = R.add(R.mul(acc, x), *it);
    return acc;
}

template <class Ring>
std::vector<typename Ring::Elt> poly_derivative(const Ring& R,
                                                const std::vector<typename Ring::Elt>& f) {
    std::vector<typename Ring::Elt> df;
    for (size_t i = 1; i < f.size(); ++i) df.push_back(R.mul(R.from_int(BigInt(i)), f[i]));
    return df;
}

// substitute x -> r + l*x and divide by the minimal coefficient valuation
template <class Ring>
std::vector<typename Ring::Elt> recenter(const Ring& R, const std::vector<typename Ring::Elt>& f,
                                         const typename Ring::Elt& r, int& shift_out) {
    using Elt = typename Ring::Elt;
    // Horner-style: g = f(r + l x) built by iterating over coefficients from
    // the top: g <- g*(r + l x) + c
    std::vector<Elt> g;
    Elt lconst = R.from_int(R.l);
    for (auto it = f.rbegin(); it != f.rend(); ++it) {
        // g * (r + l x)
        std::vector<Elt> ng(g.size() + 1, R.from_int(0));
        for (size_t i = 0; i < g.size(); ++i) {
            ng[i] = R.add(ng[i], R.mul(g[i], r));
            ng[i + 1] = R.add(ng[i + 1], R.mul(g[i], lconst));
        }
        if (ng.empty()) ng.push_back(R.from_int(0));
        ng[0] = R.add(ng[0], *it);
        g = std::move(ng);
    }
    int m = 1 << 30;
    for (const auto& c : g)
        if (!R.is_zero(c)) m = std::min(m, R.val(c));
    if (m == 1 << 30) m = 0;
    shift_out = m;
    for (auto& c : g) c = R.shift_down(c, m);
    return g;
}

template <class Ring>
void lift_core(const Ring& R, const std::vector<typename Ring::Elt>& f, int target, int depth,
               int lost, SeededRng& rng, std::vector<std::pair<typename Ring::Elt, bool>>& out,
               const typename Ring::Elt& offset, const BigInt& scale) {
    using Elt = typename Ring::Elt;
    if (depth > kMaxDepth) throw precision_exhausted("lift_roots: recursion depth exceeded");
    if (target > R.W - lost) throw precision_exhausted("lift_roots: working precision exhausted");
    auto df = poly_derivative(R, f);
    for (auto& [r0, mult] : R.residue_roots(f, rng)) {
        Elt fp = poly_eval(R, df, r0);
        if (R.val(fp) == 0) {
            // simple root: Newton
            Elt r = r0;
            for (int it = 0; it < 64; ++it) {
                Elt fr = poly_eval(R, f, r);
                if (R.val(fr) >= R.W) break;
                Elt d1 = poly_eval(R, df, r);
                r = R.sub(r, R.mul(fr, R.invert_unit(d1)));
            }
            // certified by the Hensel criterion at the simple root
            out.emplace_back(R.add(offset, R.mul(R.from_int(scale), r)), true);
        } else {
            int m = 0;
            auto g = recenter(R, f, r0, m);
            std::vector<std::pair<Elt, bool>> sub;
            lift_core(R, g, std::max(target - 1, 1), depth + 1, lost + m, rng, sub, R.from_int(0),
                      BigInt(1));
            for (auto& [s, cert] : sub) {
                // root = offset + scale*(r0 + l*s)
                Elt inner = R.add(r0, R.mul(R.from_int(R.l), s));
                out.emplace_back(R.add(offset, R.mul(R.from_int(scale), inner)), cert);
            }
        }
    }
}

template <class Ring>
std::vector<std::pair<typename Ring::Elt, bool>> lift_driver(const Ring& R,
                                                             const std::vector<BigInt>& f,
                                                             int target) {
    // strip integer content so the residue reduction is nonzero
    BigInt content = 0;
    for (const auto& c : f) content = gcd(content, c);
    if (content == 0) throw std::domain_error("lift_roots: zero polynomial");
    std::vector<typename Ring::Elt> fe;
    fe.reserve(f.size());
    for (const auto& c : f) fe.push_back(R.from_int(c / content));
    SeededRng rng(0xFEEDFACE8BADF00DULL);
    std::vector<std::pair<typename Ring::Elt, bool>> out;
    lift_core(R, fe, target, 0, 0, rng, out, R.from_int(0), BigInt(1));
    return out;
}

}  // namespace

std::vector<std::pair<PadicInt, bool>> lift_roots(const std::vector<BigInt>& f, const BigInt& l,
                                                  int target_prec) {
    for (int attempt = 0, W = std::max(kDefaultWorkingPrec, target_prec + 4); attempt < 3;
         ++attempt, W *= 2) {
        try {
            ZlRing R(l, W);
            auto raw = lift_driver(R, f, target_prec);
            BigInt mod = pow_int(l, target_prec);
            std::vector<std::pair<PadicInt, bool>> out;
            for (auto& [r, cert] : raw)
                out.push_back({PadicInt{l, target_prec, mod_floor(r, mod)}, cert});
            return out;
        } catch (const precision_exhausted&) {
            if (attempt == 2) throw;
        }
    }
    throw precision_exhausted("lift_roots: unreachable");
}

std::vector<std::pair<UnramifiedExtElement, bool>> lift_roots_ext(const std::vector<BigInt>& f,
                                                                  const BigInt& l, int d,
                                                                  int target_prec) {
    auto h = unramified_modulus(l, d);
    for (int attempt = 0, W = std::max(kDefaultWorkingPrec, target_prec + 4); attempt < 3;
         ++attempt, W *= 2) {
        try {
            OlRing R(l, d, W, h);
            auto raw = lift_driver(R, f, target_prec);
            BigInt mod = pow_int(l, target_prec);
            std::vector<std::pair<UnramifiedExtElement, bool>> out;
            for (auto& [r, cert] : raw) {
                std::vector<BigInt> red(d);
                for (int i = 0; i < d; ++i) red[i] = mod_floor(r[i], mod);
                out.push_back({UnramifiedExtElement{l, d, target_prec, h, red}, cert});
            }
            return out;
        } catch (const precision_exhausted&) {
            if (attempt == 2) throw;
        }
    }
    throw precision_exhausted("lift_roots_ext: unreachable");
}

std::vector<PadicInt> solve_quadratic_in_y(const PadicInt& A, const PadicInt& B) {
    const BigInt& l = A.l;
    int prec = std::min(A.prec, B.prec);
    // y^2 + A y - B: monic quadratic; integral roots found by the lifter.
    std::vector<BigInt> f{-(B.residue), A.residue, 1};
    // disc guard: A^2 + 4B must be nonzero at this precision
    BigInt mod = pow_int(l, prec);
    BigInt disc = mod_floor(A.residue * A.residue + 4 * B.residue, mod);
    if (disc == 0) throw insufficient_precision("solve_quadratic_in_y: vanishing discriminant");
    std::vector<PadicInt> out;
    for (auto& [r, cert] : lift_roots(f, l, prec)) out.push_back(r);
    return out;
}

int count_quadratic_roots_ext(const UnramifiedExtElement& A, const UnramifiedExtElement& B) {
    const BigInt& l = A.l;
    int d = A.d;
    int prec = std::min(A.prec, B.prec);
    for (int attempt = 0, W = std::max(kDefaultWorkingPrec, prec + 4);; ++attempt, W *= 2) {
        try {
            OlRing R(l, d, W, A.defining);
            std::vector<OlRing::Elt> f{R.sub(R.from_int(0), B.coeffs), A.coeffs, R.from_int(1)};
            SeededRng rng(0xFEEDFACE8BADF00DULL);
            std::vector<std::pair<OlRing::Elt, bool>> out;
            lift_core(R, f, prec, 0, 0, rng, out, R.from_int(0), BigInt(1));
            return static_cast<int>(out.size());
        } catch (const precision_exhausted&) {
            if (attempt == 2) throw;
        }
    }
}

UnramifiedRing::UnramifiedRing(BigInt l, int d, int prec, std::vector<BigInt> defining)
    : l_(std::move(l)), d_(d), prec_(prec), mod_(pow_int(l_, prec)), h_(std::move(defining)) {}

UnramifiedRing::Elt UnramifiedRing::from_int(const BigInt& n) const {
    Elt e(d_, BigInt(0));
    e[0] = mod_floor(n, mod_);
    return e;
}

UnramifiedRing::Elt UnramifiedRing::add(const Elt& a, const Elt& b) const {
    Elt r(d_);
    for (int i = 0; i < d_; ++i) r[i] = mod_floor(a[i] + b[i], mod_);
    return r;
}

UnramifiedRing::Elt UnramifiedRing::mul(const Elt& a, const Elt& b) const {
    std::vector<BigInt> prod(2 * d_ - 1, BigInt(0));
    for (int i = 0; i < d_; ++i) {
        if (a[i] == 0) continue;
        for (int j = 0; j < d_; ++j) prod[i + j] = (prod[i + j] + a[i] * b[j]) % mod_;
    }
    for (int i = 2 * d_ - 2; i >= d_; --i) {
        BigInt c = prod[i];
        if (c == 0) continue;
        prod[i] = 0;
        for (int j = 0; j < d_; ++j)
            prod[i - d_ + j] = mod_floor(prod[i - d_ + j] - c * h_[j], mod_);
    }
    prod.resize(d_);
    return prod;
}

UnramifiedRing::Elt UnramifiedRing::scale(const Elt& a, const BigInt& k) const {
    Elt r(d_);
    BigInt km = mod_floor(k, mod_);
    for (int i = 0; i < d_; ++i) r[i] = a[i] * km % mod_;
    return r;
}

}  // namespace iwss
