#include "iwss/fp_poly.hpp"

#include <stdexcept>

namespace iwss {

FpPoly::FpPoly(BigInt l, std::vector<BigInt> coeffs) : l_(std::move(l)), c_(std::move(coeffs)) {
    for (auto& x : c_) x = mod_floor(x, l_);
    trim();
}

void FpPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

FpPoly FpPoly::operator+(const FpPoly& o) const {
    std::vector<BigInt> r(std::max(c_.size(), o.c_.size()), BigInt(0));
    for (size_t i = 0; i < r.size(); ++i) r[i] = (*this)[static_cast<int>(i)] + o[static_cast<int>(i)];
    return FpPoly(l_, std::move(r));
}

FpPoly FpPoly::operator-(const FpPoly& o) const {
    std::vector<BigInt> r(std::max(c_.size(), o.c_.size()), BigInt(0));
    for (size_t i = 0; i < r.size(); ++i) r[i] = (*this)[static_cast<int>(i)] - o[static_cast<int>(i)];
    return FpPoly(l_, std::move(r));
}

FpPoly FpPoly::operator*(const FpPoly& o) const {
    if (is_zero() || o.is_zero()) return zero(l_);
    std::vector<BigInt> r(c_.size() + o.c_.size() - 1, BigInt(0));
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] = (r[i + j] + c_[i] * o.c_[j]) % l_;
    }
    return FpPoly(l_, std::move(r));
}

FpPoly FpPoly::scaled(const BigInt& k) const {
    std::vector<BigInt> r = c_;
    for (auto& x : r) x = x * k % l_;
    return FpPoly(l_, std::move(r));
}

std::pair<FpPoly, FpPoly> FpPoly::divmod(const FpPoly& d) const {
    if (d.is_zero()) throw std::domain_error("FpPoly: division by zero");
    std::vector<BigInt> rem = c_;
    int dd = d.degree();
    BigInt inv = inv_mod(d.leading(), l_);
    std::vector<BigInt> quo(rem.size() > static_cast<size_t>(dd)
                                ? rem.size() - dd
                                : 0,
                            BigInt(0));
    for (int i = static_cast<int>(rem.size()) - 1; i >= dd; --i) {
        BigInt coef = mod_floor(rem[i], l_);
        if (coef == 0) continue;
        BigInt q = coef * inv % l_;
        quo[i - dd] = q;
        for (int j = 0; j <= dd; ++j) rem[i - dd + j] = mod_floor(rem[i - dd + j] - q * d.c_[j], l_);
    }
    return {FpPoly(l_, std::move(quo)), FpPoly(l_, std::move(rem))};
}

FpPoly FpPoly::monic() const {
    if (is_zero()) return *this;
    return scaled(inv_mod(leading(), l_));
}

FpPoly FpPoly::derivative() const {
    std::vector<BigInt> r;
    for (size_t i = 1; i < c_.size(); ++i) r.push_back(c_[i] * i);
    return FpPoly(l_, std::move(r));
}

BigInt FpPoly::eval(const BigInt& x) const {
    BigInt acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = mod_floor(acc * x + *it, l_);
    return acc;
}

FpPoly gcd(FpPoly a, FpPoly b) {
    while (!b.is_zero()) {
        FpPoly r = a.divmod(b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

FpPoly pow_mod(const FpPoly& base, const BigInt& e, const FpPoly& f) {
    FpPoly r = FpPoly::constant(f.modulus(), 1);
    FpPoly b = base.divmod(f).second;
    BigInt k = e;
    while (k > 0) {
        if (k % 2 == 1) r = (r * b).divmod(f).second;
        b = (b * b).divmod(f).second;
        k /= 2;
    }
    return r;
}

FpPoly x_pow_mod(const BigInt& e, const FpPoly& f) { return pow_mod(FpPoly::x(f.modulus()), e, f); }

namespace {

// Equal-degree splitting of a monic squarefree product of linear factors.
void split_linear(const FpPoly& h, SeededRng& rng, std::vector<BigInt>& out) {
    const BigInt& l = h.modulus();
    if (h.degree() <= 0) return;
    if (h.degree() == 1) {
        out.push_back(mod_floor(-h[0], l));
        return;
    }
    if (l == 2) {  // at most the two roots 0, 1
        for (BigInt r = 0; r <= 1; ++r)
            if (h.eval(r) == 0) out.push_back(r);
        return;
    }
    while (true) {
        BigInt a = rng.below(l);
        // gcd(h, (x+a)^((l-1)/2) - 1)
        FpPoly t = pow_mod(FpPoly(l, {a, 1}), (l - 1) / 2, h) - FpPoly::constant(l, 1);
        FpPoly g = gcd(h, t);
        if (g.degree() > 0 && g.degree() < h.degree()) {
            split_linear(g, rng, out);
            split_linear(h.divmod(g).first, rng, out);
            return;
        }
    }
}

}  // namespace

std::vector<std::pair<BigInt, int>> roots_mod_prime(const FpPoly& f, SeededRng& rng) {
    if (f.is_zero()) throw std::domain_error("roots_mod_prime: zero polynomial");
    const BigInt& l = f.modulus();
    std::vector<std::pair<BigInt, int>> out;
    FpPoly g = f.monic();
    // linear-factor part: gcd(f, x^l - x)
    FpPoly xl = x_pow_mod(l, g);
    FpPoly lin = gcd(g, xl - FpPoly::x(l));
    std::vector<BigInt> roots;
    split_linear(lin, rng, roots);
    for (const BigInt& r : roots) {
        int mult = 0;
        FpPoly lin1(l, {mod_floor(-r, l), 1});
        while (true) {
            auto [q, rem] = g.divmod(lin1);
            if (!rem.is_zero()) break;
            g = q;
            ++mult;
        }
        out.emplace_back(r, mult);
    }
    return out;
}

bool is_irreducible(const FpPoly& f) {
    const BigInt& l = f.modulus();
    int d = f.degree();
    if (d <= 0) return false;
    if (d == 1) return true;
    FpPoly fm = f.monic();
    // x^(l^d) == x mod f, and for each prime p | d: gcd(x^(l^(d/p)) - x, f) = 1
    BigInt ld = 1;
    for (int i = 0; i < d; ++i) ld *= l;
    if (!(x_pow_mod(ld, fm) - FpPoly::x(l)).is_zero()) return false;
    for (int p = 2; p <= d; ++p) {
        if (d % p != 0 || !is_prime(BigInt(p))) continue;
        BigInt lk = 1;
        for (int i = 0; i < d / p; ++i) lk *= l;
        FpPoly g = gcd(fm, x_pow_mod(lk, fm) - FpPoly::x(l));
        if (g.degree() != 0) return false;
    }
    return true;
}

FpPoly random_irreducible(const BigInt& l, int d, SeededRng& rng) {
    if (d < 1) throw std::domain_error("random_irreducible: d must be >= 1");
    if (d == 1) return FpPoly(l, {1 % l, 1});  // x + 1
    while (true) {
        std::vector<BigInt> c(d + 1, BigInt(0));
        c[d] = 1;
        for (int i = 0; i < d; ++i) c[i] = rng.below(l);
        FpPoly f(l, std::move(c));
        if (is_irreducible(f)) return f;
    }
}

// ---- extension field ----

ExtField::ExtField(BigInt l, FpPoly modulus) : l_(std::move(l)), d_(modulus.degree()), h_(modulus.monic()) {
    if (d_ < 1) throw std::domain_error("ExtField: modulus must have degree >= 1");
}

ExtElt ExtField::one() const {
    ExtElt e = zero();
    e[0] = 1 % l_;
    return e;
}

ExtElt ExtField::from_base(const BigInt& c) const {
    ExtElt e = zero();
    e[0] = mod_floor(c, l_);
    return e;
}

ExtElt ExtField::generator() const {
    ExtElt e = zero();
    if (d_ == 1) {
        e[0] = mod_floor(-h_[0], l_);  // root of the linear modulus
    } else {
        e[1] = 1;
    }
    return e;
}

ExtElt ExtField::add(const ExtElt& a, const ExtElt& b) const {
    ExtElt r(d_);
    for (int i = 0; i < d_; ++i) r[i] = mod_floor(a[i] + b[i], l_);
    return r;
}

ExtElt ExtField::sub(const ExtElt& a, const ExtElt& b) const {
    ExtElt r(d_);
    for (int i = 0; i < d_; ++i) r[i] = mod_floor(a[i] - b[i], l_);
    return r;
}

ExtElt ExtField::mul(const ExtElt& a, const ExtElt& b) const {
    FpPoly pa(l_, a), pb(l_, b);
    FpPoly pr = (pa * pb).divmod(h_).second;
    ExtElt r = zero();
    for (int i = 0; i <= pr.degree(); ++i) r[i] = pr[i];
    return r;
}

ExtElt ExtField::scaled(const ExtElt& a, const BigInt& k) const {
    ExtElt r(d_);
    BigInt km = mod_floor(k, l_);
    for (int i = 0; i < d_; ++i) r[i] = a[i] * km % l_;
    return r;
}

bool ExtField::is_zero(const ExtElt& a) const {
    for (const auto& x : a)
        if (x != 0) return false;
    return true;
}

ExtElt ExtField::pow(const ExtElt& a, const BigInt& e) const {
    ExtElt r = one(), b = a;
    BigInt k = e;
    while (k > 0) {
        if (k % 2 == 1) r = mul(r, b);
        b = mul(b, b);
        k /= 2;
    }
    return r;
}

ExtElt ExtField::inv(const ExtElt& a) const {
    if (is_zero(a)) throw std::domain_error("ExtField: inverse of zero");
    // extended Euclid in F_l[z] against the modulus
    FpPoly r0 = h_, r1(l_, a);
    FpPoly t0 = FpPoly::zero(l_), t1 = FpPoly::constant(l_, 1);
    while (!r1.is_zero()) {
        auto [q, r] = r0.divmod(r1);
        r0 = r1;
        r1 = r;
        FpPoly t = t0 - q * t1;
        t0 = t1;
        t1 = t;
    }
    // r0 = gcd (a unit)
    if (r0.degree() != 0) throw std::domain_error("ExtField: modulus not irreducible?");
    FpPoly inv = t0.scaled(inv_mod(r0[0], l_));
    ExtElt out = zero();
    for (int i = 0; i <= inv.degree(); ++i) out[i] = inv[i];
    return out;
}

BigInt ExtField::order() const {
    BigInt o = 1;
    for (int i = 0; i < d_; ++i) o *= l_;
    return o;
}

ExtElt ExtField::random(SeededRng& rng) const {
    ExtElt r(d_);
    for (int i = 0; i < d_; ++i) r[i] = rng.below(l_);
    return r;
}

namespace {

// polynomial arithmetic over an ExtField (coefficients low-to-high, trimmed)
using KPoly = std::vector<ExtElt>;

void ktrim(const ExtField& K, KPoly& f) {
    while (!f.empty() && K.is_zero(f.back())) f.pop_back();
}

KPoly kmul(const ExtField& K, const KPoly& a, const KPoly& b) {
    if (a.empty() || b.empty()) return {};
    KPoly r(a.size() + b.size() - 1, K.zero());
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j)
            r[i + j] = K.add(r[i + j], K.mul(a[i], b[j]));
    ktrim(K, r);
    return r;
}

KPoly ksub(const ExtField& K, const KPoly& a, const KPoly& b) {
    KPoly r(std::max(a.size(), b.size()), K.zero());
    for (size_t i = 0; i < r.size(); ++i) {
        ExtElt x = i < a.size() ? a[i] : K.zero();
        ExtElt y = i < b.size() ? b[i] : K.zero();
        r[i] = K.sub(x, y);
    }
    ktrim(K, r);
    return r;
}

KPoly kmod(const ExtField& K, KPoly f, const KPoly& d) {
    ExtElt inv = K.inv(d.back());
    while (f.size() >= d.size()) {
        ExtElt q = K.mul(f.back(), inv);
        size_t sh = f.size() - d.size();
        for (size_t i = 0; i < d.size(); ++i)
            f[sh + i] = K.sub(f[sh + i], K.mul(q, d[i]));
        ktrim(K, f);
        if (f.size() < d.size()) break;
    }
    return f;
}

KPoly kquo(const ExtField& K, KPoly f, const KPoly& d) {
    ExtElt inv = K.inv(d.back());
    KPoly q(f.size() >= d.size() ? f.size() - d.size() + 1 : 0, K.zero());
    while (f.size() >= d.size() && !f.empty()) {
        ExtElt c = K.mul(f.back(), inv);
        size_t sh = f.size() - d.size();
        q[sh] = c;
        for (size_t i = 0; i < d.size(); ++i)
            f[sh + i] = K.sub(f[sh + i], K.mul(c, d[i]));
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

ExtElt keval(const ExtField& K, const KPoly& f, const ExtElt& x) {
    ExtElt acc = K.zero();
    for (auto it = f.rbegin(); it != f.rend(); ++it) acc = K.add(K.mul(acc, x), *it);
    return acc;
}

void ksplit_linear(const ExtField& K, const KPoly& h, SeededRng& rng, std::vector<ExtElt>& out) {
    if (h.size() <= 1) return;
    if (h.size() == 2) {
        // monic linear: root = -h[0]
        out.push_back(K.sub(K.zero(), h[0]));
        return;
    }
    const BigInt order = K.order();
    if (K.l() == 2) {
        // char 2: use trace-like splitting with T(c x) = sum (c x)^(2^i)
        while (true) {
            ExtElt c = K.random(rng);
            if (K.is_zero(c)) continue;
            // t = sum_{i<k} (c*x)^{2^i} mod h, k = log2(order)
            KPoly cx{K.zero(), c};
            KPoly t = kmod(K, cx, h);
            KPoly acc = t;
            BigInt q = 2;
            while (q < order) {
                t = kmod(K, kmul(K, t, t), h);
                acc = ksub(K, acc, ksub(K, KPoly{}, t));  // acc += t
                q *= 2;
            }
            KPoly g = kgcd(K, h, acc);
            if (g.size() > 1 && g.size() < h.size()) {
                ksplit_linear(K, g, rng, out);
                ksplit_linear(K, kquo(K, h, g), rng, out);
                return;
            }
        }
    }
    while (true) {
        ExtElt a = K.random(rng);
        KPoly shift{a, K.one()};
        KPoly t = kpowmod(K, shift, (order - 1) / 2, h);
        t = ksub(K, t, KPoly{K.one()});
        KPoly g = kgcd(K, h, t);
        if (g.size() > 1 && g.size() < h.size()) {
            ksplit_linear(K, g, rng, out);
            ksplit_linear(K, kquo(K, h, g), rng, out);
            return;
        }
    }
}

}  // namespace

std::vector<std::pair<ExtElt, int>> roots_in_extension(const FpPoly& f, const ExtField& K,
                                                       SeededRng& rng) {
    if (f.is_zero()) throw std::domain_error("roots_in_extension: zero polynomial");
    // lift f to a KPoly
    KPoly g;
    for (int i = 0; i <= f.degree(); ++i) g.push_back(K.from_base(f[i]));
    ktrim(K, g);
    // normalize monic
    if (!g.empty()) {
        ExtElt inv = K.inv(g.back());
        for (auto& c : g) c = K.mul(c, inv);
    }
    // gcd with x^(l^d) - x
    KPoly xp = kpowmod(K, KPoly{K.zero(), K.one()}, K.order(), g);
    KPoly lin = kgcd(K, g, ksub(K, xp, KPoly{K.zero(), K.one()}));
    std::vector<ExtElt> roots;
    ksplit_linear(K, lin, rng, roots);
    std::vector<std::pair<ExtElt, int>> out;
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
        out.emplace_back(r, mult);
    }
    return out;
}

}  // namespace iwss
