#include "iwss/ec.hpp"

#include <sstream>

#include "iwss/fp_poly.hpp"

namespace iwss {

std::string to_string(ReductionType t) {
    switch (t) {
        case ReductionType::Good: return "good";
        case ReductionType::MultiplicativeSplit: return "multiplicative-split";
        case ReductionType::MultiplicativeNonsplit: return "multiplicative-nonsplit";
        case ReductionType::Additive: return "additive";
    }
    return "?";
}

WeierstrassCurve::WeierstrassCurve(BigInt a1, BigInt a2, BigInt a3, BigInt a4, BigInt a6)
    : a_{std::move(a1), std::move(a2), std::move(a3), std::move(a4), std::move(a6)} {
    b2_ = a_[0] * a_[0] + 4 * a_[1];
    b4_ = 2 * a_[3] + a_[0] * a_[2];
    b6_ = a_[2] * a_[2] + 4 * a_[4];
    b8_ = a_[0] * a_[0] * a_[4] + 4 * a_[1] * a_[4] - a_[0] * a_[2] * a_[3] +
          a_[1] * a_[2] * a_[2] - a_[3] * a_[3];
    c4_ = b2_ * b2_ - 24 * b4_;
    c6_ = -b2_ * b2_ * b2_ + 36 * b2_ * b4_ - 216 * b6_;
    disc_ = -b2_ * b2_ * b8_ - 8 * b4_ * b4_ * b4_ - 27 * b6_ * b6_ + 9 * b2_ * b4_ * b6_;
    if (disc_ == 0) throw singular_curve("singular Weierstrass model (disc = 0)");
    if (c4_ * c4_ * c4_ - c6_ * c6_ != 1728 * disc_)
        throw std::logic_error("c4^3 - c6^2 != 1728 disc");
}

WeierstrassCurve WeierstrassCurve::parse(const std::string& text) {
    std::vector<BigInt> vals;
    std::string cur;
    for (char ch : text) {
        if (ch == '-' || ch == '+' || (ch >= '0' && ch <= '9')) {
            cur += ch;
        } else if (!cur.empty()) {
            vals.emplace_back(cur);
            cur.clear();
        }
    }
    if (!cur.empty()) vals.emplace_back(cur);
    if (vals.size() == 2) return short_form(vals[0], vals[1]);
    if (vals.size() == 5) return WeierstrassCurve(vals[0], vals[1], vals[2], vals[3], vals[4]);
    throw std::invalid_argument("curve literal must have 2 or 5 integers");
}

std::pair<BigInt, BigInt> WeierstrassCurve::j_invariant() const {
    BigInt num = c4_ * c4_ * c4_, den = disc_;
    BigInt g = gcd(num, den);
    if (g != 0) num /= g, den /= g;
    if (den < 0) num = -num, den = -den;
    return {num, den};
}

WeierstrassCurve WeierstrassCurve::transformed(const BigInt& u, const BigInt& r, const BigInt& s,
                                               const BigInt& t) const {
    BigInt A1 = a_[0] + 2 * s;
    BigInt A2 = a_[1] - s * a_[0] + 3 * r - s * s;
    BigInt A3 = a_[2] + r * a_[0] + 2 * t;
    BigInt A4 = a_[3] - s * a_[2] + 2 * r * a_[1] - (t + r * s) * a_[0] + 3 * r * r - 2 * s * t;
    BigInt A6 = a_[4] + r * a_[3] + r * r * a_[1] + r * r * r - t * a_[2] - t * t - r * t * a_[0];
    BigInt u2 = u * u, u3 = u2 * u, u4 = u2 * u2, u6 = u3 * u3;
    if (A1 % u != 0 || A2 % u2 != 0 || A3 % u3 != 0 || A4 % u4 != 0 || A6 % u6 != 0)
        throw std::domain_error("transformed: non-integral result");
    return WeierstrassCurve(A1 / u, A2 / u2, A3 / u3, A4 / u4, A6 / u6);
}

std::string WeierstrassCurve::to_label_string() const {
    std::ostringstream os;
    os << "[" << a_[0] << "," << a_[1] << "," << a_[2] << "," << a_[3] << "," << a_[4] << "]";
    return os.str();
}

std::optional<WeierstrassCurve> curve_from_c4c6(const BigInt& c4, const BigInt& c6) {
    if ((c4 * c4 * c4 - c6 * c6) % 1728 != 0) return std::nullopt;
    if (c4 * c4 * c4 == c6 * c6) return std::nullopt;
    // scan b2 by increasing |b2|; the reduced model has a1,a3 in {0,1}, a2 in {-1,0,1}
    for (int ab = 0; ab <= 24; ++ab) {
        for (int sign = 0; sign < (ab == 0 ? 1 : 2); ++sign) {
            BigInt b2 = sign == 0 ? ab : -ab;
            if ((b2 * b2 - c4) % 24 != 0) continue;
            BigInt b4 = (b2 * b2 - c4) / 24;
            BigInt num = -b2 * b2 * b2 + 36 * b2 * b4 - c6;
            if (num % 216 != 0) continue;
            BigInt b6 = num / 216;
            BigInt a1 = mod_floor(b2, 2);
            if ((b2 - a1) % 4 != 0) continue;
            BigInt a2 = (b2 - a1) / 4;
            BigInt a3 = mod_floor(b6, 2);
            if ((b6 - a3) % 4 != 0) continue;
            BigInt a6 = (b6 - a3) / 4;
            if ((b4 - a1 * a3) % 2 != 0) continue;
            BigInt a4 = (b4 - a1 * a3) / 2;
            try {
                WeierstrassCurve E(a1, a2, a3, a4, a6);
                if (E.c4() == c4 && E.c6() == c6) return E;
            } catch (const singular_curve&) {
            }
        }
    }
    return std::nullopt;
}

std::pair<WeierstrassCurve, Transformation> minimal_model(const WeierstrassCurve& E) {
    BigInt c4 = E.c4(), c6 = E.c6(), disc = E.discriminant();
    // candidate primes: only p with p^12 | disc can be scaled out
    std::map<BigInt, int> cand;
    Factorization fd = factor(abs(disc));
    for (const auto& [p, e] : fd.factors) {
        if (e >= 12) cand[p] = e / 12;
    }
    // (an incomplete cofactor cannot contain p^12 <= cofactor primes anyway unless
    // huge; minimality at unfactored primes is then untestable but irrelevant for
    // the conductors we can report)
    BigInt u = 1;
    for (auto& [p, dmax] : cand) {
        int d = dmax;
        if (c4 != 0) d = std::min(d, valuation(c4, p) / 4);
        if (c6 != 0) d = std::min(d, valuation(c6, p) / 6);
        while (d > 0) {
            BigInt p4 = 1, p6 = 1;
            for (int i = 0; i < 4 * d; ++i) p4 *= p;
            for (int i = 0; i < 6 * d; ++i) p6 *= p;
            BigInt nc4 = c4 / p4, nc6 = c6 / p6;
            if (p >= 5 || curve_from_c4c6(nc4, nc6).has_value()) {
                BigInt pd = 1;
                for (int i = 0; i < d; ++i) pd *= p;
                u *= pd;
                c4 = nc4;
                c6 = nc6;
                break;
            }
            --d;
        }
    }
    auto Em = curve_from_c4c6(c4, c6);
    if (!Em) throw std::logic_error("minimal_model: reconstruction failed");
    // recover (r,s,t) relating E to Em: u known; solve from a-invariants
    // a1' = (a1 + 2s)/u, a2' = (a2 - s a1 + 3r - s^2)/u^2, a3' = (a3 + r a1 + 2t)/u^3
    BigInt s = (Em->a1() * u - E.a1());
    if (s % 2 != 0) throw std::logic_error("minimal_model: s not integral");
    s /= 2;
    BigInt r = (Em->a2() * u * u - E.a2() + s * E.a1() + s * s);
    if (r % 3 != 0) throw std::logic_error("minimal_model: r not integral");
    r /= 3;
    BigInt t = (Em->a3() * u * u * u - E.a3() - r * E.a1());
    if (t % 2 != 0) throw std::logic_error("minimal_model: t not integral");
    t /= 2;
    if (!(E.transformed(u, r, s, t) == *Em)) throw std::logic_error("minimal_model: bad transform");
    return {*Em, Transformation{u, r, s, t}};
}

namespace {

// number of roots of Y^2 + bY + c over F_p
int quadratic_root_count(const BigInt& b, const BigInt& c, const BigInt& p) {
    if (p == 2) {
        int n = 0;
        for (BigInt y = 0; y <= 1; ++y)
            if (mod_floor(y * y + b * y + c, 2) == 0) ++n;
        return n;
    }
    BigInt d = mod_floor(b * b - 4 * c, p);
    if (d == 0) return 1;
    return jacobi(d, p) == 1 ? 2 : 0;
}

// roots of a low-degree polynomial over F_p (coefficients low-to-high)
std::vector<BigInt> small_poly_roots(const std::vector<BigInt>& coeffs, const BigInt& p) {
    FpPoly f(p, coeffs);
    if (f.is_zero()) throw std::logic_error("small_poly_roots: zero polynomial");
    SeededRng rng(0xABCDEF9876543210ULL);
    std::vector<BigInt> out;
    for (auto& [r, m] : roots_mod_prime(f, rng)) out.push_back(r);
    return out;
}

int valuation_or_large(const BigInt& n, const BigInt& p, int cap = 1 << 20) {
    if (n == 0) return cap;
    return valuation(n, p);
}

}  // namespace

LocalReductionData tate_local(const WeierstrassCurve& E0, const BigInt& p) {
    WeierstrassCurve E = E0;
    while (true) {
        const BigInt disc = E.discriminant();
        int n = valuation_or_large(disc, p);
        if (n == 0) return {p, "I0", ReductionType::Good, 0, 1, 0};

        // Step 2: move the singular point of the reduction to (0,0).
        if (p == 2 || p == 3) {
            bool done = false;
            for (BigInt r = 0; r < p && !done; ++r) {
                for (BigInt t = 0; t < p && !done; ++t) {
                    WeierstrassCurve Et = E.transformed(1, r, 0, t);
                    if (Et.a3() % p == 0 && Et.a4() % p == 0 && Et.a6() % p == 0) {
                        E = Et;
                        done = true;
                    }
                }
            }
            if (!done) throw std::logic_error("tate: singular point not found (small p)");
        } else {
            BigInt x0;
            if (E.c4() % p != 0) {
                // node: common root of the cubic 4x^3+b2x^2+2b4x+b6 and its derivative
                std::vector<BigInt> cubic{E.b6(), 2 * E.b4(), E.b2(), 4};
                std::vector<BigInt> deriv{2 * E.b4(), 2 * E.b2(), 12};
                std::optional<BigInt> found;
                for (const BigInt& r : small_poly_roots(deriv, p)) {
                    BigInt v = mod_floor(((4 * r + E.b2()) * r + 2 * E.b4()) * r + E.b6(), p);
                    if (v == 0) {
                        found = r;
                        break;
                    }
                }
                if (!found) throw std::logic_error("tate: node not found");
                x0 = *found;
            } else {
                x0 = mod_floor(-E.b2() * inv_mod(12, p), p);
            }
            BigInt y0 = mod_floor(-(E.a1() * x0 + E.a3()) * inv_mod(2, p), p);
            E = E.transformed(1, x0, 0, y0);
        }

        // multiplicative case
        if (E.b2() % p != 0) {
            bool split = quadratic_root_count(mod_floor(E.a1(), p), mod_floor(-E.a2(), p), p) == 2;
            BigInt c = split ? BigInt(n) : BigInt(n % 2 == 0 ? 2 : 1);
            return {p,
                    "I" + std::to_string(n),
                    split ? ReductionType::MultiplicativeSplit
                          : ReductionType::MultiplicativeNonsplit,
                    1, c, n};
        }

        // additive cases
        if (valuation_or_large(E.a6(), p) < 2) return {p, "II", ReductionType::Additive, n, 1, n};
        if (valuation_or_large(E.b8(), p) < 3)
            return {p, "III", ReductionType::Additive, n - 1, 2, n};
        if (valuation_or_large(E.b6(), p) < 3) {
            BigInt a3p = E.a3() / p, a6p2 = E.a6() / (p * p);
            int nr = quadratic_root_count(mod_floor(a3p, p), mod_floor(-a6p2, p), p);
            return {p, "IV", ReductionType::Additive, n - 2, nr == 2 ? 3 : 1, n};
        }

        // Step 6 normalization: p | a1,a2 ; p^2 | a3,a4 ; p^3 | a6.
        if (p == 2 || p == 3) {
            bool found = false;
            for (BigInt s = 0; s < p && !found; ++s) {
                for (BigInt t = 0; t < p * p && !found; ++t) {
                    WeierstrassCurve Et = E.transformed(1, 0, s, t);
                    if (valuation_or_large(Et.a1(), p) >= 1 && valuation_or_large(Et.a2(), p) >= 1 &&
                        valuation_or_large(Et.a3(), p) >= 2 && valuation_or_large(Et.a4(), p) >= 2 &&
                        valuation_or_large(Et.a6(), p) >= 3) {
                        E = Et;
                        found = true;
                    }
                }
            }
            if (!found) throw std::logic_error("tate: step-6 normalization failed");
        } else {
            BigInt s = mod_floor(-E.a1() * inv_mod(2, p), p);
            E = E.transformed(1, 0, s, 0);
            BigInt r = mod_floor(-E.a2() * inv_mod(3, p), p);
            E = E.transformed(1, r, 0, 0);
            BigInt p2 = p * p;
            BigInt t = mod_floor(-E.a3() * inv_mod(2, p2), p2);
            E = E.transformed(1, 0, 0, t);
            if (!(valuation_or_large(E.a1(), p) >= 1 && valuation_or_large(E.a2(), p) >= 1 &&
                  valuation_or_large(E.a3(), p) >= 2 && valuation_or_large(E.a4(), p) >= 2 &&
                  valuation_or_large(E.a6(), p) >= 3))
                throw std::logic_error("tate: step-6 valuations");
        }

        // Step 6 cubic P(T) = T^3 + a2/p T^2 + a4/p^2 T + a6/p^3 over F_p.
        BigInt A2 = E.a2() / p, A4 = E.a4() / (p * p), A6 = E.a6() / (p * p * p);
        BigInt discP = mod_floor(
            4 * A2 * A2 * A2 * A6 - A2 * A2 * A4 * A4 - 18 * A2 * A4 * A6 + 4 * A4 * A4 * A4 +
                27 * A6 * A6,
            p);
        if (discP != 0) {
            auto roots = small_poly_roots({A6, A4, A2, 1}, p);
            return {p, "I0*", ReductionType::Additive, n - 4, BigInt(1 + roots.size()), n};
        }
        // multiple root x0 of P (rational); triple iff P == (T - x0)^3 mod p
        std::optional<BigInt> x0;
        if (p <= 3) {
            for (BigInt x = 0; x < p && !x0; ++x) {
                BigInt pv = mod_floor(((x + A2) * x + A4) * x + A6, p);
                BigInt dv = mod_floor(3 * x * x + 2 * A2 * x + A4, p);
                if (pv == 0 && dv == 0) x0 = x;
            }
        } else {
            for (const BigInt& x : small_poly_roots({A6, A4, A2, 1}, p)) {
                if (mod_floor(3 * x * x + 2 * A2 * x + A4, p) == 0) {
                    x0 = x;
                    break;
                }
            }
        }
        if (!x0) throw std::logic_error("tate: multiple root of P not found");
        bool triple = mod_floor(A2 + 3 * *x0, p) == 0 && mod_floor(A4 - 3 * *x0 * *x0, p) == 0 &&
                      mod_floor(A6 + *x0 * *x0 * *x0, p) == 0;
        E = E.transformed(1, p * *x0, 0, 0);

        if (!triple) {
            // Step 7: I_nu* subprocedure.
            int nu = 1;
            int lstep = 2;
            while (true) {
                BigInt p_l = 1;
                for (int i = 0; i < lstep; ++i) p_l *= p;
                BigInt q3 = E.a3() / p_l;
                BigInt q6 = E.a6() / (p_l * p_l);
                if (mod_floor(q3 * q3 + 4 * q6, p) != 0) {
                    int nr = quadratic_root_count(mod_floor(q3, p), mod_floor(-q6, p), p);
                    return {p, "I" + std::to_string(nu) + "*", ReductionType::Additive,
                            n - 4 - nu, BigInt(nr == 2 ? 4 : 2), n};
                }
                BigInt y0;
                if (p == 2) {
                    y0 = mod_floor(q3, 2) == 0 ? (mod_floor(q6, 2) == 0 ? 0 : 1)
                                               : mod_floor(q6, 2);  // root of y^2+q3 y-q6
                    // brute force for safety
                    bool ok = false;
                    for (BigInt y = 0; y <= 1; ++y)
                        if (mod_floor(y * y + q3 * y - q6, 2) == 0) {
                            y0 = y;
                            ok = true;
                            break;
                        }
                    if (!ok) throw std::logic_error("tate: I_nu* (odd) root");
                } else {
                    y0 = mod_floor(-q3 * inv_mod(2, p), p);
                }
                E = E.transformed(1, 0, 0, p_l * y0);
                ++nu;
                BigInt q2 = E.a2() / p;
                BigInt q4 = E.a4() / (p_l * p);
                BigInt q6b = E.a6() / (p_l * p_l * p);
                if (mod_floor(q4 * q4 - 4 * q2 * q6b, p) != 0) {
                    int nr;
                    if (p == 2) {
                        nr = 0;
                        for (BigInt x = 0; x <= 1; ++x)
                            if (mod_floor(q2 * x * x + q4 * x + q6b, 2) == 0) ++nr;
                    } else {
                        BigInt dd = mod_floor(q4 * q4 - 4 * q2 * q6b, p);
                        nr = jacobi(dd, p) == 1 ? 2 : 0;
                    }
                    return {p, "I" + std::to_string(nu) + "*", ReductionType::Additive,
                            n - 4 - nu, BigInt(nr == 2 ? 4 : 2), n};
                }
                BigInt x1;
                if (p == 2) {
                    bool ok = false;
                    for (BigInt x = 0; x <= 1; ++x)
                        if (mod_floor(q2 * x * x + q4 * x + q6b, 2) == 0) {
                            x1 = x;
                            ok = true;
                            break;
                        }
                    if (!ok) throw std::logic_error("tate: I_nu* (even) root");
                } else {
                    x1 = mod_floor(-q4 * inv_mod(2 * q2, p), p);
                }
                E = E.transformed(1, p_l * x1, 0, 0);
                ++nu;
                ++lstep;
            }
        }

        // Step 8: triple root. Quadratic Y^2 + a3/p^2 Y - a6/p^4.
        {
            BigInt q3 = E.a3() / (p * p);
            BigInt q6 = E.a6() / (p * p * p * p);
            if (mod_floor(q3 * q3 + 4 * q6, p) != 0) {
                int nr = quadratic_root_count(mod_floor(q3, p), mod_floor(-q6, p), p);
                return {p, "IV*", ReductionType::Additive, n - 6, BigInt(nr == 2 ? 3 : 1), n};
            }
            BigInt y0;
            if (p == 2) {
                bool ok = false;
                for (BigInt y = 0; y <= 1; ++y)
                    if (mod_floor(y * y + q3 * y - q6, 2) == 0) {
                        y0 = y;
                        ok = true;
                        break;
                    }
                if (!ok) throw std::logic_error("tate: IV* root");
            } else {
                y0 = mod_floor(-q3 * inv_mod(2, p), p);
            }
            E = E.transformed(1, 0, 0, p * p * y0);
        }
        // Step 9/10: III*, II*.
        if (E.a4() != 0 && valuation(E.a4(), p) < 4)
            return {p, "III*", ReductionType::Additive, n - 7, 2, n};
        if (E.a6() != 0 && valuation(E.a6(), p) < 6)
            return {p, "II*", ReductionType::Additive, n - 8, 1, n};
        // Step 11: not minimal; rescale and restart.
        E = E.transformed(p, 0, 0, 0);
    }
}

Factorization conductor(const WeierstrassCurve& E) {
    auto [Em, tr] = minimal_model(E);
    Factorization fd = factor(abs(Em.discriminant()));
    if (!fd.complete)
        throw std::runtime_error("conductor: incomplete factorization of the minimal discriminant");
    Factorization N;
    for (const auto& [p, e] : fd.factors) {
        LocalReductionData ld = tate_local(Em, p);
        if (ld.f > 0) N.factors[p] = ld.f;
    }
    return N;
}

BigInt count_points_mod_p(const WeierstrassCurve& E, const BigInt& p) {
    if (p > 1000000) throw std::domain_error("count_points_mod_p: p too large for enumeration");
    if (E.discriminant() % p == 0) throw bad_reduction("count_points_mod_p: bad reduction");
    BigInt a1 = mod_floor(E.a1(), p), a2 = mod_floor(E.a2(), p), a3 = mod_floor(E.a3(), p),
           a4 = mod_floor(E.a4(), p), a6 = mod_floor(E.a6(), p);
    BigInt count = 1;  // infinity
    if (p == 2) {
        for (BigInt x = 0; x < 2; ++x)
            for (BigInt y = 0; y < 2; ++y)
                if (mod_floor(y * y + a1 * x * y + a3 * y - (x * x * x + a2 * x * x + a4 * x + a6),
                              2) == 0)
                    ++count;
        return count;
    }
    for (BigInt x = 0; x < p; ++x) {
        BigInt rhs = mod_floor(((x + a2) * x + a4) * x + a6, p);
        BigInt b = mod_floor(a1 * x + a3, p);
        BigInt d = mod_floor(b * b + 4 * rhs, p);
        if (d == 0)
            ++count;
        else if (jacobi(d, p) == 1)
            count += 2;
    }
    return count;
}

BigInt trace_of_frobenius(const WeierstrassCurve& E, const BigInt& p) {
    return p + 1 - count_points_mod_p(E, p);
}

HypOneVerdict check_hyp1(const WeierstrassCurve& E, const BigInt& p) {
    HypOneVerdict v;
    v.p = p;
    auto [Em, tr] = minimal_model(E);
    v.good_at_p = Em.discriminant() % p != 0;
    if (!v.good_at_p) {
        v.failures.push_back("bad reduction at p");
        v.a_p = 0;
        return v;
    }
    v.a_p = trace_of_frobenius(Em, p);
    if (v.a_p == 0) {
        v.supersingular = true;
    } else {
        v.failures.push_back("a_p = " + to_string(v.a_p) + " != 0 (not supersingular; discarded)");
    }
    return v;
}

}  // namespace iwss
