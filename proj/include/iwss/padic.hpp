#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

#include "iwss/arith.hpp"
#include "iwss/bigint.hpp"
#include "iwss/fp_poly.hpp"

namespace iwss {

struct precision_exhausted : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct insufficient_precision : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Element of Z_l known modulo l^prec.
struct PadicInt {
    BigInt l;
    int prec = 0;
    BigInt residue;  // in [0, l^prec)

    BigInt modulus() const;
};

// Element of the ring of integers of the degree-d unramified extension of Q_l,
// as a polynomial of degree < d in a generator, coefficients mod l^prec. The
// defining polynomial is the coefficient-wise lift of an irreducible over F_l.
struct UnramifiedExtElement {
    BigInt l;
    int d = 1;
    int prec = 0;
    std::vector<BigInt> defining;  // monic, degree d, integer coefficients
    std::vector<BigInt> coeffs;    // length d, each in [0, l^prec)
};

// Canonical defining polynomial for the degree-d unramified extension
// (deterministic lift of a seeded irreducible over F_l).
std::vector<BigInt> unramified_modulus(const BigInt& l, int d);

// true iff x = l^val * unit with the given unit residue is a square in Q_l
// (odd l: val even and unit a QR mod l; l = 2: val even and unit = 1 mod 8).
// `unit_known_mod` guards precision: for l = 2 the unit must be known mod 8.
bool is_square_ql(const BigInt& l, int val, const BigInt& unit, int unit_known_prec);

// Roots in Z_l of an integer-coefficient polynomial f (squarefree over Q),
// to precision l^k, with Hensel certification flags. Exact enumeration: every
// l-adic root appears exactly once.
std::vector<std::pair<PadicInt, bool>> lift_roots(const std::vector<BigInt>& f, const BigInt& l,
                                                  int target_prec);

// Same over the ring of integers of the degree-d unramified extension.
std::vector<std::pair<UnramifiedExtElement, bool>> lift_roots_ext(const std::vector<BigInt>& f,
                                                                  const BigInt& l, int d,
                                                                  int target_prec);

// Solutions y in Z_l of y^2 + A y - B = 0 (monic; integral roots only, which
// covers torsion points on l-minimal models).
std::vector<PadicInt> solve_quadratic_in_y(const PadicInt& A, const PadicInt& B);

// Number of solutions (0 or 2) of y^2 + A y - B = 0 over the unramified
// degree-d extension, given A, B as integer polynomials in the generator.
int count_quadratic_roots_ext(const UnramifiedExtElement& A, const UnramifiedExtElement& B);

// Arithmetic in O_L / l^prec for L the degree-d unramified extension; used to
// evaluate Weierstrass expressions at extension-valued points.
class UnramifiedRing {
  public:
    using Elt = std::vector<BigInt>;
    UnramifiedRing(BigInt l, int d, int prec, std::vector<BigInt> defining);
    Elt from_int(const BigInt& n) const;
    Elt add(const Elt& a, const Elt& b) const;
    Elt mul(const Elt& a, const Elt& b) const;
    Elt scale(const Elt& a, const BigInt& k) const;

  private:
    BigInt l_;
    int d_;
    int prec_;
    BigInt mod_;
    std::vector<BigInt> h_;
};

}  // namespace iwss
