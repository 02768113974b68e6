#pragma once

#include <vector>

#include "eisct/scaled.hpp"

namespace eisct {

// Numerator of a genus-g function-field zeta: degree 2g in u with
// coefficients in Z[q], constant term 1, and the functional-equation
// constraint a_{2g-i} = q^{g-i} a_i. Genus 0 is L = 1.
class LPolynomial {
  public:
    LPolynomial();  // genus 0
    LPolynomial(int genus, std::vector<Poly> coeffs);  // DomainError on bad data

    static LPolynomial genus_zero() { return LPolynomial(); }
    // 1 + a*u + q*u^2, the desk-scale genus-1 family.
    static LPolynomial genus_one(long long a);

    int genus() const { return genus_; }
    const std::vector<Poly>& coeffs() const { return coeff_; }

    // L(q^{-n}) as an exact rational function of q.
    RatFunc eval_at_q_power(long long n) const;

  private:
    int genus_;
    std::vector<Poly> coeff_;  // coeff_[i] multiplies u^i, size 2g+1
};

class ZetaFunction {
  public:
    ZetaFunction() : L_() {}
    explicit ZetaFunction(LPolynomial L) : L_(std::move(L)) {}

    int genus() const { return L_.genus(); }
    const LPolynomial& lpoly() const { return L_; }

  private:
    LPolynomial L_;
};

// zeta_F(n) = L(q^{-n}) / ((1-q^{-n})(1-q^{1-n})) as an exact rational
// function of symbolic q. Throws ZetaPole for n in {0, 1}, where the
// denominator vanishes identically.
RatFunc zeta_at(const ZetaFunction& Z, long long n);

// xi_F(n) = q^{(g-1)n} zeta_F(n); satisfies xi(n) = xi(1-n) exactly.
ScaledValue xi_at(const ZetaFunction& Z, long long n);

// The three Lemma identities at s = n, each checked exactly:
//   zeta(s)/zeta(1-s) = q^{(2s-1)(1-g)},
//   zeta(-s)/zeta(1+s) = q^{(-2s-1)(1-g)},
//   product of the two = q^{-2(1-g)}.
struct RatioCheck {
    bool first = false, second = false, product = false;
    bool all() const { return first && second && product; }
};
RatioCheck ratio_identity_check(const ZetaFunction& Z, long long n);  // ZetaPole

// Numeric zeta(s) for real s at a concrete prime power, genus via Z.
double zeta_numeric(const ZetaFunction& Z, double s, double q0);  // ZetaPole-ish -> DomainError

// Count of monic irreducible polynomials of degree d over F_q0 (necklace
// formula N_d = (1/d) sum_{e|d} mu(e) q0^{d/e}).
Int irreducible_count(long long q0, long long d);

// Partial Euler product for zeta_{F_q0(T)}(s) over the infinite place and all
// monic irreducibles of degree <= D, with the geometric tail bound on the log
// gap. Exact when s is an integer.
struct EulerPartial {
    double value = 0.0;
    Rat exact_value;      // valid when exact
    bool exact = false;
    double tail_log_bound = 0.0;  // bound on log(full/partial)
};
EulerPartial euler_partial(long long q0, const Rat& s, long long D);  // DomainError s <= 1

}  // namespace eisct
