#pragma once

#include <string>
#include <vector>

#include "eisct/rat.hpp"

namespace eisct {

// Dense polynomial in the symbolic indeterminate q with integer coefficients.
// coeff_[k] is the coefficient of q^k; the top coefficient is nonzero unless
// the polynomial is zero (empty coefficient vector).
class Poly {
  public:
    Poly() = default;
    explicit Poly(const Int& constant);
    explicit Poly(long long constant);
    explicit Poly(std::vector<Int> coeffs);  // low-to-high, trimmed internally

    static Poly q_power(unsigned long k);

    bool is_zero() const { return coeff_.empty(); }
    bool is_one() const { return coeff_.size() == 1 && coeff_[0] == 1; }
    long long degree() const { return static_cast<long long>(coeff_.size()) - 1; }
    const Int& leading() const;
    const std::vector<Int>& coeffs() const { return coeff_; }
    Int coeff(std::size_t k) const { return k < coeff_.size() ? coeff_[k] : Int(0); }

    Poly operator-() const;
    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    bool operator==(const Poly& o) const { return coeff_ == o.coeff_; }
    bool operator!=(const Poly& o) const { return !(*this == o); }

    // Quotient of an exact division; throws DivisionByZero on zero divisor and
    // asserts a zero remainder.
    Poly exact_div(const Poly& d) const;

    Rat eval(const Rat& q0) const;
    double eval_d(double q0) const;

    Int content() const;       // gcd of coefficients, sign of leading
    Poly primitive() const;    // this / content, leading coefficient > 0

    std::string to_string() const;

  private:
    void trim();
    std::vector<Int> coeff_;
};

// Primitive gcd in Z[q] with positive leading coefficient; gcd(0, b) = b.
Poly poly_gcd(const Poly& a, const Poly& b);

}  // namespace eisct
