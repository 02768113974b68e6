#pragma once

#include <string>

#include "eisct/ratfunc.hpp"

namespace eisct {

// A value of the form q^r * f(q) with r in Q ∩ [0,1) and f in Q(q). The
// exponent is normalized into [0,1) on every operation, so componentwise
// equality is mathematical equality. Addition requires matching exponents;
// callers keep sums of mixed exponents as explicit term lists.
class ScaledValue {
  public:
    ScaledValue() : r_(0), f_() {}
    explicit ScaledValue(RatFunc f) : r_(0), f_(std::move(f)) {}
    ScaledValue(const Rat& r, RatFunc f);

    // q^e for an arbitrary rational e: the integer part moves into f.
    static ScaledValue q_pow(const Rat& e);
    static ScaledValue one() { return ScaledValue(RatFunc(1)); }

    const Rat& exponent() const { return r_; }
    const RatFunc& ratfunc() const { return f_; }
    bool is_zero() const { return f_.is_zero(); }
    bool is_one() const { return r_ == 0 && f_.is_one(); }

    ScaledValue operator*(const ScaledValue& o) const;
    ScaledValue operator/(const ScaledValue& o) const;  // DivisionByZero
    ScaledValue operator+(const ScaledValue& o) const;  // IncompatibleExponent
    ScaledValue operator-(const ScaledValue& o) const;  // IncompatibleExponent

    bool operator==(const ScaledValue& o) const { return r_ == o.r_ && f_ == o.f_; }
    bool operator!=(const ScaledValue& o) const { return !(*this == o); }

    std::string to_string() const;

  private:
    Rat r_;       // in [0, 1)
    RatFunc f_;
};

// Numeric evaluation at a rational q0 > 1. Exact whenever q0^r is rational;
// otherwise `approx` carries the value (relative error well under 1e-12 at
// this artifact's magnitudes).
struct NumericValue {
    bool exact = false;
    Rat value;           // valid when exact
    double approx = 0.0; // always valid
    double as_double() const { return exact ? value.get_d() : approx; }
};

NumericValue eval_numeric(const ScaledValue& v, const Rat& q0);  // PoleAtQ0
NumericValue eval_numeric(const RatFunc& f, const Rat& q0);      // PoleAtQ0

// Fixed-point decimal rendering of an exact rational with an explicit marker
// ("..." suffix) when the expansion was truncated at `digits` fractional
// digits.
std::string decimal_string(const Rat& value, int digits);

}  // namespace eisct
