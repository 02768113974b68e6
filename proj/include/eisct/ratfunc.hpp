#pragma once

#include <string>

#include "eisct/poly.hpp"

namespace eisct {

// Element of Q(q) in canonical form: gcd(num, den) = 1, den has positive
// leading coefficient, zero is 0/1. Canonical form makes operator== decide
// mathematical equality.
class RatFunc {
  public:
    RatFunc() : num_(), den_(1) {}
    RatFunc(Poly num, Poly den);
    explicit RatFunc(Poly p) : num_(std::move(p)), den_(1) {}
    explicit RatFunc(const Rat& r);
    explicit RatFunc(long long n) : num_(n), den_(1) {}

    // q^k, k possibly negative.
    static RatFunc q_power(long long k);

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }

    RatFunc operator-() const;
    RatFunc operator+(const RatFunc& o) const;
    RatFunc operator-(const RatFunc& o) const;
    RatFunc operator*(const RatFunc& o) const;
    RatFunc operator/(const RatFunc& o) const;  // DivisionByZero
    RatFunc inverse() const;
    RatFunc pow(long long e) const;

    bool operator==(const RatFunc& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const RatFunc& o) const { return !(*this == o); }

    Rat eval(const Rat& q0) const;  // PoleAtQ0
    double eval_d(double q0) const;

    std::string to_string() const;

  private:
    void canonicalize();
    Poly num_, den_;
};

}  // namespace eisct
