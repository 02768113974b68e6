#include "eisct/ratfunc.hpp"

#include "eisct/errors.hpp"

namespace eisct {

RatFunc::RatFunc(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw DivisionByZero("rational function with zero denominator");
    canonicalize();
}

RatFunc::RatFunc(const Rat& r) : num_(r.get_num()), den_(r.get_den()) {}

RatFunc RatFunc::q_power(long long k) {
    if (k >= 0) return RatFunc(Poly::q_power(static_cast<unsigned long>(k)));
    return RatFunc(Poly(1), Poly::q_power(static_cast<unsigned long>(-k)));
}

void RatFunc::canonicalize() {
    if (num_.is_zero()) {
        den_ = Poly(1);
        return;
    }
    Poly g = poly_gcd(num_, den_);
    if (!g.is_one()) {
        num_ = num_.exact_div(g);
        den_ = den_.exact_div(g);
    }
    // Pull out integer content so that den is primitive with positive leading
    // coefficient; keep num/den at integer coefficients via cross scaling.
    Int cn = num_.content();
    Int cd = den_.content();
    Int g2;
    mpz_gcd(g2.get_mpz_t(), cn.get_mpz_t(), cd.get_mpz_t());
    if (sgn(cd) < 0) g2 = -g2;
    if (g2 != 1 && g2 != 0) {
        num_ = num_.exact_div(Poly(g2));
        den_ = den_.exact_div(Poly(g2));
    }
}

RatFunc RatFunc::operator-() const {
    RatFunc r(*this);
    r.num_ = -r.num_;
    return r;
}

RatFunc RatFunc::operator+(const RatFunc& o) const {
    return RatFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RatFunc RatFunc::operator-(const RatFunc& o) const { return *this + (-o); }

RatFunc RatFunc::operator*(const RatFunc& o) const {
    return RatFunc(num_ * o.num_, den_ * o.den_);
}

RatFunc RatFunc::operator/(const RatFunc& o) const { return *this * o.inverse(); }

RatFunc RatFunc::inverse() const {
    if (is_zero()) throw DivisionByZero("inverse of zero rational function");
    return RatFunc(den_, num_);
}

RatFunc RatFunc::pow(long long e) const {
    RatFunc base = e >= 0 ? *this : inverse();
    unsigned long long k = static_cast<unsigned long long>(e >= 0 ? e : -e);
    RatFunc acc(1);
    while (k) {
        if (k & 1ULL) acc = acc * base;
        base = base * base;
        k >>= 1ULL;
    }
    return acc;
}

Rat RatFunc::eval(const Rat& q0) const {
    Rat d = den_.eval(q0);
    if (d == 0) throw PoleAtQ0("denominator vanishes at q0 = " + q0.get_str());
    return num_.eval(q0) / d;
}

double RatFunc::eval_d(double q0) const {
    double d = den_.eval_d(q0);
    if (d == 0.0) throw PoleAtQ0("denominator vanishes at q0");
    return num_.eval_d(q0) / d;
}

std::string RatFunc::to_string() const {
    if (den_.is_one()) return num_.to_string();
    return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

}  // namespace eisct
