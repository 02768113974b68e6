#include "eisct/scaled.hpp"

#include <sstream>

#include "eisct/errors.hpp"

namespace eisct {

ScaledValue::ScaledValue(const Rat& r, RatFunc f) : r_(frac_rat(r)), f_(std::move(f)) {
    Int carry = floor_rat(r);
    if (carry != 0 && !f_.is_zero()) {
        if (!carry.fits_slong_p()) throw DomainError("scaled exponent carry too large");
        f_ = f_ * RatFunc::q_power(carry.get_si());
    }
    if (f_.is_zero()) r_ = 0;
}

ScaledValue ScaledValue::q_pow(const Rat& e) { return ScaledValue(e, RatFunc(1)); }

ScaledValue ScaledValue::operator*(const ScaledValue& o) const {
    return ScaledValue(r_ + o.r_, f_ * o.f_);
}

ScaledValue ScaledValue::operator/(const ScaledValue& o) const {
    return ScaledValue(r_ - o.r_, f_ / o.f_);
}

ScaledValue ScaledValue::operator+(const ScaledValue& o) const {
    if (is_zero()) return o;
    if (o.is_zero()) return *this;
    if (r_ != o.r_)
        throw IncompatibleExponent("cannot add q^" + r_.get_str() + " and q^" + o.r_.get_str() +
                                   " terms");
    return ScaledValue(r_, f_ + o.f_);
}

ScaledValue ScaledValue::operator-(const ScaledValue& o) const {
    if (o.is_zero()) return *this;
    ScaledValue neg(o.r_, -o.f_);
    return *this + neg;
}

std::string ScaledValue::to_string() const {
    if (r_ == 0) return f_.to_string();
    return "q^(" + r_.get_str() + ")*" + f_.to_string();
}

NumericValue eval_numeric(const ScaledValue& v, const Rat& q0) {
    NumericValue out;
    Rat fval = v.ratfunc().eval(q0);  // PoleAtQ0 surfaces here
    PowResult p = rat_pow_frac(q0, v.exponent());
    if (p.exact) {
        out.exact = true;
        out.value = p.value * fval;
        out.approx = out.value.get_d();
    } else {
        out.exact = false;
        out.approx = p.approx * fval.get_d();
    }
    return out;
}

NumericValue eval_numeric(const RatFunc& f, const Rat& q0) {
    NumericValue out;
    out.exact = true;
    out.value = f.eval(q0);
    out.approx = out.value.get_d();
    return out;
}

std::string decimal_string(const Rat& value, int digits) {
    Rat v = value;
    std::ostringstream os;
    if (sgn(v) < 0) {
        os << "-";
        v = -v;
    }
    Int ip = floor_rat(v);
    os << ip.get_str();
    Rat frac = v - Rat(ip);
    if (frac == 0) return os.str();
    os << ".";
    for (int i = 0; i < digits && frac != 0; ++i) {
        frac *= 10;
        Int d = floor_rat(frac);
        os << d.get_str();
        frac -= Rat(d);
    }
    if (frac != 0) os << "...";
    return os.str();
}

}  // namespace eisct
