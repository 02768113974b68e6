#include "eisct/poly.hpp"

#include <sstream>

#include "eisct/errors.hpp"

namespace eisct {

Poly::Poly(const Int& constant) {
    if (constant != 0) coeff_.push_back(constant);
}

Poly::Poly(long long constant) : Poly(Int(static_cast<long>(constant))) {}

Poly::Poly(std::vector<Int> coeffs) : coeff_(std::move(coeffs)) { trim(); }

Poly Poly::q_power(unsigned long k) {
    std::vector<Int> c(k + 1, Int(0));
    c[k] = 1;
    return Poly(std::move(c));
}

const Int& Poly::leading() const {
    static const Int zero(0);
    return coeff_.empty() ? zero : coeff_.back();
}

void Poly::trim() {
    while (!coeff_.empty() && coeff_.back() == 0) coeff_.pop_back();
}

Poly Poly::operator-() const {
    Poly r(*this);
    for (auto& c : r.coeff_) c = -c;
    return r;
}

Poly Poly::operator+(const Poly& o) const {
    std::vector<Int> c(std::max(coeff_.size(), o.coeff_.size()), Int(0));
    for (std::size_t i = 0; i < coeff_.size(); ++i) c[i] += coeff_[i];
    for (std::size_t i = 0; i < o.coeff_.size(); ++i) c[i] += o.coeff_[i];
    return Poly(std::move(c));
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Poly& o) const {
    if (is_zero() || o.is_zero()) return Poly();
    std::vector<Int> c(coeff_.size() + o.coeff_.size() - 1, Int(0));
    for (std::size_t i = 0; i < coeff_.size(); ++i)
        for (std::size_t j = 0; j < o.coeff_.size(); ++j) c[i + j] += coeff_[i] * o.coeff_[j];
    return Poly(std::move(c));
}

Poly Poly::exact_div(const Poly& d) const {
    if (d.is_zero()) throw DivisionByZero("polynomial division by zero");
    if (is_zero()) return Poly();
    // Division over Q; the callers only divide when the quotient is integral.
    std::vector<Rat> rem(coeff_.size());
    for (std::size_t i = 0; i < coeff_.size(); ++i) rem[i] = Rat(coeff_[i]);
    long long dq = degree() - d.degree();
    if (dq < 0) throw DivisionByZero("exact_div: divisor degree exceeds dividend");
    std::vector<Rat> quot(static_cast<std::size_t>(dq) + 1);
    Rat dlead(d.leading());
    for (long long k = dq; k >= 0; --k) {
        Rat t = rem[static_cast<std::size_t>(k + d.degree())] / dlead;
        quot[static_cast<std::size_t>(k)] = t;
        if (t != 0)
            for (long long j = 0; j <= d.degree(); ++j)
                rem[static_cast<std::size_t>(k + j)] -= t * Rat(d.coeffs()[static_cast<std::size_t>(j)]);
    }
    for (const auto& r : rem)
        if (r != 0) throw DivisionByZero("exact_div: nonzero remainder");
    std::vector<Int> out(quot.size());
    for (std::size_t i = 0; i < quot.size(); ++i) {
        if (!is_integer(quot[i])) throw DivisionByZero("exact_div: non-integral quotient");
        out[i] = quot[i].get_num();
    }
    return Poly(std::move(out));
}

Rat Poly::eval(const Rat& q0) const {
    Rat acc(0);
    for (auto it = coeff_.rbegin(); it != coeff_.rend(); ++it) acc = acc * q0 + Rat(*it);
    return acc;
}

double Poly::eval_d(double q0) const {
    double acc = 0.0;
    for (auto it = coeff_.rbegin(); it != coeff_.rend(); ++it) acc = acc * q0 + it->get_d();
    return acc;
}

Int Poly::content() const {
    Int g(0);
    for (const auto& c : coeff_) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 0) return Int(0);
    if (sgn(leading()) < 0) g = -g;
    return g;
}

Poly Poly::primitive() const {
    if (is_zero()) return Poly();
    Int c = content();
    std::vector<Int> out(coeff_.size());
    for (std::size_t i = 0; i < coeff_.size(); ++i) out[i] = coeff_[i] / c;
    return Poly(std::move(out));
}

std::string Poly::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (long long k = degree(); k >= 0; --k) {
        const Int& c = coeff_[static_cast<std::size_t>(k)];
        if (c == 0) continue;
        Int a = abs(c);
        if (first) {
            if (sgn(c) < 0) os << "-";
            first = false;
        } else {
            os << (sgn(c) < 0 ? "-" : "+");
        }
        if (k == 0 || a != 1) os << a.get_str();
        if (k > 0) {
            if (a != 1) os << "*";
            os << "q";
            if (k > 1) os << "^" << k;
        }
    }
    return os.str();
}

Poly poly_gcd(const Poly& a, const Poly& b) {
    if (a.is_zero()) return b.primitive();
    if (b.is_zero()) return a.primitive();
    // Euclid over Q[q]; sizes in this artifact stay small enough that
    // coefficient growth is a non-issue.
    std::vector<Rat> u(a.coeffs().size()), v(b.coeffs().size());
    for (std::size_t i = 0; i < u.size(); ++i) u[i] = Rat(a.coeffs()[i]);
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = Rat(b.coeffs()[i]);
    auto deg = [](const std::vector<Rat>& p) { return static_cast<long long>(p.size()) - 1; };
    auto trim = [](std::vector<Rat>& p) {
        while (!p.empty() && p.back() == 0) p.pop_back();
    };
    trim(u);
    trim(v);
    while (!v.empty()) {
        // u mod v
        while (deg(u) >= deg(v) && !u.empty()) {
            Rat t = u.back() / v.back();
            long long shift = deg(u) - deg(v);
            for (std::size_t j = 0; j < v.size(); ++j)
                u[static_cast<std::size_t>(shift) + j] -= t * v[j];
            trim(u);
        }
        std::swap(u, v);
    }
    if (u.empty()) return Poly(1);
    // Clear denominators, return the primitive integer polynomial.
    Int lcm(1);
    for (const auto& r : u) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), r.get_den().get_mpz_t());
    std::vector<Int> out(u.size());
    for (std::size_t i = 0; i < u.size(); ++i) {
        Rat s = u[i] * Rat(lcm);
        out[i] = s.get_num();
    }
    return Poly(std::move(out)).primitive();
}

}  // namespace eisct
