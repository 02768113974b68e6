#include "eisct/zeta.hpp"

#include <cmath>

#include "eisct/errors.hpp"

namespace eisct {

LPolynomial::LPolynomial() : genus_(0), coeff_{Poly(1)} {}

LPolynomial::LPolynomial(int genus, std::vector<Poly> coeffs)
    : genus_(genus), coeff_(std::move(coeffs)) {
    if (genus_ < 0) throw DomainError("negative genus");
    if (coeff_.size() != static_cast<std::size_t>(2 * genus_ + 1))
        throw DomainError("L-polynomial must have degree 2g");
    if (!(coeff_[0] == Poly(1))) throw DomainError("L(0) must be 1");
    // functional-equation constraint a_{2g-i} = q^{g-i} a_i
    for (int i = 0; i <= genus_; ++i) {
        Poly expect = coeff_[static_cast<std::size_t>(i)] *
                      Poly::q_power(static_cast<unsigned long>(genus_ - i));
        if (!(coeff_[static_cast<std::size_t>(2 * genus_ - i)] == expect))
            throw DomainError("L-polynomial violates the functional-equation constraint");
    }
}

LPolynomial LPolynomial::genus_one(long long a) {
    std::vector<Poly> c;
    c.push_back(Poly(1));
    c.push_back(Poly(a));
    c.push_back(Poly::q_power(1));
    return LPolynomial(1, std::move(c));
}

RatFunc LPolynomial::eval_at_q_power(long long n) const {
    RatFunc acc;
    for (std::size_t i = 0; i < coeff_.size(); ++i) {
        if (coeff_[i].is_zero()) continue;
        acc = acc + RatFunc(coeff_[i]) * RatFunc::q_power(-n * static_cast<long long>(i));
    }
    return acc;
}

RatFunc zeta_at(const ZetaFunction& Z, long long n) {
    if (n == 0 || n == 1) throw ZetaPole(n, "denominator vanishes identically");
    RatFunc num = Z.lpoly().eval_at_q_power(n);
    RatFunc d1 = RatFunc(1) - RatFunc::q_power(-n);
    RatFunc d2 = RatFunc(1) - RatFunc::q_power(1 - n);
    return num / (d1 * d2);
}

ScaledValue xi_at(const ZetaFunction& Z, long long n) {
    RatFunc z = zeta_at(Z, n);
    long long e = static_cast<long long>(Z.genus() - 1) * n;
    return ScaledValue(Rat(static_cast<long>(e)), z);
}

RatioCheck ratio_identity_check(const ZetaFunction& Z, long long n) {
    const long long g = Z.genus();
    RatioCheck out;
    RatFunc r1 = zeta_at(Z, n) / zeta_at(Z, 1 - n);
    out.first = r1 == RatFunc::q_power((2 * n - 1) * (1 - g));
    RatFunc r2 = zeta_at(Z, -n) / zeta_at(Z, 1 + n);
    out.second = r2 == RatFunc::q_power((-2 * n - 1) * (1 - g));
    out.product = (r1 * r2) == RatFunc::q_power(-2 * (1 - g));
    return out;
}

double zeta_numeric(const ZetaFunction& Z, double s, double q0) {
    double u = std::pow(q0, -s);
    double num = 0.0;
    const auto& c = Z.lpoly().coeffs();
    for (std::size_t i = c.size(); i-- > 0;) num = num * u + c[i].eval_d(q0);
    double den = (1.0 - std::pow(q0, -s)) * (1.0 - std::pow(q0, 1.0 - s));
    if (den == 0.0) throw DomainError("zeta_numeric at a pole");
    return num / den;
}

Int irreducible_count(long long q0, long long d) {
    if (d < 1) throw DomainError("degree must be positive");
    // moebius over divisors of d
    Int total(0);
    for (long long e = 1; e <= d; ++e) {
        if (d % e != 0) continue;
        long long m = e, mu = 1;
        for (long long p = 2; p * p <= m; ++p) {
            if (m % p == 0) {
                m /= p;
                if (m % p == 0) {
                    mu = 0;
                    break;
                }
                mu = -mu;
            }
        }
        if (mu != 0 && m > 1) mu = -mu;
        if (mu == 0) continue;
        Int pw;
        mpz_ui_pow_ui(pw.get_mpz_t(), static_cast<unsigned long>(q0),
                      static_cast<unsigned long>(d / e));
        total += int_of(mu) * pw;
    }
    return total / int_of(d);
}

EulerPartial euler_partial(long long q0, const Rat& s, long long D) {
    if (q0 < 2) throw DomainError("q0 must be at least 2");
    if (s <= 1) throw DomainError("Euler product requires s > 1");
    if (D < 1) throw DomainError("degree cutoff must be positive");
    EulerPartial out;
    const double sd = s.get_d();
    const double lnq = std::log(static_cast<double>(q0));
    if (is_integer(s)) {
        long long si = s.get_num().get_si();
        // infinite place (degree 1) counts once on top of N_1 finite places
        Rat prod = Rat(1) / (Rat(1) - rat_pow(Rat(static_cast<long>(q0)), -si));
        for (long long d = 1; d <= D; ++d) {
            Int nd = irreducible_count(q0, d);
            Rat factor = Rat(1) / (Rat(1) - rat_pow(Rat(static_cast<long>(q0)), -si * d));
            Rat fp(1);
            // factor^N_d by binary exponentiation
            Rat base = factor;
            Int e = nd;
            while (e > 0) {
                if (mpz_odd_p(e.get_mpz_t())) fp *= base;
                e /= 2;
                if (e > 0) base *= base;
            }
            prod *= fp;
        }
        out.exact = true;
        out.exact_value = prod;
        out.value = prod.get_d();
    } else {
        double logsum = -std::log(1.0 - std::exp(-sd * lnq));
        for (long long d = 1; d <= D; ++d) {
            double nd = irreducible_count(q0, d).get_d();
            logsum -= nd * std::log(1.0 - std::exp(-sd * lnq * static_cast<double>(d)));
        }
        out.exact = false;
        out.value = std::exp(logsum);
    }
    // log tail: -sum_{d>D} N_d log(1 - q0^{-sd}) <= C sum_{d>D} q0^{d(1-s)}
    // with N_d <= q0^d and -log(1-x) <= x/(1-x), x <= q0^{-s}.
    double x1 = std::exp(-sd * lnq);
    double C = 1.0 / (1.0 - x1);
    double r = std::exp((1.0 - sd) * lnq);
    out.tail_log_bound = C * std::pow(r, static_cast<double>(D + 1)) / (1.0 - r);
    return out;
}

}  // namespace eisct
