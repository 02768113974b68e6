#include "eisct/rat.hpp"

#include <cmath>
#include <cstdlib>

#include "eisct/errors.hpp"

namespace eisct {

Rat rat_pow(const Rat& q0, long long e) {
    if (q0 == 0 && e <= 0) throw DivisionByZero("0 raised to a non-positive power");
    Rat base = e >= 0 ? q0 : Rat(1) / q0;
    unsigned long long k = static_cast<unsigned long long>(e >= 0 ? e : -e);
    Rat acc(1);
    while (k) {
        if (k & 1ULL) acc *= base;
        base *= base;
        k >>= 1ULL;
    }
    return acc;
}

bool exact_root(const Int& x, unsigned long n, Int& out) {
    if (sgn(x) < 0 && n % 2 == 0) return false;
    int exact = mpz_root(out.get_mpz_t(), x.get_mpz_t(), n);
    return exact != 0;
}

PowResult rat_pow_frac(const Rat& q0, const Rat& exponent) {
    PowResult res;
    if (is_integer(exponent)) {
        res.exact = true;
        res.value = rat_pow(q0, exponent.get_num().get_si());
        res.approx = res.value.get_d();
        return res;
    }
    // q0^(p/n) with gcd(p, n) = 1: exact iff num(q0)^p and den(q0)^p are
    // perfect n-th powers.
    Int p = exponent.get_num();
    unsigned long n = exponent.get_den().get_ui();
    Rat base = sgn(p) >= 0 ? q0 : Rat(1) / q0;
    Int pabs = abs(p);
    Int bn, bd;
    mpz_pow_ui(bn.get_mpz_t(), base.get_num().get_mpz_t(), pabs.get_ui());
    mpz_pow_ui(bd.get_mpz_t(), base.get_den().get_mpz_t(), pabs.get_ui());
    Int rn, rd;
    if (exact_root(bn, n, rn) && exact_root(bd, n, rd)) {
        res.exact = true;
        res.value = make_rat(rn, rd);
        res.approx = res.value.get_d();
        return res;
    }
    res.exact = false;
    res.approx = std::exp(exponent.get_d() * std::log(q0.get_d()));
    return res;
}

}  // namespace eisct
