#pragma once

#include <gmpxx.h>

#include <string>

namespace eisct {

using Int = mpz_class;
using Rat = mpq_class;

// mpq_class does not canonicalize on construction; every fraction built from
// raw numerator/denominator must go through here.
inline Rat make_rat(const Int& num, const Int& den) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

// gmpxx has no long long constructors; these go through long (LP64).
inline Int int_of(long long v) { return Int(static_cast<long>(v)); }
inline Rat rat_of(long long v) { return Rat(static_cast<long>(v)); }

inline Rat make_rat(long long num, long long den = 1) {
    return make_rat(int_of(num), int_of(den));
}

inline bool is_integer(const Rat& r) { return r.get_den() == 1; }

inline Int floor_rat(const Rat& r) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), r.get_num().get_mpz_t(), r.get_den().get_mpz_t());
    return q;
}

// Fractional part in [0, 1).
inline Rat frac_rat(const Rat& r) { return r - Rat(floor_rat(r)); }

inline std::string rat_to_string(const Rat& r) { return r.get_str(); }

// q0^e for rational q0 > 0 and integer e (may be negative).
Rat rat_pow(const Rat& q0, long long e);

// Exact n-th root if it exists; returns false otherwise.
bool exact_root(const Int& x, unsigned long n, Int& out);

// q0^(p/n): exact when both sides admit n-th roots, else a double estimate.
struct PowResult {
    bool exact = false;
    Rat value;       // valid when exact
    double approx = 0.0;  // always valid
};
PowResult rat_pow_frac(const Rat& q0, const Rat& exponent);

}  // namespace eisct
