#pragma once

#include <string>
#include <vector>

#include "eisct/cterm.hpp"

namespace eisct {

// Truncated Laurent series over the prime field F_p in a uniformizer pi.
// Coefficients are stored for exponents [val, val + size); `finite_exact`
// marks series whose unstored coefficients are exactly zero (Laurent
// polynomials). Arithmetic tracks the knowledge window conservatively.
class LaurentSeries {
  public:
    static constexpr int kDefaultPrecision = 48;

    static LaurentSeries zero(int p);
    static LaurentSeries one(int p);
    static LaurentSeries from_coeffs(int p, long long val, std::vector<int> coeffs);  // exact
    static LaurentSeries uniformizer_pow(int p, long long k);

    int prime() const { return p_; }
    bool exact_zero() const { return exact_ && coef_.empty(); }
    // True when every retained coefficient vanishes (the series cannot be
    // told apart from zero at the current precision).
    bool indistinguishable_from_zero() const { return coef_.empty(); }
    bool is_exact() const { return exact_; }
    long long valuation() const;  // PrecisionExhausted, DomainError on exact zero
    long long known_until() const { return known_; }

    LaurentSeries operator+(const LaurentSeries& o) const;
    LaurentSeries operator-(const LaurentSeries& o) const;
    LaurentSeries operator*(const LaurentSeries& o) const;
    LaurentSeries negated() const;
    LaurentSeries inverse(int precision = kDefaultPrecision) const;  // DivisionByZero

    std::string to_string() const;

  private:
    LaurentSeries(int p, bool exact, long long val, long long known, std::vector<int> coef);
    void normalize();
    int p_ = 2;
    bool exact_ = true;     // coefficients outside the window are exactly 0
    long long val_ = 0;     // exponent of coef_[0]
    long long known_ = 0;   // coefficients known for exponents < known_
    std::vector<int> coef_;
};

struct SL2Mat {
    LaurentSeries a, b, c, d;

    static SL2Mat identity(int p);
    static SL2Mat lower_unipotent(const LaurentSeries& s);  // (1 0; s 1)
    static SL2Mat upper_unipotent(const LaurentSeries& s);  // (1 s; 0 1)
    static SL2Mat diagonal(const LaurentSeries& t, int precision = LaurentSeries::kDefaultPrecision);

    SL2Mat operator*(const SL2Mat& o) const;
    // det - 1 indistinguishable from zero at the current precision
    bool det_is_one() const;
};

// |a|-exponent of the Iwasawa A-part of g = k diag(a, a^{-1}) u: the integer
// E with |a| = q^E, computed as E = -min(val(g11), val(g21)).
long long iwasawa_norm_exponent(const SL2Mat& g);  // PrecisionExhausted, DomainError

enum class GkMode { BruteForce, Shells };

struct GkResult {
    Rat value;        // enumerated/summed part (exact for integral kappa)
    Rat tail;         // closed-form geometric tail for the unexplored region
    Rat closed_form;  // (1 - q^kappa)/(1 - q^{kappa+1})
    bool exact = true;
    double value_d = 0.0, tail_d = 0.0, closed_form_d = 0.0;
    bool outside_paper_domain = false;  // kappa >= -2: convergent but beyond the stated hypothesis
    Rat total() const { return value + tail; }
};

// Rank-1 Gindikin-Karpelevich integral of |a|^kappa over the lower unipotent
// subgroup. BruteForce enumerates pi^{-N} O / pi^M O through the Iwasawa
// routine with class measure q^{-M}; Shells sums measure(val = -n) q^{n kappa}
// exactly. Requires kappa < -1.
GkResult gk_integral(long long q, const Rat& kappa, GkMode mode, int N,
                     int M);  // DomainError, EnumerationTooLarge

// Local factor at a real affine root: gk_integral with kappa = chi(h_a).
Rat gk_affine_factor(const CartanDatum& d, const Character& chi, const AffineRoot& a,
                     long long q);  // DomainError

// Local Gindikin-Karpelevich value for w, computed along two routes that are
// asserted equal: the closed-form product over the inversion set of w^{-1},
// and the proof's induction over one-step-shorter words with the rho-shift
// identity checked exactly at every step.
Rat gk_local_product(const CartanDatum& d, const Character& chi, const WeylElement& w,
                     long long q);  // DomainError, InductionMismatch

struct EulerConsistency {
    Rat partial;           // q0^{l(w)} * product over places of degree <= D
    Rat target;            // c(chi, w) evaluated at q0 (genus 0)
    double gap = 0.0;      // target - partial (>= 0)
    double tail_log_bound = 0.0;
};

// Genus-0 check that the per-place Gindikin-Karpelevich products converge to
// the global c-function.
EulerConsistency euler_consistency(const CartanDatum& d, const Character& chi,
                                   const WeylElement& w, long long D,
                                   long long q0);  // DomainError

}  // namespace eisct
