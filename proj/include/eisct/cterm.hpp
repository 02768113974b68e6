#pragma once

#include <optional>
#include <vector>

#include "eisct/weyl.hpp"
#include "eisct/zeta.hpp"

namespace eisct {

// Character of the torus: rational values chi(h_{alpha_i}) for i = 1..l+1,
// with chi(D) = 0 fixed. chi(c) is derived, never stored.
struct Character {
    std::vector<Rat> values;

    static Character constant(const CartanDatum& d, const Rat& v);

    Rat value_on_c(const CartanDatum& d) const;  // = chi(h_delta)
    bool integral() const;
    bool dominant_negative() const;                       // all values < -2
    bool in_meromorphy_domain(const CartanDatum& d) const;  // chi(h_delta) < -h_dual
    Functional to_functional(const CartanDatum& d) const;
    static Character from_functional(const CartanDatum& d, const Functional& f);
};

// Finite-support torus point: per place, the degree and the integer vector
// (ord_nu(s_1), ..., ord_nu(s_{l+1})). Places are identified by their entry;
// two entries of equal degree are distinct places.
struct TorusData {
    struct Place {
        long long degree = 1;
        std::vector<long long> ord;
    };
    std::vector<Place> places;

    void validate(const CartanDatum& d) const;  // DomainError
};

// Finite-support exponent data of the degree automorphism: per place, the
// degree and m_nu >= 0 with a positive total.
struct AutomorphismData {
    struct Place {
        long long degree = 1;
        long long m = 0;
    };
    std::vector<Place> places;

    long long total() const;
    long long weighted_total() const;  // sum degree * m
    void validate() const;             // DomainError unless m >= 0, total > 0
};

// c(chi, w) = q^{l(w)(1-g)} * prod over Delta_+ ∩ w^{-1} Delta_- of
// zeta(-(chi+rho)(h_a)) / zeta(-(chi+rho)(h_a)+1), exact in Q(q).
RatFunc c_function(const CartanDatum& d, const Character& chi, const WeylElement& w,
                   const ZetaFunction& Z);  // ZetaPole, NonIntegralExponent
// Same with the shifted character given as a full functional (used by the
// cocycle and functional-equation verifiers, where chi carries a D-value).
RatFunc c_function(const CartanDatum& d, const Functional& chi, const WeylElement& w,
                   const ZetaFunction& Z);

// (h eta^{mD})^{w(mu)} = prod_nu q^{-deg_nu * mu(w^{-1}(sum_i ord_i h_i + m_nu D))},
// a pure power of symbolic q.
ScaledValue character_eval_direct(const CartanDatum& d, const TorusData& h,
                                  const AutomorphismData& m, const WeylElement& w,
                                  const Functional& mu);

// The same value assembled from the three-factor decomposition through the
// W ⋉ T normal form and the closed translation formula. Must agree exactly
// with character_eval_direct at mu = chi + rho.
ScaledValue character_eval_three_factor(const CartanDatum& d, const TorusData& h,
                                        const AutomorphismData& m, const WeylElement& w,
                                        const Character& chi);

enum class CtermMode { Convergence, Meromorphic };

struct CTermEntry {
    Word word;
    int length = 0;
    RatFunc c;                  // exact c(chi, w); unset in numeric-only mode
    ScaledValue char_part;      // (h eta^{mD})^{w(chi+rho)-rho}
    ScaledValue term;           // char_part * c
    bool exact = true;
    double numeric = 0.0;       // term at q0 (when q0 given)
    Rat numeric_exact;          // valid when exact and q0 given and power integral
    bool numeric_is_exact = false;
};

struct CTermTable {
    std::vector<CTermEntry> entries;       // sorted by (length, word)
    std::vector<double> partial_sums;      // index k = sum over length <= k
    std::vector<Rat> partial_sums_exact;   // valid when exact_sums
    bool exact_sums = false;
    int truncation = 0;
};

// Truncated constant-term sum over all w with l(w) <= L. Integral characters
// run the exact pipeline; rational non-integral characters are numeric-only
// and require q0. Convergence mode insists on a dominant-negative character;
// meromorphic mode accepts chi(h_delta) < -h_dual and lets ZetaPole escape
// with the offending hyperplane.
CTermTable constant_term(const CartanDatum& d, const Character& chi, const TorusData& h,
                         const AutomorphismData& m, const ZetaFunction& Z, int L,
                         const std::optional<Rat>& q0, CtermMode mode = CtermMode::Convergence,
                         bool parallel = true);

// Admissible witnesses for the theta-series bound at a fixed torus point.
struct ThetaConstants {
    Rat eps;                  // min_i(-chi(h_i)) - 2
    double M = 1.0;           // per-factor bound for factor (i)
    double sigma1 = 0.0;
    double sigma2 = 0.0;      // -log N2 > 0
    Rat sigma2_coefficient;   // sigma2 = coefficient * log q0, exact
    double sigma3 = 0.0;
    double M_eps = 0.0;       // q0^{1-g} zeta(1+eps)^2
    double Mbar_eps = 0.0;    // M_eps^{longest classical length}
    // tail machinery
    int rank = 0;
    int classical_order = 0;      // #W
    int max_classical_length = 0;
    double q0 = 0.0;
    double lambda_min_lb = 0.0;   // lower bound on the smallest Gram eigenvalue
    std::vector<std::vector<double>> gram;
    double rho_factor = 1.0;      // (h eta^{mD})^{-rho} at q0

    // Upper bound on the tail sum_{l(w) > L} term_w at q0.
    double tail_bound(int L) const;
};

ThetaConstants theta_constants(const CartanDatum& d, const Character& chi, const TorusData& h,
                               const AutomorphismData& m, const ZetaFunction& Z, const Rat& q0);

// Exact check of c(chi, w w') = c(w' ∘ chi, w) c(chi, w').
bool cocycle_check(const CartanDatum& d, const Character& chi, const WeylElement& w,
                   const WeylElement& wp, const ZetaFunction& Z);  // ZetaPole

// Exact term-by-term functional equation under the bijection wbar = w' w:
// term_{w'w}(chi) = c(chi, w) * term_{w'}(w ∘ chi) as ScaledValues.
bool functional_equation_term_check(const CartanDatum& d, const Character& chi,
                                    const WeylElement& w, const WeylElement& wp,
                                    const TorusData& h, const AutomorphismData& m,
                                    const ZetaFunction& Z);  // ZetaPole

}  // namespace eisct
