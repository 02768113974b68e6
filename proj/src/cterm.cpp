#include "eisct/cterm.hpp"

#include <algorithm>
#include <cmath>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "eisct/errors.hpp"

namespace eisct {

Character Character::constant(const CartanDatum& d, const Rat& v) {
    Character c;
    c.values.assign(static_cast<std::size_t>(d.gens()), v);
    return c;
}

Rat Character::value_on_c(const CartanDatum& d) const {
    // c = h_{alpha_0} + h_{l+1}
    Rat s = values.at(static_cast<std::size_t>(d.rank));
    for (int i = 0; i < d.rank; ++i) s += rat_of(d.comarks[i]) * values[static_cast<std::size_t>(i)];
    return s;
}

bool Character::integral() const {
    for (const auto& v : values)
        if (!is_integer(v)) return false;
    return true;
}

bool Character::dominant_negative() const {
    for (const auto& v : values)
        if (v >= -2) return false;
    return true;
}

bool Character::in_meromorphy_domain(const CartanDatum& d) const {
    return value_on_c(d) < rat_of(-d.dual_coxeter());
}

Functional Character::to_functional(const CartanDatum& d) const {
    if (values.size() != static_cast<std::size_t>(d.gens()))
        throw DimensionMismatch("character length != l+1");
    Functional f;
    f.h.assign(d.rank, Rat(0));
    for (int i = 0; i < d.rank; ++i) f.h[i] = values[static_cast<std::size_t>(i)];
    f.c = value_on_c(d);
    f.d = 0;
    return f;
}

Character Character::from_functional(const CartanDatum& d, const Functional& f) {
    Character c;
    c.values.resize(static_cast<std::size_t>(d.gens()));
    for (int i = 1; i <= d.gens(); ++i)
        c.values[static_cast<std::size_t>(i - 1)] = pair(f, d.simple_coroot(i));
    return c;
}

void TorusData::validate(const CartanDatum& d) const {
    for (const auto& p : places) {
        if (p.degree < 1) throw DomainError("place degree must be >= 1");
        if (p.ord.size() != static_cast<std::size_t>(d.gens()))
            throw DomainError("ord vector must have l+1 entries");
    }
}

long long AutomorphismData::total() const {
    long long s = 0;
    for (const auto& p : places) s += p.m;
    return s;
}

long long AutomorphismData::weighted_total() const {
    long long s = 0;
    for (const auto& p : places) s += p.degree * p.m;
    return s;
}

void AutomorphismData::validate() const {
    for (const auto& p : places) {
        if (p.degree < 1) throw DomainError("place degree must be >= 1");
        if (p.m < 0) throw DomainError("m_nu must be non-negative");
    }
    if (total() <= 0) throw DomainError("sum of m_nu must be positive");
}

namespace {

RatFunc c_from_bar(const CartanDatum& d, const Functional& chibar, const WeylElement& w,
                   const ZetaFunction& Z) {
    RatFunc acc = RatFunc::q_power(static_cast<long long>(w.length()) * (1 - Z.genus()));
    for (const AffineRoot& a : inversion_set_gamma(w)) {
        Rat v = pair(chibar, coroot_of(a, d));
        if (!is_integer(v))
            throw NonIntegralExponent("(chi+rho)(h_a) = " + v.get_str() +
                                      " is not an integer at root " + a.to_string());
        long long arg = -v.get_num().get_si();
        try {
            acc = acc * (zeta_at(Z, arg) / zeta_at(Z, arg + 1));
        } catch (const ZetaPole& p) {
            throw ZetaPole(p.argument, "root " + a.to_string() + " in c(chi,w), w = " +
                                           word_to_string(w.word()));
        }
    }
    return acc;
}

}  // namespace

RatFunc c_function(const CartanDatum& d, const Character& chi, const WeylElement& w,
                   const ZetaFunction& Z) {
    return c_from_bar(d, chi.to_functional(d) + d.rho(), w, Z);
}

RatFunc c_function(const CartanDatum& d, const Functional& chi, const WeylElement& w,
                   const ZetaFunction& Z) {
    return c_from_bar(d, chi + d.rho(), w, Z);
}

ScaledValue character_eval_direct(const CartanDatum& d, const TorusData& h,
                                  const AutomorphismData& m, const WeylElement& w,
                                  const Functional& mu) {
    Rat exponent(0);
    for (const auto& p : h.places) {
        CorootVector x = d.zero_vector();
        for (int i = 1; i <= d.gens(); ++i) {
            long long o = p.ord[static_cast<std::size_t>(i - 1)];
            if (o != 0) x = x + d.simple_coroot(i).scaled(Rat(static_cast<long>(o)));
        }
        exponent -= Rat(static_cast<long>(p.degree)) * pair(mu, w.act_inverse(x));
    }
    for (const auto& p : m.places) {
        if (p.m == 0) continue;
        CorootVector x = d.zero_vector();
        x.d = Rat(static_cast<long>(p.m));
        exponent -= Rat(static_cast<long>(p.degree)) * pair(mu, w.act_inverse(x));
    }
    return ScaledValue::q_pow(exponent);
}

ScaledValue character_eval_three_factor(const CartanDatum& d, const TorusData& h,
                                        const AutomorphismData& m, const WeylElement& w,
                                        const Character& chi) {
    Functional chibar = chi.to_functional(d) + d.rho();
    Rat chibar_delta = chibar.c;  // value on h_delta = c
    WeylNormalForm nf = w.decompose();
    const WeylElement& w1 = nf.classical_part;
    CorootVector H = d.zero_vector();
    for (int i = 0; i < d.rank; ++i) H.h[i] = rat_of(nf.translation[static_cast<std::size_t>(i)]);
    Rat HH = bilinear(H, H, d);
    Rat chibar_w1H = pair(chibar, w1.act(H));

    Rat exponent(0);
    for (const auto& p : h.places) {
        // split sum ord_i h_{alpha_i} = h_nu + e_nu h_delta
        CorootVector x = d.zero_vector();
        for (int i = 1; i <= d.gens(); ++i) {
            long long o = p.ord[static_cast<std::size_t>(i - 1)];
            if (o != 0) x = x + d.simple_coroot(i).scaled(Rat(static_cast<long>(o)));
        }
        CorootVector hnu = d.zero_vector();
        for (int i = 0; i < d.rank; ++i) hnu.h[i] = x.h[i];
        Rat enu = x.c;
        Rat fac_i = pair(chibar, w1.act(hnu)) + enu * chibar_delta;
        Rat fac_iii = bilinear(hnu, H, d) * chibar_delta;
        exponent -= Rat(static_cast<long>(p.degree)) * (fac_i + fac_iii);
    }
    for (const auto& p : m.places) {
        if (p.m == 0) continue;
        Rat mnu(static_cast<long>(p.m));
        Rat fac_ii = -(mnu * chibar_w1H + mnu * HH / 2 * chibar_delta);
        exponent -= Rat(static_cast<long>(p.degree)) * fac_ii;
    }
    return ScaledValue::q_pow(exponent);
}

namespace {

double character_eval_numeric(const CartanDatum& d, const TorusData& h,
                              const AutomorphismData& m, const WeylElement& w,
                              const Functional& mu, double q0) {
    ScaledValue s = character_eval_direct(d, h, m, w, mu);
    return std::exp(s.exponent().get_d() * std::log(q0)) * s.ratfunc().eval_d(q0);
}

double c_function_numeric(const CartanDatum& d, const Functional& chibar, const WeylElement& w,
                          const ZetaFunction& Z, double q0) {
    double acc = std::pow(q0, static_cast<double>(w.length()) * (1.0 - Z.genus()));
    for (const AffineRoot& a : inversion_set_gamma(w)) {
        double v = pair(chibar, coroot_of(a, d)).get_d();
        acc *= zeta_numeric(Z, -v, q0) / zeta_numeric(Z, -v + 1.0, q0);
    }
    return acc;
}

}  // namespace

CTermTable constant_term(const CartanDatum& d, const Character& chi, const TorusData& h,
                         const AutomorphismData& m, const ZetaFunction& Z, int L,
                         const std::optional<Rat>& q0, CtermMode mode, bool parallel) {
    h.validate(d);
    m.validate();
    if (mode == CtermMode::Convergence) {
        if (!chi.dominant_negative())
            throw RegionViolation("convergence mode requires chi(h_i) < -2 for every i");
    } else {
        if (!chi.in_meromorphy_domain(d))
            throw RegionViolation("meromorphic mode requires chi(h_delta) < -" +
                                  std::to_string(d.dual_coxeter()));
    }
    const bool exact = chi.integral();
    if (!exact && !q0)
        throw DomainError("rational non-integral characters run numeric-only and need q0");

    Functional chif = chi.to_functional(d);
    Functional chibar = chif + d.rho();
    Functional minus_rho = d.rho().scaled(Rat(-1));

    std::vector<WeylElement> ws = enumerate_elements(d, L, parallel);
    CTermTable out;
    out.truncation = L;
    out.entries.resize(ws.size());
    WeylElement id = WeylElement::identity(d);
    ScaledValue rho_factor = character_eval_direct(d, h, m, id, minus_rho);

    std::exception_ptr err;
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) if (parallel)
#endif
    for (std::size_t i = 0; i < ws.size(); ++i) {
        try {
            const WeylElement& w = ws[i];
            CTermEntry e;
            e.word = w.word();
            e.length = w.length();
            if (exact) {
                e.c = c_function(d, chi, w, Z);
                e.char_part = character_eval_direct(d, h, m, w, chibar) * rho_factor;
                e.term = e.char_part * ScaledValue(e.c);
                if (q0) {
                    NumericValue nv = eval_numeric(e.term, *q0);
                    e.numeric = nv.as_double();
                    e.numeric_is_exact = nv.exact;
                    if (nv.exact) e.numeric_exact = nv.value;
                }
            } else {
                e.exact = false;
                double q0d = q0->get_d();
                double charn = character_eval_numeric(d, h, m, w, chibar, q0d) *
                               character_eval_numeric(d, h, m, id, minus_rho, q0d);
                e.numeric = charn * c_function_numeric(d, chibar, w, Z, q0d);
            }
            out.entries[i] = std::move(e);
        } catch (...) {
#ifdef _OPENMP
#pragma omp critical
#endif
            if (!err) err = std::current_exception();
        }
    }
    if (err) std::rethrow_exception(err);

    // cumulative sums by length shell, in the fixed (length, word) order
    out.partial_sums.assign(static_cast<std::size_t>(L) + 1, 0.0);
    bool all_exact = q0.has_value();
    for (const auto& e : out.entries) all_exact = all_exact && e.numeric_is_exact;
    out.exact_sums = all_exact;
    if (all_exact) out.partial_sums_exact.assign(static_cast<std::size_t>(L) + 1, Rat(0));
    if (q0) {
        for (const auto& e : out.entries)
            for (int k = e.length; k <= L; ++k) {
                out.partial_sums[static_cast<std::size_t>(k)] += e.numeric;
                if (all_exact)
                    out.partial_sums_exact[static_cast<std::size_t>(k)] += e.numeric_exact;
            }
        if (all_exact)
            for (int k = 0; k <= L; ++k)
                out.partial_sums[static_cast<std::size_t>(k)] =
                    out.partial_sums_exact[static_cast<std::size_t>(k)].get_d();
    }
    return out;
}

namespace {

// Exact rational G^{-1} v for the classical Gram matrix.
std::vector<Rat> gram_solve(const CartanDatum& d, const std::vector<Rat>& v) {
    const int l = d.rank;
    std::vector<std::vector<Rat>> m(l, std::vector<Rat>(l + 1));
    for (int i = 0; i < l; ++i) {
        for (int j = 0; j < l; ++j) m[i][j] = d.form[i][j];
        m[i][l] = v[static_cast<std::size_t>(i)];
    }
    for (int col = 0; col < l; ++col) {
        int piv = col;
        while (m[piv][col] == 0) ++piv;
        std::swap(m[piv], m[col]);
        for (int r = 0; r < l; ++r) {
            if (r == col || m[r][col] == 0) continue;
            Rat f = m[r][col] / m[col][col];
            for (int c = col; c <= l; ++c) m[r][c] -= f * m[col][c];
        }
    }
    std::vector<Rat> x(static_cast<std::size_t>(l));
    for (int i = 0; i < l; ++i) x[static_cast<std::size_t>(i)] = m[i][l] / m[i][i];
    return x;
}

Rat dual_norm2(const CartanDatum& d, const std::vector<Rat>& v) {
    std::vector<Rat> x = gram_solve(d, v);
    Rat s(0);
    for (int i = 0; i < d.rank; ++i) s += v[static_cast<std::size_t>(i)] * x[static_cast<std::size_t>(i)];
    return s;
}

// Enumerate lattice points with (H,H) <= bound2 (exact test), H != 0.
void lattice_points_upto(const CartanDatum& d, const Rat& bound2,
                         std::vector<std::vector<long long>>& out) {
    // box from lambda_min >= 1/tr(G^{-1})
    Rat tr(0);
    for (int i = 0; i < d.rank; ++i) {
        std::vector<Rat> e(static_cast<std::size_t>(d.rank), Rat(0));
        e[static_cast<std::size_t>(i)] = 1;
        tr += gram_solve(d, e)[static_cast<std::size_t>(i)];
    }
    double lb = 1.0 / tr.get_d();
    long long B = static_cast<long long>(std::ceil(std::sqrt(bound2.get_d() / lb))) + 1;
    std::vector<long long> x(static_cast<std::size_t>(d.rank), -B);
    while (true) {
        bool zero = true;
        for (long long c : x)
            if (c != 0) zero = false;
        if (!zero && lattice_norm2(d, x) <= bound2) out.push_back(x);
        int k = 0;
        while (k < d.rank) {
            if (++x[static_cast<std::size_t>(k)] <= B) break;
            x[static_cast<std::size_t>(k)] = -B;
            ++k;
        }
        if (k == d.rank) break;
    }
}

}  // namespace

ThetaConstants theta_constants(const CartanDatum& d, const Character& chi, const TorusData& h,
                               const AutomorphismData& m, const ZetaFunction& Z, const Rat& q0) {
    h.validate(d);
    m.validate();
    if (!chi.dominant_negative())
        throw RegionViolation("theta constants require chi(h_i) < -2 for every i");
    ThetaConstants tc;
    tc.rank = d.rank;
    tc.q0 = q0.get_d();
    const double lnq = std::log(tc.q0);

    // eps = min_i(-chi_i) - 2
    Rat mn = -chi.values[0];
    for (const auto& v : chi.values) mn = std::min(mn, Rat(-v));
    tc.eps = mn - 2;

    Functional chibar = chi.to_functional(d) + d.rho();
    Rat chibar_delta = chibar.c;

    std::vector<WeylElement> W = enumerate_classical(d);
    tc.classical_order = static_cast<int>(W.size());
    for (const auto& w1 : W) tc.max_classical_length = std::max(tc.max_classical_length, w1.length());

    // |s_i| = q^{-t_i}
    std::vector<Rat> t(static_cast<std::size_t>(d.gens()), Rat(0));
    for (const auto& p : h.places)
        for (int i = 0; i < d.gens(); ++i)
            t[static_cast<std::size_t>(i)] +=
                Rat(static_cast<long>(p.degree)) * Rat(static_cast<long>(p.ord[static_cast<std::size_t>(i)]));

    // M: factor (i) per-coordinate maximum over the classical Weyl orbit
    tc.M = 1.0;
    for (const auto& w1 : W) {
        Functional mu = w1.act_inverse(chibar);
        for (int i = 1; i <= d.gens(); ++i) {
            Rat e = pair(mu, d.simple_coroot(i));
            double factor = std::exp(-Rat(t[static_cast<std::size_t>(i - 1)] * e).get_d() * lnq);
            tc.M = std::max(tc.M, factor);
        }
    }

    // N1: sup over the unit ball of chibar(w1 H), via the exact dual norm
    double N1 = 0.0;
    for (const auto& w1 : W) {
        Functional mu = w1.act_inverse(chibar);
        N1 = std::max(N1, std::sqrt(dual_norm2(d, mu.h).get_d()));
    }
    N1 *= 1.0 + 1e-12;

    const long long S = m.weighted_total();
    tc.sigma2_coefficient = -Rat(static_cast<long>(S)) * chibar_delta / 2;
    tc.sigma2 = tc.sigma2_coefficient.get_d() * lnq;

    // N3: sup of |(h_{alpha_i}, H)| over the unit ball is sqrt((h_i, h_i));
    // coordinates of the functional (h_i, .) are the Gram rows.
    double N3sup = 0.0;
    for (int i = 1; i <= d.gens(); ++i) {
        CorootVector hi = d.simple_coroot(i);
        std::vector<Rat> row(static_cast<std::size_t>(d.rank));
        for (int j = 0; j < d.rank; ++j) {
            CorootVector ej = d.zero_vector();
            ej.h[j] = 1;
            row[static_cast<std::size_t>(j)] = bilinear(hi, ej, d);
        }
        N3sup = std::max(N3sup, std::sqrt(dual_norm2(d, row).get_d()));
    }
    N3sup *= 1.0 + 1e-12;
    double logN3 = 0.0;
    for (int i = 0; i < d.gens(); ++i) {
        double ti = t[static_cast<std::size_t>(i)].get_d();
        double e = std::abs(ti * N3sup * chibar_delta.get_d()) * lnq;
        logN3 = std::max(logN3, e);
    }
    tc.sigma1 = static_cast<double>(S) * lnq * N1 + (d.gens()) * logN3;

    // sigma3: exact translation lengths on the probe ball, guarded by the
    // dual norm of sum_{alpha > 0} alpha, which dominates every lattice ray.
    std::vector<std::vector<long long>> pts;
    lattice_points_upto(d, Rat(16), pts);
    double grid = 0.0;
    for (const auto& H : pts) {
        double norm = std::sqrt(lattice_norm2(d, H).get_d());
        grid = std::max(grid, static_cast<double>(translation_length(d, H)) / norm);
    }
    std::vector<Rat> two_rho_cl(static_cast<std::size_t>(d.rank), Rat(0));
    for (const auto& rc : d.positive_roots)
        for (int i = 0; i < d.rank; ++i) {
            long long v = 0;
            for (int k = 0; k < d.rank; ++k) v += d.cartan[i][k] * rc[static_cast<std::size_t>(k)];
            two_rho_cl[static_cast<std::size_t>(i)] += rat_of(v);
        }
    double guard = std::sqrt(dual_norm2(d, two_rho_cl).get_d()) * (1.0 + 1e-12);
    tc.sigma3 = std::max(grid, guard);

    tc.M_eps = std::pow(tc.q0, 1.0 - Z.genus()) *
               std::pow(zeta_numeric(Z, 1.0 + tc.eps.get_d(), tc.q0), 2.0);
    tc.Mbar_eps = std::pow(tc.M_eps, tc.max_classical_length);

    Rat tr(0);
    tc.gram.assign(static_cast<std::size_t>(d.rank), std::vector<double>(static_cast<std::size_t>(d.rank)));
    for (int i = 0; i < d.rank; ++i) {
        std::vector<Rat> e(static_cast<std::size_t>(d.rank), Rat(0));
        e[static_cast<std::size_t>(i)] = 1;
        tr += gram_solve(d, e)[static_cast<std::size_t>(i)];
        for (int j = 0; j < d.rank; ++j)
            tc.gram[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = d.form[i][j].get_d();
    }
    tc.lambda_min_lb = 1.0 / tr.get_d() * 0.999;

    WeylElement id = WeylElement::identity(d);
    ScaledValue rf = character_eval_direct(d, h, m, id, d.rho().scaled(Rat(-1)));
    tc.rho_factor = std::exp(rf.exponent().get_d() * lnq) * rf.ratfunc().eval_d(tc.q0);
    return tc;
}

double ThetaConstants::tail_bound(int L) const {
    const double b = sigma1 + sigma3 * std::log(M_eps);
    auto g = [&](double t) { return std::exp(b * t - sigma2 * t * t); };
    const double R0 = std::max(0.0, static_cast<double>(L - max_classical_length)) / sigma3;
    // radius beyond which even the box-counted remainder is negligible
    double tmax = (b + std::sqrt(b * b + 4.0 * sigma2 * 200.0)) / (2.0 * sigma2) + 1.0;
    tmax = std::max(tmax, R0 + 1.0);

    const double sl = std::sqrt(lambda_min_lb);
    long long B = static_cast<long long>(std::ceil(tmax / sl)) + 1;
    double sum = 0.0;
    std::vector<long long> x(static_cast<std::size_t>(rank), -B);
    while (true) {
        double n2 = 0.0;
        for (int i = 0; i < rank; ++i)
            for (int j = 0; j < rank; ++j)
                n2 += gram[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] *
                      static_cast<double>(x[static_cast<std::size_t>(i)]) *
                      static_cast<double>(x[static_cast<std::size_t>(j)]);
        bool zero = true;
        for (long long c : x)
            if (c != 0) zero = false;
        if (!zero) {
            double t = std::sqrt(n2);
            if (t >= R0 && t <= tmax) sum += g(t);
        } else if (R0 <= 0.0) {
            sum += 1.0;  // H = 0 contributes g(0) = 1
        }
        int k = 0;
        while (k < rank) {
            if (++x[static_cast<std::size_t>(k)] <= B) break;
            x[static_cast<std::size_t>(k)] = -B;
            ++k;
        }
        if (k == rank) break;
    }
    // integral-comparison remainder for ||H|| > tmax: count lattice points in
    // unit shells by the crude box bound (2(k+1)/sqrt(lambda_min) + 1)^rank.
    double rem = 0.0;
    for (long long k = static_cast<long long>(std::floor(tmax));; ++k) {
        double count = std::pow(2.0 * static_cast<double>(k + 1) / sl + 1.0, rank);
        double term = count * g(static_cast<double>(k));
        rem += term;
        if (term < 1e-320) break;
        if (k > static_cast<long long>(tmax) + 10000) break;
    }
    return static_cast<double>(classical_order) * std::pow(M, rank + 1) * Mbar_eps *
           (sum + rem) * rho_factor;
}

bool cocycle_check(const CartanDatum& d, const Character& chi, const WeylElement& w,
                   const WeylElement& wp, const ZetaFunction& Z) {
    Functional chif = chi.to_functional(d);
    RatFunc lhs = c_function(d, chif, w * wp, Z);
    Functional shifted = shifted_action(wp, chif);
    RatFunc rhs = c_function(d, shifted, w, Z) * c_function(d, chif, wp, Z);
    return lhs == rhs;
}

bool functional_equation_term_check(const CartanDatum& d, const Character& chi,
                                    const WeylElement& w, const WeylElement& wp,
                                    const TorusData& h, const AutomorphismData& m,
                                    const ZetaFunction& Z) {
    Functional chif = chi.to_functional(d);
    Functional rho = d.rho();
    Functional minus_rho = rho.scaled(Rat(-1));
    WeylElement id = WeylElement::identity(d);
    ScaledValue rho_factor = character_eval_direct(d, h, m, id, minus_rho);

    WeylElement wpw = wp * w;
    ScaledValue lhs = character_eval_direct(d, h, m, wpw, chif + rho) * rho_factor *
                      ScaledValue(c_function(d, chif, wpw, Z));

    // w ∘ chi keeps its D-value; (w∘chi) + rho = w(chi + rho)
    Functional wchi_bar = w.act(chif + rho);
    ScaledValue rhs = ScaledValue(c_function(d, chif, w, Z)) *
                      character_eval_direct(d, h, m, wp, wchi_bar) * rho_factor *
                      ScaledValue(c_function(d, wchi_bar - rho, wp, Z));
    return lhs == rhs;
}

}  // namespace eisct
