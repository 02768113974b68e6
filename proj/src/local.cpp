#include "eisct/local.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "eisct/errors.hpp"

namespace eisct {

namespace {

constexpr long long kInf = std::numeric_limits<long long>::max() / 4;

bool is_prime(long long q) {
    if (q < 2) return false;
    for (long long p = 2; p * p <= q; ++p)
        if (q % p == 0) return false;
    return true;
}

int mod_inverse(int a, int p) {
    // p prime, a != 0 mod p
    int r = 1, base = ((a % p) + p) % p;
    int e = p - 2;
    while (e) {
        if (e & 1) r = static_cast<int>((static_cast<long long>(r) * base) % p);
        base = static_cast<int>((static_cast<long long>(base) * base) % p);
        e >>= 1;
    }
    return r;
}

}  // namespace

LaurentSeries::LaurentSeries(int p, bool exact, long long val, long long known,
                             std::vector<int> coef)
    : p_(p), exact_(exact), val_(val), known_(known), coef_(std::move(coef)) {
    normalize();
}

void LaurentSeries::normalize() {
    for (auto& c : coef_) c = ((c % p_) + p_) % p_;
    std::size_t lead = 0;
    while (lead < coef_.size() && coef_[lead] == 0) ++lead;
    if (lead > 0) {
        coef_.erase(coef_.begin(), coef_.begin() + static_cast<long>(lead));
        val_ += static_cast<long long>(lead);
    }
    if (exact_) {
        while (!coef_.empty() && coef_.back() == 0) coef_.pop_back();
        known_ = kInf;
    }
    if (coef_.empty() && exact_) val_ = 0;
}

LaurentSeries LaurentSeries::zero(int p) { return LaurentSeries(p, true, 0, kInf, {}); }

LaurentSeries LaurentSeries::one(int p) { return LaurentSeries(p, true, 0, kInf, {1}); }

LaurentSeries LaurentSeries::from_coeffs(int p, long long val, std::vector<int> coeffs) {
    if (!is_prime(p)) throw DomainError("Laurent coefficients need a prime field");
    return LaurentSeries(p, true, val, kInf, std::move(coeffs));
}

LaurentSeries LaurentSeries::uniformizer_pow(int p, long long k) {
    return LaurentSeries(p, true, k, kInf, {1});
}

long long LaurentSeries::valuation() const {
    if (exact_zero()) throw DomainError("valuation of the zero series");
    if (coef_.empty()) throw PrecisionExhausted("valuation not determined by retained terms");
    return val_;
}

LaurentSeries LaurentSeries::operator+(const LaurentSeries& o) const {
    if (p_ != o.p_) throw DomainError("mixed prime fields");
    long long known = std::min(exact_ ? kInf : known_, o.exact_ ? kInf : o.known_);
    bool exact = known == kInf;
    if (exact_zero()) return o;
    if (o.exact_zero()) return *this;
    long long lo = std::min(coef_.empty() ? known_ : val_, o.coef_.empty() ? o.known_ : o.val_);
    long long hi;
    if (exact)
        hi = std::max(val_ + static_cast<long long>(coef_.size()),
                      o.val_ + static_cast<long long>(o.coef_.size()));
    else
        hi = known;
    if (hi < lo) hi = lo;
    std::vector<int> c(static_cast<std::size_t>(hi - lo), 0);
    for (std::size_t i = 0; i < coef_.size(); ++i) {
        long long e = val_ + static_cast<long long>(i);
        if (e >= lo && e < hi) c[static_cast<std::size_t>(e - lo)] += coef_[i];
    }
    for (std::size_t i = 0; i < o.coef_.size(); ++i) {
        long long e = o.val_ + static_cast<long long>(i);
        if (e >= lo && e < hi) c[static_cast<std::size_t>(e - lo)] += o.coef_[i];
    }
    return LaurentSeries(p_, exact, lo, known, std::move(c));
}

LaurentSeries LaurentSeries::negated() const {
    LaurentSeries r(*this);
    for (auto& c : r.coef_) c = (p_ - c) % p_;
    return r;
}

LaurentSeries LaurentSeries::operator-(const LaurentSeries& o) const { return *this + o.negated(); }

LaurentSeries LaurentSeries::operator*(const LaurentSeries& o) const {
    if (p_ != o.p_) throw DomainError("mixed prime fields");
    if (exact_zero() || o.exact_zero()) return zero(p_);
    if (coef_.empty() || o.coef_.empty()) {
        // zero to precision times anything: only the knowledge horizon moves
        long long known;
        if (coef_.empty() && o.coef_.empty())
            known = known_ + o.known_;
        else if (coef_.empty())
            known = o.exact_ ? kInf : std::min(known_ + o.val_, o.known_);
        else
            known = exact_ ? kInf : std::min(o.known_ + val_, known_);
        if (known >= kInf / 2) known = kInf / 2;
        return LaurentSeries(p_, false, 0, known, {});
    }
    long long va = val_, vb = o.val_;
    long long ka = exact_ ? kInf : known_, kb = o.exact_ ? kInf : o.known_;
    long long known = std::min(ka >= kInf ? kInf : ka + vb, kb >= kInf ? kInf : kb + va);
    bool exact = known >= kInf;
    long long lo = va + vb;
    long long hi_full = va + vb + static_cast<long long>(coef_.size() + o.coef_.size()) - 1;
    long long hi = exact ? hi_full : std::min(hi_full, known);
    std::vector<int> c(static_cast<std::size_t>(std::max(0LL, hi - lo)), 0);
    for (std::size_t i = 0; i < coef_.size(); ++i) {
        if (coef_[i] == 0) continue;
        for (std::size_t j = 0; j < o.coef_.size(); ++j) {
            long long e = lo + static_cast<long long>(i + j);
            if (e >= hi) break;
            c[static_cast<std::size_t>(e - lo)] = static_cast<int>(
                (c[static_cast<std::size_t>(e - lo)] +
                 static_cast<long long>(coef_[i]) * o.coef_[j]) %
                p_);
        }
    }
    return LaurentSeries(p_, exact, lo, exact ? kInf : known, std::move(c));
}

LaurentSeries LaurentSeries::inverse(int precision) const {
    if (exact_zero()) throw DivisionByZero("inverse of the zero series");
    if (coef_.empty()) throw PrecisionExhausted("cannot invert a series with unknown valuation");
    if (coef_.size() == 1 && exact_) {
        // exact monomial
        return LaurentSeries(p_, true, -val_, kInf, {mod_inverse(coef_[0], p_)});
    }
    long long terms =
        exact_ ? precision : std::min<long long>(precision, known_ - val_);
    std::vector<int> u(static_cast<std::size_t>(terms), 0);
    for (std::size_t i = 0; i < u.size() && i < coef_.size(); ++i) u[i] = coef_[i];
    std::vector<int> b(static_cast<std::size_t>(terms), 0);
    int inv0 = mod_inverse(u[0], p_);
    b[0] = inv0;
    for (long long k = 1; k < terms; ++k) {
        long long s = 0;
        for (long long i = 1; i <= k; ++i)
            s = (s + static_cast<long long>(i < static_cast<long long>(u.size()) ? u[static_cast<std::size_t>(i)] : 0) *
                         b[static_cast<std::size_t>(k - i)]) %
                p_;
        b[static_cast<std::size_t>(k)] = static_cast<int>((p_ - (s * inv0) % p_) % p_);
    }
    return LaurentSeries(p_, false, -val_, -val_ + terms, std::move(b));
}

std::string LaurentSeries::to_string() const {
    if (exact_zero()) return "0";
    if (coef_.empty()) return "O(pi^" + std::to_string(known_) + ")";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < coef_.size(); ++i) {
        if (coef_[i] == 0) continue;
        if (!first) os << "+";
        first = false;
        long long e = val_ + static_cast<long long>(i);
        if (coef_[i] != 1 || e == 0) os << coef_[i];
        if (e != 0) {
            if (coef_[i] != 1) os << "*";
            os << "pi";
            if (e != 1) os << "^" << e;
        }
    }
    if (!exact_) os << "+O(pi^" << known_ << ")";
    return os.str();
}

SL2Mat SL2Mat::identity(int p) {
    return {LaurentSeries::one(p), LaurentSeries::zero(p), LaurentSeries::zero(p),
            LaurentSeries::one(p)};
}

SL2Mat SL2Mat::lower_unipotent(const LaurentSeries& s) {
    int p = s.prime();
    return {LaurentSeries::one(p), LaurentSeries::zero(p), s, LaurentSeries::one(p)};
}

SL2Mat SL2Mat::upper_unipotent(const LaurentSeries& s) {
    int p = s.prime();
    return {LaurentSeries::one(p), s, LaurentSeries::zero(p), LaurentSeries::one(p)};
}

SL2Mat SL2Mat::diagonal(const LaurentSeries& t, int precision) {
    int p = t.prime();
    return {t, LaurentSeries::zero(p), LaurentSeries::zero(p), t.inverse(precision)};
}

SL2Mat SL2Mat::operator*(const SL2Mat& o) const {
    return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
}

bool SL2Mat::det_is_one() const {
    LaurentSeries det = a * d - b * c;
    LaurentSeries diff = det - LaurentSeries::one(a.prime());
    return diff.indistinguishable_from_zero();
}

long long iwasawa_norm_exponent(const SL2Mat& g) {
    const LaurentSeries& ul = g.a;
    const LaurentSeries& ll = g.c;
    if (ul.exact_zero() && ll.exact_zero())
        throw DomainError("first column of an SL2 element cannot vanish");
    long long m;
    if (ul.exact_zero())
        m = ll.valuation();
    else if (ll.exact_zero())
        m = ul.valuation();
    else
        m = std::min(ul.valuation(), ll.valuation());
    return -m;
}

GkResult gk_integral(long long q, const Rat& kappa, GkMode mode, int N, int M) {
    if (!is_prime(q)) throw DomainError("gk_integral needs a prime residue field");
    if (kappa >= -1) throw DomainError("gk_integral diverges for kappa >= -1");
    if (N < 0 || M < 0) throw DomainError("negative truncation");
    GkResult out;
    out.outside_paper_domain = kappa >= -2;
    out.exact = is_integer(kappa);
    const Rat qr(static_cast<long>(q));
    const double lnq = std::log(static_cast<double>(q));
    auto qpow = [&](const Rat& e) -> Rat {
        if (!is_integer(e)) throw NonIntegralExponent("non-integral power in exact mode");
        return rat_pow(qr, e.get_num().get_si());
    };

    if (mode == GkMode::BruteForce) {
        double points = std::pow(static_cast<double>(q), N + M);
        if (points > 1.0e6) throw EnumerationTooLarge("q^(N+M) exceeds 1e6");
        long long count = static_cast<long long>(points + 0.5);
        Rat sum(0);
        double sum_d = 0.0;
        const int p = static_cast<int>(q);
        std::vector<int> digits(static_cast<std::size_t>(N + M), 0);
        for (long long idx = 0; idx < count; ++idx) {
            long long v = idx;
            for (int k = 0; k < N + M; ++k) {
                digits[static_cast<std::size_t>(k)] = static_cast<int>(v % q);
                v /= q;
            }
            LaurentSeries s = LaurentSeries::from_coeffs(p, -N, digits);
            long long E = iwasawa_norm_exponent(SL2Mat::lower_unipotent(s));
            // Phi = (q^E)^kappa with class measure q^{-M}
            if (out.exact)
                sum += qpow(kappa * Rat(static_cast<long>(E)));
            else
                sum_d += std::exp(kappa.get_d() * static_cast<double>(E) * lnq);
        }
        if (out.exact) {
            out.value = sum * qpow(Rat(-M));
            out.value_d = out.value.get_d();
        } else {
            out.value_d = sum_d * std::exp(-M * lnq);
        }
    } else {
        // measure(val = -n) = q^{n-1}(q-1) for n >= 1; val >= 0 has measure 1
        if (out.exact) {
            Rat sum(1);
            for (int n = 1; n <= N; ++n)
                sum += qpow(Rat(n - 1)) * (qr - 1) * qpow(kappa * Rat(n));
            out.value = sum;
            out.value_d = sum.get_d();
        } else {
            double sum = 1.0;
            for (int n = 1; n <= N; ++n)
                sum += std::exp((n - 1) * lnq) * (static_cast<double>(q) - 1.0) *
                       std::exp(kappa.get_d() * n * lnq);
            out.value_d = sum;
        }
    }
    // tail over val(s) < -N: sum_{n > N} q^{n-1}(q-1) q^{n kappa}
    if (out.exact) {
        Rat t = qpow(kappa + 1);
        Rat tpow = rat_pow(t, N + 1);
        out.tail = (qr - 1) / qr * tpow / (Rat(1) - t);
        out.tail_d = out.tail.get_d();
        Rat qk = qpow(kappa);
        out.closed_form = (Rat(1) - qk) / (Rat(1) - qk * qr);
        out.closed_form_d = out.closed_form.get_d();
    } else {
        double t = std::exp((kappa.get_d() + 1.0) * lnq);
        out.tail_d = (static_cast<double>(q) - 1.0) / static_cast<double>(q) *
                     std::pow(t, N + 1) / (1.0 - t);
        double qk = std::exp(kappa.get_d() * lnq);
        out.closed_form_d = (1.0 - qk) / (1.0 - qk * static_cast<double>(q));
    }
    return out;
}

Rat gk_affine_factor(const CartanDatum& d, const Character& chi, const AffineRoot& a,
                     long long q) {
    Rat kappa = pair(chi.to_functional(d), coroot_of(a, d));
    if (!is_integer(kappa)) throw DomainError("chi(h_a) must be integral");
    if (kappa >= -1) throw DomainError("chi(h_a) must be < -1");
    GkResult r = gk_integral(q, kappa, GkMode::Shells, 0, 0);
    return r.closed_form;
}

namespace {

Rat gk_factor(long long q, const Rat& kappa) {
    // GK-A value (1 - q^kappa)/(1 - q^{kappa+1}) for integral kappa < -1
    if (!is_integer(kappa)) throw DomainError("non-integral kappa in local product");
    if (kappa >= -1) throw DomainError("local factor diverges: kappa >= -1");
    Rat qk = rat_pow(Rat(static_cast<long>(q)), kappa.get_num().get_si());
    Rat qk1 = qk * Rat(static_cast<long>(q));
    return (Rat(1) - qk) / (Rat(1) - qk1);
}

Rat gk_induction(const CartanDatum& d, const Functional& chif, const Functional& chibar,
                 const Word& word, long long q) {
    if (word.empty()) return Rat(1);
    // word = [i_r, ..., i_1]; peel w_{i_r} and recurse on w' = [i_{r-1},...,i_1]
    Word rest(word.begin() + 1, word.end());
    WeylElement wp = WeylElement::from_word(d, rest);
    // gamma_r = w_{i_1} ... w_{i_{r-1}} alpha_{i_r}
    AffineRoot gamma = d.simple_root(word.front());
    for (std::size_t k = 1; k < word.size(); ++k)
        gamma = WeylElement::simple(d, word[k]).act(gamma);
    CorootVector hg = coroot_of(gamma, d);
    // the rho-shift identity of the induction step, asserted exactly
    Functional rho_moved = wp.act_inverse(d.rho());
    if (pair(rho_moved, hg) != 1)
        throw InductionMismatch("(w')^{-1} rho (h_gamma) != 1 at word " + word_to_string(word));
    Rat kappa = pair(chif + d.rho() - rho_moved, hg);
    if (kappa != pair(chibar, hg) - 1)
        throw InductionMismatch("rho-shift exponent mismatch at word " + word_to_string(word));
    return gk_factor(q, kappa) * gk_induction(d, chif, chibar, rest, q);
}

}  // namespace

Rat gk_local_product(const CartanDatum& d, const Character& chi, const WeylElement& w,
                     long long q) {
    if (!is_prime(q)) throw DomainError("gk_local_product needs a prime residue field");
    if (!chi.dominant_negative()) throw DomainError("chi must be dominant-negative");
    Functional chif = chi.to_functional(d);
    Functional chibar = chif + d.rho();
    Rat closed(1);
    for (const AffineRoot& a : inversion_set_gamma(w))
        closed *= gk_factor(q, pair(chibar, coroot_of(a, d)) - 1);
    Rat inducted = gk_induction(d, chif, chibar, w.word(), q);
    if (closed != inducted)
        throw InductionMismatch("induction and closed-form local products differ at w = " +
                                word_to_string(w.word()));
    return closed;
}

EulerConsistency euler_consistency(const CartanDatum& d, const Character& chi,
                                   const WeylElement& w, long long D, long long q0) {
    if (!chi.dominant_negative()) throw DomainError("chi must be dominant-negative");
    if (D < 1) throw DomainError("degree cutoff must be positive");
    if (q0 < 2) throw DomainError("q0 must be at least 2");
    Functional chibar = chi.to_functional(d) + d.rho();
    std::vector<Rat> exponents;  // chibar(h_a) over the inversion set of w^{-1}
    for (const AffineRoot& a : inversion_set_gamma(w))
        exponents.push_back(pair(chibar, coroot_of(a, d)));

    EulerConsistency out;
    Rat partial = rat_pow(Rat(static_cast<long>(q0)), w.length());  // q0^{l(w)(1-g)}, g = 0
    for (long long e = 1; e <= D; ++e) {
        Int count = irreducible_count(q0, e) + (e == 1 ? 1 : 0);  // infinite place has degree 1
        Rat qnu = rat_pow(Rat(static_cast<long>(q0)), e);
        Rat factor(1);
        for (const Rat& v : exponents) {
            long long vi = v.get_num().get_si();
            Rat x = rat_pow(qnu, vi - 1);
            Rat y = rat_pow(qnu, vi);
            factor *= (Rat(1) - x) / (Rat(1) - y);
        }
        Rat fpow(1), base = factor;
        Int c = count;
        while (c > 0) {
            if (mpz_odd_p(c.get_mpz_t())) fpow *= base;
            c /= 2;
            if (c > 0) base *= base;
        }
        partial *= fpow;
    }
    out.partial = partial;

    ZetaFunction Z;  // genus 0
    RatFunc cfun = c_function(d, chi, w, Z);
    out.target = cfun.eval(Rat(static_cast<long>(q0)));
    out.gap = Rat(out.target - out.partial).get_d();

    // |log(1-x) - log(1-y)| <= (x + y)/(1 - y) and N_e <= q0^e give a
    // geometric bound on the missing log mass per root.
    double lnq = std::log(static_cast<double>(q0));
    double tail = 0.0;
    for (const Rat& v : exponents) {
        double vi = v.get_d();
        double y1 = std::exp(vi * lnq);  // largest missing y at e = D+1 is y1^{D+1}
        double C = 2.0 / (1.0 - y1);
        double r = std::exp((1.0 + vi) * lnq);  // q0^{e(1+v)} summand ratio
        if (r >= 1.0) throw DomainError("tail bound needs chi(h_a) < -1");
        tail += C * std::pow(r, static_cast<double>(D + 1)) / (1.0 - r);
    }
    out.tail_log_bound = tail;
    return out;
}

}  // namespace eisct
