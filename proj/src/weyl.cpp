#include "eisct/weyl.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "eisct/errors.hpp"

namespace eisct {

std::string word_to_string(const Word& w) {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) os << ",";
        os << w[i];
    }
    os << "]";
    return os.str();
}

Mat Mat::identity(int n) {
    Mat m;
    m.n = n;
    m.a.assign(static_cast<std::size_t>(n) * n, 0);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

Mat Mat::operator*(const Mat& o) const {
    Mat r;
    r.n = n;
    r.a.assign(static_cast<std::size_t>(n) * n, 0);
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
            long long v = at(i, k);
            if (v == 0) continue;
            for (int j = 0; j < n; ++j) r.at(i, j) += v * o.at(k, j);
        }
    return r;
}

bool Mat::is_identity() const {
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (at(i, j) != (i == j ? 1 : 0)) return false;
    return true;
}

namespace {

// Matrix of the simple reflection w_i: x -> x - alpha_i(x) h_{alpha_i}.
Mat reflection_matrix(const CartanDatum& d, int i) {
    const int l = d.rank;
    const int n = l + 2;
    Functional ai = d.simple_root_functional(i);
    CorootVector hi = d.simple_coroot(i);
    Mat m = Mat::identity(n);
    // column j holds the image of basis vector j
    for (int j = 0; j < n; ++j) {
        Rat aval = j < l ? ai.h[j] : (j == l ? ai.c : ai.d);
        if (aval == 0) continue;
        if (!is_integer(aval)) throw DimensionMismatch("non-integral reflection entry");
        long long av = aval.get_num().get_si();
        for (int r = 0; r < l; ++r) {
            if (hi.h[r] == 0) continue;
            m.at(r, j) -= av * hi.h[r].get_num().get_si();
        }
        if (hi.c != 0) m.at(l, j) -= av * hi.c.get_num().get_si();
        if (hi.d != 0) m.at(l + 1, j) -= av * hi.d.get_num().get_si();
    }
    return m;
}

AffineRoot reflect_root(const CartanDatum& d, int i, const AffineRoot& a) {
    const int l = d.rank;
    AffineRoot r = a;
    if (i >= 1 && i <= l) {
        long long p = 0;
        for (int k = 0; k < l; ++k) p += d.cartan[i - 1][k] * a.classical[k];
        r.classical[i - 1] -= p;
    } else {
        // alpha_{l+1} = delta - alpha_0; pairing with h_{l+1} = -h_0 + c
        long long p = 0;
        for (int k = 0; k < l; ++k) {
            long long colsum = 0;
            for (int m = 0; m < l; ++m) colsum += d.comarks[m] * d.cartan[m][k];
            p -= colsum * a.classical[k];
        }
        for (int k = 0; k < l; ++k) r.classical[k] += p * d.highest_root[k];
        r.n -= p;
    }
    return r;
}

// Action on a root of the element whose inverse matrix is `inv`: transform
// the root's functional values and convert back to root coordinates.
AffineRoot act_root_by_matrix(const CartanDatum& d, const Mat& inv, const AffineRoot& a) {
    const int l = d.rank;
    Functional f = d.root_functional(a);
    std::vector<Rat> vals(static_cast<std::size_t>(l) + 2);
    for (int j = 0; j < l + 2; ++j) {
        Rat s(0);
        for (int k = 0; k < l; ++k)
            if (f.h[k] != 0) s += f.h[k] * rat_of(inv.at(k, j));
        if (f.c != 0) s += f.c * rat_of(inv.at(l, j));
        if (f.d != 0) s += f.d * rat_of(inv.at(l + 1, j));
        vals[static_cast<std::size_t>(j)] = s;
    }
    if (vals[static_cast<std::size_t>(l)] != 0)
        throw DimensionMismatch("root image has a c-value");
    // classical coords solve cartan * x = h-values
    std::vector<std::vector<Rat>> m(l, std::vector<Rat>(l + 1));
    for (int r = 0; r < l; ++r) {
        for (int c = 0; c < l; ++c) m[r][c] = rat_of(d.cartan[r][c]);
        m[r][l] = vals[static_cast<std::size_t>(r)];
    }
    for (int col = 0; col < l; ++col) {
        int piv = col;
        while (piv < l && m[piv][col] == 0) ++piv;
        if (piv == l) throw DimensionMismatch("singular Cartan matrix");
        std::swap(m[piv], m[col]);
        for (int r = 0; r < l; ++r) {
            if (r == col || m[r][col] == 0) continue;
            Rat fct = m[r][col] / m[col][col];
            for (int c = col; c <= l; ++c) m[r][c] -= fct * m[col][c];
        }
    }
    AffineRoot out;
    out.classical.assign(l, 0);
    for (int r = 0; r < l; ++r) {
        Rat x = m[r][l] / m[r][r];
        if (!is_integer(x)) throw DimensionMismatch("root image has non-integral coordinates");
        out.classical[r] = x.get_num().get_si();
    }
    if (!is_integer(vals[static_cast<std::size_t>(l + 1)]))
        throw DimensionMismatch("root image has non-integral delta coefficient");
    out.n = vals[static_cast<std::size_t>(l + 1)].get_num().get_si();
    return out;
}

}  // namespace

WeylElement::WeylElement(const CartanDatum& d, Word w, Mat fwd, Mat inv)
    : cd_(&d), word_(std::move(w)), fwd_(std::move(fwd)), inv_(std::move(inv)) {}

WeylElement WeylElement::identity(const CartanDatum& d) {
    Mat id = Mat::identity(d.rank + 2);
    return WeylElement(d, {}, id, id);
}

WeylElement WeylElement::simple(const CartanDatum& d, int i) {
    Mat m = reflection_matrix(d, i);
    return WeylElement(d, {i}, m, m);
}

WeylElement WeylElement::from_word(const CartanDatum& d, const Word& w) {
    Mat fwd = Mat::identity(d.rank + 2);
    for (int i : w) {
        if (i < 1 || i > d.gens()) throw DimensionMismatch("word letter out of range");
        fwd = fwd * reflection_matrix(d, i);
    }
    Mat inv = Mat::identity(d.rank + 2);
    for (auto it = w.rbegin(); it != w.rend(); ++it) inv = inv * reflection_matrix(d, *it);
    return from_matrix(d, fwd, inv);
}

WeylElement WeylElement::from_matrix(const CartanDatum& d, const Mat& fwd, const Mat& inv) {
    return WeylElement(d, word_for(d, fwd, inv), fwd, inv);
}

WeylElement WeylElement::with_known_word(const CartanDatum& d, Word w, Mat fwd, Mat inv) {
    return WeylElement(d, std::move(w), std::move(fwd), std::move(inv));
}

WeylElement WeylElement::operator*(const WeylElement& o) const {
    return from_matrix(*cd_, fwd_ * o.fwd_, o.inv_ * inv_);
}

WeylElement WeylElement::inverse() const {
    return from_matrix(*cd_, inv_, fwd_);
}

namespace {

std::vector<Rat> mat_apply(const Mat& m, const std::vector<Rat>& in, bool transpose) {
    const int n = m.n;
    std::vector<Rat> res(static_cast<std::size_t>(n), Rat(0));
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) {
            const Rat& x = in[static_cast<std::size_t>(c)];
            if (x == 0) continue;
            long long e = transpose ? m.at(c, r) : m.at(r, c);
            if (e != 0) res[static_cast<std::size_t>(r)] += rat_of(e) * x;
        }
    return res;
}

std::vector<Rat> pack(const CorootVector& v) {
    std::vector<Rat> in(v.h.size() + 2);
    for (std::size_t i = 0; i < v.h.size(); ++i) in[i] = v.h[i];
    in[v.h.size()] = v.c;
    in[v.h.size() + 1] = v.d;
    return in;
}

std::vector<Rat> pack(const Functional& f) {
    std::vector<Rat> in(f.h.size() + 2);
    for (std::size_t i = 0; i < f.h.size(); ++i) in[i] = f.h[i];
    in[f.h.size()] = f.c;
    in[f.h.size() + 1] = f.d;
    return in;
}

}  // namespace

CorootVector WeylElement::act(const CorootVector& v) const {
    std::vector<Rat> res = mat_apply(fwd_, pack(v), false);
    CorootVector out = cd_->zero_vector();
    for (int i = 0; i < cd_->rank; ++i) out.h[i] = res[static_cast<std::size_t>(i)];
    out.c = res[static_cast<std::size_t>(cd_->rank)];
    out.d = res[static_cast<std::size_t>(cd_->rank + 1)];
    return out;
}

CorootVector WeylElement::act_inverse(const CorootVector& v) const {
    std::vector<Rat> res = mat_apply(inv_, pack(v), false);
    CorootVector out = cd_->zero_vector();
    for (int i = 0; i < cd_->rank; ++i) out.h[i] = res[static_cast<std::size_t>(i)];
    out.c = res[static_cast<std::size_t>(cd_->rank)];
    out.d = res[static_cast<std::size_t>(cd_->rank + 1)];
    return out;
}

Functional WeylElement::act(const Functional& f) const {
    // (w mu)(x) = mu(w^{-1} x): values transform by the transpose of inv_.
    std::vector<Rat> res = mat_apply(inv_, pack(f), true);
    Functional out;
    out.h.assign(cd_->rank, Rat(0));
    for (int i = 0; i < cd_->rank; ++i) out.h[i] = res[static_cast<std::size_t>(i)];
    out.c = res[static_cast<std::size_t>(cd_->rank)];
    out.d = res[static_cast<std::size_t>(cd_->rank + 1)];
    return out;
}

Functional WeylElement::act_inverse(const Functional& f) const {
    std::vector<Rat> res = mat_apply(fwd_, pack(f), true);
    Functional out;
    out.h.assign(cd_->rank, Rat(0));
    for (int i = 0; i < cd_->rank; ++i) out.h[i] = res[static_cast<std::size_t>(i)];
    out.c = res[static_cast<std::size_t>(cd_->rank)];
    out.d = res[static_cast<std::size_t>(cd_->rank + 1)];
    return out;
}

AffineRoot WeylElement::act(const AffineRoot& a) const {
    AffineRoot r = a;
    for (auto it = word_.rbegin(); it != word_.rend(); ++it) r = reflect_root(*cd_, *it, r);
    return r;
}

WeylNormalForm WeylElement::decompose() const {
    const int l = cd_->rank;
    // classical block of M(w^{-1}) is w1; classical block of M(w) is w1^{-1}
    Mat w1 = Mat::identity(l + 2);
    Mat w1inv = Mat::identity(l + 2);
    for (int i = 0; i < l; ++i)
        for (int j = 0; j < l; ++j) {
            w1.at(i, j) = inv_.at(i, j);
            w1inv.at(i, j) = fwd_.at(i, j);
        }
    std::vector<long long> H(static_cast<std::size_t>(l), 0);
    // M(w^{-1}) D = D - w1 H - ((H,H)/2) c
    for (int i = 0; i < l; ++i) {
        long long s = 0;
        for (int k = 0; k < l; ++k) s += w1inv.at(i, k) * (-inv_.at(k, l + 1));
        H[static_cast<std::size_t>(i)] = s;
    }
    WeylNormalForm nf{WeylElement::from_matrix(*cd_, w1, w1inv), H};
    return nf;
}

WeylElement reduce(const CartanDatum& d, const Word& input) {
    Word word;
    for (int i : input) {
        if (i < 1 || i > d.gens()) throw DimensionMismatch("word letter out of range");
        // track the image of alpha_i under the current word, right to left
        AffineRoot r = d.simple_root(i);
        int del = -1;
        for (int k = static_cast<int>(word.size()) - 1; k >= 0; --k) {
            if (r == d.simple_root(word[static_cast<std::size_t>(k)])) {
                del = k;
                break;
            }
            r = reflect_root(d, word[static_cast<std::size_t>(k)], r);
        }
        if (del >= 0)
            word.erase(word.begin() + del);  // exchange deletion
        else
            word.push_back(i);
    }
    return WeylElement::from_word(d, word);
}

std::vector<AffineRoot> inversion_set(const WeylElement& w) {
    const CartanDatum& d = w.datum();
    const Word& word = w.word();  // [i_r, ..., i_1]
    const int r = static_cast<int>(word.size());
    std::vector<AffineRoot> out;
    out.reserve(static_cast<std::size_t>(r));
    // beta_j = w_{i_r} ... w_{i_{j+1}} alpha_{i_j}: prefixes of the list.
    for (int j = 1; j <= r; ++j) {
        int t = r - j;  // list position of i_j
        AffineRoot b = d.simple_root(word[static_cast<std::size_t>(t)]);
        for (int k = t - 1; k >= 0; --k) b = reflect_root(d, word[static_cast<std::size_t>(k)], b);
        out.push_back(b);
    }
    return out;
}

std::vector<AffineRoot> inversion_set_gamma(const WeylElement& w) {
    const CartanDatum& d = w.datum();
    const Word& word = w.word();
    const int r = static_cast<int>(word.size());
    std::vector<AffineRoot> out;
    out.reserve(static_cast<std::size_t>(r));
    // gamma_j = w_{i_1} ... w_{i_{j-1}} alpha_{i_j}: suffixes of the list.
    for (int j = 1; j <= r; ++j) {
        int t = r - j;
        AffineRoot g = d.simple_root(word[static_cast<std::size_t>(t)]);
        for (int k = t + 1; k < r; ++k) g = reflect_root(d, word[static_cast<std::size_t>(k)], g);
        out.push_back(g);
    }
    return out;
}

CorootVector translation_action(const CartanDatum& d, const std::vector<long long>& H,
                                const CorootVector& x) {
    if (static_cast<int>(H.size()) != d.rank) throw DimensionMismatch("translation rank mismatch");
    CorootVector Hv = d.zero_vector();
    for (int i = 0; i < d.rank; ++i) Hv.h[i] = rat_of(H[static_cast<std::size_t>(i)]);
    CorootVector classical = d.zero_vector();
    for (int i = 0; i < d.rank; ++i) classical.h[i] = x.h[i];
    Rat hh = bilinear(Hv, Hv, d);
    Rat xh = bilinear(classical, Hv, d);
    CorootVector out = x;
    for (int i = 0; i < d.rank; ++i) out.h[i] -= x.d * Hv.h[i];
    out.c = x.c + xh - x.d * hh / 2;
    return out;
}

Mat translation_matrix(const CartanDatum& d, const std::vector<long long>& H) {
    const int l = d.rank;
    Mat m = Mat::identity(l + 2);
    CorootVector Hv = d.zero_vector();
    for (int i = 0; i < l; ++i) Hv.h[i] = rat_of(H[static_cast<std::size_t>(i)]);
    Rat hh = bilinear(Hv, Hv, d);
    for (int j = 0; j < l; ++j) {
        CorootVector ej = d.zero_vector();
        ej.h[j] = 1;
        Rat p = bilinear(ej, Hv, d);
        if (!is_integer(p)) throw DimensionMismatch("non-integral translation pairing");
        m.at(l, j) = p.get_num().get_si();
    }
    Rat half = hh / 2;
    if (!is_integer(half)) throw DimensionMismatch("non-integral (H,H)/2");
    for (int i = 0; i < l; ++i) m.at(i, l + 1) = -H[static_cast<std::size_t>(i)];
    m.at(l, l + 1) = -half.get_num().get_si();
    return m;
}

long long translation_length(const CartanDatum& d, const std::vector<long long>& H) {
    Mat t = translation_matrix(d, H);
    std::vector<long long> neg(H.size());
    for (std::size_t i = 0; i < H.size(); ++i) neg[i] = -H[i];
    Mat tinv = translation_matrix(d, neg);
    return static_cast<long long>(word_for(d, t, tinv).size());
}

Word word_for(const CartanDatum& d, const Mat& fwd, const Mat& inv) {
    Word out;
    Mat m = fwd, mi = inv;
    while (!m.is_identity()) {
        int chosen = 0;
        for (int i = 1; i <= d.gens(); ++i) {
            // left descent: w^{-1}(alpha_i) < 0; the inverse of w^{-1} is w.
            AffineRoot img = act_root_by_matrix(d, m, d.simple_root(i));
            if (!is_positive(img, d)) {
                chosen = i;
                break;
            }
        }
        if (chosen == 0) throw DimensionMismatch("matrix has no descent but is not the identity");
        Mat s = reflection_matrix(d, chosen);
        m = s * m;
        mi = mi * s;
        out.push_back(chosen);
    }
    return out;
}

namespace {

std::vector<WeylElement> enumerate_with_gens(const CartanDatum& d, const std::vector<int>& gens,
                                             int L, bool parallel, bool until_closed) {
    using Key = std::vector<long long>;
    struct Cand {
        Word word;
        Mat fwd, inv;
    };
    std::vector<WeylElement> out;
    out.push_back(WeylElement::identity(d));

    std::vector<Mat> gen_mat(static_cast<std::size_t>(d.gens()) + 1, Mat{});
    for (int g : gens) gen_mat[static_cast<std::size_t>(g)] = WeylElement::simple(d, g).matrix();

    std::vector<WeylElement> frontier{out.front()};
    int len = 0;
    while (until_closed || len < L) {
        ++len;
        int nt = 1;
#ifdef _OPENMP
        nt = parallel ? omp_get_max_threads() : 1;
#else
        (void)parallel;
#endif
        std::vector<std::map<Key, Cand>> partial(static_cast<std::size_t>(nt));
#ifdef _OPENMP
#pragma omp parallel for num_threads(nt) schedule(static)
#endif
        for (std::size_t fi = 0; fi < frontier.size(); ++fi) {
            int tid = 0;
#ifdef _OPENMP
            tid = omp_get_thread_num();
#endif
            auto& local = partial[static_cast<std::size_t>(tid)];
            const WeylElement& pel = frontier[fi];
            for (int g : gens) {
                // length grows iff w(alpha_g) stays positive
                if (!is_positive(pel.act(d.simple_root(g)), d)) continue;
                Word cand = pel.word();
                cand.push_back(g);
                const Mat& gm = gen_mat[static_cast<std::size_t>(g)];
                Mat fwd = pel.matrix() * gm;
                Key key = fwd.a;
                auto it = local.find(key);
                if (it == local.end() || cand < it->second.word)
                    local[key] = Cand{std::move(cand), std::move(fwd), gm * pel.inv_matrix()};
            }
        }
        // Deterministic merge independent of the thread partition: keep the
        // lexicographically smallest word per element. Together with the
        // induction "parents carry ShortLex words", the kept word is the
        // ShortLex-canonical word of the element.
        std::map<Key, Cand> next;
        for (auto& local : partial)
            for (auto& [key, val] : local) {
                auto it = next.find(key);
                if (it == next.end() || val.word < it->second.word) next[key] = std::move(val);
            }
        if (next.empty()) break;
        std::vector<WeylElement> nf;
        nf.reserve(next.size());
        for (auto& [key, val] : next) {
            (void)key;
            nf.push_back(WeylElement::with_known_word(d, std::move(val.word), std::move(val.fwd),
                                                      std::move(val.inv)));
        }
        std::sort(nf.begin(), nf.end(),
                  [](const WeylElement& a, const WeylElement& b) { return a.word() < b.word(); });
        for (const auto& el : nf) out.push_back(el);
        frontier = std::move(nf);
    }
    return out;
}

}  // namespace

std::vector<WeylElement> enumerate_elements(const CartanDatum& d, int L, bool parallel) {
    if (L < 0) throw DomainError("enumerate: negative length bound");
    std::vector<int> gens;
    for (int i = 1; i <= d.gens(); ++i) gens.push_back(i);
    return enumerate_with_gens(d, gens, L, parallel, false);
}

std::vector<WeylElement> enumerate_classical(const CartanDatum& d) {
    std::vector<int> gens;
    for (int i = 1; i <= d.rank; ++i) gens.push_back(i);
    return enumerate_with_gens(d, gens, 0, false, true);
}

Functional shifted_action(const WeylElement& w, const Functional& chi) {
    const CartanDatum& d = w.datum();
    Functional rho = d.rho();
    return w.act(chi + rho) - rho;
}

Rat lattice_norm2(const CartanDatum& d, const std::vector<long long>& H) {
    CorootVector v = d.zero_vector();
    for (int i = 0; i < d.rank; ++i) v.h[i] = rat_of(H[static_cast<std::size_t>(i)]);
    return bilinear(v, v, d);
}

}  // namespace eisct
