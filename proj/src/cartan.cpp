#include "eisct/cartan.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "eisct/errors.hpp"

namespace eisct {

SimpleType parse_simple_type(const std::string& s) {
    if (s == "A" || s == "a") return SimpleType::A;
    if (s == "B" || s == "b") return SimpleType::B;
    if (s == "C" || s == "c") return SimpleType::C;
    if (s == "D" || s == "d") return SimpleType::D;
    if (s == "E" || s == "e") return SimpleType::E;
    if (s == "F" || s == "f") return SimpleType::F;
    if (s == "G" || s == "g") return SimpleType::G;
    throw UnsupportedType("unknown type label '" + s + "'");
}

std::string to_string(SimpleType t) {
    switch (t) {
        case SimpleType::A: return "A";
        case SimpleType::B: return "B";
        case SimpleType::C: return "C";
        case SimpleType::D: return "D";
        case SimpleType::E: return "E";
        case SimpleType::F: return "F";
        case SimpleType::G: return "G";
    }
    return "?";
}

AffineRoot AffineRoot::negated() const {
    AffineRoot r(*this);
    for (auto& c : r.classical) c = -c;
    r.n = -r.n;
    return r;
}

std::string AffineRoot::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < classical.size(); ++i) {
        if (classical[i] == 0) continue;
        long long c = classical[i];
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? "-" : "+");
        }
        if (std::abs(c) != 1) os << std::abs(c) << "*";
        os << "a" << (i + 1);
    }
    if (n != 0) {
        if (first) {
            if (n < 0) os << "-";
            first = false;
        } else {
            os << (n < 0 ? "-" : "+");
        }
        if (std::abs(n) != 1) os << std::abs(n) << "*";
        os << "d";
    }
    if (first) os << "0";
    return os.str();
}

CorootVector CorootVector::operator+(const CorootVector& o) const {
    if (h.size() != o.h.size()) throw DimensionMismatch("coroot vector ranks differ");
    CorootVector r(*this);
    for (std::size_t i = 0; i < h.size(); ++i) r.h[i] += o.h[i];
    r.c += o.c;
    r.d += o.d;
    return r;
}

CorootVector CorootVector::operator-(const CorootVector& o) const {
    return *this + o.scaled(Rat(-1));
}

CorootVector CorootVector::scaled(const Rat& s) const {
    CorootVector r(*this);
    for (auto& x : r.h) x *= s;
    r.c *= s;
    r.d *= s;
    return r;
}

bool CorootVector::is_integral() const {
    for (const auto& x : h)
        if (!is_integer(x)) return false;
    return is_integer(c) && is_integer(d);
}

static std::string coords_to_string(const std::vector<Rat>& h, const Rat& c, const Rat& d,
                                    const char* base) {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < h.size(); ++i) {
        if (i) os << ",";
        os << h[i].get_str();
    }
    os << ";" << c.get_str() << ";" << d.get_str() << ")" << base;
    return os.str();
}

std::string CorootVector::to_string() const { return coords_to_string(h, c, d, ""); }

Functional Functional::operator+(const Functional& o) const {
    if (h.size() != o.h.size()) throw DimensionMismatch("functional ranks differ");
    Functional r(*this);
    for (std::size_t i = 0; i < h.size(); ++i) r.h[i] += o.h[i];
    r.c += o.c;
    r.d += o.d;
    return r;
}

Functional Functional::operator-(const Functional& o) const { return *this + o.scaled(Rat(-1)); }

Functional Functional::scaled(const Rat& s) const {
    Functional r(*this);
    for (auto& x : r.h) x *= s;
    r.c *= s;
    r.d *= s;
    return r;
}

std::string Functional::to_string() const { return coords_to_string(h, c, d, "*"); }

long long CartanDatum::dual_coxeter() const {
    long long s = 1;
    for (long long a : comarks) s += a;
    return s;
}

bool CartanDatum::is_classical_root(const std::vector<long long>& coords) const {
    return std::find(roots.begin(), roots.end(), coords) != roots.end();
}

Rat CartanDatum::half_norm_of(const std::vector<long long>& rc) const {
    // (alpha, alpha)/2 with (alpha_i, alpha_j) = d_i * cartan[i][j].
    Rat s(0);
    for (int i = 0; i < rank; ++i) {
        if (rc[i] == 0) continue;
        for (int j = 0; j < rank; ++j)
            s += rat_of(rc[i]) * half_norm[i] * rat_of(cartan[i][j]) * rat_of(rc[j]);
    }
    return s / 2;
}

AffineRoot CartanDatum::simple_root(int i) const {
    AffineRoot a;
    a.classical.assign(rank, 0);
    if (i >= 1 && i <= rank) {
        a.classical[i - 1] = 1;
    } else if (i == rank + 1) {
        for (int k = 0; k < rank; ++k) a.classical[k] = -highest_root[k];
        a.n = 1;
    } else {
        throw DimensionMismatch("simple root index out of range");
    }
    return a;
}

CorootVector CartanDatum::simple_coroot(int i) const {
    CorootVector v = zero_vector();
    if (i >= 1 && i <= rank) {
        v.h[i - 1] = 1;
    } else if (i == rank + 1) {
        // h_{l+1} = -h_{alpha_0} + (2/(alpha_0,alpha_0)) c, and (alpha_0,alpha_0) = 2.
        for (int k = 0; k < rank; ++k) v.h[k] = rat_of(-comarks[k]);
        v.c = 1;
    } else {
        throw DimensionMismatch("simple coroot index out of range");
    }
    return v;
}

Functional CartanDatum::simple_root_functional(int i) const {
    return root_functional(simple_root(i));
}

Functional CartanDatum::rho() const {
    Functional f;
    f.h.assign(rank, Rat(1));
    // rho(h_{l+1}) = 1 forces rho(c) = 1 + rho(h_{alpha_0}) = dual Coxeter number.
    f.c = rat_of(dual_coxeter());
    f.d = 0;
    return f;
}

Functional CartanDatum::delta() const {
    Functional f;
    f.h.assign(rank, Rat(0));
    f.c = 0;
    f.d = 1;
    return f;
}

Functional CartanDatum::root_functional(const AffineRoot& a) const {
    Functional f;
    f.h.assign(rank, Rat(0));
    for (int j = 0; j < rank; ++j) {
        long long v = 0;
        for (int k = 0; k < rank; ++k) v += cartan[j][k] * a.classical[k];
        f.h[j] = rat_of(v);
    }
    f.c = 0;
    f.d = rat_of(a.n);
    return f;
}

CorootVector CartanDatum::zero_vector() const {
    CorootVector v;
    v.h.assign(rank, Rat(0));
    return v;
}

namespace {

struct TypeData {
    std::vector<std::vector<long long>> cartan;
    std::vector<long long> marks;
    std::vector<Rat> half_norm;
};

std::vector<std::vector<long long>> chain_cartan(int l) {
    std::vector<std::vector<long long>> a(l, std::vector<long long>(l, 0));
    for (int i = 0; i < l; ++i) a[i][i] = 2;
    for (int i = 0; i + 1 < l; ++i) a[i][i + 1] = a[i + 1][i] = -1;
    return a;
}

TypeData type_table(SimpleType type, int l) {
    TypeData t;
    switch (type) {
        case SimpleType::A: {
            if (l < 1) throw UnsupportedType("type A needs rank >= 1");
            t.cartan = chain_cartan(l);
            t.marks.assign(l, 1);
            t.half_norm.assign(l, Rat(1));
            break;
        }
        case SimpleType::B: {
            if (l < 2) throw UnsupportedType("type B needs rank >= 2");
            t.cartan = chain_cartan(l);
            t.cartan[l - 2][l - 1] = -1;
            t.cartan[l - 1][l - 2] = -2;  // alpha_l short
            t.marks.assign(l, 2);
            t.marks[0] = 1;
            t.half_norm.assign(l, Rat(1));
            t.half_norm[l - 1] = make_rat(1, 2);
            break;
        }
        case SimpleType::C: {
            if (l < 2) throw UnsupportedType("type C needs rank >= 2");
            t.cartan = chain_cartan(l);
            t.cartan[l - 2][l - 1] = -2;  // alpha_l long
            t.cartan[l - 1][l - 2] = -1;
            t.marks.assign(l, 2);
            t.marks[l - 1] = 1;
            t.half_norm.assign(l, make_rat(1, 2));
            t.half_norm[l - 1] = Rat(1);
            break;
        }
        case SimpleType::D: {
            if (l < 4) throw UnsupportedType("type D needs rank >= 4");
            t.cartan = chain_cartan(l);
            // fork: nodes l-1 and l both attach to node l-2
            t.cartan[l - 2][l - 1] = t.cartan[l - 1][l - 2] = 0;
            t.cartan[l - 3][l - 1] = t.cartan[l - 1][l - 3] = -1;
            t.marks.assign(l, 2);
            t.marks[0] = t.marks[l - 2] = t.marks[l - 1] = 1;
            t.half_norm.assign(l, Rat(1));
            break;
        }
        case SimpleType::E: {
            if (l < 6 || l > 8) throw UnsupportedType("type E needs rank 6, 7 or 8");
            // Bourbaki: chain 1-3-4-5-...-l with node 2 attached to node 4.
            t.cartan.assign(l, std::vector<long long>(l, 0));
            for (int i = 0; i < l; ++i) t.cartan[i][i] = 2;
            auto link = [&](int i, int j) { t.cartan[i - 1][j - 1] = t.cartan[j - 1][i - 1] = -1; };
            link(1, 3);
            link(2, 4);
            for (int i = 3; i < l; ++i) link(i, i + 1);
            if (l == 6) t.marks = {1, 2, 2, 3, 2, 1};
            if (l == 7) t.marks = {2, 2, 3, 4, 3, 2, 1};
            if (l == 8) t.marks = {2, 3, 4, 6, 5, 4, 3, 2};
            t.half_norm.assign(l, Rat(1));
            break;
        }
        case SimpleType::F: {
            if (l != 4) throw UnsupportedType("type F needs rank 4");
            t.cartan = {{2, -1, 0, 0}, {-1, 2, -1, 0}, {0, -2, 2, -1}, {0, 0, -1, 2}};
            t.marks = {2, 3, 4, 2};
            t.half_norm = {Rat(1), Rat(1), make_rat(1, 2), make_rat(1, 2)};
            break;
        }
        case SimpleType::G: {
            if (l != 2) throw UnsupportedType("type G needs rank 2");
            t.cartan = {{2, -1}, {-3, 2}};
            t.marks = {2, 3};
            t.half_norm = {Rat(1), make_rat(1, 3)};
            break;
        }
    }
    return t;
}

// Close the simple roots under the simple reflections.
std::vector<std::vector<long long>> generate_roots(const std::vector<std::vector<long long>>& cartan) {
    int l = static_cast<int>(cartan.size());
    std::set<std::vector<long long>> seen;
    std::vector<std::vector<long long>> queue;
    for (int i = 0; i < l; ++i) {
        std::vector<long long> e(l, 0);
        e[i] = 1;
        seen.insert(e);
        queue.push_back(e);
    }
    while (!queue.empty()) {
        auto beta = queue.back();
        queue.pop_back();
        for (int i = 0; i < l; ++i) {
            long long p = 0;
            for (int j = 0; j < l; ++j) p += cartan[i][j] * beta[j];
            auto img = beta;
            img[i] -= p;
            if (seen.insert(img).second) queue.push_back(img);
        }
    }
    std::vector<std::vector<long long>> all(seen.begin(), seen.end());
    return all;
}

void validate(const CartanDatum& d) {
    const int l = d.rank;
    for (int i = 0; i < l; ++i) {
        if (d.cartan[i][i] != 2) throw UnsupportedType("Cartan diagonal must be 2");
        for (int j = 0; j < l; ++j)
            if (i != j && d.cartan[i][j] > 0)
                throw UnsupportedType("Cartan off-diagonal must be non-positive");
    }
    // Positive-definite symmetrization: leading principal minors of the root
    // Gram matrix (alpha_i, alpha_j) = d_i A_ij, computed exactly.
    std::vector<std::vector<Rat>> g(l, std::vector<Rat>(l));
    for (int i = 0; i < l; ++i)
        for (int j = 0; j < l; ++j) g[i][j] = d.half_norm[i] * rat_of(d.cartan[i][j]);
    for (int k = 1; k <= l; ++k) {
        std::vector<std::vector<Rat>> m(k, std::vector<Rat>(k));
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j) m[i][j] = g[i][j];
        // Gaussian elimination determinant
        Rat det(1);
        for (int col = 0; col < k; ++col) {
            int piv = -1;
            for (int r = col; r < k; ++r)
                if (m[r][col] != 0) {
                    piv = r;
                    break;
                }
            if (piv < 0) {
                det = 0;
                break;
            }
            if (piv != col) {
                std::swap(m[piv], m[col]);
                det = -det;
            }
            det *= m[col][col];
            for (int r = col + 1; r < k; ++r) {
                Rat f = m[r][col] / m[col][col];
                for (int cc = col; cc < k; ++cc) m[r][cc] -= f * m[col][cc];
            }
        }
        if (det <= 0) throw UnsupportedType("Cartan matrix is not of finite type");
    }
    // The highest root must be a root and (h_0, h_0) must equal 2.
    if (!d.is_classical_root(d.highest_root))
        throw UnsupportedType("highest root table entry is not a root");
    CorootVector h0 = d.zero_vector();
    for (int i = 0; i < l; ++i) h0.h[i] = rat_of(d.comarks[i]);
    if (bilinear(h0, h0, d) != 2) throw UnsupportedType("form normalization broken");
}

}  // namespace

CartanDatum build_cartan(SimpleType type, int rank) {
    TypeData t = type_table(type, rank);
    CartanDatum d;
    d.type = type;
    d.rank = rank;
    d.cartan = t.cartan;
    d.highest_root = t.marks;
    d.half_norm = t.half_norm;
    d.comarks.resize(rank);
    for (int i = 0; i < rank; ++i) {
        Rat cm = rat_of(t.marks[i]) * t.half_norm[i];  // h_theta = sum marks_i d_i h_i
        if (!is_integer(cm)) throw UnsupportedType("non-integral comark");
        d.comarks[i] = cm.get_num().get_si();
    }
    d.form.assign(rank, std::vector<Rat>(rank));
    for (int i = 0; i < rank; ++i)
        for (int j = 0; j < rank; ++j) d.form[i][j] = rat_of(d.cartan[i][j]) / t.half_norm[j];
    d.roots = generate_roots(d.cartan);
    for (const auto& r : d.roots) {
        bool pos = true;
        for (long long x : r)
            if (x < 0) pos = false;
        if (pos) d.positive_roots.push_back(r);
    }
    std::sort(d.positive_roots.begin(), d.positive_roots.end());
    validate(d);
    return d;
}

CorootVector coroot_of(const AffineRoot& a, const CartanDatum& d) {
    if (!is_real(a, d))
        throw ImaginaryRoot("coroot requested for non-real root " + a.to_string());
    Rat da = d.half_norm_of(a.classical);
    CorootVector v = d.zero_vector();
    for (int i = 0; i < d.rank; ++i) v.h[i] = rat_of(a.classical[i]) * d.half_norm[i] / da;
    v.c = rat_of(a.n) / da;
    return v;
}

Rat pair(const Functional& f, const CorootVector& v) {
    if (f.h.size() != v.h.size()) throw DimensionMismatch("pair: rank mismatch");
    Rat s(0);
    for (std::size_t i = 0; i < f.h.size(); ++i) s += f.h[i] * v.h[i];
    s += f.c * v.c;
    s += f.d * v.d;
    return s;
}

Rat bilinear(const CorootVector& v1, const CorootVector& v2, const CartanDatum& d) {
    if (v1.h.size() != v2.h.size() || static_cast<int>(v1.h.size()) != d.rank)
        throw DimensionMismatch("bilinear: rank mismatch");
    Rat s(0);
    for (int i = 0; i < d.rank; ++i) {
        if (v1.h[i] == 0) continue;
        for (int j = 0; j < d.rank; ++j) s += v1.h[i] * d.form[i][j] * v2.h[j];
    }
    s += v1.c * v2.d + v1.d * v2.c;
    return s;
}

bool is_real(const AffineRoot& a, const CartanDatum& d) {
    bool nonzero = false;
    for (long long c : a.classical)
        if (c != 0) nonzero = true;
    return nonzero && d.is_classical_root(a.classical);
}

bool is_imaginary(const AffineRoot& a, const CartanDatum& d) {
    (void)d;
    for (long long c : a.classical)
        if (c != 0) return false;
    return a.n != 0;
}

bool is_positive(const AffineRoot& a, const CartanDatum& d) {
    if (is_imaginary(a, d)) return a.n > 0;
    if (a.n != 0) return a.n > 0;
    for (long long c : a.classical)
        if (c < 0) return false;
    return true;
}

}  // namespace eisct
