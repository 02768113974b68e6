#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "eisct/cartan.hpp"

namespace eisct {

// Generator indices are 1-based: 1..l for the classical reflections, l+1 for
// the affine one. A word [a, b, c] denotes the composition w_a ∘ w_b ∘ w_c
// (rightmost letter acts first).
using Word = std::vector<int>;

std::string word_to_string(const Word& w);

// Square integer matrix acting on coordinates in the basis
// (h_{alpha_1}, ..., h_{alpha_l}, c, D).
struct Mat {
    int n = 0;
    std::vector<long long> a;  // row-major

    static Mat identity(int n);
    long long& at(int r, int c) { return a[static_cast<std::size_t>(r) * n + c]; }
    long long at(int r, int c) const { return a[static_cast<std::size_t>(r) * n + c]; }
    Mat operator*(const Mat& o) const;
    bool operator==(const Mat& o) const { return n == o.n && a == o.a; }
    bool is_identity() const;
};

class WeylElement;

// Normal form of the inverse: w^{-1} = w1 * T_H with w1 classical and H in
// the classical coroot lattice.
struct WeylNormalForm;

// Affine Weyl group element. Immutable; carries its ShortLex-minimal reduced
// word and the matrices of both the element and its inverse. Equality of the
// matrix is equality in the group.
class WeylElement {
  public:
    static WeylElement identity(const CartanDatum& d);
    static WeylElement simple(const CartanDatum& d, int i);
    static WeylElement from_word(const CartanDatum& d, const Word& w);  // reduces
    static WeylElement from_matrix(const CartanDatum& d, const Mat& fwd, const Mat& inv);
    // Caller guarantees the word is the ShortLex reduced word of the matrix
    // pair; used by the enumerator which proves this invariant inductively.
    static WeylElement with_known_word(const CartanDatum& d, Word w, Mat fwd, Mat inv);

    const CartanDatum& datum() const { return *cd_; }
    const Word& word() const { return word_; }
    int length() const { return static_cast<int>(word_.size()); }
    const Mat& matrix() const { return fwd_; }
    const Mat& inv_matrix() const { return inv_; }

    WeylElement operator*(const WeylElement& o) const;
    WeylElement inverse() const;
    bool operator==(const WeylElement& o) const { return fwd_ == o.fwd_; }
    bool operator!=(const WeylElement& o) const { return !(*this == o); }

    CorootVector act(const CorootVector& v) const;
    Functional act(const Functional& f) const;
    AffineRoot act(const AffineRoot& a) const;
    // Action of w^{-1} without materializing the inverse element.
    CorootVector act_inverse(const CorootVector& v) const;
    Functional act_inverse(const Functional& f) const;

    WeylNormalForm decompose() const;

  private:
    WeylElement(const CartanDatum& d, Word w, Mat fwd, Mat inv);
    const CartanDatum* cd_;
    Word word_;
    Mat fwd_, inv_;
};

struct WeylNormalForm {
    WeylElement classical_part;
    std::vector<long long> translation;
};

// Spec algorithm: left-to-right rebuild, appending w_i when the current
// element sends alpha_i to a positive root and applying the exchange deletion
// otherwise. The returned element carries the canonical reduced word.
WeylElement reduce(const CartanDatum& d, const Word& w);

// Inversion set {beta_1, ..., beta_r} = positive real roots in w(Delta_-),
// from the word formula beta_j = w_{i_r} ... w_{i_{j+1}} alpha_{i_j}.
std::vector<AffineRoot> inversion_set(const WeylElement& w);

// The gamma form gamma_j = w_{i_1} ... w_{i_{j-1}} alpha_{i_j}; this is the
// set of positive roots sent negative by w, i.e. Delta_+ ∩ w^{-1} Delta_-,
// the index set of c(chi, w).
std::vector<AffineRoot> inversion_set_gamma(const WeylElement& w);

// Action of T_H on an arbitrary vector, by the closed translation formula.
CorootVector translation_action(const CartanDatum& d, const std::vector<long long>& H,
                                const CorootVector& x);

Mat translation_matrix(const CartanDatum& d, const std::vector<long long>& H);

// Exact length of T_H, computed by reducing a word read off the matrix.
long long translation_length(const CartanDatum& d, const std::vector<long long>& H);

// Reduced word for an arbitrary group element given by its matrix pair;
// chooses the smallest left descent each step, so the result is the
// ShortLex-minimal reduced word. Does not terminate on matrices outside the
// group (callers pass genuine Weyl matrices).
Word word_for(const CartanDatum& d, const Mat& fwd, const Mat& inv);

// All elements with length <= L, each exactly once, sorted by (length, word).
// The parallel path must produce the identical list.
std::vector<WeylElement> enumerate_elements(const CartanDatum& d, int L, bool parallel = true);

// The finite classical Weyl group (generators 1..l only).
std::vector<WeylElement> enumerate_classical(const CartanDatum& d);

// Shifted action w ∘ chi = w(chi + rho) - rho on full functionals.
Functional shifted_action(const WeylElement& w, const Functional& chi);

// (H, H) via the coroot Gram matrix, exact.
Rat lattice_norm2(const CartanDatum& d, const std::vector<long long>& H);

}  // namespace eisct
