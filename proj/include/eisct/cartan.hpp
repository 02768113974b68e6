#pragma once

#include <string>
#include <vector>

#include "eisct/rat.hpp"

namespace eisct {

enum class SimpleType { A, B, C, D, E, F, G };

SimpleType parse_simple_type(const std::string& s);  // UnsupportedType
std::string to_string(SimpleType t);

// A real affine root alpha + n*delta (classical coordinates in the simple
// roots, delta coefficient n) or an imaginary root n*delta (classical = 0).
struct AffineRoot {
    std::vector<long long> classical;
    long long n = 0;

    bool operator==(const AffineRoot& o) const { return classical == o.classical && n == o.n; }
    bool operator!=(const AffineRoot& o) const { return !(*this == o); }
    bool operator<(const AffineRoot& o) const {
        return n != o.n ? n < o.n : classical < o.classical;
    }
    AffineRoot negated() const;
    std::string to_string() const;
};

// Element of the extended Cartan subalgebra, coordinates in the basis
// (h_{alpha_1}, ..., h_{alpha_l}, c, D).
struct CorootVector {
    std::vector<Rat> h;
    Rat c = 0;
    Rat d = 0;

    bool operator==(const CorootVector& o) const { return h == o.h && c == o.c && d == o.d; }
    bool operator!=(const CorootVector& o) const { return !(*this == o); }
    CorootVector operator+(const CorootVector& o) const;
    CorootVector operator-(const CorootVector& o) const;
    CorootVector scaled(const Rat& s) const;
    bool is_classical() const { return c == 0 && d == 0; }
    bool is_integral() const;
    std::string to_string() const;
};

// Linear functional on the extended Cartan subalgebra, stored by its values
// on the basis (h_{alpha_1}, ..., h_{alpha_l}, c, D). Houses chi, rho, the
// affine simple roots and delta.
struct Functional {
    std::vector<Rat> h;
    Rat c = 0;
    Rat d = 0;

    bool operator==(const Functional& o) const { return h == o.h && c == o.c && d == o.d; }
    bool operator!=(const Functional& o) const { return !(*this == o); }
    Functional operator+(const Functional& o) const;
    Functional operator-(const Functional& o) const;
    Functional scaled(const Rat& s) const;
    std::string to_string() const;
};

// Cartan data of a finite simple type together with what its untwisted
// affinization needs: the highest root, the comarks, and the invariant form
// normalized so that (h_{alpha_0}, h_{alpha_0}) = 2.
struct CartanDatum {
    SimpleType type;
    int rank = 0;
    std::vector<std::vector<long long>> cartan;  // cartan[i][j] = alpha_{j+1}(h_{alpha_{i+1}})
    std::vector<long long> highest_root;         // marks of alpha_0 in the simple roots
    std::vector<long long> comarks;              // h_{alpha_0} in the simple coroots
    std::vector<std::vector<Rat>> form;          // Gram matrix (h_i, h_j)
    std::vector<Rat> half_norm;                  // d_i = (alpha_i, alpha_i)/2
    std::vector<std::vector<long long>> roots;   // full classical root system
    std::vector<std::vector<long long>> positive_roots;

    int gens() const { return rank + 1; }  // affine simple reflections 1..l+1
    long long dual_coxeter() const;
    bool is_classical_root(const std::vector<long long>& coords) const;
    Rat half_norm_of(const std::vector<long long>& root_coords) const;  // (alpha,alpha)/2

    // 1-based accessors for the affine simple objects, i in 1..l+1.
    AffineRoot simple_root(int i) const;
    CorootVector simple_coroot(int i) const;
    Functional simple_root_functional(int i) const;

    Functional rho() const;    // rho(h_{alpha_i}) = 1, rho(D) = 0
    Functional delta() const;  // null root
    Functional root_functional(const AffineRoot& a) const;

    CorootVector zero_vector() const;
};

CartanDatum build_cartan(SimpleType type, int rank);  // UnsupportedType

// Coroot h_a = h_alpha + n*(2/(alpha,alpha))*c of a real affine root.
CorootVector coroot_of(const AffineRoot& a, const CartanDatum& d);  // ImaginaryRoot

Rat pair(const Functional& f, const CorootVector& v);  // DimensionMismatch

// Invariant form extended to the full space: classical block from the Gram
// matrix, (c, D) = 1, (c, c) = (D, D) = 0, c and D orthogonal to h.
Rat bilinear(const CorootVector& v1, const CorootVector& v2, const CartanDatum& d);

bool is_real(const AffineRoot& a, const CartanDatum& d);
bool is_imaginary(const AffineRoot& a, const CartanDatum& d);
bool is_positive(const AffineRoot& a, const CartanDatum& d);

}  // namespace eisct
