#include "doctest.h"
#include "eisct/cartan.hpp"
#include "eisct/errors.hpp"
#include "eisct/weyl.hpp"

using namespace eisct;

namespace {

AffineRoot root(const CartanDatum& d, std::initializer_list<long long> classical, long long n) {
    AffineRoot a;
    a.classical = classical;
    a.n = n;
    (void)d;
    return a;
}

// Untwisted affine Cartan matrices for the mandatory types, entered by hand
// from the standard tables (simple nodes first, affine node last; the entry
// at (i, j) is alpha_j(h_i)). With alpha_1 short in C2, theta = 2a1 + a2 and
// the affine node carries a double bond toward node 1; in G2 (alpha_1 long,
// theta = 2a1 + 3a2) it bonds simply to node 1.
const std::vector<std::vector<long long>> kAffineA1 = {{2, -2}, {-2, 2}};
const std::vector<std::vector<long long>> kAffineA2 = {{2, -1, -1}, {-1, 2, -1}, {-1, -1, 2}};
const std::vector<std::vector<long long>> kAffineC2 = {{2, -2, -2}, {-1, 2, 0}, {-1, 0, 2}};
const std::vector<std::vector<long long>> kAffineG2 = {{2, -1, -1}, {-3, 2, 0}, {-1, 0, 2}};

std::vector<std::vector<long long>> affine_cartan(const CartanDatum& d) {
    std::vector<std::vector<long long>> m(static_cast<std::size_t>(d.gens()),
                                          std::vector<long long>(static_cast<std::size_t>(d.gens())));
    for (int i = 1; i <= d.gens(); ++i)
        for (int j = 1; j <= d.gens(); ++j) {
            Rat v = pair(d.simple_root_functional(j), d.simple_coroot(i));
            REQUIRE(is_integer(v));
            m[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] =
                v.get_num().get_si();
        }
    return m;
}

}  // namespace

TEST_SUITE_BEGIN("root_data");

TEST_CASE("rank-1 data is forced by the normalization") {
    CartanDatum d = build_cartan(SimpleType::A, 1);
    CHECK(d.cartan == std::vector<std::vector<long long>>{{2}});
    CHECK(d.comarks == std::vector<long long>{1});
    CHECK(d.form[0][0] == 2);
    CHECK(d.dual_coxeter() == 2);
}

TEST_CASE("standard data for A2 and G2") {
    CartanDatum a2 = build_cartan(SimpleType::A, 2);
    CHECK(a2.cartan == std::vector<std::vector<long long>>{{2, -1}, {-1, 2}});
    CHECK(a2.comarks == std::vector<long long>{1, 1});

    CartanDatum g2 = build_cartan(SimpleType::G, 2);
    CHECK(((g2.cartan[0][1] == -1 && g2.cartan[1][0] == -3) ||
           (g2.cartan[0][1] == -3 && g2.cartan[1][0] == -1)));
    CHECK(g2.dual_coxeter() == 4);
}

TEST_CASE("affine Cartan pairings match the oracle tables") {
    CHECK(affine_cartan(build_cartan(SimpleType::A, 1)) == kAffineA1);
    CHECK(affine_cartan(build_cartan(SimpleType::A, 2)) == kAffineA2);
    CHECK(affine_cartan(build_cartan(SimpleType::C, 2)) == kAffineC2);
    CHECK(affine_cartan(build_cartan(SimpleType::G, 2)) == kAffineG2);
}

TEST_CASE("invalid type and rank combinations are rejected") {
    CHECK_THROWS_AS(build_cartan(SimpleType::A, 0), UnsupportedType);
    CHECK_THROWS_AS(build_cartan(SimpleType::B, 1), UnsupportedType);
    CHECK_THROWS_AS(build_cartan(SimpleType::D, 3), UnsupportedType);
    CHECK_THROWS_AS(build_cartan(SimpleType::E, 5), UnsupportedType);
    CHECK_THROWS_AS(build_cartan(SimpleType::F, 3), UnsupportedType);
    CHECK_THROWS_AS(build_cartan(SimpleType::G, 3), UnsupportedType);
    CHECK_THROWS_AS(parse_simple_type("Z"), UnsupportedType);
}

TEST_CASE("comarks reproduce the highest-root pairings") {
    for (auto [t, l] : std::vector<std::pair<SimpleType, int>>{{SimpleType::A, 3},
                                                               {SimpleType::B, 3},
                                                               {SimpleType::C, 2},
                                                               {SimpleType::D, 4},
                                                               {SimpleType::F, 4},
                                                               {SimpleType::G, 2}}) {
        CartanDatum d = build_cartan(t, l);
        for (int j = 0; j < d.rank; ++j) {
            long long lhs = 0;
            for (int i = 0; i < d.rank; ++i) lhs += d.comarks[i] * d.cartan[i][j];
            // alpha_j(h_0) computed independently through the root Gram matrix:
            // 2 (alpha_0, alpha_j) / (alpha_0, alpha_0) with (alpha_0,alpha_0)=2
            Rat ip(0);
            for (int a = 0; a < d.rank; ++a)
                ip += rat_of(d.highest_root[a]) * d.half_norm[a] * rat_of(d.cartan[a][j]);
            CHECK(rat_of(lhs) == ip);
        }
    }
}

TEST_CASE("dual Coxeter number equals rho(h_delta) for every supported type") {
    std::vector<std::pair<SimpleType, int>> grid = {
        {SimpleType::A, 1}, {SimpleType::A, 2}, {SimpleType::A, 4}, {SimpleType::B, 2},
        {SimpleType::B, 4}, {SimpleType::C, 2}, {SimpleType::C, 3}, {SimpleType::D, 4},
        {SimpleType::D, 5}, {SimpleType::E, 6}, {SimpleType::E, 7}, {SimpleType::E, 8},
        {SimpleType::F, 4}, {SimpleType::G, 2}};
    for (auto [t, l] : grid) {
        CartanDatum d = build_cartan(t, l);
        CorootVector hdelta = d.zero_vector();
        hdelta.c = 1;
        CHECK(pair(d.rho(), hdelta) == rat_of(d.dual_coxeter()));
    }
}

TEST_CASE("coroot of a simple root") {
    CartanDatum d = build_cartan(SimpleType::A, 1);
    CorootVector h1 = coroot_of(root(d, {1}, 0), d);
    CHECK(h1 == d.simple_coroot(1));
}

TEST_CASE("coroot of delta - alpha_0 reproduces h_{l+1}") {
    CartanDatum d = build_cartan(SimpleType::A, 1);
    CorootVector v = coroot_of(root(d, {-1}, 1), d);
    CorootVector expect = d.zero_vector();
    expect.h[0] = -1;
    expect.c = 1;
    CHECK(v == expect);
    CHECK(v == d.simple_coroot(2));
}

TEST_CASE("coroot of alpha_1 + delta agrees with the reflected coroot") {
    CartanDatum d = build_cartan(SimpleType::A, 1);
    CorootVector v = coroot_of(root(d, {1}, 1), d);
    CorootVector expect = d.zero_vector();
    expect.h[0] = 1;
    expect.c = 1;
    CHECK(v == expect);
    // derivation: alpha_1 + delta = w_1(alpha_2), so its coroot is w_1(h_2)
    WeylElement w1 = WeylElement::simple(d, 1);
    CHECK(w1.act(d.simple_root(2)) == root(d, {1}, 1));
    CHECK(w1.act(d.simple_coroot(2)) == v);
}

TEST_CASE("imaginary roots have no coroot") {
    CartanDatum d = build_cartan(SimpleType::A, 1);
    CHECK_THROWS_AS(coroot_of(root(d, {0}, 1), d), ImaginaryRoot);
    CHECK_THROWS_AS(coroot_of(root(d, {2}, 0), d), ImaginaryRoot);  // not a root either
}

TEST_CASE("pairing examples") {
    CartanDatum a1 = build_cartan(SimpleType::A, 1);
    CHECK(pair(a1.rho(), a1.simple_coroot(1)) == 1);
    CHECK(pair(a1.rho(), a1.simple_coroot(2)) == 1);
    CorootVector D = a1.zero_vector();
    D.d = 1;
    CHECK(pair(a1.delta(), D) == 1);

    CartanDatum a2 = build_cartan(SimpleType::A, 2);
    CorootVector hdelta = a2.zero_vector();
    hdelta.c = 1;
    CHECK(pair(a2.rho(), hdelta) == 3);

    Functional f;
    f.h.assign(2, Rat(1));
    CHECK_THROWS_AS(pair(f, a1.simple_coroot(1)), DimensionMismatch);
}

TEST_CASE("bilinear form values") {
    CartanDatum a1 = build_cartan(SimpleType::A, 1);
    CorootVector h1 = a1.simple_coroot(1);
    CHECK(bilinear(h1, h1, a1) == 2);
    CorootVector c = a1.zero_vector();
    c.c = 1;
    CorootVector D = a1.zero_vector();
    D.d = 1;
    CHECK(bilinear(c, h1, a1) == 0);
    CHECK(bilinear(c, c, a1) == 0);
    CHECK(bilinear(D, D, a1) == 0);
    CHECK(bilinear(c, D, a1) == 1);

    CartanDatum a2 = build_cartan(SimpleType::A, 2);
    CorootVector h12 = a2.simple_coroot(1) + a2.simple_coroot(2);
    CHECK(bilinear(h12, a2.simple_coroot(1), a2) == 1);
}

TEST_CASE("exactly one of a, -a is positive for scanned real roots") {
    for (auto [t, l] : std::vector<std::pair<SimpleType, int>>{
             {SimpleType::A, 1}, {SimpleType::A, 2}, {SimpleType::C, 2}, {SimpleType::G, 2}}) {
        CartanDatum d = build_cartan(t, l);
        for (const auto& rc : d.roots)
            for (long long n = -4; n <= 4; ++n) {
                AffineRoot a{rc, n};
                REQUIRE(is_real(a, d));
                CHECK(is_positive(a, d) != is_positive(a.negated(), d));
            }
    }
}

TEST_CASE("coroots are equivariant under short Weyl words") {
    for (auto [t, l] :
         std::vector<std::pair<SimpleType, int>>{{SimpleType::A, 1}, {SimpleType::A, 2}}) {
        CartanDatum d = build_cartan(t, l);
        std::vector<Word> words{{}};
        for (int len = 0; len < 4; ++len) {
            std::vector<Word> next;
            for (const auto& w : words)
                for (int g = 1; g <= d.gens(); ++g) {
                    Word e = w;
                    e.push_back(g);
                    next.push_back(e);
                }
            for (const auto& w : next) {
                WeylElement el = WeylElement::from_word(d, w);
                for (int i = 1; i <= d.gens(); ++i) {
                    AffineRoot a = d.simple_root(i);
                    CHECK(coroot_of(el.act(a), d) == el.act(coroot_of(a, d)));
                }
            }
            words = std::move(next);
        }
    }
}

TEST_SUITE_END();
