#include <doctest.h>

#include <random>

#include "nchom/hilbert.hpp"
#include "nchom/potential.hpp"

using namespace nchom;

namespace {

GenSetPtr yy() { return GeneratorSet::make({"y1", "y2"}); }

Matrix diag2(Field f, const Scalar& a, const Scalar& b) {
    Matrix m(f, 2, 2);
    m.set(0, 0, a);
    m.set(1, 1, b);
    return m;
}

}  // namespace

TEST_CASE("rotation basics") {
    Field q = Field::Q();
    auto g = yy();
    NcPoly w = parse_poly(g, q, "y1^4");
    Matrix id = Matrix::identity(q, 2);
    CHECK(is_twisted_potential(w, id));
    // swap twist fixes (y1 y2)^t y1 + (y2 y1)^t y2
    Matrix swap(q, 2, 2);
    swap.set(0, 1, Scalar::one(q));
    swap.set(1, 0, Scalar::one(q));
    NcPoly w3 = parse_poly(g, q, "y1*y2*y1 + y2*y1*y2");
    CHECK(is_twisted_potential(w3, swap));
    CHECK(!is_twisted_potential(parse_poly(g, q, "y1*y2*y1"), swap));
}

TEST_CASE("rotation to the power N is the diagonal twist") {
    Field q = Field::Q();
    auto g = yy();
    std::mt19937 rng(61);
    Matrix sigma(q, 2, 2);
    sigma.set(0, 0, Scalar(q, 2));
    sigma.set(0, 1, Scalar(q, 1));
    sigma.set(1, 1, Scalar(q, mpz_class(1), mpz_class(3)));
    for (int it = 0; it < 10; ++it) {
        NcPoly w(g, q);
        for (int t = 0; t < 4; ++t) {
            Word word;
            for (int i = 0; i < 4; ++i) word.push_back((int)(rng() % 2));
            w.add_term(word, Scalar(q, (long)(rng() % 5) - 2));
        }
        NcPoly rotated = w;
        for (int i = 0; i < 4; ++i) rotated = phi_sigma(rotated, sigma);
        // sigma^(x)4 applied termwise
        NcPoly expected(g, q);
        for (const auto& [word, c] : w.terms()) {
            NcPoly acc = NcPoly::monomial(g, c, {});
            for (int letter : word) {
                NcPoly lin(g, q);
                for (std::size_t i = 0; i < 2; ++i) {
                    Scalar v = sigma.at(i, (std::size_t)letter);
                    if (!v.is_zero()) lin.add_term({(int)i}, v);
                }
                acc = acc * lin;
            }
            expected = expected + acc;
        }
        CHECK((rotated - expected).is_zero());
    }
}

TEST_CASE("derived relations of the split potentials") {
    Field q = Field::Q();
    auto g = yy();
    for (int s : {3, 4}) {
        std::string e1 = std::to_string(s + 1);
        NcPoly w = parse_poly(g, q, "y1^" + e1 + " + y2^" + e1);
        Subspace r = derived_relations(w);
        CHECK(r.dim() == 2);
        std::string es = std::to_string(s);
        CHECK(r.contains(poly_to_row(parse_poly(g, q, "y1^" + es), s)));
        CHECK(r.contains(poly_to_row(parse_poly(g, q, "y2^" + es), s)));
        CHECK(!potential_exclusion_check(w));  // u^s slices are excluded shapes
    }
    // dim R = 1 fails the exclusion check
    CHECK(!potential_exclusion_check(parse_poly(g, q, "y1^4")));
}

TEST_CASE("free products") {
    Field q = Field::Q();
    auto g = yy();
    // k<x1> * D(y1^4 + y2^4) = k<x1,y1,y2>/(y1^3, y2^3)
    Presentation dw = build_potential_algebra(parse_poly(g, q, "y1^4 + y2^4"));
    Presentation fr(GeneratorSet::make({"x1"}), q, 3, {});
    Presentation prod = free_product(dw, fr);
    CHECK(prod.n_gens() == 3);
    CHECK(prod.relations.size() == 2);
    Subspace span(q, 27, {poly_to_row(prod.relations[0], 3), poly_to_row(prod.relations[1], 3)});
    CHECK(span.contains(poly_to_row(parse_poly(prod.gens, q, "y1^3"), 3)));
    CHECK(span.contains(poly_to_row(parse_poly(prod.gens, q, "y2^3"), 3)));

    // free product Hilbert series: 1/H = 1/H1 + 1/H2 - 1
    int D = 8;
    TruncatedGB gb1 = truncated_groebner(dw, D);
    TruncatedGB gb2 = truncated_groebner(fr, D);
    TruncatedGB gbp = truncated_groebner(prod, D);
    Series h1 = gb_dims(gb1, D), h2 = gb_dims(gb2, D), hp = gb_dims(gbp, D);
    Series lhs = series_inverse(hp);
    Series rhs = series_inverse(h1);
    Series rhs2 = series_inverse(h2);
    for (int d = 0; d <= D; ++d)
        CHECK(lhs.at(d) == rhs.at(d) + rhs2.at(d) - (d == 0 ? 1 : 0));

    // degree mismatch is rejected
    Presentation other(GeneratorSet::make({"z"}), q, 4, {});
    CHECK_THROWS_AS(free_product(dw, other), Error);
}

TEST_CASE("diagonal potential grid over Q") {
    Field q = Field::Q();
    auto P = [&](long num, long den) { return Scalar(q, mpz_class(num), mpz_class(den)); };
    struct Case {
        Scalar l1, l2;
        int s;
    };
    std::vector<Case> grid = {
        {P(1, 1), P(1, 1), 3},  {P(2, 1), P(1, 2), 3},  {P(2, 1), P(-1, 2), 3},
        {P(8, 1), P(1, 4), 4},  {P(4, 1), P(-1, 8), 4}, {P(2, 1), P(1, 2), 5},
        {P(4, 1), P(1, 2), 5},  {P(4, 1), P(-1, 2), 5}, {P(2, 1), P(-1, 4), 5},
    };
    for (const auto& c : grid) {
        TwistedPotential tp = gen_potential_diag(q, c.l1, c.l2, c.s);
        CHECK(is_twisted_potential(tp.w, tp.sigma));
        CHECK(derived_relations(tp.w).dim() == 2);
        CHECK(potential_exclusion_check(tp.w));
    }
    // violating all three conditions
    CHECK_THROWS_AS(gen_potential_diag(q, P(2, 1), P(3, 1), 3), Error);
}

TEST_CASE("diagonal potential grid over prime fields") {
    // case with l1 l2^s = l1^s l2 = 1 but no middle balance: F_17, l1 = 2, l2 = 2^{-3}
    Field f17 = Field::Fp(17);
    TwistedPotential b = gen_potential_diag(f17, Scalar(f17, 2), Scalar(f17, 15), 3);
    CHECK(is_twisted_potential(b.w, b.sigma));
    // primitive s-th roots: F_7 s=3 l2=2, F_5 s=4 l2=2, F_11 s=5 l2=3
    struct Case {
        long p, l2;
        int s;
    };
    for (const auto& c : std::vector<Case>{{7, 2, 3}, {5, 2, 4}, {11, 3, 5}}) {
        Field f = Field::Fp(c.p);
        TwistedPotential tp = gen_potential_diag(f, Scalar::one(f), Scalar(f, c.l2), c.s);
        CHECK(is_twisted_potential(tp.w, tp.sigma));
        CHECK(potential_exclusion_check(tp.w));
        // the symmetric variant
        TwistedPotential tp2 = gen_potential_diag(f, Scalar(f, c.l2), Scalar::one(f), c.s);
        CHECK(is_twisted_potential(tp2.w, tp2.sigma));
    }
}

TEST_CASE("jordan potential grid") {
    Field q = Field::Q();
    Scalar one = Scalar::one(q);
    for (int s : {3, 4, 5}) {
        TwistedPotential tp = gen_potential_jordan(q, one, s);
        CHECK(is_twisted_potential(tp.w, tp.sigma));
        CHECK(derived_relations(tp.w).dim() == 2);
        CHECK(potential_exclusion_check(tp.w));
    }
    for (int s : {3, 5}) {
        TwistedPotential tp = gen_potential_jordan(q, -one, s);
        CHECK(is_twisted_potential(tp.w, tp.sigma));
        CHECK(potential_exclusion_check(tp.w));
    }
    // the s = 3 potential carries the stated commutator-like tail
    TwistedPotential t3 = gen_potential_jordan(q, one, 3);
    CHECK(t3.w.coeff({0, 1, 0, 0}).is_one());
    CHECK(t3.w.coeff({0, 0, 1, 0}) == -one);
    // primitive 5th root over F_11
    Field f11 = Field::Fp(11);
    TwistedPotential t4 = gen_potential_jordan(f11, Scalar(f11, 3), 4);
    CHECK(is_twisted_potential(t4.w, t4.sigma));
    // characteristic 2
    Field f2 = Field::Fp(2);
    TwistedPotential t2 = gen_potential_jordan(f2, Scalar::one(f2), 4);
    CHECK(is_twisted_potential(t2.w, t2.sigma));
    CHECK(potential_exclusion_check(t2.w));
    // lam^2 = -1 over F_13, s = 7
    Field f13 = Field::Fp(13);
    TwistedPotential t7 = gen_potential_jordan(f13, Scalar(f13, 5), 7);
    CHECK(is_twisted_potential(t7.w, t7.sigma));
    CHECK(potential_exclusion_check(t7.w));
    // illegal parameters
    CHECK_THROWS_AS(gen_potential_jordan(q, Scalar(q, 2), 3), Error);
    CHECK_THROWS_AS(gen_potential_jordan(q, Scalar(q, 2), 5), Error);
}
