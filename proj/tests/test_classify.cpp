#include <doctest.h>

#include <random>

#include "nchom/classify.hpp"

using namespace nchom;

namespace {

Presentation pres(const std::vector<std::string>& gens, int s, const std::vector<std::string>& rels,
                  Field f = Field::Q()) {
    GenSetPtr g = GeneratorSet::make(gens);
    std::vector<NcPoly> rp;
    for (const auto& r : rels) rp.push_back(parse_poly(g, f, r));
    return Presentation(g, f, s, rp);
}

}  // namespace

TEST_CASE("cited pipeline examples") {
    auto o1 = classify_two_relations(pres({"y1", "y2"}, 3, {"y1^3", "y2^3"}), 9, false);
    CHECK(o1.condition == 1);
    CHECK(o1.m == 0);

    auto o3 = classify_two_relations(pres({"y1", "y2"}, 3, {"y1*y2*y1", "y2*y1*y2"}), 9, false);
    CHECK(o3.condition == 3);

    auto o5 = classify_two_relations(pres({"y1", "y2"}, 3, {"y1^3", "y1^2*y2"}), 9, false);
    CHECK(o5.condition == 5);

    auto o7 = classify_two_relations(pres({"y1", "x1", "x2"}, 3, {"y1^3", "x1*y1*x2"}), 9, false);
    CHECK(o7.condition == 7);
    CHECK(o7.m == 2);

    auto o10 =
        classify_two_relations(pres({"y1", "y2", "x1", "x2"}, 3, {"y1*x1*x2", "x1*x2*y2"}), 9, false);
    CHECK(o10.condition == 10);
}

TEST_CASE("construction round trip for conditions 1 to 6") {
    Field f = Field::Q();
    for (int s : {3, 4}) {
        for (std::size_t m : {0, 1}) {
            for (int cond : {1, 2, 3, 4, 5, 6}) {
                if (cond == 2 && s % 2) continue;
                if (cond == 3 && s % 2 == 0) continue;
                ConditionParams params;
                params.s = s;
                params.m = m;
                if (cond == 6) params.p = Scalar(f, 2);
                Presentation p = construct_condition_algebra(f, cond, params);
                auto o = classify_two_relations(p, 3 * s, false);
                CHECK(o.condition == cond);
                CHECK(o.m == m);
                if (cond == 6) CHECK(*o.p == *params.p);
            }
        }
    }
}

TEST_CASE("condition 8 round trip recovers the twist data") {
    Field q = Field::Q();
    ConditionParams params;
    params.s = 3;
    params.m = 1;
    params.diag = std::make_pair(Scalar(q, 2), Scalar(q, mpz_class(1), mpz_class(2)));
    Presentation p = construct_condition_algebra(q, 8, params);
    auto o = classify_two_relations(p, 9, false);
    CHECK(o.condition == 8);
    CHECK(o.m == 1);
    REQUIRE(o.nu.has_value());
    CHECK(!o.nu->jordan);
    // eigenvalues recovered as the unordered pair {2, 1/2}
    CHECK(o.nu->l1 == Scalar(q, mpz_class(1), mpz_class(2)));
    CHECK(o.nu->l2 == Scalar(q, 2));
    CHECK(*o.potential_case == 'a');

    // jordan case
    ConditionParams jp;
    jp.s = 4;
    jp.m = 0;
    jp.jordan = Scalar::one(q);
    Presentation pj = construct_condition_algebra(q, 8, jp);
    auto oj = classify_two_relations(pj, 8, false);
    CHECK(oj.condition == 8);
    REQUIRE(oj.nu.has_value());
    CHECK(oj.nu->jordan);
    CHECK(oj.nu->l1.is_one());
    CHECK(*oj.potential_case == 'd');

    // primitive-root case over F_7
    Field f7 = Field::Fp(7);
    ConditionParams cp;
    cp.s = 3;
    cp.m = 0;
    cp.diag = std::make_pair(Scalar::one(f7), Scalar(f7, 2));
    Presentation pc = construct_condition_algebra(f7, 8, cp);
    auto oc = classify_two_relations(pc, 9, false);
    CHECK(oc.condition == 8);
    CHECK(*oc.potential_case == 'c');
}

TEST_CASE("condition 8 case (c) algebra has the stated relations") {
    // unique algebra: (y1^s + y2^s, sum l2^i y2^i y1 y2^(s-i-1))
    Field f7 = Field::Fp(7);
    ConditionParams cp;
    cp.s = 3;
    cp.m = 0;
    cp.diag = std::make_pair(Scalar::one(f7), Scalar(f7, 2));
    Presentation p = construct_condition_algebra(f7, 8, cp);
    Subspace span(f7, 8, {poly_to_row(p.relations[0], 3), poly_to_row(p.relations[1], 3)});
    NcPoly r1 = parse_poly(p.gens, f7, "y1^3 + y2^3");
    NcPoly r2 = parse_poly(p.gens, f7, "y1*y2^2 + 2*y2*y1*y2 + 4*y2^2*y1");
    CHECK(span.contains(poly_to_row(r1, 3)));
    CHECK(span.contains(poly_to_row(r2, 3)));
}

TEST_CASE("condition 2 example from the listing") {
    Field q = Field::Q();
    ConditionParams params;
    params.s = 4;
    params.m = 1;
    Presentation p = construct_condition_algebra(q, 2, params);
    CHECK(p.n_gens() == 3);
    Subspace span(q, 81, {poly_to_row(p.relations[0], 4), poly_to_row(p.relations[1], 4)});
    CHECK(span.contains(poly_to_row(parse_poly(p.gens, q, "y1*y2*y1*y2"), 4)));
    CHECK(span.contains(poly_to_row(parse_poly(p.gens, q, "y2*y1*y2*y1"), 4)));
    CHECK(classify_two_relations(p, 8, false).condition == 2);
}

TEST_CASE("nkoz coefficient") {
    CHECK(nkoz_coefficient(pres({"y1", "y2"}, 3, {"y1^3", "y2^3"})) == 2);
    std::vector<Presentation> corpus = {
        pres({"y1", "y2"}, 3, {"y1^3", "y1^2*y2"}),
        pres({"y1", "y2"}, 4, {"y1*y2*y1*y2", "y2*y1*y2*y1"}),
        pres({"x1", "x2", "y1"}, 3, {"y1*x1*x2", "x1*x2*y1"}),
        pres({"x1", "x2", "x3"}, 3, {"x1^2*x2", "x1^2*x3"}),
        pres({"y1", "x1"}, 3, {"y1^3", "x1*y1*x1"}),
    };
    for (const auto& p : corpus) CHECK(nkoz_coefficient(p) > 0);
}

TEST_CASE("random presentations always land in a condition or need an extension") {
    Field f = Field::Fp(32003);
    std::mt19937 rng(71);
    int classified = 0, extension = 0;
    for (int it = 0; it < 150; ++it) {
        std::size_t n = 2 + rng() % 2;
        std::vector<std::string> names;
        for (std::size_t i = 0; i < n; ++i) names.push_back("g" + std::to_string(i));
        GenSetPtr g = GeneratorSet::make(names);
        std::vector<NcPoly> rels;
        for (int r = 0; r < 2; ++r) {
            NcPoly poly(g, f);
            for (int t = 0; t < 4; ++t) {
                Word w;
                for (int i = 0; i < 3; ++i) w.push_back((int)(rng() % n));
                poly.add_term(w, Scalar(f, (long)(rng() % 32003)));
            }
            if (!poly.is_zero()) rels.push_back(poly);
        }
        if (rels.size() < 2 || rank(component_matrix(rels, 3)) != 2) continue;
        Presentation p(g, f, 3, rels);
        try {
            auto o = classify_two_relations(p, 6, false);
            CHECK(o.condition >= 1);
            CHECK(o.condition <= 11);
            ++classified;
        } catch (const NeedsFieldExtension&) {
            ++extension;
        }
    }
    CHECK(classified > 50);
}

TEST_CASE("verdicts ride along with classification") {
    auto o = classify_two_relations(pres({"y1", "y2"}, 3, {"y1^3", "y2^3"}), 9, true);
    REQUIRE(o.koszul.has_value());
    CHECK(o.koszul->status == KoszulStatus::CertifiedKoszul);
}
