#include <doctest.h>

#include "nchom/koszul.hpp"

using namespace nchom;

namespace {

// J(A)[1] of a canonical two-generator quadratic algebra: M0 = A_1, M1 = A_2
BimoduleData j_module(Field f, QuadTag tag, std::optional<Scalar> q) {
    GenSetPtr g = GeneratorSet::make({"x", "y"});
    Subspace rels = canonical_relation_space(f, tag, q);
    std::vector<NcPoly> rel_polys;
    for (const auto& r : rels.basis()) rel_polys.push_back(poly_from_row(g, f, 2, r));
    Presentation p(g, f, 2, rel_polys);
    TruncatedGB gb = truncated_groebner(p, 6);
    auto basis1 = normal_words(gb, 1);
    auto basis2 = normal_words(gb, 2);
    auto basis3 = normal_words(gb, 3);
    std::map<int, std::map<Word, std::size_t>> idx;
    for (int d : {2, 3}) {
        auto ws = normal_words(gb, d);
        for (std::size_t i = 0; i < ws.size(); ++i) idx[d][ws[i]] = i;
    }
    auto cls = [&](const Word& w) {
        NcPoly nf = normal_form(NcPoly::monomial(g, Scalar::one(f), w), gb);
        SparseRow r;
        for (const auto& [u, c] : nf.terms()) r.emplace_back(idx.at((int)w.size()).at(u), c);
        std::sort(r.begin(), r.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
        return r;
    };
    BimoduleData b;
    b.field = f;
    b.n_algebra_gens = 2;
    b.dim_m0 = basis1.size();
    b.dim_m1 = basis2.size();
    b.dim_m2 = basis3.size();
    for (int gen = 0; gen < 2; ++gen) {
        Matrix right(f, b.dim_m0, b.dim_m1), left(f, b.dim_m0, b.dim_m1);
        Matrix right1(f, b.dim_m1, b.dim_m2), left1(f, b.dim_m1, b.dim_m2);
        for (std::size_t i = 0; i < b.dim_m0; ++i) {
            right.row(i) = cls(word_mul(basis1[i], {gen}));
            left.row(i) = cls(word_mul({gen}, basis1[i]));
        }
        for (std::size_t i = 0; i < b.dim_m1; ++i) {
            right1.row(i) = cls(word_mul(basis2[i], {gen}));
            left1.row(i) = cls(word_mul({gen}, basis2[i]));
        }
        b.right_action.push_back(right);
        b.left_action.push_back(left);
        b.right_action1.push_back(right1);
        b.left_action1.push_back(left1);
    }
    return b;
}

Presentation pres(const std::vector<std::string>& gens, int s, const std::vector<std::string>& rels,
                  Field f = Field::Q()) {
    GenSetPtr g = GeneratorSet::make(gens);
    std::vector<NcPoly> rp;
    for (const auto& r : rels) rp.push_back(parse_poly(g, f, r));
    return Presentation(g, f, s, rp);
}

}  // namespace

TEST_CASE("decompositions of J(A)[1] match the table") {
    Field f = Field::Q();
    ProjParam p10 = normalize_proj(Scalar::one(f), Scalar::zero(f));
    ProjParam p01 = normalize_proj(Scalar::zero(f), Scalar::one(f));

    // A7(q), q != 0: right B2(1,0)
    auto b7 = j_module(f, QuadTag::A7, Scalar(f, 3));
    auto d7 = decompose_one_sided(b7, Side::Right);
    REQUIRE(d7.main.size() == 1);
    CHECK(d7.main[0].shape == 'B');
    CHECK(d7.main[0].n == 2);
    CHECK(*d7.main[0].param == p10);

    // A4: right B1(1,0) + B1(0,1)
    auto b4 = j_module(f, QuadTag::A4, std::nullopt);
    auto d4 = decompose_one_sided(b4, Side::Right);
    REQUIRE(d4.main.size() == 2);
    CHECK(d4.main[0].shape == 'B');
    CHECK(((*d4.main[0].param == p10 && *d4.main[1].param == p01) ||
           (*d4.main[0].param == p01 && *d4.main[1].param == p10)));

    // A1: right B1(1,0) + Z1
    auto b1 = j_module(f, QuadTag::A1, std::nullopt);
    auto d1 = decompose_one_sided(b1, Side::Right);
    REQUIRE(d1.main.size() == 1);
    CHECK(d1.main[0].shape == 'B');
    CHECK(d1.main[0].n == 1);
    CHECK(*d1.main[0].param == p10);
    CHECK(d1.z1_count == 1);

    // A9(q): right B1(1,-q) + B1(0,1)
    Scalar qv(f, 2);
    auto b9 = j_module(f, QuadTag::A9, qv);
    auto d9 = decompose_one_sided(b9, Side::Right);
    REQUIRE(d9.main.size() == 2);
    ProjParam pminus_q = normalize_proj(Scalar::one(f), -qv);
    CHECK(((*d9.main[0].param == pminus_q && *d9.main[1].param == p01) ||
           (*d9.main[0].param == p01 && *d9.main[1].param == pminus_q)));

    // A6: right doubled B1(1,0), left W1' + Z1'
    auto b6 = j_module(f, QuadTag::A6, std::nullopt);
    auto d6r = decompose_one_sided(b6, Side::Right);
    REQUIRE(d6r.main.size() == 2);
    CHECK(*d6r.main[0].param == p10);
    CHECK(*d6r.main[1].param == p10);
    auto d6l = decompose_one_sided(b6, Side::Left);
    REQUIRE(d6l.main.size() == 1);
    CHECK(d6l.main[0].shape == 'W');
    CHECK(d6l.z1_count == 1);

    // A7(0): right W1 + Z1
    auto b70 = j_module(f, QuadTag::A7, Scalar(f, 0));
    auto d70 = decompose_one_sided(b70, Side::Right);
    REQUIRE(d70.main.size() == 1);
    CHECK(d70.main[0].shape == 'W');

    // A2(q != 0): right Z2
    auto b2 = j_module(f, QuadTag::A2, Scalar(f, 2));
    auto d2 = decompose_one_sided(b2, Side::Right);
    REQUIRE(d2.main.size() == 1);
    CHECK(d2.main[0].shape == 'Z');
    CHECK(d2.main[0].n == 2);

    // A0: two trivial summands
    auto b0 = j_module(f, QuadTag::A0, std::nullopt);
    auto d0 = decompose_one_sided(b0, Side::Right);
    CHECK(d0.main.empty());
    CHECK(d0.z1_count == 2);
}

TEST_CASE("recognizing M(p) over A7(q)") {
    // (y1^3, 4 y2 y1^2 + 2 y1 y2 y1 + y1^2 y2) -> M(2) over A7(8)
    Presentation p = pres({"y1", "y2"}, 3, {"y1^3", "4*y2*y1^2 + 2*y1*y2*y1 + y1^2*y2"});
    HomogeneousPair pair = extract_pair(p);
    CHECK(pair.a_class.tag == QuadTag::A7);
    CHECK(*pair.a_class.q == Scalar(Field::Q(), 8));
    CHECK(pair.m_class.kind == BimodKind::Mp);
    CHECK(*pair.m_class.p == Scalar(Field::Q(), 2));
    CHECK(pair.m_class.m == 0);
}

TEST_CASE("recognizing A/(x) over A1") {
    Presentation p = pres({"y1", "x1"}, 3, {"y1^3", "x1*y1*x1"});
    HomogeneousPair pair = extract_pair(p);
    CHECK(pair.a_class.tag == QuadTag::A1);
    CHECK(pair.m_class.kind == BimodKind::AmodX);
    CHECK(pair.m_class.m == 1);
}

TEST_CASE("recognizing the A0 bimodules") {
    // condition 9 shape: (y1 f, f y1) with f = x1 x2
    Presentation p9 = pres({"x1", "x2", "y1"}, 3, {"y1*x1*x2", "x1*x2*y1"});
    HomogeneousPair pair9 = extract_pair(p9);
    CHECK(pair9.a_class.tag == QuadTag::A0);
    CHECK(pair9.m_class.kind == BimodKind::B1Bimod);
    CHECK(pair9.m_class.m == 2);

    // condition 10 shape: (y1 f, f y2) with f = x1 x2
    Presentation p10 = pres({"x1", "x2", "y1", "y2"}, 3, {"y1*x1*x2", "x1*x2*y2"});
    HomogeneousPair pair10 = extract_pair(p10);
    CHECK(pair10.a_class.tag == QuadTag::A0);
    CHECK(pair10.m_class.kind == BimodKind::B2Bimod);
    CHECK(pair10.m_class.m == 2);

    // condition 11 shape: dim M1 = 0
    Presentation p11 = pres({"x1", "x2", "x3"}, 3, {"x1^2*x2", "x1^2*x3"});
    HomogeneousPair pair11 = extract_pair(p11);
    CHECK(pair11.a_class.tag == QuadTag::A0);
    CHECK(pair11.m_class.kind == BimodKind::TrivialOnly);
    CHECK(pair11.m_class.m == 3);
}

TEST_CASE("sigma twist detection for A4 and A5") {
    Presentation plain = pres({"y1", "y2"}, 4, {"y1^4", "y2^4"});
    CHECK(extract_pair(plain).m_class.kind == BimodKind::JTrivial);
    Presentation twisted = pres({"y1", "y2"}, 4, {"y1*y2*y1*y2", "y2*y1*y2*y1"});
    CHECK(extract_pair(twisted).m_class.kind == BimodKind::JSigmaTwist);
    Presentation odd = pres({"y1", "y2"}, 3, {"y1*y2*y1", "y2*y1*y2"});
    HomogeneousPair po = extract_pair(odd);
    CHECK(po.a_class.tag == QuadTag::A5);
    CHECK(po.m_class.kind == BimodKind::JSigmaTwist);
}

TEST_CASE("tensor dimension law for recognized classes") {
    // B1 + B1 shape: dim (M^k)_1 = 2 for all k
    Presentation p = pres({"y1", "y2"}, 3, {"y1^3", "y2^3"});
    HomogeneousPair pair = extract_pair(p);
    for (int k = 1; k <= 3; ++k) CHECK(tensor_power_degree1(pair.bimod, k) == 2);
    // M(p) shape (B2): also 2 for all k
    Presentation p6 = pres({"y1", "y2"}, 3, {"y1^3", "4*y2*y1^2 + 2*y1*y2*y1 + y1^2*y2"});
    HomogeneousPair pair6 = extract_pair(p6);
    for (int k = 1; k <= 3; ++k) CHECK(tensor_power_degree1(pair6.bimod, k) == 2);
}
