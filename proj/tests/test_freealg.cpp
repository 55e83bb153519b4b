#include <doctest.h>

#include <random>

#include "nchom/freealg.hpp"

using namespace nchom;

namespace {

GenSetPtr xy() { return GeneratorSet::make({"x", "y"}); }

NcPoly P(GenSetPtr g, const std::string& s) { return parse_poly(g, Field::Q(), s); }

NcPoly random_poly(GenSetPtr g, std::mt19937& rng, int max_deg, int terms) {
    NcPoly out(g, Field::Q());
    for (int t = 0; t < terms; ++t) {
        Word w;
        int d = (int)(rng() % (std::size_t)(max_deg + 1));
        for (int i = 0; i < d; ++i) w.push_back((int)(rng() % g->size()));
        out.add_term(w, Scalar(Field::Q(), (long)(rng() % 7) - 3));
    }
    return out;
}

}  // namespace

TEST_CASE("word multiplication") {
    auto g = xy();
    Word x{0}, y{1};
    CHECK(word_mul(x, y) == Word{0, 1});
    CHECK(word_mul({}, y) == y);
}

TEST_CASE("noncommutative product") {
    auto g = xy();
    NcPoly a = P(g, "x + y"), b = P(g, "x - y");
    CHECK((a * b) == P(g, "x^2 - x*y + y*x - y^2"));
    // (y1 y2)(y1 y2) = y1 y2 y1 y2
    auto g2 = GeneratorSet::make({"y1", "y2"});
    NcPoly w = parse_poly(g2, Field::Q(), "y1*y2");
    CHECK((w * w) == parse_poly(g2, Field::Q(), "y1*y2*y1*y2"));
}

TEST_CASE("deglex order") {
    auto g = xy();
    CHECK(deglex_cmp(*g, {0}, {0, 1}) < 0);  // shorter first
    auto g2 = GeneratorSet::make({"y1", "y2"});
    CHECK(deglex_cmp(*g2, {0, 1}, {1, 0}) > 0);  // y1 y2 > y2 y1 when y1 > y2
    // tip picking: y1^(s-1) y2 beats every other word of sum p^i y1^i y2 y1^(s-1-i)
    Field q = Field::Q();
    NcPoly f(g2, q);
    int s = 4;
    for (int i = 0; i < s; ++i) {
        Word w;
        for (int k = 0; k < i; ++k) w.push_back(0);
        w.push_back(1);
        for (int k = 0; k < s - 1 - i; ++k) w.push_back(0);
        f.add_term(w, Scalar(q, 1 << (s - 1 - i)));
    }
    CHECK(f.leading_word() == Word{0, 0, 0, 1});
}

TEST_CASE("order compatibility with multiplication") {
    auto g = xy();
    std::mt19937 rng(5);
    for (int it = 0; it < 200; ++it) {
        Word a, b, w;
        for (int i = 0; i < (int)(rng() % 4); ++i) a.push_back((int)(rng() % 2));
        for (int i = 0; i < (int)(rng() % 4); ++i) b.push_back((int)(rng() % 2));
        for (int i = 0; i < (int)(rng() % 3) + 1; ++i) w.push_back((int)(rng() % 2));
        int c = deglex_cmp(*g, a, b);
        if (c == 0) continue;
        CHECK(deglex_cmp(*g, word_mul(w, a), word_mul(w, b)) == c);
        CHECK(deglex_cmp(*g, word_mul(a, w), word_mul(b, w)) == c);
    }
}

TEST_CASE("product is associative and distributive") {
    auto g = xy();
    std::mt19937 rng(9);
    for (int it = 0; it < 30; ++it) {
        NcPoly a = random_poly(g, rng, 2, 3), b = random_poly(g, rng, 2, 3), c = random_poly(g, rng, 2, 3);
        CHECK(((a * b) * c) == (a * (b * c)));
        CHECK((a * (b + c)) == (a * b + a * c));
    }
}

TEST_CASE("parse, print, parse is the identity") {
    auto g = GeneratorSet::make({"y1", "y2", "x1"});
    std::mt19937 rng(13);
    for (int it = 0; it < 40; ++it) {
        NcPoly a = random_poly(g, rng, 4, 5);
        if (a.is_zero()) continue;
        NcPoly b = parse_poly(g, Field::Q(), a.str());
        CHECK(a == b);
    }
    // rational coefficients
    NcPoly c = parse_poly(g, Field::Q(), "1/2*y1^2 - 3*y2*x1 + x1");
    CHECK(parse_poly(g, Field::Q(), c.str()) == c);
}

TEST_CASE("component matrix") {
    auto g = GeneratorSet::make({"y1", "y2"});
    Field q = Field::Q();
    NcPoly a = parse_poly(g, q, "y1^3"), b = parse_poly(g, q, "y2^3");
    Matrix m = component_matrix({a, b}, 3);
    CHECK(m.rows() == 2);
    CHECK(m.cols() == 8);
    CHECK(rank(m) == 2);
    // dependent rows drop rank
    NcPoly c = a + b;
    CHECK(rank(component_matrix({a, b, c}, 3)) == 2);
    // x^2, xy - q yx, q xy - q^2 yx has rank 2
    auto g2 = xy();
    NcPoly r1 = P(g2, "x^2"), r2 = P(g2, "x*y - 2*y*x"), r3 = P(g2, "2*x*y - 4*y*x");
    CHECK(rank(component_matrix({r1, r2, r3}, 2)) == 2);
    CHECK_THROWS_AS(component_matrix({r1, P(g2, "x^3")}, 2), Error);
}

TEST_CASE("presentation validation") {
    auto g = xy();
    Field q = Field::Q();
    CHECK_THROWS_AS(Presentation(g, q, 2, {P(g, "x^2"), P(g, "2*x^2")}), Error);
    CHECK_THROWS_AS(Presentation(g, q, 2, {P(g, "x^2 + x")}), Error);
    Presentation ok(g, q, 2, {P(g, "x^2"), P(g, "x*y")});
    CHECK(ok.relations.size() == 2);
}

TEST_CASE("word index round trip") {
    auto g = GeneratorSet::make({"a", "b", "c"}, {"c", "a", "b"});
    for (std::size_t i = 0; i < 27; ++i) {
        Word w = word_from_index(*g, 3, i);
        CHECK(word_index(*g, w) == i);
    }
    // index 0 is the largest word: c c c under this order
    CHECK(word_from_index(*g, 3, 0) == Word{2, 2, 2});
}
