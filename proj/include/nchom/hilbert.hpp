#pragma once

#include "nchom/groebner.hpp"

namespace nchom {

using Int = mpz_class;

// Integer power series truncated at degree trunc().
struct Series {
    std::vector<Int> c;

    Series() = default;
    explicit Series(std::vector<Int> coeffs) : c(std::move(coeffs)) {}
    static Series constant(const Int& v, int trunc);

    int trunc() const { return (int)c.size() - 1; }
    const Int& at(int d) const { return c[(std::size_t)d]; }
    bool operator==(const Series& o) const { return c == o.c; }
    std::string str() const;
};

// num(t)/den(t) with integer polynomial coefficients, constant term first.
struct RationalSeries {
    std::vector<Int> num, den;
    std::string str() const;
};

std::vector<Int> poly_mul_z(const std::vector<Int>& a, const std::vector<Int>& b);
std::vector<Int> poly_sub_z(const std::vector<Int>& a, const std::vector<Int>& b);
bool poly_eq_z(const std::vector<Int>& a, const std::vector<Int>& b);

Series expand_rational(const RationalSeries& r, int D);
Series series_mul(const Series& a, const Series& b);
Series series_inverse(const Series& a);
Series series_compose_power(const Series& a, int s, int D);  // a(t^s) truncated at D
Series series_shift(const Series& a, int k);                 // t^k * a, same truncation

// Number of degree-d words over n_gens letters avoiding every tip as a factor.
Series count_normal_words(const std::vector<Word>& tips, int n_gens, int D);

// Exact rational form of the same counting series, computed from the factor
// automaton's characteristic polynomial. Valid for all degrees.
RationalSeries normal_words_rational(const std::vector<Word>& tips, int n_gens);

// Graded dimensions of T V/(relations) by straight linear algebra on word
// coordinates; independent of any Groebner machinery.
Series ideal_dims_bruteforce(const Presentation& p, int D, std::size_t size_guard = 2000000);

// Graded dimensions from a truncated GB (coeff d valid for d <= complete_to).
Series gb_dims(const TruncatedGB& gb, int D);

// (hA(t^s) - t*hM(t^s)) * hL == 1 up to the common truncation.
bool koszul_series_identity(const Series& hA, const Series& hM, const Series& hL, int s);

}  // namespace nchom
