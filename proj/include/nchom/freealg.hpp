#pragma once

#include <memory>
#include <string>
#include <vector>

#include "nchom/linalg.hpp"

namespace nchom {

// Generators with a total order used for monomial comparison. order_rank[i]
// is the position of generator i in the descending order: rank 0 = largest.
struct GeneratorSet {
    std::vector<std::string> names;
    std::vector<int> order_rank;

    static std::shared_ptr<const GeneratorSet> make(std::vector<std::string> names,
                                                    std::vector<std::string> order = {});
    std::size_t size() const { return names.size(); }
    int index_of(const std::string& name) const;
    bool operator==(const GeneratorSet& o) const = default;
};

using GenSetPtr = std::shared_ptr<const GeneratorSet>;

// A word is a sequence of generator indices; degree = length.
using Word = std::vector<int>;

Word word_mul(const Word& a, const Word& b);
bool word_contains_factor(const Word& w, const Word& f, std::size_t* pos = nullptr);

// Degree-lexicographic comparison: shorter first, ties broken by the
// configured generator order. Returns <0, 0, >0 for a<b, a==b, a>b.
int deglex_cmp(const GeneratorSet& gens, const Word& a, const Word& b);

// Rank of a word among all words of its degree, in decreasing deglex order
// position 0 = largest word. Used as a canonical column index.
std::size_t word_index(const GeneratorSet& gens, const Word& w);
Word word_from_index(const GeneratorSet& gens, std::size_t degree, std::size_t index);

class NcPoly {
public:
    NcPoly() = default;
    NcPoly(GenSetPtr gens, Field f) : gens_(std::move(gens)), field_(f) {}

    static NcPoly zero(GenSetPtr gens, Field f) { return NcPoly(std::move(gens), f); }
    static NcPoly monomial(GenSetPtr gens, const Scalar& c, Word w);

    const GenSetPtr& gens() const { return gens_; }
    Field field() const { return field_; }
    bool is_zero() const { return terms_.empty(); }
    // terms in decreasing deglex order, leading term first
    const std::vector<std::pair<Word, Scalar>>& terms() const { return terms_; }

    const Word& leading_word() const { return terms_.front().first; }
    const Scalar& leading_coeff() const { return terms_.front().second; }

    bool homogeneous() const;
    int degree() const;  // degree of leading term; -1 for zero

    NcPoly operator+(const NcPoly& o) const;
    NcPoly operator-(const NcPoly& o) const;
    NcPoly operator*(const NcPoly& o) const;
    NcPoly operator-() const;
    NcPoly scaled(const Scalar& c) const;
    NcPoly monic() const;

    // w1 * this * w2
    NcPoly framed(const Word& w1, const Word& w2) const;

    Scalar coeff(const Word& w) const;
    void add_term(const Word& w, const Scalar& c);

    bool operator==(const NcPoly& o) const { return terms_ == o.terms_; }

    std::string str() const;

private:
    void check_compatible(const NcPoly& o) const;
    GenSetPtr gens_;
    Field field_{};
    std::vector<std::pair<Word, Scalar>> terms_;
};

// T_k V / (relations), relations homogeneous of common degree s and linearly
// independent; both properties are checked at construction.
struct Presentation {
    GenSetPtr gens;
    Field field{};
    int s = 0;
    std::vector<NcPoly> relations;

    Presentation() = default;
    Presentation(GenSetPtr g, Field f, int degree_s, std::vector<NcPoly> rels, bool validate = true);

    std::size_t n_gens() const { return gens->size(); }
    std::string str() const;
};

// Coefficient rows of homogeneous polynomials over the canonical word basis
// of the given degree.
Matrix component_matrix(const std::vector<NcPoly>& polys, int d);
SparseRow poly_to_row(const NcPoly& p, int d);
NcPoly poly_from_row(GenSetPtr gens, Field f, int d, const SparseRow& row);

// Text grammar:
//   poly  := ['-'] term (('+'|'-') term)*
//   term  := coeff ['*' word] | word
//   word  := factor ('*' factor)*
//   factor:= gen ['^' int]
//   coeff := int ['/' int]
NcPoly parse_poly(GenSetPtr gens, Field f, const std::string& text);

}  // namespace nchom
