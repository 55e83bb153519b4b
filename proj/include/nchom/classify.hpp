#pragma once

#include "nchom/koszul.hpp"
#include "nchom/potential.hpp"

namespace nchom {

// Outcome of the eleven-way structural classification of a two-relation
// presentation, with the recognized invariants and the Koszulity verdict.
struct ClassificationOutcome {
    int condition = 0;  // 1..11
    QuadraticClass a_class;
    BimoduleClass m_class;
    int s = 0;
    std::size_t n_gens = 0;
    std::size_t m = 0;                 // trivial-summand count
    std::optional<Scalar> p;           // condition 6
    std::optional<NuData> nu;          // condition 8
    std::optional<char> potential_case;  // 'a'..'d' for condition 8
    std::optional<KoszulVerdict> koszul;

    std::string str() const;
};

ClassificationOutcome classify_two_relations(const Presentation& p, int D, bool with_verdict = true);

struct ConditionParams {
    int s = 3;
    std::size_t m = 0;
    std::optional<Scalar> p;                          // condition 6
    std::optional<std::pair<Scalar, Scalar>> diag;    // condition 8, diagonal twist
    std::optional<Scalar> jordan;                     // condition 8, jordan twist
    std::optional<std::string> f;                     // condition 7 relation override
};

// Canonical presentations for Conditions 1..8.
Presentation construct_condition_algebra(Field field, int condition, const ConditionParams& params);

// 2 m^2 - 2 l1 m + l2 for the dual data of a two-relation presentation; a
// positive value certifies that the dual is not s-Koszul.
Int nkoz_coefficient(const Presentation& p);

}  // namespace nchom
