#pragma once

#include "nchom/quadclass.hpp"

namespace nchom {

// Projective parameter (alpha : beta), normalized so the first nonzero
// coordinate is 1.
struct ProjParam {
    Scalar a, b;
    bool operator==(const ProjParam& o) const { return a == o.a && b == o.b; }
    std::string str() const { return "(" + a.str() + ":" + b.str() + ")"; }
};

ProjParam normalize_proj(const Scalar& a, const Scalar& b);

// One indecomposable string summand: Z_n, W_n or B_n(alpha:beta).
struct StringSummand {
    char shape;  // 'Z', 'W', 'B'
    int n;
    std::optional<ProjParam> param;
    std::string str() const;
};

struct ModuleDecomposition {
    std::vector<StringSummand> main;  // non-trivial summands
    std::size_t z1_count = 0;         // copies of Z_1
    std::string str() const;
};

enum class Side { Right, Left };

// Decompose the one-sided module structure (M_0, M_1, generator actions)
// into string summands. Only shapes realizable for the bimodules of
// two-relation algebras are recognized; anything else is UnexpectedShape.
ModuleDecomposition decompose_one_sided(const BimoduleData& b, Side side);

enum class BimodKind {
    JTrivial,     // J(A)[1] (+) k^m
    JSigmaTwist,  // sigma-twisted J(A)[1] (+) k^m, sigma swapping x and y
    Mp,           // M(p) (+) k^m over A7(q), p^s = q
    AmodX,        // A/(x) (+) k^m over A1
    TwistedD,     // nu-twisted two-generator bimodule (+) k^m over A0
    B1Bimod,      // B1 (+) k^m over A0
    B2Bimod,      // B2 (+) k^m over A0
    TrivialOnly,  // k^m over A0
};

const char* bimod_kind_name(BimodKind k);

struct NuData {
    bool jordan = false;
    Scalar l1, l2;  // eigenvalues, sorted; jordan: l1 == l2
    std::string str() const;
};

struct BimoduleClass {
    BimodKind kind;
    std::size_t m = 0;  // trivial summand count
    std::optional<Scalar> p;
    std::optional<Matrix> nu;       // matrix of the twisting automorphism
    std::optional<NuData> nu_eigen;
    std::string str() const;
};

// Recognize the bimodule isomorphism class from its structure constants,
// given the (already canonicalized) quadratic class of the base algebra.
// The BimoduleData must be expressed over the canonical generators.
BimoduleClass match_bimodule(const BimoduleData& b, const QuadraticClass& a_class, int s);

}  // namespace nchom
