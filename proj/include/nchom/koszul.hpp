#pragma once

#include <array>

#include "nchom/hilbert.hpp"
#include "nchom/moduleclass.hpp"

namespace nchom {

// Internal degree of Ext^i for an s-Koszul algebra.
int chi(int s, int i);

// Extra condition in tensor form: with R the relation span of p inside
// V^(x)s, checks
//   (R (x) V^(s-1)) cap (V (x) sum_i V^i (x) R (x) V^(s-2-i))
//     == (R (x) V cap V (x) R) (x) V^(s-2)
// inside V^(x)(2s-1).
bool extra_condition(const Presentation& p, std::size_t size_guard = 200000);

// Series form: coefficients t^0 .. t^(2s-1) of
//   (1 - m t + (m^s - l0) t^s - (m^(s+1) + l1 - 2 m l0) t^(s+1))
//     * sum_k (m^k t^k + l_k t^(k+s))  - 1
// which must all vanish; l has length s (l_0 .. l_{s-1}).
std::vector<Int> extra_condition_poly(std::size_t m, const std::vector<std::size_t>& l, int s);
bool extra_condition_series(std::size_t m, const std::vector<std::size_t>& l, int s);

// The homogeneous pair of the dual algebra, canonicalized: quadratic class of
// the dual s-Veronese, the recognized bimodule, exact Hilbert series of both,
// and the two relation combinations phi_star matching the canonical A_1 basis.
struct HomogeneousPair {
    QuadraticClass a_class;
    BimoduleClass m_class;
    BimoduleData bimod;  // actions over the canonical generators
    std::array<NcPoly, 2> phi_star;
    RationalSeries hA, hM;
};

// Front half of the classification pipeline (dual -> Veronese -> classify ->
// recognize). Requires exactly two relations.
HomogeneousPair extract_pair(const Presentation& p);

// Exact Hilbert series of the canonical quadratic algebra of a class.
RationalSeries quadratic_hilbert_series(Field f, const QuadraticClass& a_class);
// Exact Hilbert series of the recognized bimodule.
RationalSeries bimodule_hilbert_series(Field f, const QuadraticClass& a_class, const BimoduleClass& m_class,
                                       const RationalSeries& hA);

// Terms K_0..K_3 of the generalized Koszul complex of Lambda restricted to
// internal degrees <= D: d0 = generator row, d1 = relation slices, d2 from the
// left action on the dual bimodule.
struct KoszulComplexSlice {
    int s = 0, D = 0;
    TruncatedGB gb;                       // basis of Lambda, complete to D
    std::vector<NcPoly> d0;               // n entries
    std::vector<std::array<NcPoly, 2>> d1;  // n rows x 2 cols, degree s-1 entries
    std::vector<std::vector<NcPoly>> d2;  // 2 rows x dim M1 cols, degree 1 entries
};

KoszulComplexSlice koszul_complex_slice(const TruncatedGB& gb, const HomogeneousPair& pair, int D);

// Checks dim ker d1 == rank d2 degree by degree; returns the first failing
// internal degree, if any, scanning j <= window.
std::optional<int> exactness_at_term2(const KoszulComplexSlice& slice, int window);

enum class KoszulStatus { CertifiedNotKoszul, VerifiedKoszulUpTo, CertifiedKoszul };

struct KoszulVerdict {
    KoszulStatus status;
    int verified_to = 0;        // window for VerifiedKoszulUpTo
    std::string evidence;       // machine-readable kind
    int failing_degree = -1;    // for CertifiedNotKoszul
    Int offending_coeff = 0;    // candidate-series coefficient at the failure
    std::string certificate;    // for CertifiedKoszul

    std::string str() const;
};

// Full verdict for a two-relation presentation; for other inputs the engine
// falls back to the extra-condition window (enough to certify the duals of
// two-relation algebras as non-Koszul). Defined with the classification
// pipeline.
KoszulVerdict koszulity_verdict(const Presentation& p, int D);

int default_degree_bound(int s);

// Candidate Hilbert series forced by Koszulity for the given pair.
RationalSeries koszul_candidate_series(const HomogeneousPair& pair, int s);

// Interleaved dimensions of the trivial extension grading:
// out[2n] = hA[n], out[2n+1] = hM[n].
Series ext_algebra_dims(const Series& hA, const Series& hM);

// One-relation criterion: f is a power of a linear form, or admits no common
// border factor g with f = g h1 = h2 g and 0 < deg g < deg f.
bool one_relation_koszul(const NcPoly& f);

}  // namespace nchom
