#pragma once

#include "nchom/freealg.hpp"

namespace nchom {

// Homogeneous tensor w of degree N on a two-dimensional space, fixed by the
// sigma-twisted rotation phi_sigma.
struct TwistedPotential {
    GenSetPtr gens;
    NcPoly w;
    Matrix sigma;  // sigma.at(i, j) = coefficient of gen_i in sigma(gen_j)
};

// phi_sigma(v1 (x) ... (x) vN) = sigma(vN) (x) v1 (x) ... (x) v_{N-1}
NcPoly phi_sigma(const NcPoly& w, const Matrix& sigma);
bool is_twisted_potential(const NcPoly& w, const Matrix& sigma);

// Left slices (f (x) 1)(w) for f ranging over the dual basis.
std::vector<NcPoly> potential_slices(const NcPoly& w);
Subspace derived_relations(const NcPoly& w);
Presentation build_potential_algebra(const NcPoly& w);

// True iff the slice space is two-dimensional and contains no pair of
// alternating words (u1 u2 u1 ...), (u2 u1 u2 ...) of degree N-1.
bool potential_exclusion_check(const NcPoly& w);

// Diagonal twist nu = diag(l1, l2). Legal parameters: some 2<=k<=s-1 with
// l1^k l2^(s+1-k) = 1, or l1 l2^s = l1^s l2 = 1, or {l1, l2} = {1, s-th root}.
TwistedPotential gen_potential_diag(Field f, const Scalar& l1, const Scalar& l2, int s);

// Jordan twist nu(y1) = lam y1, nu(y2) = lam (y1 + y2). Legal: lam^(s+1) = 1
// for s > 3, lam = +-1 for s = 3.
TwistedPotential gen_potential_jordan(Field f, const Scalar& lam, int s);

Presentation free_product(const Presentation& p1, const Presentation& p2);

}  // namespace nchom
