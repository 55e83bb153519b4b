#pragma once

#include <optional>

#include "nchom/duality.hpp"

namespace nchom {

// Isomorphism classes of quadratic algebras on two generators.
enum class QuadTag { Free, Abar1, Abar2, Abar3, A0, A1, A2, A3, A4, A5, A6, A7, A8, A9 };

const char* quad_tag_name(QuadTag t);

// Canonical relation span of the class inside the 4-dim degree-2 word space,
// coordinates ordered (xx, xy, yx, yy).
Subspace canonical_relation_space(Field f, QuadTag t, const std::optional<Scalar>& q);

// Substitution by the 2x2 matrix w (generator j maps to sum_i w(i,j) e_i)
// applied to a degree-2 coefficient vector / span.
SparseRow transform_quadratic(const Matrix& w, const SparseRow& rel);
Subspace transform_quadratic(const Matrix& w, const Subspace& rels);

struct QuadraticClass {
    QuadTag tag;
    std::optional<Scalar> q;  // Abar2, A2, A7, A9 carry a parameter
    Matrix witness;           // transform_quadratic(witness, input) == canonical span

    std::string name() const;
};

// Classify a two-generator quadratic algebra up to isomorphism; the returned
// witness maps the input relation span exactly onto the canonical one.
QuadraticClass classify_quadratic(const QuadraticPresentation& qp);

bool is_isomorphic(const QuadraticPresentation& a, const QuadraticPresentation& b);

// Smallest root of a*t^2 + b*t + c in the field, if any.
std::optional<Scalar> solve_quadratic(Field f, const Scalar& a, const Scalar& b, const Scalar& c);

Matrix inverse2x2(const Matrix& m);

}  // namespace nchom
