#include "nchom/quadclass.hpp"

#include <array>
#include <sstream>

namespace nchom {

namespace {

constexpr std::size_t XX = 0, XY = 1, YX = 2, YY = 3;

std::array<Scalar, 4> dense4(Field f, const SparseRow& r) {
    std::array<Scalar, 4> out{Scalar::zero(f), Scalar::zero(f), Scalar::zero(f), Scalar::zero(f)};
    for (const auto& [col, v] : r) out[col] = v;
    return out;
}

SparseRow sparse4(const std::array<Scalar, 4>& d) {
    SparseRow r;
    for (std::size_t i = 0; i < 4; ++i)
        if (!d[i].is_zero()) r.emplace_back(i, d[i]);
    return r;
}

Matrix mat2(Field f, const Scalar& a, const Scalar& b, const Scalar& c, const Scalar& d) {
    Matrix m(f, 2, 2);
    m.set(0, 0, a);
    m.set(0, 1, b);
    m.set(1, 0, c);
    m.set(1, 1, d);
    return m;
}

Matrix ident2(Field f) { return Matrix::identity(f, 2); }
Matrix swap2(Field f) { return mat2(f, Scalar::zero(f), Scalar::one(f), Scalar::one(f), Scalar::zero(f)); }

}  // namespace

const char* quad_tag_name(QuadTag t) {
    switch (t) {
        case QuadTag::Free: return "free";
        case QuadTag::Abar1: return "Abar1";
        case QuadTag::Abar2: return "Abar2";
        case QuadTag::Abar3: return "Abar3";
        case QuadTag::A0: return "A0";
        case QuadTag::A1: return "A1";
        case QuadTag::A2: return "A2";
        case QuadTag::A3: return "A3";
        case QuadTag::A4: return "A4";
        case QuadTag::A5: return "A5";
        case QuadTag::A6: return "A6";
        case QuadTag::A7: return "A7";
        case QuadTag::A8: return "A8";
        case QuadTag::A9: return "A9";
    }
    return "?";
}

std::string QuadraticClass::name() const {
    std::string n = quad_tag_name(tag);
    if (q) n += "(" + q->str() + ")";
    return n;
}

Subspace canonical_relation_space(Field f, QuadTag t, const std::optional<Scalar>& q) {
    Scalar one = Scalar::one(f);
    auto span = [&](std::vector<SparseRow> rows) { return Subspace(f, 4, rows); };
    switch (t) {
        case QuadTag::Free: return span({});
        case QuadTag::Abar1: return span({{{XX, one}}});
        case QuadTag::Abar2: return span({{{XY, one}, {YX, *q}}});
        case QuadTag::Abar3: return span({{{XX, one}, {XY, one}, {YX, -one}}});
        case QuadTag::A0: return Subspace::full(f, 4);
        case QuadTag::A1: return span({{{XX, one}}, {{XY, one}}, {{YX, one}}});
        case QuadTag::A2: return span({{{XX, one}}, {{YY, one}}, {{XY, one}, {YX, -*q}}});
        case QuadTag::A3: return span({{{XX, one}}, {{XY, one}, {YX, one}}, {{XY, one}, {YY, one}}});
        case QuadTag::A4: return span({{{XY, one}}, {{YX, one}}});
        case QuadTag::A5: return span({{{XX, one}}, {{YY, one}}});
        case QuadTag::A6: return span({{{XX, one}}, {{YX, one}}});
        case QuadTag::A7: return span({{{XX, one}}, {{XY, one}, {YX, -*q}}});
        case QuadTag::A8: return span({{{XY, one}}, {{XX, one}, {YY, -one}}});
        case QuadTag::A9: return span({{{XY, one}}, {{XX, one}, {YX, -one}, {YY, -*q}}});
    }
    return span({});
}

SparseRow transform_quadratic(const Matrix& w, const SparseRow& rel) {
    Field f = w.field();
    auto r = dense4(f, rel);
    std::array<Scalar, 4> out{Scalar::zero(f), Scalar::zero(f), Scalar::zero(f), Scalar::zero(f)};
    for (std::size_t i1 = 0; i1 < 2; ++i1)
        for (std::size_t i2 = 0; i2 < 2; ++i2) {
            Scalar acc = Scalar::zero(f);
            for (std::size_t j1 = 0; j1 < 2; ++j1)
                for (std::size_t j2 = 0; j2 < 2; ++j2) acc += w.at(i1, j1) * w.at(i2, j2) * r[j1 * 2 + j2];
            out[i1 * 2 + i2] = acc;
        }
    return sparse4(out);
}

Subspace transform_quadratic(const Matrix& w, const Subspace& rels) {
    std::vector<SparseRow> rows;
    for (const auto& r : rels.basis()) rows.push_back(transform_quadratic(w, r));
    return Subspace(rels.field(), 4, rows);
}

std::optional<Scalar> solve_quadratic(Field f, const Scalar& a, const Scalar& b, const Scalar& c) {
    if (a.is_zero()) {
        if (b.is_zero()) return c.is_zero() ? std::optional<Scalar>(Scalar::zero(f)) : std::nullopt;
        return -c / b;
    }
    if (!f.rational()) {
        for (long t = 0; t < f.p; ++t) {
            Scalar s(f, t);
            if ((a * s * s + b * s + c).is_zero()) return s;
        }
        return std::nullopt;
    }
    Scalar disc = b * b - Scalar(f, 4) * a * c;
    auto root = disc.sqrt();
    if (!root) return std::nullopt;
    Scalar two_a = Scalar(f, 2) * a;
    Scalar t1 = (-b + *root) / two_a, t2 = (-b - *root) / two_a;
    return t1.cmp(t2) <= 0 ? t1 : t2;
}

Matrix inverse2x2(const Matrix& m) {
    Field f = m.field();
    Scalar det = m.at(0, 0) * m.at(1, 1) - m.at(0, 1) * m.at(1, 0);
    if (det.is_zero()) throw Error(ErrorKind::Internal, "singular change of basis");
    Scalar inv = det.inverse();
    return mat2(f, m.at(1, 1) * inv, -m.at(0, 1) * inv, -m.at(1, 0) * inv, m.at(0, 0) * inv);
}

namespace {

struct Dim1Result {
    QuadTag tag;
    std::optional<Scalar> q;
    Matrix h;  // transform_quadratic(h, input) proportional to the standard form
};

// standard forms: Abar1 = x^2, Abar2(q) = xy + q yx, Abar3 = x^2 + xy - yx
Dim1Result classify_dim1(Field f, const SparseRow& v) {
    Scalar one = Scalar::one(f), zero = Scalar::zero(f);
    Matrix h = ident2(f);
    auto cur = [&]() { return dense4(f, transform_quadratic(h, v)); };
    auto r = cur();
    if (r[XX].is_zero() && !r[YY].is_zero()) {
        h = swap2(f).mul(h);
        r = cur();
    }
    if (!r[XX].is_zero()) {
        if (!r[YY].is_zero()) {
            auto t = solve_quadratic(f, r[XX], r[XY] + r[YX], r[YY]);
            if (!t) {
                std::ostringstream mp;
                mp << "(" << r[XX].str() << ")*t^2 + (" << (r[XY] + r[YX]).str() << ")*t + ("
                   << r[YY].str() << ")";
                throw NeedsFieldExtension(mp.str(), "one-relation normal form");
            }
            h = mat2(f, one, zero, *t, one).mul(h);  // x -> x + t y
            r = cur();
        }
        Scalar a = r[XX], b = r[XY], c = r[YX];
        if (!(b + c).is_zero()) {
            h = mat2(f, one, -(a / (b + c)), zero, one).mul(h);  // y -> y - a/(b+c) x
            r = cur();
            a = r[XX];
            b = r[XY];
            c = r[YX];
        }
        if ((b + c).is_zero()) {
            if (b.is_zero()) return {QuadTag::Abar1, std::nullopt, h};
            if (a.is_zero()) return {QuadTag::Abar2, Scalar(f, -1), h};
            h = mat2(f, one, zero, zero, a / b).mul(h);  // scale y: x^2 + xy - yx
            return {QuadTag::Abar3, std::nullopt, h};
        }
    }
    r = cur();
    Scalar b = r[XY], c = r[YX];
    if (b.is_zero()) {
        h = swap2(f).mul(h);
        std::swap(b, c);
    }
    return {QuadTag::Abar2, c / b, h};
}

void canonicalize_pair(Field f, std::optional<Scalar>& q, Matrix& h) {
    if (!q || q->is_zero()) return;
    Scalar inv = q->inverse();
    if (inv.cmp(*q) < 0) {
        q = inv;
        h = swap2(f).mul(h);
    }
}

// first pencil member that splits as a product of two linear forms:
// a x^2 + b xy + c yx + d y^2 splits iff det [[a,b],[c,d]] = 0
SparseRow decomposable_member(Field f, const SparseRow& r1, const SparseRow& r2) {
    auto A = dense4(f, r1), B = dense4(f, r2);
    Scalar alpha = A[XX] * A[YY] - A[XY] * A[YX];
    Scalar gamma = B[XX] * B[YY] - B[XY] * B[YX];
    Scalar beta = A[XX] * B[YY] + B[XX] * A[YY] - A[XY] * B[YX] - B[XY] * A[YX];
    if (alpha.is_zero()) return r1;
    auto tau = solve_quadratic(f, alpha, beta, gamma);  // member tau*r1 + r2
    if (!tau) {
        std::ostringstream mp;
        mp << "(" << alpha.str() << ")*t^2 + (" << beta.str() << ")*t + (" << gamma.str() << ")";
        throw NeedsFieldExtension(mp.str(), "finding a decomposable relation");
    }
    return row_axpy(r2, *tau, r1);
}

std::pair<std::array<Scalar, 2>, std::array<Scalar, 2>> split_decomposable(Field f, const SparseRow& rel) {
    auto r = dense4(f, rel);
    std::array<Scalar, 2> rx{r[XX], r[XY]}, ry{r[YX], r[YY]};
    bool rx0 = rx[0].is_zero() && rx[1].is_zero();
    bool ry0 = ry[0].is_zero() && ry[1].is_zero();
    if (rx0) return {{Scalar::zero(f), Scalar::one(f)}, ry};
    if (ry0) return {{Scalar::one(f), Scalar::zero(f)}, rx};
    Scalar lambda = rx[0].is_zero() ? ry[1] / rx[1] : ry[0] / rx[0];
    return {{Scalar::one(f), lambda}, rx};  // (x + lambda y)(rx)
}

Matrix send_to_x(Field f, const std::array<Scalar, 2>& u) {
    std::array<Scalar, 2> w = u[1].is_zero() ? std::array<Scalar, 2>{Scalar::zero(f), Scalar::one(f)}
                                             : std::array<Scalar, 2>{Scalar::one(f), Scalar::zero(f)};
    return inverse2x2(mat2(f, u[0], w[0], u[1], w[1]));
}

Matrix send_to_xy(Field f, const std::array<Scalar, 2>& u, const std::array<Scalar, 2>& v) {
    return inverse2x2(mat2(f, u[0], v[0], u[1], v[1]));
}

// member of the transformed span with zero xy coordinate (exists and is
// unique up to scale once xy lies in the span)
std::array<Scalar, 4> complement_of_xy(Field f, const Subspace& img) {
    for (const auto& row : img.basis()) {
        auto d4 = dense4(f, row);
        if (d4[XY].is_zero()) return d4;
    }
    throw Error(ErrorKind::Internal, "expected a member avoiding xy");
}

}  // namespace

QuadraticClass classify_quadratic(const QuadraticPresentation& qp) {
    if (qp.n_gens != 2)
        throw Error(ErrorKind::IllegalParams, "quadratic classification requires two generators");
    Field f = qp.field;
    const Subspace& R = qp.relation_space;
    Scalar one = Scalar::one(f), zero = Scalar::zero(f);

    auto finish = [&](QuadTag tag, std::optional<Scalar> q, const Matrix& w) {
        Subspace img = transform_quadratic(w, R);
        if (!(img == canonical_relation_space(f, tag, q)))
            throw Error(ErrorKind::Internal, "classification witness check failed");
        return QuadraticClass{tag, q, w};
    };

    // shared tail: the span transform_quadratic(w, R) contains xy exactly
    auto xy_branch = [&](Matrix w) -> QuadraticClass {
        while (true) {
            auto o = complement_of_xy(f, transform_quadratic(w, R));
            Scalar a = o[XX], c = o[YX], d = o[YY];
            if (a.is_zero() && !c.is_zero() && !d.is_zero()) {
                // x -> second slot, c x + d y -> first: reach a nonzero xx term
                w = inverse2x2(mat2(f, zero, c, one, d)).mul(w);
                continue;
            }
            if (a.is_zero() && d.is_zero()) return finish(QuadTag::A4, std::nullopt, w);
            if (a.is_zero()) return finish(QuadTag::A6, std::nullopt, swap2(f).mul(w));  // {xy, y^2}
            c = c / a;
            d = d / a;
            if (c.is_zero() && d.is_zero()) return finish(QuadTag::A7, Scalar::zero(f), w);  // {x^2, xy}
            if (c.is_zero()) {
                auto rho = (-(d.inverse())).sqrt();
                if (!rho)
                    throw NeedsFieldExtension("t^2 - (" + (-(d.inverse())).str() + ")",
                                              "scaling to the split-square form");
                return finish(QuadTag::A8, std::nullopt, mat2(f, one, zero, zero, *rho).mul(w));
            }
            Scalar beta = -(c.inverse());
            Scalar qv = -(d * beta * beta);
            return finish(QuadTag::A9, qv, mat2(f, one, zero, zero, beta).mul(w));
        }
    };

    switch (R.dim()) {
        case 0: return finish(QuadTag::Free, std::nullopt, ident2(f));
        case 4: return finish(QuadTag::A0, std::nullopt, ident2(f));
        case 1: {
            auto d1 = classify_dim1(f, R.basis()[0]);
            canonicalize_pair(f, d1.q, d1.h);
            return finish(d1.tag, d1.q, d1.h);
        }
        case 3: {
            // classify the orthogonal complement; complement targets are
            // span(y^2), span(q xy + yx), span(xy - yx - y^2) for A1, A2(q), A3
            Matrix pairing = Matrix::from_rows(f, 4, R.basis());
            Subspace comp = kernel(pairing);
            auto d1 = classify_dim1(f, comp.basis()[0]);
            QuadTag tag;
            std::optional<Scalar> q;
            Matrix p = ident2(f);
            switch (d1.tag) {
                case QuadTag::Abar1:
                    tag = QuadTag::A1;
                    p = swap2(f);
                    break;
                case QuadTag::Abar3:
                    tag = QuadTag::A3;
                    p = swap2(f);
                    break;
                case QuadTag::Abar2:
                    tag = QuadTag::A2;
                    if (d1.q->is_zero()) {
                        q = Scalar::zero(f);
                        p = swap2(f);
                    } else {
                        q = d1.q->inverse();
                    }
                    break;
                default: throw Error(ErrorKind::Internal, "unexpected complement class");
            }
            Matrix h = p.mul(d1.h);
            if (q && !q->is_zero()) {
                Scalar inv = q->inverse();
                if (inv.cmp(*q) < 0) {
                    q = inv;
                    h = swap2(f).mul(h);
                }
            }
            return finish(tag, q, inverse2x2(h.transpose()));
        }
        case 2: break;
        default: throw Error(ErrorKind::Internal, "impossible relation dimension");
    }

    // dim 2: move a decomposable member onto x^2 or xy
    SparseRow dec = decomposable_member(f, R.basis()[0], R.basis()[1]);
    auto [u, v] = split_decomposable(f, dec);
    Scalar det_uv = u[0] * v[1] - u[1] * v[0];

    if (det_uv.is_zero()) {
        // member ~ (linear)^2: send it to x^2
        Matrix w = send_to_x(f, u);
        // second member of the span, with its xx coordinate eliminated
        Subspace img = transform_quadratic(w, R);
        std::array<Scalar, 4> other{zero, zero, zero, zero};
        for (const auto& row : img.basis()) {
            auto d4 = dense4(f, row);
            if (d4[XX].is_zero()) other = d4;
        }
        Scalar b = other[XY], c = other[YX], d = other[YY];
        if (d.is_zero()) {
            if (b.is_zero()) return finish(QuadTag::A6, std::nullopt, w);  // {x^2, yx}
            return finish(QuadTag::A7, -(c / b), w);                       // {x^2, xy - q yx}
        }
        b = b / d;
        c = c / d;
        if (b == c) {
            // y -> y - b x turns the second member into y^2
            return finish(QuadTag::A5, std::nullopt, mat2(f, one, -b, zero, one).mul(w));
        }
        // (y + b x)(y + c x) lies in the span: move it onto xy
        return xy_branch(send_to_xy(f, {b, one}, {c, one}).mul(w));
    }
    return xy_branch(send_to_xy(f, u, v));
}

bool is_isomorphic(const QuadraticPresentation& a, const QuadraticPresentation& b) {
    QuadraticClass ca = classify_quadratic(a), cb = classify_quadratic(b);
    if (ca.tag != cb.tag) return false;
    if (ca.q.has_value() != cb.q.has_value()) return false;
    if (ca.q && !(*ca.q == *cb.q)) return false;
    return true;
}

}  // namespace nchom
