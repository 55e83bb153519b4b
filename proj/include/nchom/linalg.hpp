#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "nchom/field.hpp"

namespace nchom {

// Sparse row: (column, value) pairs sorted by column, no zero values.
using SparseRow = std::vector<std::pair<std::size_t, Scalar>>;

SparseRow row_axpy(const SparseRow& a, const Scalar& c, const SparseRow& b);  // a + c*b
SparseRow row_scale(const SparseRow& a, const Scalar& c);

class Matrix {
public:
    Matrix() = default;
    Matrix(Field f, std::size_t rows, std::size_t cols) : field_(f), rows_(rows), cols_(cols), data_(rows) {}
    static Matrix from_rows(Field f, std::size_t cols, std::vector<SparseRow> rows);
    static Matrix identity(Field f, std::size_t n);

    Field field() const { return field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const SparseRow& row(std::size_t i) const { return data_[i]; }
    SparseRow& row(std::size_t i) { return data_[i]; }

    Scalar at(std::size_t r, std::size_t c) const;
    void set(std::size_t r, std::size_t c, const Scalar& v);

    std::vector<Scalar> apply(const std::vector<Scalar>& v) const;  // M*v
    Matrix mul(const Matrix& o) const;
    Matrix transpose() const;

    bool operator==(const Matrix& o) const;

private:
    Field field_{};
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<SparseRow> data_;
};

// Incrementally maintained reduced row echelon form. Rows are kept monic,
// fully back-substituted, indexed by pivot column.
class RrefBuilder {
public:
    RrefBuilder(Field f, std::size_t cols) : field_(f), cols_(cols) {}

    bool add_row(SparseRow r);                 // true if the rank grew
    SparseRow reduce(SparseRow r) const;       // remainder of r mod current rows
    // like reduce(), but also reports the elimination coefficients:
    // r = sum coeff[i] * row_i + remainder
    SparseRow reduce_tracked(SparseRow r, std::vector<std::pair<std::size_t, Scalar>>& coeffs) const;

    std::size_t rank() const { return rows_.size(); }
    std::size_t cols() const { return cols_; }
    Field field() const { return field_; }
    const std::map<std::size_t, std::size_t>& pivots() const { return pivot_of_col_; }
    const std::vector<SparseRow>& rows() const { return rows_; }

    // Rows sorted by pivot column; the unique RREF basis of the row space.
    std::vector<SparseRow> echelon_rows() const;

private:
    Field field_;
    std::size_t cols_;
    std::vector<SparseRow> rows_;
    std::map<std::size_t, std::size_t> pivot_of_col_;
};

struct RrefResult {
    Matrix reduced;   // same shape as input, pivot rows first, zero rows last
    std::size_t rank;
};

RrefResult rref(const Matrix& m);
std::size_t rank(const Matrix& m);

class Subspace {
public:
    Subspace() = default;
    // Basis rows are reduced to RREF on construction.
    Subspace(Field f, std::size_t ambient, const std::vector<SparseRow>& spanning_rows);

    static Subspace zero(Field f, std::size_t ambient) { return Subspace(f, ambient, {}); }
    static Subspace full(Field f, std::size_t ambient);

    Field field() const { return field_; }
    std::size_t ambient() const { return ambient_; }
    std::size_t dim() const { return basis_.size(); }
    const std::vector<SparseRow>& basis() const { return basis_; }

    bool contains(const SparseRow& v) const;
    bool operator==(const Subspace& o) const;

private:
    Field field_{};
    std::size_t ambient_ = 0;
    std::vector<SparseRow> basis_;  // RREF rows
};

Subspace kernel(const Matrix& m);
Subspace intersect(const Subspace& a, const Subspace& b);
Subspace sum(const Subspace& a, const Subspace& b);

// Dense F_p elimination for bulk rank work (oracle-scale row counts).
class FpDenseRref {
public:
    FpDenseRref(long p, std::size_t cols) : p_(p), cols_(cols) {}
    bool add_row(std::vector<long> r);
    std::size_t rank() const { return rows_.size(); }

private:
    long p_;
    std::size_t cols_;
    std::vector<std::vector<long>> rows_;
    std::map<std::size_t, std::size_t> pivot_of_col_;
};

}  // namespace nchom
