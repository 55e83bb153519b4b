#include "nchom/linalg.hpp"

#include <algorithm>

namespace nchom {

SparseRow row_axpy(const SparseRow& a, const Scalar& c, const SparseRow& b) {
    SparseRow out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
            out.push_back(a[i++]);
        } else if (i == a.size() || b[j].first < a[i].first) {
            Scalar v = c * b[j].second;
            if (!v.is_zero()) out.emplace_back(b[j].first, v);
            ++j;
        } else {
            Scalar v = a[i].second + c * b[j].second;
            if (!v.is_zero()) out.emplace_back(a[i].first, v);
            ++i, ++j;
        }
    }
    return out;
}

SparseRow row_scale(const SparseRow& a, const Scalar& c) {
    if (c.is_zero()) return {};
    SparseRow out = a;
    for (auto& [col, v] : out) v = v * c;
    return out;
}

Matrix Matrix::from_rows(Field f, std::size_t cols, std::vector<SparseRow> rows) {
    Matrix m(f, rows.size(), cols);
    m.data_ = std::move(rows);
    return m;
}

Matrix Matrix::identity(Field f, std::size_t n) {
    Matrix m(f, n, n);
    for (std::size_t i = 0; i < n; ++i) m.data_[i] = {{i, Scalar::one(f)}};
    return m;
}

Scalar Matrix::at(std::size_t r, std::size_t c) const {
    for (const auto& [col, v] : data_[r])
        if (col == c) return v;
    return Scalar::zero(field_);
}

void Matrix::set(std::size_t r, std::size_t c, const Scalar& v) {
    auto& row = data_[r];
    auto it = std::lower_bound(row.begin(), row.end(), c,
                               [](const auto& e, std::size_t col) { return e.first < col; });
    if (it != row.end() && it->first == c) {
        if (v.is_zero())
            row.erase(it);
        else
            it->second = v;
    } else if (!v.is_zero()) {
        row.insert(it, {c, v});
    }
}

std::vector<Scalar> Matrix::apply(const std::vector<Scalar>& v) const {
    std::vector<Scalar> out(rows_, Scalar::zero(field_));
    for (std::size_t i = 0; i < rows_; ++i)
        for (const auto& [col, x] : data_[i]) out[i] += x * v[col];
    return out;
}

Matrix Matrix::mul(const Matrix& o) const {
    Matrix out(field_, rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        SparseRow acc;
        for (const auto& [k, x] : data_[i]) acc = row_axpy(acc, x, o.data_[k]);
        out.data_[i] = std::move(acc);
    }
    return out;
}

Matrix Matrix::transpose() const {
    Matrix out(field_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (const auto& [col, v] : data_[i]) out.data_[col].emplace_back(i, v);
    return out;
}

bool Matrix::operator==(const Matrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
}

bool RrefBuilder::add_row(SparseRow r) {
    // normalize: sorted columns, no explicit zeros
    std::sort(r.begin(), r.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    std::erase_if(r, [](const auto& e) { return e.second.is_zero(); });
    r = reduce(std::move(r));
    if (r.empty()) return false;
    Scalar lead = r.front().second;
    r = row_scale(r, lead.inverse());
    // rows are kept in echelon form only; back-substitution happens once in
    // echelon_rows(). reduce() eliminates every pivot column regardless.
    pivot_of_col_[r.front().first] = rows_.size();
    rows_.push_back(std::move(r));
    return true;
}

SparseRow RrefBuilder::reduce(SparseRow r) const {
    std::size_t scan = 0;
    while (scan < r.size()) {
        auto it = pivot_of_col_.find(r[scan].first);
        if (it == pivot_of_col_.end()) {
            ++scan;
            continue;
        }
        r = row_axpy(r, -r[scan].second, rows_[it->second]);
    }
    return r;
}

SparseRow RrefBuilder::reduce_tracked(SparseRow r, std::vector<std::pair<std::size_t, Scalar>>& coeffs) const {
    std::size_t scan = 0;
    while (scan < r.size()) {
        auto it = pivot_of_col_.find(r[scan].first);
        if (it == pivot_of_col_.end()) {
            ++scan;
            continue;
        }
        coeffs.emplace_back(it->second, r[scan].second);
        r = row_axpy(r, -r[scan].second, rows_[it->second]);
    }
    return r;
}

std::vector<SparseRow> RrefBuilder::echelon_rows() const {
    // back-substitute bottom-up to produce the unique fully reduced form;
    // reduced rows only carry non-pivot tail columns, so one sweep over the
    // original entries suffices
    std::map<std::size_t, SparseRow> reduced;
    for (auto it = pivot_of_col_.rbegin(); it != pivot_of_col_.rend(); ++it) {
        SparseRow acc = rows_[it->second];
        for (const auto& [col, v] : rows_[it->second]) {
            if (col == it->first) continue;
            auto hit = reduced.find(col);
            if (hit != reduced.end()) acc = row_axpy(acc, -v, hit->second);
        }
        reduced[it->first] = std::move(acc);
    }
    std::vector<SparseRow> out;
    out.reserve(reduced.size());
    for (auto& [col, row] : reduced) out.push_back(std::move(row));
    return out;
}

RrefResult rref(const Matrix& m) {
    RrefBuilder b(m.field(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i) b.add_row(m.row(i));
    auto rows = b.echelon_rows();
    std::size_t rk = rows.size();
    rows.resize(m.rows());
    return {Matrix::from_rows(m.field(), m.cols(), std::move(rows)), rk};
}

std::size_t rank(const Matrix& m) {
    RrefBuilder b(m.field(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i) b.add_row(m.row(i));
    return b.rank();
}

Subspace::Subspace(Field f, std::size_t ambient, const std::vector<SparseRow>& spanning_rows)
    : field_(f), ambient_(ambient) {
    RrefBuilder b(f, ambient);
    for (const auto& r : spanning_rows) b.add_row(r);
    basis_ = b.echelon_rows();
}

Subspace Subspace::full(Field f, std::size_t ambient) {
    std::vector<SparseRow> rows(ambient);
    for (std::size_t i = 0; i < ambient; ++i) rows[i] = {{i, Scalar::one(f)}};
    return Subspace(f, ambient, rows);
}

bool Subspace::contains(const SparseRow& v) const {
    RrefBuilder b(field_, ambient_);
    for (const auto& r : basis_) b.add_row(r);
    return b.reduce(v).empty();
}

bool Subspace::operator==(const Subspace& o) const {
    return ambient_ == o.ambient_ && basis_ == o.basis_;
}

Subspace kernel(const Matrix& m) {
    auto [red, rk] = rref(m);
    // pivot columns from the echelon rows
    std::map<std::size_t, SparseRow> pivot_rows;
    for (std::size_t i = 0; i < rk; ++i) pivot_rows[red.row(i).front().first] = red.row(i);
    std::vector<SparseRow> basis;
    Field f = m.field();
    for (std::size_t j = 0; j < m.cols(); ++j) {
        if (pivot_rows.count(j)) continue;
        SparseRow v{{j, Scalar::one(f)}};
        for (const auto& [pc, row] : pivot_rows) {
            Scalar c = Scalar::zero(f);
            for (const auto& [col, x] : row)
                if (col == j) {
                    c = x;
                    break;
                }
            if (!c.is_zero()) v = row_axpy(v, Scalar::one(f), SparseRow{{pc, -c}});
        }
        std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
        basis.push_back(std::move(v));
    }
    return Subspace(f, m.cols(), basis);
}

Subspace intersect(const Subspace& a, const Subspace& b) {
    if (a.ambient() != b.ambient())
        throw Error(ErrorKind::AmbientMismatch, "subspace intersection: ambient dimensions differ");
    Field f = a.field();
    std::size_t n = a.ambient();
    std::size_t ra = a.dim(), rb = b.dim();
    // Eliminate stacked rows [A; B] augmented with identity; rows that vanish
    // give left-kernel combinations, whose A-part spans the intersection.
    RrefBuilder builder(f, n + ra + rb);
    std::vector<SparseRow> dead;
    for (std::size_t i = 0; i < ra + rb; ++i) {
        const SparseRow& src = i < ra ? a.basis()[i] : b.basis()[i - ra];
        SparseRow r = src;
        r.emplace_back(n + i, Scalar::one(f));
        SparseRow rem = builder.reduce(r);
        bool vanished = rem.empty() || rem.front().first >= n;
        if (vanished)
            dead.push_back(rem);
        else
            builder.add_row(rem);
    }
    std::vector<SparseRow> span;
    for (const auto& w : dead) {
        SparseRow combo;
        for (const auto& [col, c] : w) {
            std::size_t i = col - n;
            if (i < ra) combo = row_axpy(combo, c, a.basis()[i]);
        }
        if (!combo.empty()) span.push_back(combo);
    }
    return Subspace(f, n, span);
}

Subspace sum(const Subspace& a, const Subspace& b) {
    if (a.ambient() != b.ambient())
        throw Error(ErrorKind::AmbientMismatch, "subspace sum: ambient dimensions differ");
    std::vector<SparseRow> rows = a.basis();
    rows.insert(rows.end(), b.basis().begin(), b.basis().end());
    return Subspace(a.field(), a.ambient(), rows);
}

bool FpDenseRref::add_row(std::vector<long> r) {
    for (auto& x : r) {
        x %= p_;
        if (x < 0) x += p_;
    }
    for (std::size_t c = 0; c < cols_; ++c) {
        if (r[c] == 0) continue;
        auto it = pivot_of_col_.find(c);
        if (it == pivot_of_col_.end()) {
            // normalize and store
            long inv = 1, base = r[c], e = p_ - 2;
            while (e > 0) {
                if (e & 1) inv = (long)((__int128)inv * base % p_);
                base = (long)((__int128)base * base % p_);
                e >>= 1;
            }
            for (auto& x : r) x = (long)((__int128)x * inv % p_);
            pivot_of_col_[c] = rows_.size();
            rows_.push_back(std::move(r));
            return true;
        }
        long coef = p_ - r[c];
        const auto& prow = rows_[it->second];
        for (std::size_t j = c; j < cols_; ++j)
            if (prow[j]) r[j] = (long)((r[j] + (__int128)coef * prow[j]) % p_);
    }
    return false;
}

}  // namespace nchom
