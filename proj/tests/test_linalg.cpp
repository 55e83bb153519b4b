#include <doctest.h>

#include <random>

#include "nchom/linalg.hpp"

using namespace nchom;

namespace {

Matrix dense(Field f, std::size_t rows, std::size_t cols, const std::vector<long>& vals) {
    Matrix m(f, rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m.set(i, j, Scalar(f, vals[i * cols + j]));
    return m;
}

// rank by enumerating square minors, the slow way
std::size_t rank_by_minors(const Matrix& m) {
    std::size_t n = std::min(m.rows(), m.cols());
    auto det_rec = [&](auto&& self, std::vector<std::size_t> rows, std::vector<std::size_t> cols) -> Scalar {
        if (rows.size() == 1) return m.at(rows[0], cols[0]);
        Scalar acc = Scalar::zero(m.field());
        Scalar sign = Scalar::one(m.field());
        for (std::size_t k = 0; k < rows.size(); ++k) {
            std::vector<std::size_t> sub_rows(rows.begin() + 1, rows.end());
            std::vector<std::size_t> sub_cols;
            for (std::size_t j = 0; j < cols.size(); ++j)
                if (j != k) sub_cols.push_back(cols[j]);
            acc += sign * m.at(rows[0], cols[k]) * self(self, sub_rows, sub_cols);
            sign = -sign;
        }
        return acc;
    };
    for (std::size_t size = n; size >= 1; --size) {
        // all size-subsets of rows and columns
        std::vector<bool> rsel(m.rows(), false), csel(m.cols(), false);
        std::fill(rsel.begin(), rsel.begin() + (long)size, true);
        do {
            std::vector<std::size_t> rows;
            for (std::size_t i = 0; i < m.rows(); ++i)
                if (rsel[i]) rows.push_back(i);
            std::fill(csel.begin(), csel.end(), false);
            std::fill(csel.begin(), csel.begin() + (long)size, true);
            do {
                std::vector<std::size_t> cols;
                for (std::size_t j = 0; j < m.cols(); ++j)
                    if (csel[j]) cols.push_back(j);
                if (!det_rec(det_rec, rows, cols).is_zero()) return size;
            } while (std::prev_permutation(csel.begin(), csel.end()));
        } while (std::prev_permutation(rsel.begin(), rsel.end()));
    }
    return 0;
}

}  // namespace

TEST_CASE("scalar arithmetic over Q and F_p") {
    Field q = Field::Q();
    Scalar a(q, mpz_class(2), mpz_class(3));
    Scalar b(q, mpz_class(-1), mpz_class(6));
    CHECK((a + b) == Scalar(q, mpz_class(1), mpz_class(2)));
    CHECK((a * b).str() == "-1/9");
    CHECK(a.inverse().str() == "3/2");

    Field f7 = Field::Fp(7);
    Scalar c(f7, 10);
    CHECK(c.str() == "3");
    CHECK(c.inverse() == Scalar(f7, 5));  // 3*5 = 15 = 1 mod 7
    CHECK(Scalar(f7, 3).pow(6).is_one());
    CHECK(Scalar(f7, 2).sqrt().has_value());   // 3^2 = 2 mod 7
    CHECK(!Scalar(f7, 3).sqrt().has_value());  // 3 is not a square mod 7
}

TEST_CASE("rref of the identity and of proportional rows") {
    Field q = Field::Q();
    Matrix id = Matrix::identity(q, 2);
    auto r = rref(id);
    CHECK(r.rank == 2);
    CHECK(r.reduced == id);

    Matrix m = dense(q, 2, 2, {1, 2, 2, 4});
    auto r2 = rref(m);
    CHECK(r2.rank == 1);
    CHECK(r2.reduced.at(0, 0).is_one());
    CHECK(r2.reduced.at(0, 1) == Scalar(q, 2));
    CHECK(r2.reduced.row(1).empty());
}

TEST_CASE("rref is idempotent") {
    Field q = Field::Q();
    std::mt19937 rng(7);
    for (int it = 0; it < 20; ++it) {
        Matrix m(q, 4, 6);
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = 0; j < 6; ++j) m.set(i, j, Scalar(q, (long)(rng() % 7) - 3));
        auto once = rref(m);
        auto twice = rref(once.reduced);
        CHECK(once.reduced == twice.reduced);
        CHECK(once.rank == twice.rank);
    }
}

TEST_CASE("rank agrees with minor enumeration over F_32003") {
    Field f = Field::Fp(32003);
    std::mt19937 rng(11);
    for (int it = 0; it < 5; ++it) {
        Matrix m(f, 5, 7);
        for (std::size_t i = 0; i < 5; ++i)
            for (std::size_t j = 0; j < 7; ++j)
                if (rng() % 3) m.set(i, j, Scalar(f, (long)(rng() % 32003)));
        CHECK(rank(m) == rank_by_minors(m));
    }
}

TEST_CASE("kernel basics") {
    Field q = Field::Q();
    CHECK(kernel(Matrix::identity(q, 3)).dim() == 0);
    CHECK(kernel(Matrix(q, 3, 3)).dim() == 3);

    Matrix m = dense(q, 1, 3, {1, 1, 0});
    Subspace k = kernel(m);
    CHECK(k.dim() == 2);
    SparseRow v{{0, Scalar(q, 1)}, {1, Scalar(q, -1)}};
    CHECK(k.contains(v));
    // every kernel vector solves m v = 0
    for (const auto& row : k.basis()) {
        Scalar acc = Scalar::zero(q);
        for (const auto& [col, val] : row) acc += m.at(0, col) * val;
        CHECK(acc.is_zero());
    }
}

TEST_CASE("subspace operations") {
    Field q = Field::Q();
    Scalar one = Scalar::one(q);
    Subspace a(q, 2, {{{0, one}}});
    Subspace b(q, 2, {{{1, one}}});
    CHECK(intersect(a, a) == a);
    CHECK(intersect(a, b).dim() == 0);
    CHECK(sum(a, b).dim() == 2);
    CHECK(sum(a, Subspace::zero(q, 2)) == a);
    CHECK(Subspace::full(q, 3).contains({{2, one}}));
    CHECK_THROWS_AS(intersect(a, Subspace::zero(q, 3)), Error);
}

TEST_CASE("Grassmann identity on random subspace pairs") {
    Field f = Field::Fp(32003);
    std::mt19937 rng(23);
    for (int it = 0; it < 40; ++it) {
        auto random_subspace = [&](std::size_t ambient, std::size_t gens) {
            std::vector<SparseRow> rows;
            for (std::size_t g = 0; g < gens; ++g) {
                SparseRow r;
                for (std::size_t c = 0; c < ambient; ++c)
                    if (rng() % 2) r.emplace_back(c, Scalar(f, (long)(rng() % 32003)));
                rows.push_back(r);
            }
            return Subspace(f, ambient, rows);
        };
        Subspace a = random_subspace(6, 4), b = random_subspace(6, 4);
        CHECK(a.dim() + b.dim() == intersect(a, b).dim() + sum(a, b).dim());
    }
}

TEST_CASE("ranks over Q and F_p agree for small integer matrices") {
    Field q = Field::Q();
    Field fp = Field::Fp(32003);
    std::mt19937 rng(37);
    for (int it = 0; it < 20; ++it) {
        Matrix mq(q, 4, 5), mp(fp, 4, 5);
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = 0; j < 5; ++j) {
                long v = (long)(rng() % 9) - 4;
                mq.set(i, j, Scalar(q, v));
                mp.set(i, j, Scalar(fp, v));
            }
        CHECK(rank(mq) == rank(mp));
    }
}
