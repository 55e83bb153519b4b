#include "nchom/duality.hpp"

#include <algorithm>

namespace nchom {

Presentation s_dual(const Presentation& p) {
    std::size_t m = p.n_gens();
    std::vector<std::string> dual_names;
    for (const auto& n : p.gens->names) dual_names.push_back(n + "'");
    std::vector<std::string> dual_order(dual_names.size());
    for (std::size_t i = 0; i < m; ++i) dual_order[(std::size_t)p.gens->order_rank[i]] = dual_names[i];
    GenSetPtr dual_gens = GeneratorSet::make(dual_names, dual_order);

    Matrix pairing = component_matrix(p.relations, p.s);
    Subspace ker = kernel(pairing);
    std::vector<NcPoly> rels;
    for (const auto& row : ker.basis()) rels.push_back(poly_from_row(dual_gens, p.field, p.s, row));
    return Presentation(dual_gens, p.field, p.s, std::move(rels));
}

BimoduleData BimoduleData::change_generators(const Matrix& inv_witness) const {
    BimoduleData out = *this;
    auto mix = [&](const std::vector<Matrix>& acts, std::size_t rows, std::size_t cols) {
        std::vector<Matrix> res;
        for (std::size_t i = 0; i < acts.size(); ++i) {
            Matrix acc(field, rows, cols);
            for (std::size_t j = 0; j < acts.size(); ++j) {
                Scalar c = inv_witness.at(j, i);
                if (c.is_zero()) continue;
                for (std::size_t r = 0; r < rows; ++r)
                    acc.row(r) = row_axpy(acc.row(r), c, acts[j].row(r));
            }
            res.push_back(std::move(acc));
        }
        return res;
    };
    out.right_action = mix(right_action, dim_m0, dim_m1);
    out.left_action = mix(left_action, dim_m0, dim_m1);
    if (dim_m2 || dim_m1) {
        out.right_action1 = mix(right_action1, dim_m1, dim_m2);
        out.left_action1 = mix(left_action1, dim_m1, dim_m2);
    }
    return out;
}

std::size_t DualTower::dim_below_s_(int d) const {
    std::size_t n = 1;
    for (int i = 0; i < d; ++i) n *= m_;
    return n;
}

DualTower::DualTower(const Presentation& p, int up_to) : field_(p.field), m_(p.n_gens()), s_(p.s), up_to_(up_to) {
    gens_ = p.gens;
    if (up_to < s_) throw Error(ErrorKind::IllegalParams, "dual tower must reach the relation degree");
    // degree s: quotient of the degree-s word space by the dual relation space
    Matrix pairing = component_matrix(p.relations, p.s);
    Subspace dual_rels = kernel(pairing);
    for (int d = s_; d <= up_to_; ++d) {
        Level lvl{RrefBuilder(field_, 0), {}, {}};
        std::size_t prev_dim = d == s_ ? dim_below_s_(s_ - 1) : levels_[(std::size_t)(d - s_ - 1)].basis_cols.size();
        lvl.image = RrefBuilder(field_, m_ * prev_dim);
        if (d == s_) {
            // relation rows are already first-letter-factored since prev level is free
            for (const auto& r : dual_rels.basis()) lvl.image.add_row(r);
        } else {
            // image_d = sum over letters of (1 (x) mul_letter)(image_{d-1})
            const Level& prev_lvl = levels_[(std::size_t)(d - s_ - 1)];
            std::size_t prev_prev = d - 1 == s_ ? dim_below_s_(s_ - 1) : levels_[(std::size_t)(d - s_ - 2)].basis_cols.size();
            // mul matrices e_j -> class(basis_word(d-2,j) letter v), for degree d-2 -> d-1
            std::vector<std::vector<SparseRow>> mul(m_, std::vector<SparseRow>(prev_prev));
            for (std::size_t j = 0; j < prev_prev; ++j) {
                Word u = basis_word(d - 2, j);
                for (std::size_t v = 0; v < m_; ++v) {
                    Word uv = u;
                    uv.push_back((int)v);
                    mul[v][j] = word_class(uv);
                }
            }
            for (const auto& row : prev_lvl.image.rows()) {
                for (std::size_t v = 0; v < m_; ++v) {
                    SparseRow img;
                    for (const auto& [col, c] : row) {
                        std::size_t letter = col / prev_prev, j = col % prev_prev;
                        for (const auto& [tc, tv] : mul[v][j])
                            img = row_axpy(img, c * tv, SparseRow{{letter * prev_dim + tc, Scalar::one(field_)}});
                    }
                    lvl.image.add_row(img);
                }
            }
        }
        for (std::size_t col = 0; col < m_ * prev_dim; ++col) {
            if (lvl.image.pivots().count(col)) continue;
            lvl.col_to_basis[col] = lvl.basis_cols.size();
            lvl.basis_cols.emplace_back((int)(col / prev_dim), col % prev_dim);
        }
        levels_.push_back(std::move(lvl));
    }
}

std::size_t DualTower::dim(int d) const {
    if (d < 0) return 0;
    if (d < s_) return dim_below_s_(d);
    if (d > up_to_) throw Error(ErrorKind::Internal, "dual tower queried beyond its bound");
    return levels_[(std::size_t)(d - s_)].basis_cols.size();
}

Word DualTower::basis_word(int d, std::size_t i) const {
    if (d < s_) return word_from_index(*gens_, (std::size_t)d, i);
    const Level& lvl = levels_[(std::size_t)(d - s_)];
    auto [letter, j] = lvl.basis_cols[i];
    Word rest = basis_word(d - 1, j);
    Word w;
    std::vector<int> by_rank(m_);
    for (std::size_t g = 0; g < m_; ++g) by_rank[(std::size_t)gens_->order_rank[g]] = (int)g;
    w.push_back(by_rank[(std::size_t)letter]);
    w.insert(w.end(), rest.begin(), rest.end());
    return w;
}

SparseRow DualTower::word_class(const Word& w) const {
    int d = (int)w.size();
    if (d < s_) return {{word_index(*gens_, w), Scalar::one(field_)}};
    Word rest(w.begin() + 1, w.end());
    SparseRow rc = word_class(rest);
    std::size_t prev_dim = dim(d - 1);
    std::size_t letter = (std::size_t)gens_->order_rank[(std::size_t)w[0]];
    SparseRow raw;
    for (const auto& [col, c] : rc) raw.emplace_back(letter * prev_dim + col, c);
    const Level& lvl = levels_[(std::size_t)(d - s_)];
    SparseRow reduced = lvl.image.reduce(raw);
    SparseRow out;
    for (const auto& [col, c] : reduced) out.emplace_back(lvl.col_to_basis.at(col), c);
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
}

SparseRow DualTower::poly_class(const NcPoly& f) const {
    SparseRow acc;
    for (const auto& [w, c] : f.terms()) acc = row_axpy(acc, c, word_class(w));
    return acc;
}

namespace {

// shared assembly of the quadratic presentation from multiplication data
QuadraticPresentation veronese_from_products(Field field, const std::array<std::array<SparseRow, 2>, 2>& prod,
                                             std::size_t dim_2s) {
    std::vector<SparseRow> rows;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            SparseRow r = prod[(std::size_t)i][(std::size_t)j];
            rows.push_back(r);
        }
    Matrix mult = Matrix::from_rows(field, dim_2s, rows);
    // kernel of the 4 x dim matrix acting on coordinate vectors (a_ij):
    // we need combinations sum a_ij u_i u_j = 0, i.e. left kernel of `mult`
    RrefBuilder b(field, dim_2s + 4);
    std::vector<SparseRow> dead;
    for (std::size_t i = 0; i < 4; ++i) {
        SparseRow r = rows[i];
        r.emplace_back(dim_2s + i, Scalar::one(field));
        SparseRow rem = b.reduce(r);
        if (rem.empty() || rem.front().first >= dim_2s)
            dead.push_back(rem);
        else
            b.add_row(rem);
    }
    std::vector<SparseRow> rel_rows;
    for (const auto& w : dead) {
        SparseRow rel;
        for (const auto& [col, c] : w) rel.emplace_back(col - dim_2s, c);
        rel_rows.push_back(rel);
    }
    QuadraticPresentation qp;
    qp.field = field;
    qp.n_gens = 2;
    qp.relation_space = Subspace(field, 4, rel_rows);
    return qp;
}

}  // namespace

QuadraticPresentation veronese_ring(const TruncatedGB& dual_gb, int s) {
    if (!is_complete_up_to(dual_gb, 2 * s))
        throw Error(ErrorKind::IllegalParams, "dual basis not certified to degree 2s");
    auto deg_s = normal_words(dual_gb, s);
    if (deg_s.size() != 2)
        throw Error(ErrorKind::WrongVeroneseRank,
                    "degree-s component has dimension " + std::to_string(deg_s.size()) + ", expected 2");
    auto deg_2s = normal_words(dual_gb, 2 * s);
    std::map<Word, std::size_t> index_2s;
    for (std::size_t i = 0; i < deg_2s.size(); ++i) index_2s[deg_2s[i]] = i;
    const auto& gens = dual_gb.presentation.gens;
    Field field = dual_gb.presentation.field;
    std::array<std::array<SparseRow, 2>, 2> prod;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            NcPoly p = NcPoly::monomial(gens, Scalar::one(field), word_mul(deg_s[(std::size_t)i], deg_s[(std::size_t)j]));
            NcPoly nf = normal_form(p, dual_gb);
            SparseRow r;
            for (const auto& [w, c] : nf.terms()) r.emplace_back(index_2s.at(w), c);
            std::sort(r.begin(), r.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
            prod[(std::size_t)i][(std::size_t)j] = r;
        }
    return veronese_from_products(field, prod, deg_2s.size());
}

QuadraticPresentation veronese_ring(const DualTower& t) {
    if (t.dim(t.s()) != 2)
        throw Error(ErrorKind::WrongVeroneseRank,
                    "degree-s component has dimension " + std::to_string(t.dim(t.s())) + ", expected 2");
    std::array<std::array<SparseRow, 2>, 2> prod;
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j)
            prod[i][j] = t.word_class(word_mul(t.basis_word(t.s(), i), t.basis_word(t.s(), j)));
    return veronese_from_products(t.field(), prod, t.dim(2 * t.s()));
}

namespace {

template <typename Dim, typename Classify>
BimoduleData bimodule_from_words(Field field, int s, const std::vector<Word>& gens_s,
                                 Dim dim_of, Classify class_of, const std::vector<Word>& m0_words,
                                 const std::vector<Word>& m1_words) {
    BimoduleData b;
    b.field = field;
    b.n_algebra_gens = 2;
    b.dim_m0 = m0_words.size();
    b.dim_m1 = m1_words.size();
    b.dim_m2 = dim_of(2 * s + 1);
    for (int g = 0; g < 2; ++g) {
        Matrix right(field, b.dim_m0, b.dim_m1), left(field, b.dim_m0, b.dim_m1);
        for (std::size_t i = 0; i < b.dim_m0; ++i) {
            right.row(i) = class_of(word_mul(m0_words[i], gens_s[(std::size_t)g]));
            left.row(i) = class_of(word_mul(gens_s[(std::size_t)g], m0_words[i]));
        }
        b.right_action.push_back(std::move(right));
        b.left_action.push_back(std::move(left));
        Matrix right1(field, b.dim_m1, b.dim_m2), left1(field, b.dim_m1, b.dim_m2);
        for (std::size_t i = 0; i < b.dim_m1; ++i) {
            right1.row(i) = class_of(word_mul(m1_words[i], gens_s[(std::size_t)g]));
            left1.row(i) = class_of(word_mul(gens_s[(std::size_t)g], m1_words[i]));
        }
        b.right_action1.push_back(std::move(right1));
        b.left_action1.push_back(std::move(left1));
    }
    return b;
}

}  // namespace

BimoduleData veronese_bimodule(const TruncatedGB& dual_gb, int s) {
    if (!is_complete_up_to(dual_gb, 2 * s + 1))
        throw Error(ErrorKind::IllegalParams, "dual basis not certified to degree 2s+1");
    auto gens_s = normal_words(dual_gb, s);
    if (gens_s.size() != 2)
        throw Error(ErrorKind::WrongVeroneseRank,
                    "degree-s component has dimension " + std::to_string(gens_s.size()) + ", expected 2");
    auto m0_words = normal_words(dual_gb, 1);
    auto m1_words = normal_words(dual_gb, s + 1);
    std::map<int, std::map<Word, std::size_t>> index;
    for (int d : {s + 1, 2 * s + 1}) {
        auto ws = normal_words(dual_gb, d);
        for (std::size_t i = 0; i < ws.size(); ++i) index[d][ws[i]] = i;
    }
    auto dim_of = [&](int d) { return normal_words(dual_gb, d).size(); };
    auto class_of = [&](const Word& w) {
        NcPoly nf = normal_form(
            NcPoly::monomial(dual_gb.presentation.gens, Scalar::one(dual_gb.presentation.field), w), dual_gb);
        SparseRow r;
        for (const auto& [u, c] : nf.terms()) r.emplace_back(index.at((int)w.size()).at(u), c);
        std::sort(r.begin(), r.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
        return r;
    };
    return bimodule_from_words(dual_gb.presentation.field, s, gens_s, dim_of, class_of, m0_words, m1_words);
}

BimoduleData veronese_bimodule(const DualTower& t) {
    int s = t.s();
    if (t.dim(s) != 2)
        throw Error(ErrorKind::WrongVeroneseRank,
                    "degree-s component has dimension " + std::to_string(t.dim(s)) + ", expected 2");
    std::vector<Word> gens_s{t.basis_word(s, 0), t.basis_word(s, 1)};
    std::vector<Word> m0_words, m1_words;
    for (std::size_t i = 0; i < t.dim(1); ++i) m0_words.push_back(t.basis_word(1, i));
    for (std::size_t i = 0; i < t.dim(s + 1); ++i) m1_words.push_back(t.basis_word(s + 1, i));
    auto dim_of = [&](int d) { return t.dim(d); };
    auto class_of = [&](const Word& w) { return t.word_class(w); };
    return bimodule_from_words(t.field(), s, gens_s, dim_of, class_of, m0_words, m1_words);
}

std::size_t tensor_quotient_dim1(Field field, std::size_t dim_m0, std::size_t dim_m1,
                                 const std::vector<Matrix>& right_acts, const std::vector<Matrix>& left_acts,
                                 int k) {
    if (k < 1) throw Error(ErrorKind::IllegalParams, "tensor power exponent must be >= 1");
    if (k == 1) return dim_m1;
    std::size_t pow_m0_km1 = 1;
    for (int i = 0; i < k - 1; ++i) pow_m0_km1 *= dim_m0;
    std::size_t summand = pow_m0_km1 * dim_m1;
    std::size_t ambient = (std::size_t)k * summand;
    if (ambient > 5000000) throw Error(ErrorKind::SizeGuardExceeded, "tensor power ambient space too large");
    if (dim_m1 == 0) return 0;
    // flat index: slot j (position of the M1 factor), then the M0 word (base dim_m0,
    // positions excluding j), then the M1 coordinate
    auto flat = [&](int j, const std::vector<std::size_t>& m0word, std::size_t t) {
        std::size_t w = 0;
        for (std::size_t x : m0word) w = w * dim_m0 + x;
        return (std::size_t)j * summand + w * dim_m1 + t;
    };
    RrefBuilder builder(field, ambient);
    std::vector<std::size_t> assign((std::size_t)k, 0);
    std::size_t total_assign = 1;
    for (int i = 0; i < k; ++i) total_assign *= dim_m0;
    for (std::size_t code = 0; code < total_assign; ++code) {
        std::size_t c = code;
        for (int i = k - 1; i >= 0; --i) {
            assign[(std::size_t)i] = c % dim_m0;
            c /= dim_m0;
        }
        for (int bdy = 0; bdy + 1 < k; ++bdy) {
            std::vector<std::size_t> rest_left, rest_right;
            for (int i = 0; i < k; ++i) {
                if (i != bdy) rest_left.push_back(assign[(std::size_t)i]);
                if (i != bdy + 1) rest_right.push_back(assign[(std::size_t)i]);
            }
            for (std::size_t a = 0; a < right_acts.size(); ++a) {
                SparseRow row;
                for (const auto& [t, c1] : right_acts[a].row(assign[(std::size_t)bdy]))
                    row.emplace_back(flat(bdy, rest_left, t), c1);
                for (const auto& [t, c1] : left_acts[a].row(assign[(std::size_t)(bdy + 1)])) {
                    SparseRow other{{flat(bdy + 1, rest_right, t), -c1}};
                    row = row_axpy(row, Scalar::one(field), other);
                }
                std::sort(row.begin(), row.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
                builder.add_row(row);
            }
        }
    }
    return ambient - builder.rank();
}

std::size_t tensor_power_degree1(const BimoduleData& b, int k) {
    return tensor_quotient_dim1(b.field, b.dim_m0, b.dim_m1, b.right_action, b.left_action, k);
}

std::vector<std::size_t> veronese_tensor_dims(const TruncatedGB& gb, int kmax) {
    int s = gb.presentation.s;
    if (!is_complete_up_to(gb, s + 1))
        throw Error(ErrorKind::IllegalParams, "basis not certified to degree s+1");
    Field field = gb.presentation.field;
    auto alg_basis = normal_words(gb, s);       // B_1 basis
    auto m1_words = normal_words(gb, s + 1);    // L_1 basis
    std::size_t m = gb.presentation.n_gens();   // L_0 = degree-1 part
    std::map<Word, std::size_t> index_m1;
    for (std::size_t i = 0; i < m1_words.size(); ++i) index_m1[m1_words[i]] = i;
    auto class_of = [&](const Word& w) {
        NcPoly nf =
            normal_form(NcPoly::monomial(gb.presentation.gens, Scalar::one(field), w), gb);
        SparseRow r;
        for (const auto& [u, c] : nf.terms()) r.emplace_back(index_m1.at(u), c);
        std::sort(r.begin(), r.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
        return r;
    };
    std::vector<Matrix> right_acts, left_acts;
    for (const auto& a : alg_basis) {
        Matrix right(field, m, m1_words.size()), left(field, m, m1_words.size());
        for (std::size_t i = 0; i < m; ++i) {
            Word v{(int)i};
            right.row(i) = class_of(word_mul(v, a));
            left.row(i) = class_of(word_mul(a, v));
        }
        right_acts.push_back(std::move(right));
        left_acts.push_back(std::move(left));
    }
    std::vector<std::size_t> out;
    out.push_back(alg_basis.size());  // l_0 = dim Lambda_s
    for (int k = 1; k <= kmax; ++k)
        out.push_back(tensor_quotient_dim1(field, m, m1_words.size(), right_acts, left_acts, k));
    return out;
}

}  // namespace nchom
