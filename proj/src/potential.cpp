#include "nchom/potential.hpp"

#include <algorithm>
#include <array>
#include <initializer_list>
#include <map>
#include <optional>
#include <set>

#include "nchom/linalg.hpp"

namespace nchom {

NcPoly phi_sigma(const NcPoly& w, const Matrix& sigma) {
    if (w.is_zero()) return w;
    Field f = w.field();
    NcPoly out = NcPoly::zero(w.gens(), f);
    for (const auto& [word, c] : w.terms()) {
        int last = word.back();
        Word head(word.begin(), word.end() - 1);
        for (std::size_t i = 0; i < 2; ++i) {
            Scalar coeff = c * sigma.at(i, (std::size_t)last);
            if (coeff.is_zero()) continue;
            Word rotated;
            rotated.push_back((int)i);
            rotated.insert(rotated.end(), head.begin(), head.end());
            out.add_term(rotated, coeff);
        }
    }
    return out;
}

bool is_twisted_potential(const NcPoly& w, const Matrix& sigma) {
    return (phi_sigma(w, sigma) - w).is_zero();
}

std::vector<NcPoly> potential_slices(const NcPoly& w) {
    Field f = w.field();
    std::vector<NcPoly> out(w.gens()->size(), NcPoly::zero(w.gens(), f));
    for (const auto& [word, c] : w.terms()) {
        Word tail(word.begin() + 1, word.end());
        out[(std::size_t)word[0]].add_term(tail, c);
    }
    return out;
}

Subspace derived_relations(const NcPoly& w) {
    if (w.is_zero() || !w.homogeneous())
        throw Error(ErrorKind::InhomogeneousInput, "potential must be homogeneous and nonzero");
    int s = w.degree() - 1;
    std::vector<SparseRow> rows;
    for (const auto& sl : potential_slices(w))
        if (!sl.is_zero()) rows.push_back(poly_to_row(sl, s));
    std::size_t ambient = 1;
    for (int i = 0; i < s; ++i) ambient *= w.gens()->size();
    return Subspace(w.field(), ambient, rows);
}

Presentation build_potential_algebra(const NcPoly& w) {
    Subspace rels = derived_relations(w);
    int s = w.degree() - 1;
    std::vector<NcPoly> rel_polys;
    for (const auto& r : rels.basis()) rel_polys.push_back(poly_from_row(w.gens(), w.field(), s, r));
    return Presentation(w.gens(), w.field(), s, rel_polys);
}

namespace {

std::size_t ipow(std::size_t b, int e) {
    std::size_t r = 1;
    for (int i = 0; i < e; ++i) r *= b;
    return r;
}

// rank-1 test with both factors; matrix rows indexed by the first tensor slot
struct Rank1 {
    SparseRow left, pattern;
};
std::optional<Rank1> rank1(const Matrix& m) {
    Rank1 out;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        if (m.row(i).empty()) continue;
        if (out.pattern.empty()) {
            out.pattern = m.row(i);
            out.left.emplace_back(i, Scalar::one(m.field()));
            continue;
        }
        const auto& r = m.row(i);
        if (r.size() != out.pattern.size()) return std::nullopt;
        Scalar ratio = r.front().second / out.pattern.front().second;
        for (std::size_t k = 0; k < r.size(); ++k)
            if (r[k].first != out.pattern[k].first || !(r[k].second == ratio * out.pattern[k].second))
                return std::nullopt;
        out.left.emplace_back(i, ratio);
    }
    if (out.pattern.empty()) return std::nullopt;
    return out;
}

Matrix first_flatten(GenSetPtr gens, Field f, int deg, const SparseRow& row) {
    Matrix m(f, gens->size(), ipow(gens->size(), deg - 1));
    for (const auto& [col, v] : row) {
        Word w = word_from_index(*gens, (std::size_t)deg, col);
        Word tail(w.begin() + 1, w.end());
        m.set((std::size_t)gens->order_rank[(std::size_t)w[0]], word_index(*gens, tail), v);
    }
    return m;
}

// full factorization of a decomposable tensor into linear factors
std::optional<std::vector<SparseRow>> linear_factors(GenSetPtr gens, Field f, int deg, SparseRow row) {
    std::vector<SparseRow> out;
    for (int d = deg; d >= 2; --d) {
        auto r1 = rank1(first_flatten(gens, f, d, row));
        if (!r1) return std::nullopt;
        out.push_back(r1->left);
        row = r1->pattern;
    }
    out.push_back(row);
    return out;
}

bool proportional(const SparseRow& a, const SparseRow& b) {
    if (a.empty() || b.empty()) return a.empty() && b.empty();
    if (a.size() != b.size()) return false;
    Scalar ratio = a.front().second / b.front().second;
    for (std::size_t k = 0; k < a.size(); ++k)
        if (a[k].first != b[k].first || !(a[k].second == ratio * b[k].second)) return false;
    return true;
}

// tensor product of linear-form rows (indices in rank coordinates)
SparseRow tensor_word(GenSetPtr gens, Field f, const std::vector<SparseRow>& factors) {
    SparseRow acc{{0, Scalar::one(f)}};
    std::size_t n = gens->size();
    for (const auto& fac : factors) {
        SparseRow next;
        for (const auto& [idx, c] : acc)
            for (const auto& [g, v] : fac) {
                Scalar cv = c * v;
                if (!cv.is_zero()) next.emplace_back(idx * n + g, cv);
            }
        std::sort(next.begin(), next.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
        acc = std::move(next);
    }
    return acc;
}

}  // namespace

bool potential_exclusion_check(const NcPoly& w) {
    if (w.is_zero() || !w.homogeneous() || w.gens()->size() != 2)
        throw Error(ErrorKind::IllegalParams, "exclusion check needs a potential on two generators");
    Field f = w.field();
    GenSetPtr gens = w.gens();
    int s = w.degree() - 1;
    Subspace R = derived_relations(w);
    if (R.dim() != 2) return false;
    const SparseRow& r1 = R.basis()[0];
    const SparseRow& r2 = R.basis()[1];

    // the excluded configurations are alternating words; both live among the
    // decomposable members of the pencil a*r1 + b*r2, located through the
    // rank-1 locus of the first flattening
    Matrix f1 = first_flatten(gens, f, s, r1);
    Matrix f2 = first_flatten(gens, f, s, r2);
    std::size_t tail_dim = ipow(2, s - 1);
    auto wedge = [&](const SparseRow& a, const SparseRow& b) {
        // exterior product of two tail vectors, indexed by ordered pairs
        std::map<std::pair<std::size_t, std::size_t>, Scalar> entries;
        for (const auto& [i, vi] : a)
            for (const auto& [j, vj] : b) {
                if (i == j) continue;
                auto key = std::minmax(i, j);
                Scalar term = i < j ? vi * vj : -(vi * vj);
                auto it = entries.find(key);
                if (it == entries.end())
                    entries[key] = term;
                else
                    it->second += term;
            }
        return entries;
    };
    auto nonzero = [](const std::map<std::pair<std::size_t, std::size_t>, Scalar>& m) {
        for (const auto& [k, v] : m)
            if (!v.is_zero()) return true;
        return false;
    };
    // rows of the pencil flattening: row_g(a,b) = a*f1_g + b*f2_g
    const SparseRow a1 = f1.row(0), a2 = f1.row(1), b1 = f2.row(0), b2 = f2.row(1);
    auto A = wedge(a1, a2);
    auto C = wedge(b1, b2);
    auto B = wedge(a1, b2);
    for (auto& [k, v] : wedge(b1, a2)) {
        auto it = B.find(k);
        if (it == B.end())
            B[k] = v;
        else
            it->second += v;
    }
    bool degenerate = !nonzero(A) && !nonzero(B) && !nonzero(C);

    auto membership = [&](const SparseRow& v) { return R.contains(v); };

    auto check_member = [&](const SparseRow& member) -> bool {
        // true if this member exhibits an excluded alternating pair
        auto factors = linear_factors(gens, f, s, member);
        if (!factors) return false;
        const auto& fs = *factors;
        for (std::size_t i = 2; i < fs.size(); ++i)
            if (!proportional(fs[i], fs[i - 2])) return false;
        // member alternates u1 u2 u1 ...; the partner word starts with u2
        std::vector<SparseRow> pf;
        for (int i = 0; i < s; ++i) pf.push_back(i % 2 == 0 ? fs[1] : fs[0]);
        return membership(tensor_word(gens, f, pf));
    };

    if (degenerate) {
        // every member splits off a first factor: either a common left factor
        // or a common tail; excluded pairs then force u1 ~ u2, a pure power
        Matrix side(f, 2, 2 * tail_dim);
        side.row(0) = a1;
        side.row(1) = a2;
        for (const auto& [c, v] : b1) side.set(0, tail_dim + c, v);
        for (const auto& [c, v] : b2) side.set(1, tail_dim + c, v);
        auto common_left = rank1(side);
        if (common_left) {
            std::vector<SparseRow> pw((std::size_t)s, common_left->left);
            return !membership(tensor_word(gens, f, pw));
        }
        Matrix stacked(f, 4, tail_dim);
        stacked.row(0) = a1;
        stacked.row(1) = a2;
        stacked.row(2) = b1;
        stacked.row(3) = b2;
        auto common_tail = rank1(stacked);
        if (common_tail) {
            // R = U (x) h: a pure power u^s needs h = u^(s-1)
            auto hf = linear_factors(gens, f, s - 1, common_tail->pattern);
            if (!hf) return true;
            for (std::size_t i = 1; i < hf->size(); ++i)
                if (!proportional((*hf)[i], (*hf)[0])) return true;
            std::vector<SparseRow> pw((std::size_t)s, (*hf)[0]);
            return !membership(tensor_word(gens, f, pw));
        }
        throw Error(ErrorKind::Internal, "degenerate pencil without a common factor");
    }

    // roots of the vector-valued quadratic A a^2 + B ab + C b^2 = 0
    std::array<Scalar, 3> form{Scalar::zero(f), Scalar::zero(f), Scalar::zero(f)};
    std::set<std::pair<std::size_t, std::size_t>> keys;
    for (const auto& [k, v] : A) keys.insert(k);
    for (const auto& [k, v] : B) keys.insert(k);
    for (const auto& [k, v] : C) keys.insert(k);
    auto at = [&](std::map<std::pair<std::size_t, std::size_t>, Scalar>& m,
                  const std::pair<std::size_t, std::size_t>& k) {
        auto it = m.find(k);
        return it == m.end() ? Scalar::zero(f) : it->second;
    };
    std::vector<std::array<Scalar, 3>> forms;
    for (const auto& k : keys) {
        std::array<Scalar, 3> fm{at(A, k), at(B, k), at(C, k)};
        if (!(fm[0].is_zero() && fm[1].is_zero() && fm[2].is_zero())) forms.push_back(fm);
    }
    // candidate roots from the first form, over the base field only; a
    // configuration defined over an extension is invisible here by design
    std::vector<std::pair<Scalar, Scalar>> roots;
    const auto& f0 = forms.front();
    if (f0[0].is_zero()) {
        roots.emplace_back(Scalar::one(f), Scalar::zero(f));
        if (!f0[1].is_zero()) roots.emplace_back(-(f0[2] / f0[1]), Scalar::one(f));
    } else {
        if (!f.rational()) {
            for (long t = 0; t < f.p; ++t) {
                Scalar tt(f, t);
                if ((f0[0] * tt * tt + f0[1] * tt + f0[2]).is_zero()) roots.emplace_back(tt, Scalar::one(f));
            }
        } else {
            Scalar disc = f0[1] * f0[1] - Scalar(f, 4) * f0[0] * f0[2];
            auto rt = disc.sqrt();
            if (rt) {
                Scalar two_a = Scalar(f, 2) * f0[0];
                roots.emplace_back((-f0[1] + *rt) / two_a, Scalar::one(f));
                roots.emplace_back((-f0[1] - *rt) / two_a, Scalar::one(f));
            }
        }
    }
    for (const auto& [ra, rb] : roots) {
        bool common = true;
        for (const auto& fm : forms)
            if (!(fm[0] * ra * ra + fm[1] * ra * rb + fm[2] * rb * rb).is_zero()) {
                common = false;
                break;
            }
        if (!common) continue;
        SparseRow member = row_axpy(row_scale(r1, ra), rb, r2);
        if (member.empty()) continue;
        if (check_member(member)) return false;
    }
    return true;
}

namespace {

NcPoly word_poly(GenSetPtr gens, Field f, const Word& w, const Scalar& c) {
    return NcPoly::monomial(gens, c, w);
}

Word rep(int g, int n) { return Word((std::size_t)n, g); }

Word cat(std::initializer_list<Word> parts) {
    Word out;
    for (const auto& p : parts) out.insert(out.end(), p.begin(), p.end());
    return out;
}

}  // namespace

TwistedPotential gen_potential_diag(Field f, const Scalar& l1, const Scalar& l2, int s) {
    if (s < 3) throw Error(ErrorKind::IllegalParams, "potential degree requires s >= 3");
    if (l1.is_zero() || l2.is_zero())
        throw Error(ErrorKind::ConditionNotMet, "twist eigenvalues must be nonzero");
    GenSetPtr gens = GeneratorSet::make({"y1", "y2"});
    Scalar one = Scalar::one(f);
    NcPoly w = NcPoly::zero(gens, f);
    const int Y1 = 0, Y2 = 1;

    auto diag_case_a = [&](const Scalar& a, const Scalar& b, int k, int g1, int g2) {
        // sum_{i<k} a^i y1^i y2^(s+1-k) y1^(k-i) + a^k sum_{i<=s-k} b^i y2^i y1^k y2^(s+1-k-i)
        NcPoly out = NcPoly::zero(gens, f);
        for (int i = 0; i < k; ++i)
            out.add_term(cat({rep(g1, i), rep(g2, s + 1 - k), rep(g1, k - i)}), a.pow(i));
        for (int i = 0; i <= s - k; ++i)
            out.add_term(cat({rep(g2, i), rep(g1, k), rep(g2, s + 1 - k - i)}), a.pow(k) * b.pow(i));
        return out;
    };
    bool built = false;
    for (int k = 2; k <= s - 1 && !built; ++k) {
        if (l1.pow(k) * l2.pow(s + 1 - k) == one) {
            w = diag_case_a(l1, l2, k, Y1, Y2);
            built = true;
        }
    }
    if (!built && l1 * l2.pow(s) == one && l1.pow(s) * l2 == one) {
        for (int i = 0; i <= s; ++i) w.add_term(cat({rep(Y1, i), rep(Y2, 1), rep(Y1, s - i)}), l1.pow(i));
        for (int i = 0; i <= s; ++i) w.add_term(cat({rep(Y2, i), rep(Y1, 1), rep(Y2, s - i)}), l2.pow(i));
        built = true;
    }
    if (!built && l1.is_one() && l2.pow(s) == one) {
        w.add_term(rep(Y1, s + 1), one);
        for (int i = 0; i <= s; ++i) w.add_term(cat({rep(Y2, i), rep(Y1, 1), rep(Y2, s - i)}), l2.pow(i));
        built = true;
    }
    if (!built && l2.is_one() && l1.pow(s) == one) {
        w.add_term(rep(Y2, s + 1), one);
        for (int i = 0; i <= s; ++i) w.add_term(cat({rep(Y1, i), rep(Y2, 1), rep(Y1, s - i)}), l1.pow(i));
        built = true;
    }
    if (!built)
        throw Error(ErrorKind::ConditionNotMet,
                    "eigenvalues admit no twisted potential of the required shape");
    Matrix sigma(f, 2, 2);
    sigma.set(0, 0, l1);
    sigma.set(1, 1, l2);
    if (!is_twisted_potential(w, sigma)) throw Error(ErrorKind::Internal, "potential is not fixed");
    if (!potential_exclusion_check(w))
        throw Error(ErrorKind::Internal, "generated potential fails the exclusion check");
    return {gens, w, sigma};
}

TwistedPotential gen_potential_jordan(Field f, const Scalar& lam, int s) {
    if (s < 3) throw Error(ErrorKind::IllegalParams, "potential degree requires s >= 3");
    Scalar one = Scalar::one(f);
    if (s == 3) {
        if (!(lam * lam == one))
            throw Error(ErrorKind::ConditionNotMet, "a degree-4 potential with this twist needs lam^2 = 1");
    } else if (!(lam.pow(s + 1) == one)) {
        throw Error(ErrorKind::ConditionNotMet, "twist scalar must satisfy lam^(s+1) = 1");
    }
    GenSetPtr gens = GeneratorSet::make({"y1", "y2"});
    NcPoly w = NcPoly::zero(gens, f);
    const int Y1 = 0, Y2 = 1;
    auto add = [&](const Word& word, const Scalar& c) {
        if (!c.is_zero()) w.add_term(word, c);
    };
    if (s == 3) {
        add(cat({rep(Y1, 2), rep(Y2, 2)}), one);
        add(cat({rep(Y2, 2), rep(Y1, 2)}), one);
        add(cat({rep(Y1, 1), rep(Y2, 2), rep(Y1, 1)}), lam);
        add(cat({rep(Y2, 1), rep(Y1, 2), rep(Y2, 1)}), lam);
        add({Y1, Y2, Y1, Y2}, -(one + lam));
        add({Y2, Y1, Y2, Y1}, -(one + lam));
        add({Y1, Y2, Y1, Y1}, one);
        add({Y1, Y1, Y2, Y1}, -one);
    } else if (!(lam * lam + one).is_zero()) {
        Scalar l2 = lam * lam, ls = lam.pow(s);
        for (int i = 0; i < s; ++i)
            add(cat({rep(Y1, i), rep(Y2, 2), rep(Y1, s - 1 - i)}), (one + l2) * lam.pow(i));
        add(cat({rep(Y2, 1), rep(Y1, s - 1), rep(Y2, 1)}), ls + lam);
        for (int i = 0; i <= s - 2; ++i)
            add(cat({rep(Y1, i), {Y2, Y1, Y2}, rep(Y1, s - 2 - i)}), -(one + lam) * lam.pow(i + 1));
        add(cat({rep(Y2, 1), rep(Y1, s - 2), {Y2, Y1}}), -(ls + one));
        add(cat({{Y1, Y2}, rep(Y1, s - 2), rep(Y2, 1)}), -(one + lam));
        add(cat({rep(Y1, s - 1), {Y2, Y1}}), -(ls + one));
        add(cat({rep(Y1, s), rep(Y2, 1)}), ls - one);
        add(cat({rep(Y2, 1), rep(Y1, s)}), one - lam);
        add(cat({{Y1, Y2}, rep(Y1, s - 1)}), one + lam);
        add(rep(Y1, s + 1), one);
    } else if (f.p == 2) {
        for (int i = 0; i < s; ++i) add(cat({rep(Y1, i), rep(Y2, 2), rep(Y1, s - 1 - i)}), one);
        add(cat({rep(Y2, 1), rep(Y1, s - 1), rep(Y2, 1)}), one);
        for (int i = 1; i <= s - 1; ++i) add(cat({rep(Y1, i), rep(Y2, 1), rep(Y1, s - i)}), one);
    } else {
        Scalar l2 = lam * lam, l3 = lam.pow(3), ls = lam.pow(s);
        for (int i = 0; i < s; ++i)
            add(cat({rep(Y1, i), rep(Y2, 2), rep(Y1, s - 1 - i)}), (one + l3) * lam.pow(i));
        add(cat({rep(Y2, 1), rep(Y1, s - 1), rep(Y2, 1)}), ls + l2);
        for (int i = 0; i <= s - 3; ++i)
            add(cat({rep(Y1, i), {Y2, Y1, Y1, Y2}, rep(Y1, s - 3 - i)}), -(one + lam) * lam.pow(i + 2));
        add(cat({rep(Y2, 1), rep(Y1, s - 3), {Y2, Y1, Y1}}), -(ls + one));
        add(cat({{Y1, Y2}, rep(Y1, s - 3), {Y2, Y1}}), -(one + lam));
        add(cat({{Y1, Y1, Y2}, rep(Y1, s - 3), rep(Y2, 1)}), -(lam + l2));
        add(cat({rep(Y1, s - 2), {Y2, Y1, Y1}}), -(ls + one));
        add(cat({rep(Y1, s - 1), {Y2, Y1}}), -(one + lam));
        add(cat({rep(Y1, s), rep(Y2, 1)}), ls - lam);
        add(cat({rep(Y2, 1), rep(Y1, s)}), one - l2);
        add(cat({{Y1, Y2}, rep(Y1, s - 1)}), one + lam);
        add(cat({{Y1, Y1, Y2}, rep(Y1, s - 2)}), lam + l2);
        add(rep(Y1, s + 1), one + lam);
    }
    Matrix sigma(f, 2, 2);
    sigma.set(0, 0, lam);
    sigma.set(0, 1, lam);
    sigma.set(1, 1, lam);
    if (!is_twisted_potential(w, sigma)) throw Error(ErrorKind::Internal, "potential is not fixed");
    if (!potential_exclusion_check(w))
        throw Error(ErrorKind::Internal, "generated potential fails the exclusion check");
    return {gens, w, sigma};
}

Presentation free_product(const Presentation& p1, const Presentation& p2) {
    if (p1.s != p2.s)
        throw Error(ErrorKind::DegreeMismatch, "free product requires relations of a common degree");
    if (!(p1.field == p2.field))
        throw Error(ErrorKind::DegreeMismatch, "free product requires a common ground field");
    std::vector<std::string> names = p1.gens->names;
    std::vector<std::string> second;
    for (const auto& n : p2.gens->names) {
        std::string cand = n;
        while (std::find(names.begin(), names.end(), cand) != names.end() ||
               std::find(second.begin(), second.end(), cand) != second.end())
            cand += "'";
        second.push_back(cand);
    }
    names.insert(names.end(), second.begin(), second.end());
    // order: p1's order first, then p2's
    std::vector<std::string> order(names.size());
    for (std::size_t i = 0; i < p1.gens->size(); ++i)
        order[(std::size_t)p1.gens->order_rank[i]] = p1.gens->names[i];
    for (std::size_t i = 0; i < p2.gens->size(); ++i)
        order[p1.gens->size() + (std::size_t)p2.gens->order_rank[i]] = second[i];
    GenSetPtr gens = GeneratorSet::make(names, order);
    std::vector<NcPoly> rels;
    for (const auto& r : p1.relations) {
        NcPoly nr(gens, p1.field);
        for (const auto& [w, c] : r.terms()) nr.add_term(w, c);
        rels.push_back(nr);
    }
    int shift = (int)p1.gens->size();
    for (const auto& r : p2.relations) {
        NcPoly nr(gens, p1.field);
        for (const auto& [w, c] : r.terms()) {
            Word sw = w;
            for (int& g : sw) g += shift;
            nr.add_term(sw, c);
        }
        rels.push_back(nr);
    }
    return Presentation(gens, p1.field, p1.s, rels);
}

}  // namespace nchom
