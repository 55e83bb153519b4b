#include "nchom/hilbert.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace nchom {

Series Series::constant(const Int& v, int trunc) {
    Series s;
    s.c.assign((std::size_t)trunc + 1, 0);
    s.c[0] = v;
    return s;
}

std::string Series::str() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < c.size(); ++i) os << (i ? "," : "") << c[i].get_str();
    return os.str();
}

std::string RationalSeries::str() const {
    auto one = [](const std::vector<Int>& p) {
        std::ostringstream os;
        os << "[";
        for (std::size_t i = 0; i < p.size(); ++i) os << (i ? "," : "") << p[i].get_str();
        os << "]";
        return os.str();
    };
    return one(num) + "/" + one(den);
}

std::vector<Int> poly_mul_z(const std::vector<Int>& a, const std::vector<Int>& b) {
    if (a.empty() || b.empty()) return {};
    std::vector<Int> out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    while (!out.empty() && out.back() == 0) out.pop_back();
    return out;
}

std::vector<Int> poly_sub_z(const std::vector<Int>& a, const std::vector<Int>& b) {
    std::vector<Int> out = a;
    if (out.size() < b.size()) out.resize(b.size(), 0);
    for (std::size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
    while (!out.empty() && out.back() == 0) out.pop_back();
    return out;
}

bool poly_eq_z(const std::vector<Int>& a, const std::vector<Int>& b) {
    return poly_sub_z(a, b).empty();
}

Series expand_rational(const RationalSeries& r, int D) {
    if (r.den.empty() || r.den[0] == 0)
        throw Error(ErrorKind::ZeroConstantTerm, "rational series with zero constant denominator");
    if (r.den[0] != 1 && r.den[0] != -1)
        throw Error(ErrorKind::NonUnitConstantTerm, "denominator constant term must be a unit");
    Series out;
    out.c.assign((std::size_t)D + 1, 0);
    for (int n = 0; n <= D; ++n) {
        Int acc = (std::size_t)n < r.num.size() ? r.num[(std::size_t)n] : Int(0);
        for (std::size_t k = 1; k < r.den.size() && (int)k <= n; ++k)
            acc -= r.den[k] * out.c[(std::size_t)(n - (int)k)];
        out.c[(std::size_t)n] = acc * r.den[0];  // den[0] = +-1
    }
    return out;
}

Series series_mul(const Series& a, const Series& b) {
    if (a.trunc() != b.trunc())
        throw Error(ErrorKind::TruncationMismatch, "series truncations differ");
    Series out;
    out.c.assign(a.c.size(), 0);
    for (std::size_t i = 0; i < a.c.size(); ++i) {
        if (a.c[i] == 0) continue;
        for (std::size_t j = 0; i + j < out.c.size(); ++j) out.c[i + j] += a.c[i] * b.c[j];
    }
    return out;
}

Series series_inverse(const Series& a) {
    if (a.c.empty() || (a.c[0] != 1 && a.c[0] != -1))
        throw Error(ErrorKind::NonUnitConstantTerm, "series constant term must be a unit");
    Series out;
    out.c.assign(a.c.size(), 0);
    out.c[0] = a.c[0];
    for (std::size_t n = 1; n < a.c.size(); ++n) {
        Int acc = 0;
        for (std::size_t k = 1; k <= n; ++k) acc += a.c[k] * out.c[n - k];
        out.c[n] = -acc * a.c[0];
    }
    return out;
}

Series series_compose_power(const Series& a, int s, int D) {
    Series out;
    out.c.assign((std::size_t)D + 1, 0);
    for (std::size_t i = 0; i < a.c.size(); ++i) {
        std::size_t d = i * (std::size_t)s;
        if ((int)d > D) break;
        out.c[d] = a.c[i];
    }
    return out;
}

Series series_shift(const Series& a, int k) {
    Series out;
    out.c.assign(a.c.size(), 0);
    for (std::size_t i = 0; i + (std::size_t)k < a.c.size(); ++i) out.c[i + (std::size_t)k] = a.c[i];
    return out;
}

namespace {

Series series_sub(const Series& a, const Series& b) {
    Series out = a;
    for (std::size_t i = 0; i < out.c.size(); ++i) out.c[i] -= b.c[i];
    return out;
}

// Factor-avoidance automaton: states are proper prefixes of tips not already
// containing a tip; transitions follow the longest suffix that is again such
// a prefix, completing a tip is absorbing-dead.
struct Automaton {
    int n_states = 0;
    std::vector<std::vector<int>> trans;  // trans[state][letter], -1 = dead
};

Automaton build_automaton(const std::vector<Word>& tips, int n_gens) {
    std::map<Word, int> state_of;
    std::vector<Word> prefixes;
    auto contains_tip = [&](const Word& w) {
        for (const auto& t : tips)
            if (word_contains_factor(w, t)) return true;
        return false;
    };
    state_of[{}] = 0;
    prefixes.push_back({});
    for (const auto& t : tips) {
        for (std::size_t k = 1; k < t.size(); ++k) {
            Word p(t.begin(), t.begin() + k);
            if (contains_tip(p)) continue;
            if (!state_of.count(p)) {
                state_of[p] = (int)prefixes.size();
                prefixes.push_back(p);
            }
        }
    }
    Automaton a;
    a.n_states = (int)prefixes.size();
    a.trans.assign((std::size_t)a.n_states, std::vector<int>((std::size_t)n_gens, -1));
    for (int s = 0; s < a.n_states; ++s) {
        for (int g = 0; g < n_gens; ++g) {
            Word w = prefixes[(std::size_t)s];
            w.push_back(g);
            if (contains_tip(w)) continue;
            for (std::size_t start = 0; start <= w.size(); ++start) {
                Word suf(w.begin() + (long)start, w.end());
                auto it = state_of.find(suf);
                if (it != state_of.end()) {
                    a.trans[(std::size_t)s][(std::size_t)g] = it->second;
                    break;
                }
            }
        }
    }
    return a;
}

}  // namespace

Series count_normal_words(const std::vector<Word>& tips, int n_gens, int D) {
    for (const auto& t : tips)
        if (t.empty()) return Series(std::vector<Int>((std::size_t)D + 1, 0));
    Automaton a = build_automaton(tips, n_gens);
    std::vector<Int> v((std::size_t)a.n_states, 0);
    v[0] = 1;
    Series out;
    out.c.assign((std::size_t)D + 1, 0);
    out.c[0] = 1;
    for (int d = 1; d <= D; ++d) {
        std::vector<Int> nv((std::size_t)a.n_states, 0);
        for (int s = 0; s < a.n_states; ++s) {
            if (v[(std::size_t)s] == 0) continue;
            for (int g = 0; g < n_gens; ++g) {
                int t = a.trans[(std::size_t)s][(std::size_t)g];
                if (t >= 0) nv[(std::size_t)t] += v[(std::size_t)s];
            }
        }
        v = std::move(nv);
        Int total = 0;
        for (const auto& x : v) total += x;
        out.c[(std::size_t)d] = total;
    }
    return out;
}

RationalSeries normal_words_rational(const std::vector<Word>& tips, int n_gens) {
    Automaton a = build_automaton(tips, n_gens);
    int n = a.n_states;
    // det(I - tA) via the Faddeev-LeVerrier recursion for chi_A, then reverse.
    std::vector<std::vector<mpq_class>> A((std::size_t)n, std::vector<mpq_class>((std::size_t)n, 0));
    for (int s = 0; s < n; ++s)
        for (int g = 0; g < n_gens; ++g) {
            int t = a.trans[(std::size_t)s][(std::size_t)g];
            if (t >= 0) A[(std::size_t)s][(std::size_t)t] += 1;
        }
    auto matmul = [&](const std::vector<std::vector<mpq_class>>& X) {
        std::vector<std::vector<mpq_class>> out((std::size_t)n, std::vector<mpq_class>((std::size_t)n, 0));
        for (int i = 0; i < n; ++i)
            for (int l = 0; l < n; ++l) {
                if (A[(std::size_t)i][(std::size_t)l] == 0) continue;
                for (int j = 0; j < n; ++j)
                    out[(std::size_t)i][(std::size_t)j] +=
                        A[(std::size_t)i][(std::size_t)l] * X[(std::size_t)l][(std::size_t)j];
            }
        return out;
    };
    std::vector<mpq_class> c((std::size_t)n + 1, 0);
    c[0] = 1;
    std::vector<std::vector<mpq_class>> M((std::size_t)n, std::vector<mpq_class>((std::size_t)n, 0));
    for (int i = 0; i < n; ++i) M[(std::size_t)i][(std::size_t)i] = 1;
    for (int k = 1; k <= n; ++k) {
        if (k > 1) {
            M = matmul(M);
            for (int i = 0; i < n; ++i) M[(std::size_t)i][(std::size_t)i] += c[(std::size_t)(k - 1)];
        }
        auto AM = matmul(M);
        mpq_class tr = 0;
        for (int i = 0; i < n; ++i) tr += AM[(std::size_t)i][(std::size_t)i];
        c[(std::size_t)k] = -tr / k;
    }
    RationalSeries r;
    r.den.resize((std::size_t)n + 1);
    for (int k = 0; k <= n; ++k) r.den[(std::size_t)k] = Int(c[(std::size_t)k].get_num());
    while (!r.den.empty() && r.den.back() == 0) r.den.pop_back();
    Series h = count_normal_words(tips, n_gens, n);
    auto prod = poly_mul_z(r.den, h.c);
    if (prod.size() > (std::size_t)n + 1) prod.resize((std::size_t)n + 1);
    while (!prod.empty() && prod.back() == 0) prod.pop_back();
    r.num = prod;
    return r;
}

Series ideal_dims_bruteforce(const Presentation& p, int D, std::size_t size_guard) {
    std::size_t n = p.n_gens();
    std::size_t top = 1;
    for (int d = 0; d < D; ++d) {
        top *= n;
        if (top > size_guard)
            throw Error(ErrorKind::SizeGuardExceeded, "word space too large for brute-force oracle");
    }
    Series out;
    out.c.assign((std::size_t)D + 1, 0);
    out.c[0] = 1;
    std::size_t dim_words = 1;
    if (p.relations.empty()) {
        for (int d = 1; d <= D; ++d) {
            dim_words *= n;
            out.c[(std::size_t)d] = Int((unsigned long)dim_words);
        }
        return out;
    }
    const bool fast = !p.field.rational();
    const long prime = p.field.p;
    std::vector<SparseRow> prev_sparse;
    std::vector<std::vector<long>> prev_dense;
    for (int d = 1; d <= D; ++d) {
        dim_words *= n;
        if (d < p.s) {
            out.c[(std::size_t)d] = Int((unsigned long)dim_words);
            continue;
        }
        std::size_t block = dim_words / n;
        std::size_t right_count = 1;
        for (int k = 0; k < d - p.s; ++k) right_count *= n;
        std::size_t rk = 0;
        if (fast) {
            FpDenseRref builder(prime, dim_words);
            std::vector<std::vector<long>> kept;
            auto feed = [&](std::vector<long> row) {
                std::vector<long> copy = row;
                if (builder.add_row(std::move(row))) kept.push_back(std::move(copy));
            };
            for (const auto& b : prev_dense)
                for (std::size_t i = 0; i < n; ++i) {
                    std::vector<long> row(dim_words, 0);
                    std::copy(b.begin(), b.end(), row.begin() + (long)(i * block));
                    feed(std::move(row));
                }
            for (const auto& rel : p.relations) {
                SparseRow base = poly_to_row(rel, p.s);
                for (std::size_t w = 0; w < right_count; ++w) {
                    std::vector<long> row(dim_words, 0);
                    for (const auto& [col, v] : base)
                        row[col * right_count + w] = mpz_get_si(v.value().get_num().get_mpz_t());
                    feed(std::move(row));
                }
            }
            rk = builder.rank();
            prev_dense = std::move(kept);
        } else {
            RrefBuilder builder(p.field, dim_words);
            for (const auto& b : prev_sparse)
                for (std::size_t i = 0; i < n; ++i) {
                    SparseRow row = b;
                    for (auto& [col, v] : row) col += i * block;
                    builder.add_row(std::move(row));
                }
            for (const auto& rel : p.relations) {
                SparseRow base = poly_to_row(rel, p.s);
                for (std::size_t w = 0; w < right_count; ++w) {
                    SparseRow row = base;
                    for (auto& [col, v] : row) col = col * right_count + w;
                    builder.add_row(std::move(row));
                }
            }
            rk = builder.rank();
            prev_sparse = builder.echelon_rows();
        }
        out.c[(std::size_t)d] = Int((unsigned long)(dim_words - rk));
    }
    return out;
}

Series gb_dims(const TruncatedGB& gb, int D) {
    return count_normal_words(gb.tips, (int)gb.presentation.n_gens(), D);
}

bool koszul_series_identity(const Series& hA, const Series& hM, const Series& hL, int s) {
    if (hA.trunc() != hM.trunc() || hA.trunc() != hL.trunc())
        throw Error(ErrorKind::TruncationMismatch, "series truncations differ");
    int D = hL.trunc();
    Series lhs = series_mul(series_sub(series_compose_power(hA, s, D),
                                       series_shift(series_compose_power(hM, s, D), 1)),
                            hL);
    for (int d = 0; d <= D; ++d)
        if (lhs.at(d) != (d == 0 ? 1 : 0)) return false;
    return true;
}

}  // namespace nchom
