#include "nchom/groebner.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <tuple>

namespace nchom {

namespace {

// Reduce f against a list of monic elements; largest reducible word first,
// leftmost occurrence among the tips. Terms ahead of the rewriting frontier
// are already normal and never revisited: a rewrite only introduces words
// smaller than the one it removes.
NcPoly reduce_full(NcPoly f, const std::vector<NcPoly>& basis) {
    std::size_t frontier = 0;
    while (frontier < f.terms().size()) {
        const auto& [w, c] = f.terms()[frontier];
        std::size_t best_pos = 0;
        int best_elem = -1;
        for (std::size_t e = 0; e < basis.size(); ++e) {
            if (basis[e].is_zero()) continue;
            std::size_t pos;
            if (word_contains_factor(w, basis[e].leading_word(), &pos)) {
                if (best_elem < 0 || pos < best_pos) {
                    best_elem = (int)e;
                    best_pos = pos;
                }
            }
        }
        if (best_elem < 0) {
            ++frontier;
            continue;
        }
        const NcPoly& g = basis[(std::size_t)best_elem];
        Word left(w.begin(), w.begin() + (long)best_pos);
        Word right(w.begin() + (long)best_pos + (long)g.leading_word().size(), w.end());
        Scalar coeff = c;
        f = f - g.framed(left, right).scaled(coeff);
    }
    return f;
}

struct Overlap {
    int degree;
    std::size_t i, j;      // element indices: suffix of tip_i = prefix of tip_j
    std::size_t k;         // overlap length
    std::size_t serial;    // insertion order for determinism
    bool operator<(const Overlap& o) const {
        return std::tie(degree, serial, i, j, k) < std::tie(o.degree, o.serial, o.i, o.j, o.k);
    }
};

// All proper overlaps between tips a (index i) and b (index j):
// words w = a + tail(b) with suffix(a, k) == prefix(b, k), 0 < k < min(|a|,|b|)
// plus the equal-length self case k < |a|.
std::vector<std::pair<int, std::size_t>> overlap_lengths(const Word& a, const Word& b) {
    std::vector<std::pair<int, std::size_t>> out;
    for (std::size_t k = 1; k < std::min(a.size(), b.size()); ++k) {
        if (std::equal(a.end() - k, a.end(), b.begin()))
            out.emplace_back((int)(a.size() + b.size() - k), k);
    }
    return out;
}

}  // namespace

bool TruncatedGB::word_is_normal(const Word& w) const {
    for (const auto& t : tips)
        if (word_contains_factor(w, t)) return false;
    return true;
}

TruncatedGB truncated_groebner(const Presentation& p, int bound) {
    if (bound < p.s && !p.relations.empty())
        throw Error(ErrorKind::IllegalParams, "truncation bound below relation degree");
    TruncatedGB gb;
    gb.presentation = p;
    gb.bound = bound;

    std::vector<NcPoly> basis;
    // seed: interreduce the relations
    for (const auto& r : p.relations) {
        NcPoly red = reduce_full(r, basis);
        if (!red.is_zero()) basis.push_back(red.monic());
    }

    auto interreduce = [&]() {
        bool again = true;
        while (again) {
            again = false;
            for (std::size_t e = 0; e < basis.size(); ++e) {
                if (basis[e].is_zero()) continue;
                NcPoly self = basis[e];
                std::vector<NcPoly> others;
                others.reserve(basis.size());
                for (std::size_t k = 0; k < basis.size(); ++k)
                    if (k != e) others.push_back(basis[k]);
                NcPoly red = reduce_full(self, others);
                if (!(red == self)) {
                    basis[e] = red.is_zero() ? red : red.monic();
                    again = true;
                }
            }
        }
        std::vector<NcPoly> clean;
        for (auto& b : basis)
            if (!b.is_zero()) clean.push_back(b);
        basis = std::move(clean);
    };
    interreduce();

    std::set<Overlap> queue;
    std::size_t serial = 0;
    auto push_overlaps = [&](std::size_t i, std::size_t j) {
        for (auto [deg, k] : overlap_lengths(basis[i].leading_word(), basis[j].leading_word()))
            if (deg <= bound) queue.insert({deg, i, j, k, serial++});
    };
    auto rebuild_queue = [&](int above_degree) {
        queue.clear();
        serial = 0;
        for (std::size_t i = 0; i < basis.size(); ++i)
            for (std::size_t j = 0; j < basis.size(); ++j)
                for (auto [deg, k] : overlap_lengths(basis[i].leading_word(), basis[j].leading_word()))
                    if (deg <= bound && deg > above_degree) queue.insert({deg, i, j, k, serial++});
    };
    rebuild_queue(0);

    while (!queue.empty()) {
        int d = queue.begin()->degree;
        bool added = false;
        while (!queue.empty() && queue.begin()->degree == d) {
            Overlap ov = *queue.begin();
            queue.erase(queue.begin());
            const NcPoly& gi = basis[ov.i];
            const NcPoly& gj = basis[ov.j];
            const Word& a = gi.leading_word();
            const Word& b = gj.leading_word();
            // w = a * tail = head * b ; S = gi * tail - head * gj
            Word tail(b.begin() + ov.k, b.end());
            Word head(a.begin(), a.end() - ov.k);
            NcPoly s = gi.framed({}, tail) - gj.framed(head, {});
            NcPoly red = reduce_full(s, basis);
            if (!red.is_zero()) {
                basis.push_back(red.monic());
                added = true;
                std::size_t n = basis.size() - 1;
                for (std::size_t e = 0; e < basis.size(); ++e) {
                    push_overlaps(e, n);
                    if (e != n) push_overlaps(n, e);
                }
            }
        }
        if (added) {
            interreduce();
            rebuild_queue(d);
        }
        gb.complete_to = std::min(d, bound);
    }
    gb.complete_to = bound;

    gb.elements = basis;
    for (const auto& e : basis) gb.tips.push_back(e.leading_word());
    std::sort(gb.tips.begin(), gb.tips.end(),
              [&](const Word& a, const Word& b) { return deglex_cmp(*p.gens, a, b) < 0; });

    // closed iff no overlap among the final tips exceeds the bound
    gb.closed = true;
    for (const auto& a : gb.tips)
        for (const auto& b : gb.tips)
            for (auto [deg, k] : overlap_lengths(a, b))
                if (deg > bound) gb.closed = false;
    return gb;
}

NcPoly normal_form(const NcPoly& f, const TruncatedGB& gb) {
    return reduce_full(f, gb.elements);
}

bool is_complete_up_to(const TruncatedGB& gb, int d) { return d <= gb.complete_to; }

std::vector<Word> normal_words(const TruncatedGB& gb, int d) {
    std::vector<Word> out;
    const auto& gens = *gb.presentation.gens;
    // depth-first enumeration in word_index order, pruning on forbidden suffixes
    Word cur;
    auto suffix_forbidden = [&](const Word& w) {
        for (const auto& t : gb.tips) {
            if (t.size() <= w.size() && std::equal(t.begin(), t.end(), w.end() - t.size())) return true;
        }
        return false;
    };
    std::vector<int> by_rank(gens.size());
    for (std::size_t i = 0; i < gens.size(); ++i) by_rank[gens.order_rank[i]] = (int)i;
    std::function<void()> rec = [&]() {
        if ((int)cur.size() == d) {
            out.push_back(cur);
            return;
        }
        for (int g : by_rank) {
            cur.push_back(g);
            if (!suffix_forbidden(cur)) rec();
            cur.pop_back();
        }
    };
    rec();
    return out;
}

}  // namespace nchom
