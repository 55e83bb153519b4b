#pragma once

#include "nchom/freealg.hpp"

namespace nchom {

// Degree-truncated two-sided Groebner basis of a homogeneous ideal.
// Elements are monic, interreduced, with factor-minimal tips. complete_to is
// the largest degree d <= bound such that every overlap of degree <= d has
// been resolved; when no overlap of any degree remains, closed is true and
// the basis is a complete Groebner basis of the ideal.
struct TruncatedGB {
    Presentation presentation;
    int bound = 0;
    std::vector<NcPoly> elements;
    std::vector<Word> tips;  // leading words, sorted by deglex
    int complete_to = 0;
    bool closed = false;

    bool word_is_normal(const Word& w) const;
};

TruncatedGB truncated_groebner(const Presentation& p, int bound);

// Fully reduces f modulo the basis: repeatedly rewrites the largest reducible
// word, leftmost tip occurrence first. The result is certified only when
// deg f <= complete_to.
NcPoly normal_form(const NcPoly& f, const TruncatedGB& gb);

bool is_complete_up_to(const TruncatedGB& gb, int d);

// Normal words of the given degree in increasing word_index order.
std::vector<Word> normal_words(const TruncatedGB& gb, int d);

}  // namespace nchom
