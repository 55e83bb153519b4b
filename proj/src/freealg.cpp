#include "nchom/freealg.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace nchom {

std::shared_ptr<const GeneratorSet> GeneratorSet::make(std::vector<std::string> names,
                                                       std::vector<std::string> order) {
    GeneratorSet g;
    g.names = std::move(names);
    for (std::size_t i = 0; i < g.names.size(); ++i)
        for (std::size_t j = i + 1; j < g.names.size(); ++j)
            if (g.names[i] == g.names[j])
                throw Error(ErrorKind::Parse, "duplicate generator name: " + g.names[i]);
    if (order.empty()) {
        g.order_rank.resize(g.names.size());
        for (std::size_t i = 0; i < g.names.size(); ++i) g.order_rank[i] = (int)i;
    } else {
        if (order.size() != g.names.size())
            throw Error(ErrorKind::Parse, "order list must mention every generator exactly once");
        g.order_rank.assign(g.names.size(), -1);
        for (std::size_t r = 0; r < order.size(); ++r) {
            auto it = std::find(g.names.begin(), g.names.end(), order[r]);
            if (it == g.names.end())
                throw Error(ErrorKind::Parse, "order mentions unknown generator: " + order[r]);
            int idx = (int)(it - g.names.begin());
            if (g.order_rank[idx] != -1)
                throw Error(ErrorKind::Parse, "order mentions generator twice: " + order[r]);
            g.order_rank[idx] = (int)r;
        }
    }
    return std::make_shared<const GeneratorSet>(std::move(g));
}

int GeneratorSet::index_of(const std::string& name) const {
    auto it = std::find(names.begin(), names.end(), name);
    return it == names.end() ? -1 : (int)(it - names.begin());
}

Word word_mul(const Word& a, const Word& b) {
    Word out = a;
    out.insert(out.end(), b.begin(), b.end());
    return out;
}

bool word_contains_factor(const Word& w, const Word& f, std::size_t* pos) {
    if (f.empty() || f.size() > w.size()) return false;
    for (std::size_t i = 0; i + f.size() <= w.size(); ++i) {
        if (std::equal(f.begin(), f.end(), w.begin() + i)) {
            if (pos) *pos = i;
            return true;
        }
    }
    return false;
}

int deglex_cmp(const GeneratorSet& gens, const Word& a, const Word& b) {
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == b[i]) continue;
        // smaller rank = larger generator
        return gens.order_rank[a[i]] < gens.order_rank[b[i]] ? 1 : -1;
    }
    return 0;
}

std::size_t word_index(const GeneratorSet& gens, const Word& w) {
    std::size_t idx = 0;
    for (int g : w) idx = idx * gens.size() + (std::size_t)gens.order_rank[g];
    return idx;
}

Word word_from_index(const GeneratorSet& gens, std::size_t degree, std::size_t index) {
    std::vector<int> by_rank(gens.size());
    for (std::size_t i = 0; i < gens.size(); ++i) by_rank[gens.order_rank[i]] = (int)i;
    Word w(degree);
    for (std::size_t i = degree; i-- > 0;) {
        w[i] = by_rank[index % gens.size()];
        index /= gens.size();
    }
    return w;
}

NcPoly NcPoly::monomial(GenSetPtr gens, const Scalar& c, Word w) {
    NcPoly p(std::move(gens), c.field());
    if (!c.is_zero()) p.terms_.emplace_back(std::move(w), c);
    return p;
}

void NcPoly::check_compatible(const NcPoly& o) const {
    if (gens_ && o.gens_ && !(*gens_ == *o.gens_))
        throw Error(ErrorKind::GeneratorMismatch, "polynomials over different generator sets");
}

bool NcPoly::homogeneous() const {
    for (const auto& [w, c] : terms_)
        if (w.size() != terms_.front().first.size()) return false;
    return true;
}

int NcPoly::degree() const { return terms_.empty() ? -1 : (int)terms_.front().first.size(); }

NcPoly NcPoly::operator+(const NcPoly& o) const {
    check_compatible(o);
    NcPoly out(gens_ ? gens_ : o.gens_, field_);
    const auto& A = terms_;
    const auto& B = o.terms_;
    std::size_t i = 0, j = 0;
    while (i < A.size() || j < B.size()) {
        int c;
        if (i == A.size())
            c = -1;
        else if (j == B.size())
            c = 1;
        else
            c = deglex_cmp(*out.gens_, A[i].first, B[j].first);
        if (c > 0) {
            out.terms_.push_back(A[i++]);
        } else if (c < 0) {
            out.terms_.push_back(B[j++]);
        } else {
            Scalar v = A[i].second + B[j].second;
            if (!v.is_zero()) out.terms_.emplace_back(A[i].first, v);
            ++i, ++j;
        }
    }
    return out;
}

NcPoly NcPoly::operator-() const {
    NcPoly out = *this;
    for (auto& [w, c] : out.terms_) c = -c;
    return out;
}

NcPoly NcPoly::operator-(const NcPoly& o) const { return *this + (-o); }

NcPoly NcPoly::scaled(const Scalar& c) const {
    if (c.is_zero()) return NcPoly(gens_, field_);
    NcPoly out = *this;
    for (auto& [w, v] : out.terms_) v = v * c;
    return out;
}

NcPoly NcPoly::monic() const {
    if (is_zero()) return *this;
    return scaled(leading_coeff().inverse());
}

NcPoly NcPoly::operator*(const NcPoly& o) const {
    check_compatible(o);
    NcPoly out(gens_ ? gens_ : o.gens_, field_);
    for (const auto& [wa, ca] : terms_) {
        NcPoly part(out.gens_, field_);
        for (const auto& [wb, cb] : o.terms_) {
            Scalar v = ca * cb;
            if (!v.is_zero()) part.terms_.emplace_back(word_mul(wa, wb), v);
        }
        // wa * (sorted words) stays sorted, so part is canonical
        out = out + part;
    }
    return out;
}

NcPoly NcPoly::framed(const Word& w1, const Word& w2) const {
    NcPoly out(gens_, field_);
    for (const auto& [w, c] : terms_) out.terms_.emplace_back(word_mul(w1, word_mul(w, w2)), c);
    return out;
}

Scalar NcPoly::coeff(const Word& w) const {
    for (const auto& [u, c] : terms_)
        if (u == w) return c;
    return Scalar::zero(field_);
}

void NcPoly::add_term(const Word& w, const Scalar& c) {
    *this = *this + NcPoly::monomial(gens_, c, w);
}

std::string NcPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [w, c] : terms_) {
        Scalar abs = c;
        bool neg = c.cmp(Scalar::zero(c.field())) < 0 && c.field().rational();
        if (neg) abs = -c;
        if (first) {
            if (neg) os << "-";
            first = false;
        } else {
            os << (neg ? " - " : " + ");
        }
        bool unit_coeff = abs.is_one() && !w.empty();
        if (!unit_coeff) os << abs.str();
        if (!w.empty()) {
            if (!unit_coeff) os << "*";
            // print with exponent folding
            std::size_t i = 0;
            bool firstf = true;
            while (i < w.size()) {
                std::size_t j = i;
                while (j < w.size() && w[j] == w[i]) ++j;
                if (!firstf) os << "*";
                os << gens_->names[w[i]];
                if (j - i > 1) os << "^" << (j - i);
                firstf = false;
                i = j;
            }
        }
    }
    return os.str();
}

Presentation::Presentation(GenSetPtr g, Field f, int degree_s, std::vector<NcPoly> rels, bool validate)
    : gens(std::move(g)), field(f), s(degree_s), relations(std::move(rels)) {
    if (!validate) return;
    if (s < 1) throw Error(ErrorKind::Parse, "relation degree must be positive");
    for (const auto& r : relations) {
        if (r.is_zero() || !r.homogeneous() || r.degree() != s)
            throw Error(ErrorKind::InhomogeneousInput,
                        "every relation must be homogeneous of the declared degree");
    }
    if (!relations.empty()) {
        Matrix m = component_matrix(relations, s);
        if (rank(m) != relations.size())
            throw Error(ErrorKind::Parse, "relations are linearly dependent");
    }
}

std::string Presentation::str() const {
    std::ostringstream os;
    os << (field.rational() ? "field Q" : "field F " + std::to_string(field.p)) << "\n";
    os << "gens";
    for (const auto& n : gens->names) os << " " << n;
    os << "\n";
    bool default_order = true;
    for (std::size_t i = 0; i < gens->size(); ++i)
        if (gens->order_rank[i] != (int)i) default_order = false;
    if (!default_order) {
        std::vector<int> by_rank(gens->size());
        for (std::size_t i = 0; i < gens->size(); ++i) by_rank[gens->order_rank[i]] = (int)i;
        os << "order";
        for (int i : by_rank) os << " " << gens->names[i];
        os << "\n";
    }
    os << "degree " << s << "\n";
    for (const auto& r : relations) os << "rel " << r.str() << "\n";
    return os.str();
}

Matrix component_matrix(const std::vector<NcPoly>& polys, int d) {
    if (polys.empty()) throw Error(ErrorKind::InhomogeneousInput, "component_matrix of empty list");
    const auto& gens = polys.front().gens();
    std::size_t cols = 1;
    for (int i = 0; i < d; ++i) cols *= gens->size();
    std::vector<SparseRow> rows;
    for (const auto& p : polys) {
        if (!p.is_zero() && (!p.homogeneous() || p.degree() != d))
            throw Error(ErrorKind::InhomogeneousInput, "polynomial not homogeneous of requested degree");
        rows.push_back(poly_to_row(p, d));
    }
    return Matrix::from_rows(polys.front().field(), cols, std::move(rows));
}

SparseRow poly_to_row(const NcPoly& p, int d) {
    SparseRow row;
    for (const auto& [w, c] : p.terms()) {
        if ((int)w.size() != d)
            throw Error(ErrorKind::InhomogeneousInput, "polynomial not homogeneous of requested degree");
        row.emplace_back(word_index(*p.gens(), w), c);
    }
    std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    return row;
}

NcPoly poly_from_row(GenSetPtr gens, Field f, int d, const SparseRow& row) {
    NcPoly p(gens, f);
    for (const auto& [idx, c] : row) p.add_term(word_from_index(*gens, d, idx), c);
    return p;
}

namespace {

struct Lexer {
    const std::string& s;
    std::size_t pos = 0;
    void skip() {
        while (pos < s.size() && std::isspace((unsigned char)s[pos])) ++pos;
    }
    bool eof() {
        skip();
        return pos >= s.size();
    }
    char peek() {
        skip();
        return pos < s.size() ? s[pos] : '\0';
    }
    char get() {
        skip();
        return s[pos++];
    }
    [[noreturn]] void fail(const std::string& what) {
        throw Error(ErrorKind::Parse, "parse error at position " + std::to_string(pos) + ": " + what);
    }
    mpz_class integer() {
        skip();
        std::size_t start = pos;
        while (pos < s.size() && std::isdigit((unsigned char)s[pos])) ++pos;
        if (pos == start) fail("expected integer");
        return mpz_class(s.substr(start, pos - start));
    }
    std::string ident() {
        skip();
        std::size_t start = pos;
        while (pos < s.size() && (std::isalnum((unsigned char)s[pos]) || s[pos] == '_' || s[pos] == '\'')) ++pos;
        if (pos == start) fail("expected identifier");
        return s.substr(start, pos - start);
    }
};

}  // namespace

NcPoly parse_poly(GenSetPtr gens, Field f, const std::string& text) {
    Lexer lx{text};
    NcPoly acc(gens, f);
    bool first = true;
    while (!lx.eof()) {
        bool neg = false;
        char c = lx.peek();
        if (c == '+' || c == '-') {
            neg = c == '-';
            lx.get();
        } else if (!first) {
            lx.fail("expected '+' or '-'");
        }
        // term := coeff ['*' word] | word
        Scalar coeff = Scalar::one(f);
        Word w;
        bool have_word = false, have_coeff = false;
        if (std::isdigit((unsigned char)lx.peek())) {
            mpz_class num = lx.integer();
            mpz_class den = 1;
            if (lx.peek() == '/') {
                lx.get();
                den = lx.integer();
            }
            coeff = Scalar(f, num, den);
            have_coeff = true;
            if (lx.peek() == '*') lx.get();  // optional separator before word
        }
        while (std::isalpha((unsigned char)lx.peek()) || lx.peek() == '_') {
            std::string name = lx.ident();
            int idx = gens->index_of(name);
            if (idx < 0) lx.fail("unknown generator '" + name + "'");
            long e = 1;
            if (lx.peek() == '^') {
                lx.get();
                e = lx.integer().get_si();
                if (e < 0) lx.fail("negative exponent");
            }
            for (long k = 0; k < e; ++k) w.push_back(idx);
            have_word = true;
            if (lx.peek() == '*') {
                lx.get();
                if (!std::isalpha((unsigned char)lx.peek()) && lx.peek() != '_')
                    lx.fail("expected generator after '*'");
            } else {
                break;
            }
        }
        if (!have_word && !have_coeff) lx.fail("expected term");
        if (neg) coeff = -coeff;
        acc = acc + NcPoly::monomial(gens, coeff, w);
        first = false;
    }
    if (first) throw Error(ErrorKind::Parse, "empty polynomial");
    return acc;
}

}  // namespace nchom
