#include "nchom/io.hpp"

#include <fstream>
#include <sstream>

namespace nchom {

namespace {

struct Lines {
    std::vector<std::pair<std::string, std::string>> entries;  // (keyword, rest)
};

Lines split_lines(const std::string& text) {
    Lines out;
    std::istringstream is(text);
    std::string line;
    while (std::getline(is, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        std::istringstream ls(line);
        std::string kw;
        if (!(ls >> kw)) continue;
        std::string rest;
        std::getline(ls, rest);
        auto start = rest.find_first_not_of(" \t");
        rest = start == std::string::npos ? "" : rest.substr(start);
        auto end = rest.find_last_not_of(" \t\r");
        if (end != std::string::npos) rest = rest.substr(0, end + 1);
        out.entries.emplace_back(kw, rest);
    }
    return out;
}

std::vector<std::string> split_words(const std::string& s) {
    std::istringstream is(s);
    std::vector<std::string> out;
    std::string w;
    while (is >> w) out.push_back(w);
    return out;
}

Scalar parse_scalar(Field f, const std::string& text) {
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) return Scalar(f, mpz_class(text), mpz_class(1));
        return Scalar(f, mpz_class(text.substr(0, slash)), mpz_class(text.substr(slash + 1)));
    } catch (const std::invalid_argument&) {
        throw Error(ErrorKind::Parse, "bad scalar literal: " + text);
    }
}

struct Header {
    Field field;
    GenSetPtr gens;
    int degree = 0;
    Lines lines;
};

Header parse_header(const std::string& text) {
    Header h;
    h.lines = split_lines(text);
    bool have_field = false, have_gens = false, have_degree = false;
    std::vector<std::string> names, order;
    for (const auto& [kw, rest] : h.lines.entries) {
        if (kw == "field") {
            auto ws = split_words(rest);
            if (ws.size() == 1 && ws[0] == "Q")
                h.field = Field::Q();
            else if (ws.size() == 2 && ws[0] == "F")
                h.field = Field::Fp(std::stol(ws[1]));
            else
                throw Error(ErrorKind::Parse, "field must be 'Q' or 'F <prime>'");
            have_field = true;
        } else if (kw == "gens") {
            names = split_words(rest);
            if (names.empty()) throw Error(ErrorKind::Parse, "gens line needs at least one name");
            have_gens = true;
        } else if (kw == "order") {
            order = split_words(rest);
        } else if (kw == "degree") {
            h.degree = std::stoi(rest);
            have_degree = true;
        }
    }
    if (!have_field) throw Error(ErrorKind::Parse, "missing 'field' line");
    if (!have_gens) throw Error(ErrorKind::Parse, "missing 'gens' line");
    if (!have_degree) throw Error(ErrorKind::Parse, "missing 'degree' line");
    h.gens = GeneratorSet::make(names, order);
    return h;
}

}  // namespace

Presentation parse_presentation(const std::string& text) {
    Header h = parse_header(text);
    std::vector<NcPoly> rels;
    for (const auto& [kw, rest] : h.lines.entries)
        if (kw == "rel") rels.push_back(parse_poly(h.gens, h.field, rest));
    return Presentation(h.gens, h.field, h.degree, std::move(rels));
}

TwistedPotential parse_potential(const std::string& text) {
    Header h = parse_header(text);
    if (h.gens->size() != 2) throw Error(ErrorKind::Parse, "potential files need exactly two generators");
    std::optional<Matrix> sigma;
    std::optional<NcPoly> w;
    for (const auto& [kw, rest] : h.lines.entries) {
        if (kw == "sigma") {
            auto ws = split_words(rest);
            if (ws.size() != 4) throw Error(ErrorKind::Parse, "sigma needs four scalars (row-major 2x2)");
            Matrix m(h.field, 2, 2);
            m.set(0, 0, parse_scalar(h.field, ws[0]));
            m.set(0, 1, parse_scalar(h.field, ws[1]));
            m.set(1, 0, parse_scalar(h.field, ws[2]));
            m.set(1, 1, parse_scalar(h.field, ws[3]));
            sigma = m;
        } else if (kw == "w") {
            w = parse_poly(h.gens, h.field, rest);
        }
    }
    if (!sigma) throw Error(ErrorKind::Parse, "missing 'sigma' line");
    if (!w) throw Error(ErrorKind::Parse, "missing 'w' line");
    if (!w->is_zero() && (!w->homogeneous() || w->degree() != h.degree))
        throw Error(ErrorKind::Parse, "potential must be homogeneous of the declared degree");
    return TwistedPotential{h.gens, *w, *sigma};
}

std::string potential_to_text(const TwistedPotential& tp) {
    std::ostringstream os;
    Field f = tp.w.field();
    os << (f.rational() ? "field Q" : "field F " + std::to_string(f.p)) << "\n";
    os << "gens";
    for (const auto& n : tp.gens->names) os << " " << n;
    os << "\n";
    os << "degree " << tp.w.degree() << "\n";
    os << "sigma " << tp.sigma.at(0, 0).str() << " " << tp.sigma.at(0, 1).str() << " "
       << tp.sigma.at(1, 0).str() << " " << tp.sigma.at(1, 1).str() << "\n";
    os << "w " << tp.w.str() << "\n";
    return os.str();
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::Parse, "cannot open file: " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

Scalar parse_scalar_text(Field f, const std::string& text) { return parse_scalar(f, text); }

Presentation load_presentation(const std::string& path) { return parse_presentation(read_file(path)); }
TwistedPotential load_potential(const std::string& path) { return parse_potential(read_file(path)); }

}  // namespace nchom
