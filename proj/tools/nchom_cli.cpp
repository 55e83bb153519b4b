#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <iostream>

#include "nchom/classify.hpp"
#include "nchom/io.hpp"

using nlohmann::json;
using namespace nchom;

namespace {

json series_json(const Series& s) {
    json a = json::array();
    for (const auto& c : s.c) a.push_back(c.get_str());
    return a;
}

json rational_json(const RationalSeries& r) {
    json num = json::array(), den = json::array();
    for (const auto& c : r.num) num.push_back(c.get_str());
    for (const auto& c : r.den) den.push_back(c.get_str());
    return json{{"num", num}, {"den", den}};
}

json verdict_json(const KoszulVerdict& v) {
    json out;
    switch (v.status) {
        case KoszulStatus::CertifiedNotKoszul:
            out["status"] = "certified_not_koszul";
            out["evidence"] = {{"kind", v.evidence},
                               {"failing_degree", v.failing_degree},
                               {"offending_coefficient", v.offending_coeff.get_str()}};
            break;
        case KoszulStatus::VerifiedKoszulUpTo:
            out["status"] = "verified_koszul_up_to";
            out["evidence"] = {{"kind", v.evidence}, {"window", v.verified_to}};
            break;
        case KoszulStatus::CertifiedKoszul:
            out["status"] = "certified_koszul";
            out["evidence"] = {{"kind", v.certificate}};
            break;
    }
    return out;
}

json outcome_json(const ClassificationOutcome& o) {
    json params;
    params["m"] = o.m;
    params["s"] = o.s;
    if (o.p) params["p"] = o.p->str();
    if (o.nu) {
        params["nu"] = o.nu->jordan ? json{{"kind", "jordan"}, {"lambda", o.nu->l1.str()}}
                                    : json{{"kind", "diagonal"},
                                           {"lambda1", o.nu->l1.str()},
                                           {"lambda2", o.nu->l2.str()}};
    }
    if (o.potential_case) params["potential_case"] = std::string(1, *o.potential_case);
    json out{{"schema", 1},
             {"condition", o.condition},
             {"a_class", o.a_class.name()},
             {"bimodule", bimod_kind_name(o.m_class.kind)},
             {"params", params}};
    if (o.koszul) out["koszul"] = verdict_json(*o.koszul);
    return out;
}

int degree_bound(int cli_value, int s) {
    if (cli_value > 0) return cli_value;
    if (const char* env = std::getenv("NCHOM_DEGREE_BOUND")) {
        int v = std::atoi(env);
        if (v > 0) return v;
    }
    return default_degree_bound(s);
}

void emit(bool as_json, const json& j, const std::string& text) {
    if (as_json)
        std::cout << j.dump(2) << "\n";
    else
        std::cout << text;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact computations for s-homogeneous algebras with two relations"};
    app.require_subcommand(1);
    app.fallthrough();
    bool as_json = false;
    app.add_flag("--json", as_json, "machine-readable JSON output");

    std::string file, file2, rational_spec, kind = "diag", field_spec = "Q", l1s = "1", l2s = "1",
                            lam = "1", f_override;
    int D = 0, degree = 16, s_param = 3;
    bool no_verdict = false;

    auto* dual_cmd = app.add_subcommand("dual", "s-homogeneous dual of a presentation");
    dual_cmd->add_option("file", file)->required();

    auto* gb_cmd = app.add_subcommand("gb", "truncated Groebner basis");
    gb_cmd->add_option("file", file)->required();
    gb_cmd->add_option("-D,--degree-bound", D);

    auto* hil_cmd = app.add_subcommand("hilbert", "Hilbert series of the quotient");
    hil_cmd->add_option("file", file);
    hil_cmd->add_option("-D,--degree-bound", D);
    hil_cmd->add_option("--rational", rational_spec, "expand num;den coefficient lists instead");
    hil_cmd->add_option("--degree", degree, "expansion degree for --rational");

    auto* ver_cmd = app.add_subcommand("veronese", "dual Veronese ring and bimodule data");
    ver_cmd->add_option("file", file)->required();

    auto* cls_cmd = app.add_subcommand("classify", "structural classification of a two-relation algebra");
    cls_cmd->add_option("file", file)->required();
    cls_cmd->add_option("-D,--degree-bound", D);
    cls_cmd->add_flag("--no-verdict", no_verdict, "skip the Koszulity verdict");

    auto* kos_cmd = app.add_subcommand("koszul", "Koszulity verdict");
    kos_cmd->add_option("file", file)->required();
    kos_cmd->add_option("-D,--degree-bound", D);

    auto* nkz_cmd = app.add_subcommand("nkoz", "non-Koszulity coefficient of the dual");
    nkz_cmd->add_option("file", file)->required();

    auto* pch_cmd = app.add_subcommand("potential-check", "verify a twisted potential file");
    pch_cmd->add_option("file", file)->required();

    auto* pgn_cmd = app.add_subcommand("potential-gen", "generate a twisted potential");
    pgn_cmd->add_option("--kind", kind, "diag or jordan")->check(CLI::IsMember({"diag", "jordan"}));
    pgn_cmd->add_option("--s", s_param, "relation degree (potential degree s+1)");
    pgn_cmd->add_option("--field", field_spec, "Q or F:<p>");
    pgn_cmd->add_option("--l1", l1s);
    pgn_cmd->add_option("--l2", l2s);
    pgn_cmd->add_option("--lambda", lam);

    auto* fpr_cmd = app.add_subcommand("free-product", "free product of two presentations");
    fpr_cmd->add_option("file", file)->required();
    fpr_cmd->add_option("file2", file2)->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (*dual_cmd) {
            Presentation p = load_presentation(file);
            Presentation d = s_dual(p);
            emit(as_json, json{{"schema", 1}, {"dual", d.str()}}, d.str());
        } else if (*gb_cmd) {
            Presentation p = load_presentation(file);
            int bound = degree_bound(D, p.s);
            TruncatedGB gb = truncated_groebner(p, bound);
            json tips = json::array();
            std::ostringstream text;
            text << "# basis elements (complete to degree " << gb.complete_to
                 << (gb.closed ? ", closed)" : ", truncated)") << "\n";
            for (const auto& e : gb.elements) text << e.str() << "\n";
            text << "# tips\n";
            for (const auto& t : gb.tips) {
                NcPoly tw = NcPoly::monomial(p.gens, Scalar::one(p.field), t);
                tips.push_back(tw.str());
                text << tw.str() << "\n";
            }
            json elems = json::array();
            for (const auto& e : gb.elements) elems.push_back(e.str());
            emit(as_json,
                 json{{"schema", 1},
                      {"complete_to", gb.complete_to},
                      {"closed", gb.closed},
                      {"elements", elems},
                      {"tips", tips}},
                 text.str());
        } else if (*hil_cmd) {
            if (!rational_spec.empty()) {
                auto semi = rational_spec.find(';');
                if (semi == std::string::npos)
                    throw Error(ErrorKind::Parse, "--rational expects 'num;den' coefficient lists");
                auto parse_list = [&](const std::string& t) {
                    std::vector<Int> out;
                    std::istringstream is(t);
                    std::string item;
                    while (std::getline(is, item, ',')) out.emplace_back(item);
                    return out;
                };
                RationalSeries r{parse_list(rational_spec.substr(0, semi)),
                                 parse_list(rational_spec.substr(semi + 1))};
                Series s = expand_rational(r, degree);
                emit(as_json, json{{"schema", 1}, {"series", series_json(s)}}, s.str() + "\n");
            } else {
                if (file.empty()) throw Error(ErrorKind::Parse, "hilbert needs a file or --rational");
                Presentation p = load_presentation(file);
                int bound = degree_bound(D, p.s);
                TruncatedGB gb = truncated_groebner(p, bound);
                Series s = gb_dims(gb, bound);
                json out{{"schema", 1},
                         {"series", series_json(s)},
                         {"certified_to", gb.complete_to},
                         {"closed", gb.closed}};
                if (gb.closed) out["rational"] = rational_json(normal_words_rational(gb.tips, (int)p.n_gens()));
                emit(as_json, out, s.str() + "\n");
            }
        } else if (*ver_cmd) {
            Presentation p = load_presentation(file);
            HomogeneousPair pair = extract_pair(p);
            std::ostringstream text;
            text << "A class: " << pair.a_class.name() << "\n";
            text << "bimodule: " << pair.m_class.str() << "\n";
            text << "dim M0 = " << pair.bimod.dim_m0 << ", dim M1 = " << pair.bimod.dim_m1 << "\n";
            emit(as_json,
                 json{{"schema", 1},
                      {"a_class", pair.a_class.name()},
                      {"bimodule", pair.m_class.str()},
                      {"dim_m0", pair.bimod.dim_m0},
                      {"dim_m1", pair.bimod.dim_m1}},
                 text.str());
        } else if (*cls_cmd) {
            Presentation p = load_presentation(file);
            int bound = degree_bound(D, p.s);
            ClassificationOutcome o = classify_two_relations(p, bound, !no_verdict);
            emit(as_json, outcome_json(o), o.str() + "\n");
        } else if (*kos_cmd) {
            Presentation p = load_presentation(file);
            int bound = degree_bound(D, p.s);
            KoszulVerdict v = koszulity_verdict(p, bound);
            json out = verdict_json(v);
            out["schema"] = 1;
            emit(as_json, out, v.str() + "\n");
        } else if (*nkz_cmd) {
            Presentation p = load_presentation(file);
            Int v = nkoz_coefficient(p);
            emit(as_json, json{{"schema", 1}, {"nkoz", v.get_str()}}, v.get_str() + "\n");
        } else if (*pch_cmd) {
            TwistedPotential tp = load_potential(file);
            bool fixed = is_twisted_potential(tp.w, tp.sigma);
            Subspace rels = derived_relations(tp.w);
            bool excl = potential_exclusion_check(tp.w);
            std::ostringstream text;
            text << "fixed: " << (fixed ? "yes" : "no") << "\nslice dimension: " << rels.dim()
                 << "\nexclusion check: " << (excl ? "pass" : "fail") << "\n";
            emit(as_json,
                 json{{"schema", 1}, {"fixed", fixed}, {"slice_dim", rels.dim()}, {"exclusion", excl}},
                 text.str());
        } else if (*pgn_cmd) {
            Field f = Field::Q();
            if (field_spec != "Q") {
                if (field_spec.rfind("F:", 0) != 0)
                    throw Error(ErrorKind::Parse, "--field expects Q or F:<p>");
                f = Field::Fp(std::stol(field_spec.substr(2)));
            }
            TwistedPotential tp = kind == "diag"
                                      ? gen_potential_diag(f, parse_scalar_text(f, l1s),
                                                           parse_scalar_text(f, l2s), s_param)
                                      : gen_potential_jordan(f, parse_scalar_text(f, lam), s_param);
            std::string text = potential_to_text(tp);
            emit(as_json, json{{"schema", 1}, {"potential", text}}, text);
        } else if (*fpr_cmd) {
            Presentation a = load_presentation(file), b = load_presentation(file2);
            Presentation pr = free_product(a, b);
            emit(as_json, json{{"schema", 1}, {"presentation", pr.str()}}, pr.str());
        }
    } catch (const Error& e) {
        json err{{"schema", 1}, {"error", {{"code", Error::kind_name(e.kind())}, {"message", e.what()}}}};
        if (as_json)
            std::cout << err.dump(2) << "\n";
        else
            std::cerr << "error (" << Error::kind_name(e.kind()) << "): " << e.what() << "\n";
        return e.kind() == ErrorKind::Parse ? 2 : 3;
    }
    return 0;
}
