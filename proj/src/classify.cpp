#include "nchom/classify.hpp"

#include <sstream>

namespace nchom {

namespace {

char potential_case_of(const NuData& nu, int s, Field f) {
    Scalar one = Scalar::one(f);
    if (nu.jordan) return 'd';
    const Scalar& l1 = nu.l1;
    const Scalar& l2 = nu.l2;
    for (int k = 2; k <= s - 1; ++k)
        if (l1.pow(k) * l2.pow(s + 1 - k) == one) return 'a';
    if (l1 * l2.pow(s) == one && l1.pow(s) * l2 == one) return 'b';
    if ((l1 == one && l2.pow(s) == one) || (l2 == one && l1.pow(s) == one)) return 'c';
    throw Error(ErrorKind::UnexpectedShape, "twist eigenvalues satisfy no admissible condition");
}

}  // namespace

std::string ClassificationOutcome::str() const {
    std::ostringstream os;
    os << "condition " << condition << " (A=" << a_class.name() << ", M=" << m_class.str() << ")";
    if (p) os << " p=" << p->str();
    if (nu) os << " nu=" << nu->str();
    if (potential_case) os << " case=" << *potential_case;
    if (koszul) os << " koszul: " << koszul->str();
    return os.str();
}

ClassificationOutcome classify_two_relations(const Presentation& pres, int D, bool with_verdict) {
    if (pres.relations.size() != 2)
        throw Error(ErrorKind::IllegalParams, "classification requires exactly two relations");
    if (pres.s < 3)
        throw Error(ErrorKind::IllegalParams, "classification requires relation degree >= 3");
    HomogeneousPair pair = extract_pair(pres);
    ClassificationOutcome out;
    out.a_class = pair.a_class;
    out.m_class = pair.m_class;
    out.s = pres.s;
    out.n_gens = pres.n_gens();
    out.m = pair.m_class.m;

    switch (pair.a_class.tag) {
        case QuadTag::A4:
            if (pair.m_class.kind == BimodKind::JTrivial) {
                out.condition = 1;
            } else {
                if (pres.s % 2 != 0)
                    throw Error(ErrorKind::UnexpectedShape, "twisted A4 bimodule requires even degree");
                out.condition = 2;
            }
            break;
        case QuadTag::A5:
            if (pres.s % 2 == 0)
                throw Error(ErrorKind::UnexpectedShape, "A5 requires odd degree");
            out.condition = 3;
            break;
        case QuadTag::A6: out.condition = 4; break;
        case QuadTag::A7:
            if (pair.a_class.q->is_zero()) {
                out.condition = 5;
            } else {
                out.condition = 6;
                out.p = pair.m_class.p;
            }
            break;
        case QuadTag::A1: out.condition = 7; break;
        case QuadTag::A0:
            switch (pair.m_class.kind) {
                case BimodKind::TwistedD:
                    out.condition = 8;
                    out.nu = pair.m_class.nu_eigen;
                    out.potential_case = potential_case_of(*out.nu, pres.s, pres.field);
                    break;
                case BimodKind::B1Bimod: out.condition = 9; break;
                case BimodKind::B2Bimod: out.condition = 10; break;
                case BimodKind::TrivialOnly: out.condition = 11; break;
                default: throw Error(ErrorKind::UnexpectedShape, "unrecognized bimodule over A0");
            }
            break;
        default:
            throw Error(ErrorKind::UnexpectedShape,
                        std::string("dual Veronese class ") + quad_tag_name(pair.a_class.tag) +
                            " cannot arise from a two-relation algebra");
    }
    if (with_verdict) out.koszul = koszulity_verdict(pres, D);
    return out;
}

namespace {

Word rep(int g, int n) { return Word((std::size_t)n, g); }

Word cat(std::initializer_list<Word> parts) {
    Word out;
    for (const auto& p : parts) out.insert(out.end(), p.begin(), p.end());
    return out;
}

GenSetPtr yx_gens(std::size_t y_count, std::size_t m) {
    std::vector<std::string> names;
    for (std::size_t i = 1; i <= y_count; ++i) names.push_back("y" + std::to_string(i));
    for (std::size_t i = 1; i <= m; ++i) names.push_back("x" + std::to_string(i));
    return GeneratorSet::make(names);
}

}  // namespace

Presentation construct_condition_algebra(Field field, int condition, const ConditionParams& params) {
    int s = params.s;
    std::size_t m = params.m;
    Scalar one = Scalar::one(field);
    if (s < 3) throw Error(ErrorKind::IllegalParams, "condition algebras require s >= 3");
    const int Y1 = 0, Y2 = 1;
    switch (condition) {
        case 1: {
            GenSetPtr g = yx_gens(2, m);
            NcPoly r1 = NcPoly::monomial(g, one, rep(Y1, s));
            NcPoly r2 = NcPoly::monomial(g, one, rep(Y2, s));
            return Presentation(g, field, s, {r1, r2});
        }
        case 2: {
            if (s % 2 != 0) throw Error(ErrorKind::IllegalParams, "condition 2 requires even degree");
            int t = s / 2;
            GenSetPtr g = yx_gens(2, m);
            Word w1, w2;
            for (int i = 0; i < t; ++i) {
                w1.push_back(Y1);
                w1.push_back(Y2);
                w2.push_back(Y2);
                w2.push_back(Y1);
            }
            return Presentation(g, field, s,
                                {NcPoly::monomial(g, one, w1), NcPoly::monomial(g, one, w2)});
        }
        case 3: {
            if (s % 2 != 1) throw Error(ErrorKind::IllegalParams, "condition 3 requires odd degree");
            int t = (s - 1) / 2;
            GenSetPtr g = yx_gens(2, m);
            Word w1, w2;
            for (int i = 0; i < t; ++i) {
                w1.push_back(Y1);
                w1.push_back(Y2);
                w2.push_back(Y2);
                w2.push_back(Y1);
            }
            w1.push_back(Y1);
            w2.push_back(Y2);
            return Presentation(g, field, s,
                                {NcPoly::monomial(g, one, w1), NcPoly::monomial(g, one, w2)});
        }
        case 4: {
            GenSetPtr g = yx_gens(2, m);
            return Presentation(g, field, s,
                                {NcPoly::monomial(g, one, rep(Y1, s)),
                                 NcPoly::monomial(g, one, cat({rep(Y2, 1), rep(Y1, s - 1)}))});
        }
        case 5: {
            GenSetPtr g = yx_gens(2, m);
            return Presentation(g, field, s,
                                {NcPoly::monomial(g, one, rep(Y1, s)),
                                 NcPoly::monomial(g, one, cat({rep(Y1, s - 1), rep(Y2, 1)}))});
        }
        case 6: {
            if (!params.p || params.p->is_zero())
                throw Error(ErrorKind::IllegalParams, "condition 6 requires a nonzero parameter p");
            GenSetPtr g = yx_gens(2, m);
            NcPoly r1 = NcPoly::monomial(g, one, rep(Y1, s));
            NcPoly r2 = NcPoly::zero(g, field);
            for (int i = 0; i <= s - 1; ++i)
                r2.add_term(cat({rep(Y1, i), rep(Y2, 1), rep(Y1, s - 1 - i)}), params.p->pow(s - 1 - i));
            return Presentation(g, field, s, {r1, r2});
        }
        case 7: {
            GenSetPtr g = yx_gens(1, std::max<std::size_t>(m, 2));
            NcPoly r1 = NcPoly::monomial(g, one, rep(Y1, s));
            NcPoly f;
            if (params.f) {
                f = parse_poly(g, field, *params.f);
            } else {
                // x1 y1^(s-2) x2
                f = NcPoly::monomial(g, one, cat({rep(1, 1), rep(Y1, s - 2), rep(2, 1)}));
            }
            return Presentation(g, field, s, {r1, f});
        }
        case 8: {
            TwistedPotential tp = params.jordan
                                      ? gen_potential_jordan(field, *params.jordan, s)
                                      : gen_potential_diag(field, params.diag->first, params.diag->second, s);
            Presentation dw = build_potential_algebra(tp.w);
            if (m == 0) return dw;
            std::vector<std::string> xs;
            for (std::size_t i = 1; i <= m; ++i) xs.push_back("x" + std::to_string(i));
            Presentation free_part(GeneratorSet::make(xs), field, s, {});
            return free_product(dw, free_part);
        }
        default: throw Error(ErrorKind::IllegalParams, "constructible conditions are 1..8");
    }
}

Int nkoz_coefficient(const Presentation& pres) {
    if (pres.relations.size() != 2)
        throw Error(ErrorKind::IllegalParams, "nkoz coefficient requires exactly two relations");
    HomogeneousPair pair = extract_pair(pres);
    Int m((unsigned long)pres.n_gens());
    Int l1((unsigned long)pair.bimod.dim_m1);
    Int l2((unsigned long)tensor_power_degree1(pair.bimod, 2));
    return 2 * m * m - 2 * l1 * m + l2;
}

}  // namespace nchom
