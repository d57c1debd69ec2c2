#include "xreal/serialize.hpp"

#include "xreal/dsl/parser.hpp"

namespace xreal {

namespace {

Mode mode_from(const Json& j)
{
    const std::string m = j.value("mode", "exact");
    if (m == "exact") {
        return Mode::exact;
    }
    if (m == "float") {
        return Mode::floating;
    }
    throw InvalidArgument("unknown coefficient mode '" + m + "'");
}

Coefficient coefficient_from(const Json& j, Mode mode)
{
    if (j.is_string()) {
        return Coefficient::parse(j.get<std::string>(), mode);
    }
    if (j.is_number_integer()) {
        return Coefficient::from_rational(Rational(j.get<long>()), mode);
    }
    if (j.is_number()) {
        return Coefficient::from_double(j.get<double>(), mode);
    }
    throw InvalidArgument("coefficient must be a string or a number");
}

SmoothExpr smooth_from(const Json& j, std::size_t arity)
{
    const dsl::AstPtr ast = dsl::parse(j.get<std::string>());
    if (ast->min_dims() > arity) {
        throw InvalidArgument("expression '" + j.get<std::string>() + "' uses more than " +
                              std::to_string(arity) + " variables");
    }
    return dsl::to_smooth(*ast, arity);
}

} // namespace

Json to_json(const DensityND& f)
{
    Json terms = Json::array();
    for (const auto& term : f.terms()) {
        if (const auto* t = std::get_if<TensorTerm>(&term)) {
            terms.push_back({{"u", t->u.to_string()},
                             {"alpha", t->alpha.to_string()},
                             {"beta", t->beta.to_string()},
                             {"sigma", t->sigma.images()}});
            continue;
        }
        const auto& m = std::get<MultiAtom>(term);
        Json betas = Json::array();
        Json vars = Json::array();
        Json powers = Json::array();
        for (const auto& d : m.factors) {
            betas.push_back(d.beta.to_string());
            vars.push_back(d.var);
            powers.push_back(d.power);
        }
        terms.push_back({{"multi_atom",
                          {{"alpha", m.alpha.to_string()},
                           {"betas", betas},
                           {"vars", vars},
                           {"powers", powers},
                           {"u", m.u.to_string()}}}});
    }
    return {{"dims", f.dims()},
            {"mode", to_string(f.mode())},
            {"smooth", f.smooth_part().to_string()},
            {"terms", terms}};
}

DensityND density_nd_from_json(const Json& j)
{
    const Mode mode = mode_from(j);
    const auto dims = j.at("dims").get<std::size_t>();
    std::vector<HyperTerm> terms;
    for (const auto& t : j.at("terms")) {
        if (t.contains("multi_atom")) {
            const Json& m = t.at("multi_atom");
            MultiAtom atom{smooth_from(m.value("u", Json("1")), dims), coefficient_from(m.at("alpha"), mode),
                           {}};
            const Json& betas = m.at("betas");
            const Json vars = m.value("vars", Json());
            const Json powers = m.value("powers", Json());
            for (std::size_t i = 0; i < betas.size(); ++i) {
                atom.factors.push_back({vars.is_array() ? vars.at(i).get<std::size_t>() : i,
                                        coefficient_from(betas.at(i), mode),
                                        powers.is_array() ? powers.at(i).get<unsigned>() : 1U});
            }
            terms.emplace_back(std::move(atom));
            continue;
        }
        terms.emplace_back(TensorTerm{smooth_from(t.at("u"), dims - 1), coefficient_from(t.at("alpha"), mode),
                                      coefficient_from(t.at("beta"), mode),
                                      Permutation(t.at("sigma").get<std::vector<std::size_t>>())});
    }
    return DensityND::make(dims, smooth_from(j.at("smooth"), dims), std::move(terms), mode);
}

Json to_json(const Density1D& f)
{
    Json atoms = Json::array();
    for (const auto& a : f.train().atoms()) {
        atoms.push_back({{"alpha", a.alpha.to_string()}, {"beta", a.beta.to_string()}});
    }
    Json residue = Json::array();
    for (const auto& r : f.residue()) {
        residue.push_back({{"exponent", format_rational(r.exponent)},
                           {"coefficient", r.coefficient.to_string()},
                           {"location", r.location.to_string()}});
    }
    return {{"mode", to_string(f.mode())},
            {"smooth", f.smooth_part().to_string()},
            {"atoms", atoms},
            {"residue", residue}};
}

Density1D density_1d_from_json(const Json& j)
{
    const Mode mode = mode_from(j);
    std::vector<Atom> atoms;
    for (const auto& a : j.value("atoms", Json::array())) {
        atoms.push_back({coefficient_from(a.at("alpha"), mode), coefficient_from(a.at("beta"), mode)});
    }
    std::vector<ResidueEntry> residue;
    for (const auto& r : j.value("residue", Json::array())) {
        residue.push_back({parse_rational(r.at("exponent").get<std::string>()),
                           coefficient_from(r.at("coefficient"), mode),
                           coefficient_from(r.at("location"), mode)});
    }
    return Density1D::from_parts(smooth_from(j.at("smooth"), 1), DeltaTrain::make(std::move(atoms)),
                                 std::move(residue), mode);
}

Json to_json(const dsl::AstNode& n)
{
    using Kind = dsl::AstNode::Kind;
    Json j;
    const char* kind = "";
    switch (n.kind) {
    case Kind::number: kind = "number"; break;
    case Kind::variable: kind = "variable"; break;
    case Kind::negate: kind = "negate"; break;
    case Kind::add: kind = "add"; break;
    case Kind::sub: kind = "sub"; break;
    case Kind::mul: kind = "mul"; break;
    case Kind::div: kind = "div"; break;
    case Kind::power: kind = "power"; break;
    case Kind::call: kind = "call"; break;
    case Kind::delta: kind = "delta"; break;
    }
    j["kind"] = kind;
    j["span"] = {n.span.start, n.span.end};
    switch (n.kind) {
    case Kind::number: j["value"] = format_rational(n.value); break;
    case Kind::variable:
        j["name"] = n.name;
        j["index"] = n.index;
        break;
    case Kind::delta:
        j["var"] = n.name;
        j["index"] = n.index;
        j["beta"] = format_rational(n.value);
        break;
    case Kind::negate: j["operand"] = to_json(*n.lhs); break;
    case Kind::power:
        j["base"] = to_json(*n.lhs);
        j["exponent"] = n.exponent;
        break;
    case Kind::call:
        j["fn"] = to_string(n.fn);
        j["arg"] = to_json(*n.lhs);
        break;
    default:
        j["lhs"] = to_json(*n.lhs);
        j["rhs"] = to_json(*n.rhs);
        break;
    }
    return j;
}

} // namespace xreal
