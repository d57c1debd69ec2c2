#include "xreal/dsl/normalize.hpp"

#include <algorithm>
#include <map>
#include <tuple>
#include <utility>
#include <vector>

namespace xreal::dsl {

namespace {

using Kind = AstNode::Kind;

struct DeltaPower {
    Rational beta;
    unsigned power = 1;
};

struct Product {
    bool negated = false;
    std::vector<SmoothExpr> factors;
    std::map<std::size_t, DeltaPower> deltas;
};

std::optional<Product> multiply(const Product& a, const Product& b)
{
    Product out = a;
    out.negated = a.negated != b.negated;
    out.factors.insert(out.factors.end(), b.factors.begin(), b.factors.end());
    for (const auto& [var, d] : b.deltas) {
        auto [it, inserted] = out.deltas.emplace(var, d);
        if (!inserted) {
            if (it->second.beta != d.beta) {
                return std::nullopt;
            }
            it->second.power += d.power;
        }
    }
    return out;
}

class Expander {
public:
    explicit Expander(std::size_t dims) : dims_(dims) {}

    std::vector<Product> expand(const AstNode& n)
    {
        if (!n.contains_delta()) {
            return {Product{false, {to_smooth(n, dims_)}, {}}};
        }
        switch (n.kind) {
        case Kind::delta: {
            Product p;
            p.deltas.emplace(n.index, DeltaPower{n.value, 1});
            return {p};
        }
        case Kind::negate: return flipped(expand(*n.lhs));
        case Kind::add: return concat(expand(*n.lhs), expand(*n.rhs));
        case Kind::sub: return concat(expand(*n.lhs), flipped(expand(*n.rhs)));
        case Kind::mul: return cross(expand(*n.lhs), expand(*n.rhs), n);
        case Kind::div: {
            if (n.rhs->contains_delta()) {
                throw NormalizeError("division by an expression containing delta", n.rhs->span);
            }
            const SmoothExpr reciprocal =
                SmoothExpr::constant(Rational(1), dims_) / to_smooth(*n.rhs, dims_);
            std::vector<Product> out = expand(*n.lhs);
            for (auto& p : out) {
                p.factors.push_back(reciprocal);
            }
            return out;
        }
        case Kind::power: {
            if (n.exponent <= 0) {
                throw NormalizeError("delta raised to a non-positive power", n.span);
            }
            const std::vector<Product> base = expand(*n.lhs);
            std::vector<Product> out = base;
            for (int k = 1; k < n.exponent; ++k) {
                out = cross(out, base, n);
            }
            return out;
        }
        case Kind::call:
            throw NormalizeError(std::string(to_string(n.fn)) + " of an expression containing delta",
                                 n.span);
        default: break;
        }
        throw NormalizeError("unexpected delta placement", n.span);
    }

private:
    static std::vector<Product> flipped(std::vector<Product> ps)
    {
        for (auto& p : ps) {
            p.negated = !p.negated;
        }
        return ps;
    }

    static std::vector<Product> concat(std::vector<Product> a, std::vector<Product> b)
    {
        a.insert(a.end(), std::make_move_iterator(b.begin()), std::make_move_iterator(b.end()));
        return a;
    }

    static std::vector<Product> cross(const std::vector<Product>& a, const std::vector<Product>& b,
                                      const AstNode& where)
    {
        std::vector<Product> out;
        for (const auto& p : a) {
            for (const auto& q : b) {
                if (auto r = multiply(p, q)) {
                    out.push_back(std::move(*r));
                    if (out.size() > max_expansion_products) {
                        throw NormalizeError("expansion produces too many delta products", where.span);
                    }
                }
            }
        }
        return out;
    }

    std::size_t dims_;
};

struct TermKey {
    int kind;
    std::vector<std::size_t> vars;
    std::vector<Rational> betas;
    std::vector<unsigned> powers;
    std::string u;

    auto tie() const { return std::tie(kind, vars, betas, powers, u); }
    bool operator<(const TermKey& o) const { return tie() < o.tie(); }
};

TermKey key_of(const HyperTerm& term)
{
    if (const auto* t = std::get_if<TensorTerm>(&term)) {
        return {0, t->sigma.images(), {t->beta.to_rational()}, {1}, t->u.to_string()};
    }
    const auto& m = std::get<MultiAtom>(term);
    TermKey key{1, {}, {}, {}, m.u.to_string()};
    for (const auto& f : m.factors) {
        key.vars.push_back(f.var);
        key.betas.push_back(f.beta.to_rational());
        key.powers.push_back(f.power);
    }
    return key;
}

bool same_shape(const HyperTerm& a, const HyperTerm& b)
{
    if (a.index() != b.index()) {
        return false;
    }
    if (const auto* t = std::get_if<TensorTerm>(&a)) {
        const auto& s = std::get<TensorTerm>(b);
        return t->sigma == s.sigma && t->beta == s.beta && t->u == s.u;
    }
    const auto& m = std::get<MultiAtom>(a);
    const auto& n = std::get<MultiAtom>(b);
    return m.factors == n.factors && m.u == n.u;
}

Coefficient& alpha_of(HyperTerm& term)
{
    if (auto* t = std::get_if<TensorTerm>(&term)) {
        return t->alpha;
    }
    return std::get<MultiAtom>(term).alpha;
}

HyperTerm make_term(const Product& p, std::size_t dims, Mode mode)
{
    std::map<std::size_t, Coefficient> betas;
    for (const auto& [var, d] : p.deltas) {
        betas.emplace(var, Coefficient::from_rational(d.beta, mode));
    }
    const std::vector<Coefficient> zeros(dims, Coefficient::zero(mode));
    Coefficient alpha = p.negated ? -Coefficient::one(mode) : Coefficient::one(mode);
    SmoothExpr u = SmoothExpr::constant(Rational(1), dims);
    for (SmoothExpr g : p.factors) {
        for (const auto& [var, beta] : betas) {
            if (g.references(var)) {
                g = g.substitute(var, beta);
            }
        }
        if (g.is_constant()) {
            alpha *= g.eval(zeros, mode);
        } else {
            u = u * g;
        }
    }

    if (p.deltas.size() == 1 && p.deltas.begin()->second.power == 1) {
        const std::size_t v = p.deltas.begin()->first;
        std::vector<std::size_t> images;
        std::vector<std::size_t> mapping(dims, 0);
        for (std::size_t i = 0; i < dims; ++i) {
            if (i != v) {
                mapping[i] = images.size();
                images.push_back(i);
            }
        }
        images.push_back(v);
        return TensorTerm{u.relabel(mapping, dims - 1), alpha, betas.at(v),
                          Permutation(std::move(images))};
    }
    MultiAtom m{u, alpha, {}};
    for (const auto& [var, d] : p.deltas) {
        m.factors.push_back({var, betas.at(var), d.power});
    }
    return m;
}

} // namespace

DensityND normalize(const AstNode& ast, std::optional<std::size_t> dims, Mode mode)
{
    const std::size_t needed = std::max<std::size_t>(ast.min_dims(), 1);
    if (dims && *dims < needed) {
        throw InvalidArgument("expression uses " + std::to_string(needed) +
                              " variables but dims is " + std::to_string(*dims));
    }
    const std::size_t n = dims.value_or(needed);

    SmoothExpr smooth = SmoothExpr::constant(Rational(0), n);
    std::vector<HyperTerm> terms;
    for (const Product& p : Expander(n).expand(ast)) {
        if (!p.deltas.empty()) {
            HyperTerm term = make_term(p, n, mode);
            if (!alpha_of(term).is_zero()) {
                terms.push_back(std::move(term));
            }
            continue;
        }
        SmoothExpr s = SmoothExpr::constant(Rational(1), n);
        for (const auto& f : p.factors) {
            s = s * f;
        }
        if (smooth.is_zero()) {
            smooth = p.negated ? -s : s;
        } else {
            smooth = p.negated ? smooth - s : smooth + s;
        }
    }

    std::vector<HyperTerm> merged;
    for (auto& term : terms) {
        auto it = std::find_if(merged.begin(), merged.end(),
                               [&](const HyperTerm& m) { return same_shape(m, term); });
        if (it == merged.end()) {
            merged.push_back(std::move(term));
        } else {
            alpha_of(*it) += alpha_of(term);
        }
    }
    std::erase_if(merged, [](HyperTerm& t) { return alpha_of(t).is_zero(); });
    std::stable_sort(merged.begin(), merged.end(),
                     [](const HyperTerm& a, const HyperTerm& b) { return key_of(a) < key_of(b); });
    return DensityND::make(n, smooth, std::move(merged), mode);
}

namespace {

std::string coefficient_text(const Coefficient& c)
{
    std::string text = c.to_string();
    return text.find('/') != std::string::npos ? "(" + text + ")" : text;
}

std::string variable_name(std::size_t index)
{
    return "x" + std::to_string(index + 1);
}

std::string delta_text(std::size_t var, const Coefficient& beta, unsigned power)
{
    std::string text = "delta(" + variable_name(var);
    if (beta.sign() != 0) {
        text += (beta.sign() > 0 ? " - " : " + ") + coefficient_text(beta.abs());
    }
    text += ")";
    if (power != 1) {
        text += "^" + std::to_string(power);
    }
    return text;
}

std::string factor_text(const SmoothExpr& u, std::span<const std::string> names)
{
    const auto& root = u.root();
    const bool parens = root.kind == SmoothExpr::Kind::add || root.kind == SmoothExpr::Kind::sub ||
                        root.kind == SmoothExpr::Kind::negate ||
                        (root.kind == SmoothExpr::Kind::constant && sgn(root.value) < 0);
    const std::string text = u.to_string(names);
    return parens ? "(" + text + ")" : text;
}

// Renders |alpha| * u * deltas; the sign of alpha is handled by the caller.
std::string product_text(const Coefficient& alpha, const std::string& u_text,
                         const std::string& deltas)
{
    std::string text;
    const Coefficient magnitude = alpha.abs();
    if (magnitude != Coefficient::one(alpha.mode())) {
        text = coefficient_text(magnitude) + "*";
    }
    if (!u_text.empty()) {
        text += u_text + "*";
    }
    return text + deltas;
}

} // namespace

std::string to_source(const DensityND& f)
{
    std::vector<std::pair<bool, std::string>> pieces;
    if (!f.smooth_part().is_zero()) {
        pieces.emplace_back(false, f.smooth_part().to_string());
    }
    for (const auto& term : f.terms()) {
        if (const auto* t = std::get_if<TensorTerm>(&term)) {
            const std::size_t n = t->sigma.size();
            std::vector<std::string> names;
            for (std::size_t p = 0; p + 1 < n; ++p) {
                names.push_back(variable_name(t->sigma(p)));
            }
            const std::string u_text = t->u.is_one() ? "" : factor_text(t->u, names);
            pieces.emplace_back(t->alpha.sign() < 0,
                                product_text(t->alpha, u_text, delta_text(t->sigma(n - 1), t->beta, 1)));
        } else {
            const auto& m = std::get<MultiAtom>(term);
            std::vector<std::string> names;
            for (std::size_t i = 0; i < f.dims(); ++i) {
                names.push_back(variable_name(i));
            }
            std::string deltas;
            for (const auto& d : m.factors) {
                deltas += (deltas.empty() ? "" : "*") + delta_text(d.var, d.beta, d.power);
            }
            const std::string u_text = m.u.is_one() ? "" : factor_text(m.u, names);
            pieces.emplace_back(m.alpha.sign() < 0, product_text(m.alpha, u_text, deltas));
        }
    }
    if (pieces.empty()) {
        return "0";
    }
    std::string out;
    for (std::size_t i = 0; i < pieces.size(); ++i) {
        const auto& [negative, text] = pieces[i];
        if (i == 0) {
            out = (negative ? "-" : "") + text;
        } else {
            out += (negative ? " - " : " + ") + text;
        }
    }
    return out;
}

} // namespace xreal::dsl
