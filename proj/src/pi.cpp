#include "openlp/pi.hpp"

#include <algorithm>
#include <utility>

#include "openlp/error.hpp"
#include "openlp/ground.hpp"

namespace openlp {

bool NameMap::is_generated_predicate(const std::string& name) const {
    if (name == domain_pred || name == select_pred || name == deselect_pred)
        return true;
    for (const auto& [sig, dual] : open_dual)
        if (dual == name) return true;
    return false;
}

namespace {

std::vector<Term> scheme_variables(std::size_t n) {
    std::vector<Term> vars;
    vars.reserve(n);
    for (std::size_t i = 0; i < n; ++i)
        vars.push_back(Term::variable("X" + std::to_string(i + 1)));
    return vars;
}

} // namespace

PiProgram translate(const OpenProgram& omega) {
    Signature psig = signature(omega.program);
    for (const SymbolSig& f : omega.fresh)
        if (psig.functions.count(f))
            throw ScopeError("fresh symbol " + f.name + "/" +
                             std::to_string(f.arity) +
                             " occurs in the program");

    PiProgram pi;
    pi.origin = omega;
    NameMap& nm = pi.names;

    std::set<SymbolSig> funcs = psig.functions;
    funcs.insert(omega.fresh.begin(), omega.fresh.end());
    for (const SymbolSig& f : funcs)
        nm.func_name.emplace(
            f, "o_sym_" + f.name + "_" + std::to_string(f.arity));
    for (const SymbolSig& p : omega.open)
        nm.open_dual.emplace(p, "o_neg_" + p.name);

    // Generated names must clash neither with each other nor with any
    // input symbol (predicate or function, either namespace).
    std::set<std::string> user;
    for (const SymbolSig& s : psig.predicates) user.insert(s.name);
    for (const SymbolSig& s : funcs) user.insert(s.name);
    for (const SymbolSig& s : omega.open) user.insert(s.name);
    std::set<std::string> generated;
    auto claim = [&](const std::string& name) {
        if (user.count(name) || !generated.insert(name).second)
            throw ScopeError("generated symbol " + name +
                             " collides with another symbol; rename the "
                             "input symbol");
    };
    claim(nm.domain_pred);
    claim(nm.select_pred);
    claim(nm.deselect_pred);
    for (const auto& [sig, dual] : nm.open_dual) claim(dual);
    for (const auto& [sig, name] : nm.func_name) claim(name);

    auto u_of = [&](Term t) { return Atom{nm.domain_pred, {std::move(t)}}; };
    auto name_of = [&](const SymbolSig& f) {
        return Term::constant(nm.func_name.at(f));
    };

    // Source rules, each variable guarded by the domain predicate.
    for (const Rule& r : omega.program.rules) {
        Rule g = r;
        for (const std::string& v : rule_variables(r))
            g.pos.push_back(u_of(Term::variable(v)));
        pi.program.rules.push_back(std::move(g));
    }
    // One domain rule per function symbol: a term is in the domain when its
    // arguments are and its symbol is selected. Constants need no arguments.
    for (const SymbolSig& f : funcs) {
        Atom sel{nm.select_pred, {name_of(f)}};
        if (f.arity == 0) {
            pi.program.rules.push_back(
                Rule{u_of(Term::constant(f.name)), {sel}, {}});
            continue;
        }
        std::vector<Term> vars = scheme_variables(f.arity);
        Rule r{u_of(Term::compound(f.name, vars)), {}, {}};
        for (const Term& v : vars) r.pos.push_back(u_of(v));
        r.pos.push_back(sel);
        pi.program.rules.push_back(std::move(r));
    }
    // Selection: symbols of the program are always selected; fresh symbols
    // get an even negative loop, one stable choice each way.
    for (const SymbolSig& f : funcs) {
        Atom sel{nm.select_pred, {name_of(f)}};
        Atom desel{nm.deselect_pred, {name_of(f)}};
        if (omega.fresh.count(f)) {
            pi.program.rules.push_back(Rule{sel, {}, {desel}});
            pi.program.rules.push_back(Rule{desel, {}, {sel}});
        } else {
            pi.program.rules.push_back(Rule{sel, {}, {}});
        }
    }
    // One choice pair per open predicate, guarded to the domain.
    for (const SymbolSig& p : omega.open) {
        std::vector<Term> vars = scheme_variables(p.arity);
        Atom pos{p.name, vars};
        Atom dual{nm.open_dual.at(p), vars};
        std::vector<Atom> guards;
        for (const Term& v : vars) guards.push_back(u_of(v));
        pi.program.rules.push_back(Rule{pos, guards, {dual}});
        pi.program.rules.push_back(Rule{dual, guards, {pos}});
    }
    return pi;
}

Interpretation restrict_model(const Interpretation& m, const PiProgram& pi) {
    std::set<SymbolSig> kept = signature(pi.origin.program).predicates;
    kept.insert(pi.origin.open.begin(), pi.origin.open.end());
    Interpretation out;
    for (const Atom& a : m) {
        if (!kept.count(SymbolSig{a.predicate, a.arity()})) continue;
        bool in_domain = true;
        for (const Term& t : a.args)
            if (!m.count(Atom{pi.names.domain_pred, {t}})) {
                in_domain = false;
                break;
            }
        if (in_domain) out.insert(a);
    }
    return out;
}

Program ground_translate(const PiProgram& pi, std::size_t depth_bound,
                         const Limits& limits) {
    std::set<Term> universe =
        herbrand_universe(signature(pi.program), depth_bound);
    auto count = ground_instance_count(pi.program, universe.size());
    if (!count || *count > limits.max_ground_rules)
        throw CapacityError(
            "grounding the translation would produce " +
            (count ? std::to_string(*count) : std::string("over 2^64")) +
            " rule instances (cap " + std::to_string(limits.max_ground_rules) +
            ")");
    return ground_program(pi.program, universe);
}

bool open_entails_via_pi(const OpenProgram& omega, OpenMode mode,
                         const Query& q, const Limits& limits,
                         std::optional<std::size_t> depth_bound) {
    if (mode == OpenMode::cs || mode == OpenMode::sc)
        throw ScopeError("mode " + std::string(to_string(mode)) +
                         " does not reduce to plain entailment on the "
                         "translation");
    for (const Atom& a : q.atoms())
        if (has_reserved_prefix(a.predicate))
            throw ScopeError("query mentions reserved predicate " +
                             a.predicate);
    PiProgram pi = translate(omega);
    std::size_t bound =
        depth_bound ? *depth_bound : default_depth_bound(pi.program);
    Program g = ground_translate(pi, bound, limits);
    return entails(g, {},
                   mode == OpenMode::crd ? EntailMode::credulous
                                         : EntailMode::skeptical,
                   q, limits);
}

Program unfold(const PiProgram& pi) {
    if (!pi.origin.fresh.empty())
        throw ScopeError("unfolding requires an open program with no fresh "
                         "symbols");
    for (const SymbolSig& f : signature(pi.origin.program).functions)
        if (f.arity > 0)
            throw ScopeError("unfolding requires a function-free program; "
                             "found " + f.name + "/" +
                             std::to_string(f.arity));

    // With no fresh symbols every selection atom is a fact, so the domain
    // extension is exactly the constant set of the source program. The
    // source rules and open choice pairs instantiated over it, guards
    // dropped, carry the same stable models as the translation.
    std::set<Term> extension = constants(pi.origin.program);
    Program src = pi.origin.program;
    for (const SymbolSig& p : pi.origin.open) {
        std::vector<Term> vars = scheme_variables(p.arity);
        Atom pos{p.name, vars};
        Atom dual{pi.names.open_dual.at(p), vars};
        src.rules.push_back(Rule{pos, {}, {dual}});
        src.rules.push_back(Rule{dual, {}, {pos}});
    }
    return ground_program(src, extension);
}

std::string export_text(const Program& g) {
    std::vector<std::string> lines;
    lines.reserve(g.rules.size());
    for (const Rule& r : g.rules) lines.push_back(to_string(r));
    std::sort(lines.begin(), lines.end());
    lines.erase(std::unique(lines.begin(), lines.end()), lines.end());
    std::string out;
    for (const std::string& line : lines) {
        out += line;
        out += '\n';
    }
    return out;
}

} // namespace openlp
