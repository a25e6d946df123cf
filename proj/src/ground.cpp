#include "openlp/ground.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <optional>
#include <vector>

namespace openlp {

std::set<Term> herbrand_universe(const Signature& sig, std::size_t depth_bound) {
    std::set<Term> universe;
    for (const SymbolSig& f : sig.functions) {
        if (f.arity == 0) {
            universe.insert(Term::constant(f.name));
        }
    }
    // build up by depth; each level applies every proper function once
    for (std::size_t level = 0; level < depth_bound; ++level) {
        std::set<Term> next = universe;
        std::vector<Term> pool(universe.begin(), universe.end());
        for (const SymbolSig& f : sig.functions) {
            if (f.arity == 0) {
                continue;
            }
            std::vector<std::size_t> idx(f.arity, 0);
            if (pool.empty()) {
                continue;
            }
            for (;;) {
                std::vector<Term> args;
                args.reserve(f.arity);
                for (std::size_t i : idx) {
                    args.push_back(pool[i]);
                }
                next.insert(Term::compound(f.name, std::move(args)));
                std::size_t k = 0;
                while (k < idx.size() && ++idx[k] == pool.size()) {
                    idx[k] = 0;
                    ++k;
                }
                if (k == idx.size()) {
                    break;
                }
            }
        }
        if (next == universe) {
            break;
        }
        universe = std::move(next);
    }
    return universe;
}

namespace {

std::size_t max_term_depth(const Atom& a) {
    std::size_t d = 0;
    for (const Term& t : a.args) {
        d = std::max(d, t.depth());
    }
    return d;
}

} // namespace

std::size_t default_depth_bound(const Program& p) {
    std::size_t d = 0;
    for (const Rule& r : p.rules) {
        d = std::max(d, max_term_depth(r.head));
        for (const Atom& a : r.pos) {
            d = std::max(d, max_term_depth(a));
        }
        for (const Atom& a : r.neg) {
            d = std::max(d, max_term_depth(a));
        }
    }
    return d;
}

namespace {

using Substitution = std::map<std::string, Term>;

Term substitute(const Term& t, const Substitution& s) {
    if (t.kind == Term::Kind::variable) {
        auto it = s.find(t.name);
        return it != s.end() ? it->second : t;
    }
    std::vector<Term> args;
    args.reserve(t.args.size());
    for (const Term& a : t.args) {
        args.push_back(substitute(a, s));
    }
    return Term::compound(t.name, std::move(args));
}

Atom substitute(const Atom& a, const Substitution& s) {
    Atom out;
    out.predicate = a.predicate;
    out.args.reserve(a.args.size());
    for (const Term& t : a.args) {
        out.args.push_back(substitute(t, s));
    }
    return out;
}

Rule substitute(const Rule& r, const Substitution& s) {
    Rule out;
    out.head = substitute(r.head, s);
    for (const Atom& a : r.pos) {
        out.pos.push_back(substitute(a, s));
    }
    for (const Atom& a : r.neg) {
        out.neg.push_back(substitute(a, s));
    }
    return out;
}

} // namespace

std::optional<std::size_t> ground_instance_count(const Program& p, std::size_t domain_size) {
    std::size_t total = 0;
    for (const Rule& r : p.rules) {
        std::size_t vars = rule_variables(r).size();
        std::size_t instances = 1;
        for (std::size_t i = 0; i < vars; ++i) {
            if (domain_size != 0 && instances > std::numeric_limits<std::size_t>::max() / domain_size) {
                return std::nullopt;
            }
            instances *= domain_size;
        }
        if (total > std::numeric_limits<std::size_t>::max() - instances) {
            return std::nullopt;
        }
        total += instances;
    }
    return total;
}

Program ground_program(const Program& p, const std::set<Term>& domain) {
    std::vector<Term> terms(domain.begin(), domain.end());
    Program out;
    for (const Rule& r : p.rules) {
        std::vector<std::string> vars = rule_variables(r);
        if (vars.empty()) {
            out.rules.push_back(r);
            continue;
        }
        if (terms.empty()) {
            continue;
        }
        std::vector<std::size_t> idx(vars.size(), 0);
        for (;;) {
            Substitution s;
            for (std::size_t i = 0; i < vars.size(); ++i) {
                s.emplace(vars[i], terms[idx[i]]);
            }
            out.rules.push_back(substitute(r, s));
            std::size_t k = 0;
            while (k < idx.size() && ++idx[k] == terms.size()) {
                idx[k] = 0;
                ++k;
            }
            if (k == idx.size()) {
                break;
            }
        }
    }
    return out;
}

std::vector<Atom> ground_atoms(const std::set<SymbolSig>& preds,
                               const std::set<Term>& domain) {
    std::vector<Term> terms(domain.begin(), domain.end());
    std::vector<Atom> pool;
    for (const SymbolSig& p : preds) {
        if (p.arity == 0) {
            pool.push_back(Atom{p.name, {}});
            continue;
        }
        if (terms.empty()) continue;
        std::vector<std::size_t> idx(p.arity, 0);
        for (;;) {
            Atom a{p.name, {}};
            for (std::size_t i : idx) a.args.push_back(terms[i]);
            pool.push_back(std::move(a));
            // Last position advances first: tuples come out in lexicographic
            // order, so the pool is sorted by (predicate, arguments).
            std::size_t k = p.arity;
            while (k > 0) {
                if (++idx[k - 1] < terms.size()) break;
                idx[k - 1] = 0;
                --k;
            }
            if (k == 0) break;
        }
    }
    return pool;
}

} // namespace openlp
