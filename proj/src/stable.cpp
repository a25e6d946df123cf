#include "openlp/stable.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <string>
#include <tuple>
#include <utility>

#include "openlp/error.hpp"
#include "openlp/ground.hpp"

namespace openlp {

namespace {

// ---------------------------------------------------------------------------
// Bit-level search engine. Ground atoms occurring in the program are numbered
// into a table; interpretations and rule bodies become bit masks over it.
// Atoms of the Herbrand base that occur in no rule can appear in no stable
// model, so the table is a complete carrier for the search.
// ---------------------------------------------------------------------------

struct Bits {
    std::vector<std::uint64_t> w;

    explicit Bits(std::size_t nbits = 0) : w((nbits + 63) / 64, 0) {}

    void set(std::size_t i) { w[i >> 6] |= std::uint64_t{1} << (i & 63); }
    bool test(std::size_t i) const { return (w[i >> 6] >> (i & 63)) & 1u; }

    bool subset_of(const Bits& o) const {
        for (std::size_t k = 0; k < w.size(); ++k)
            if (w[k] & ~o.w[k]) return false;
        return true;
    }
    bool intersects(const Bits& o) const {
        for (std::size_t k = 0; k < w.size(); ++k)
            if (w[k] & o.w[k]) return true;
        return false;
    }
    bool operator==(const Bits& o) const { return w == o.w; }
};

struct MaskRule {
    std::size_t head = 0;
    Bits pos, neg;
};

struct Engine {
    std::vector<Atom> atoms; // sorted; position is the atom id
    std::vector<MaskRule> rules;

    explicit Engine(const Program& pg) {
        std::set<Atom> seen;
        for (const Rule& r : pg.rules) {
            seen.insert(r.head);
            seen.insert(r.pos.begin(), r.pos.end());
            seen.insert(r.neg.begin(), r.neg.end());
        }
        atoms.assign(seen.begin(), seen.end());
        std::map<Atom, std::size_t> id;
        for (std::size_t i = 0; i < atoms.size(); ++i) id.emplace(atoms[i], i);

        std::set<std::tuple<std::size_t, std::vector<std::uint64_t>,
                            std::vector<std::uint64_t>>>
            dedup;
        for (const Rule& r : pg.rules) {
            MaskRule m;
            m.head = id.at(r.head);
            m.pos = Bits(atoms.size());
            m.neg = Bits(atoms.size());
            for (const Atom& a : r.pos) m.pos.set(id.at(a));
            for (const Atom& a : r.neg) m.neg.set(id.at(a));
            if (dedup.emplace(m.head, m.pos.w, m.neg.w).second)
                rules.push_back(std::move(m));
        }
    }

    // Least fixpoint of positive-body firing over the rules the filter admits.
    template <typename Filter>
    Bits closure(Filter&& admit) const {
        Bits m(atoms.size());
        bool changed = true;
        while (changed) {
            changed = false;
            for (const MaskRule& r : rules) {
                if (!admit(r)) continue;
                if (!m.test(r.head) && r.pos.subset_of(m)) {
                    m.set(r.head);
                    changed = true;
                }
            }
        }
        return m;
    }

    // Exact stability test against the full rule set: the least model of the
    // reduct with respect to m must reproduce m.
    bool stable(const Bits& m) const {
        Bits fix = closure([&](const MaskRule& r) { return !r.neg.intersects(m); });
        return fix == m;
    }

    Interpretation to_interpretation(const Bits& m) const {
        Interpretation out;
        for (std::size_t i = 0; i < atoms.size(); ++i)
            if (m.test(i)) out.insert(out.end(), atoms[i]);
        return out;
    }
};

// Shrinking box [lb, ub] containing every stable model:
//   ub — least model with negative bodies ignored (everything derivable);
//   lb — least model of the rules whose negative body cannot fire because it
//        misses ub entirely (rules no stable model can block);
//   rules whose negative body meets lb are blocked in every stable model and
//   are discarded, which can shrink ub and grow lb again.
struct Box {
    Bits lb, ub;
    std::vector<char> blocked;
};

template <typename Filter>
Bits fixpoint(const Engine& e, Filter&& admit) {
    Bits m(e.atoms.size());
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < e.rules.size(); ++i) {
            const MaskRule& r = e.rules[i];
            if (!admit(i, r)) continue;
            if (!m.test(r.head) && r.pos.subset_of(m)) {
                m.set(r.head);
                changed = true;
            }
        }
    }
    return m;
}

Box bound(const Engine& e) {
    Box b{Bits(e.atoms.size()), Bits(e.atoms.size()),
          std::vector<char>(e.rules.size(), 0)};
    for (;;) {
        Bits ub = fixpoint(
            e, [&](std::size_t i, const MaskRule&) { return !b.blocked[i]; });
        Bits lb = fixpoint(e, [&](std::size_t i, const MaskRule& r) {
            return !b.blocked[i] && !r.neg.intersects(ub);
        });
        bool any = false;
        for (std::size_t i = 0; i < e.rules.size(); ++i) {
            if (!b.blocked[i] && e.rules[i].neg.intersects(lb)) {
                b.blocked[i] = 1;
                any = true;
            }
        }
        bool settled = !any && ub == b.ub && lb == b.lb;
        b.ub = std::move(ub);
        b.lb = std::move(lb);
        if (settled) return b;
    }
}

void require_ground(const Program& pg, const char* op) {
    if (!pg.is_ground())
        throw ScopeError(std::string(op) + " requires a ground program");
}

} // namespace

Program reduct(const Program& pg, const Interpretation& i) {
    require_ground(pg, "reduct");
    Program out;
    for (const Rule& r : pg.rules) {
        bool cut = false;
        for (const Atom& a : r.neg)
            if (i.count(a)) {
                cut = true;
                break;
            }
        if (cut) continue;
        out.rules.push_back(Rule{r.head, r.pos, {}});
    }
    return out;
}

Interpretation least_model(const Program& pg) {
    require_ground(pg, "least_model");
    for (const Rule& r : pg.rules)
        if (!r.neg.empty())
            throw ScopeError("least_model requires a negation-free program");
    Engine e(pg);
    Bits m = e.closure([](const MaskRule&) { return true; });
    return e.to_interpretation(m);
}

bool is_stable(const Program& pg, const Interpretation& i) {
    require_ground(pg, "is_stable");
    Signature sig = signature(pg);
    for (const Atom& a : i) {
        if (!a.is_ground())
            throw ScopeError("interpretation atom " + to_string(a) +
                             " is not ground");
        Signature of_atom;
        collect_signature(a, of_atom);
        for (const SymbolSig& p : of_atom.predicates)
            if (!sig.predicates.count(p))
                throw ScopeError("interpretation atom " + to_string(a) +
                                 " lies outside the program's Herbrand base");
        for (const SymbolSig& f : of_atom.functions)
            if (!sig.functions.count(f))
                throw ScopeError("interpretation atom " + to_string(a) +
                                 " lies outside the program's Herbrand base");
    }
    return least_model(reduct(pg, i)) == i;
}

std::vector<Interpretation> stable_models(const Program& p,
                                          const std::set<Term>& domain,
                                          const Limits& limits) {
    auto count = ground_instance_count(p, domain.size());
    if (!count || *count > limits.max_ground_rules)
        throw CapacityError("grounding would produce " +
                            (count ? std::to_string(*count) : std::string("over 2^64")) +
                            " rule instances (cap " +
                            std::to_string(limits.max_ground_rules) + ")");
    Engine e(ground_program(p, domain));
    Box b = bound(e);

    std::vector<std::size_t> free;
    for (std::size_t i = 0; i < e.atoms.size(); ++i)
        if (b.ub.test(i) && !b.lb.test(i)) free.push_back(i);

    std::size_t cap = std::min<std::size_t>(limits.max_atoms, 63);
    if (free.size() > cap)
        throw CapacityError("stable model search over " +
                            std::to_string(free.size()) +
                            " undetermined atoms (cap " + std::to_string(cap) +
                            ")");

    std::vector<Interpretation> out;
    for (std::uint64_t pick = 0; pick < (std::uint64_t{1} << free.size());
         ++pick) {
        Bits cand = b.lb;
        for (std::size_t j = 0; j < free.size(); ++j)
            if ((pick >> j) & 1u) cand.set(free[j]);
        if (e.stable(cand)) out.push_back(e.to_interpretation(cand));
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool eval_query(const Interpretation& i, const Query& q) {
    switch (q.kind) {
    case Query::Kind::atom:
        return i.count(q.atom) != 0;
    case Query::Kind::negation:
        return !eval_query(i, q.sub[0]);
    case Query::Kind::conjunction:
        return eval_query(i, q.sub[0]) && eval_query(i, q.sub[1]);
    case Query::Kind::disjunction:
        return eval_query(i, q.sub[0]) || eval_query(i, q.sub[1]);
    }
    return false; // unreachable
}

bool entails(const Program& p, const std::set<Term>& domain, EntailMode mode,
             const Query& q, const Limits& limits) {
    std::vector<Interpretation> models = stable_models(p, domain, limits);
    if (mode == EntailMode::credulous) {
        for (const Interpretation& m : models)
            if (eval_query(m, q)) return true;
        return false;
    }
    for (const Interpretation& m : models)
        if (!eval_query(m, q)) return false;
    return true;
}

bool is_consistent(const Program& p, const std::set<Term>& domain,
                   const Limits& limits) {
    return !stable_models(p, domain, limits).empty();
}

} // namespace openlp
