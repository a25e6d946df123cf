#include "openlp/abduce.hpp"

#include <algorithm>
#include <cstdint>
#include <string>

#include "openlp/error.hpp"
#include "openlp/ground.hpp"
#include "openlp/pi.hpp"

namespace openlp {

namespace {

void check_scope(const AbductionFramework& fr, const SkolemBudget& budget) {
    Signature sig = signature(fr.theory);
    for (const SymbolSig& f : sig.functions)
        if (f.arity > 0)
            throw ScopeError("abduction requires a function-free theory; "
                             "found " + f.name + "/" +
                             std::to_string(f.arity));
    for (const SymbolSig& s : budget.name_sigs())
        if (sig.functions.count(s))
            throw ScopeError("skolem constant " + s.name +
                             " already occurs in the theory");
}

// E ordered by size first, then by contents; ties cannot occur.
bool explanation_before(const Explanation& a, const Explanation& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
}

std::vector<Explanation> subsets_by_size(const std::set<Atom>& pool,
                                         const Limits& limits) {
    std::vector<Atom> atoms(pool.begin(), pool.end());
    if (atoms.size() > 62 ||
        (std::uint64_t{1} << atoms.size()) > limits.max_completions)
        throw CapacityError("explanation enumeration over " +
                            std::to_string(atoms.size()) +
                            " abducible atoms exceeds cap " +
                            std::to_string(limits.max_completions));
    std::vector<Explanation> out;
    out.reserve(std::size_t{1} << atoms.size());
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << atoms.size());
         ++mask) {
        Explanation e;
        for (std::size_t i = 0; i < atoms.size(); ++i)
            if ((mask >> i) & 1u) e.insert(atoms[i]);
        out.push_back(std::move(e));
    }
    std::sort(out.begin(), out.end(), explanation_before);
    return out;
}

// theory ∪ E, and the constant domain of that very program.
Program assume(const Program& theory, const Explanation& e) {
    Program out = theory;
    for (const Atom& a : e) out.rules.push_back(Rule{a, {}, {}});
    return out;
}

std::set<Term> assumed_domain(const Program& theory, const Explanation& e) {
    std::set<Term> d = constants(theory);
    for (const Atom& a : e)
        for (const Term& t : a.args) d.insert(t);
    return d;
}

} // namespace

std::vector<Term> SkolemBudget::names() const {
    std::vector<Term> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i)
        out.push_back(Term::constant("o_sk" + std::to_string(i)));
    return out;
}

std::set<SymbolSig> SkolemBudget::name_sigs() const {
    std::set<SymbolSig> out;
    for (std::size_t i = 0; i < count; ++i)
        out.insert(SymbolSig{"o_sk" + std::to_string(i), 0});
    return out;
}

std::set<Atom> abducibles(const AbductionFramework& fr) {
    return abducibles_open(fr, SkolemBudget{0});
}

std::set<Atom> abducibles_open(const AbductionFramework& fr,
                               const SkolemBudget& budget) {
    check_scope(fr, budget);
    std::set<Term> domain = constants(fr.theory);
    for (const Term& s : budget.names()) domain.insert(s);
    std::vector<Atom> pool = ground_atoms(fr.abducibles, domain);
    return std::set<Atom>(pool.begin(), pool.end());
}

std::vector<std::pair<Explanation, Interpretation>>
gsm_enumerate(const AbductionFramework& fr, const SkolemBudget& budget,
              const Limits& limits) {
    std::vector<Explanation> subsets =
        subsets_by_size(abducibles_open(fr, budget), limits);
    std::vector<std::pair<Explanation, Interpretation>> out;
    for (const Explanation& e : subsets) {
        std::vector<Interpretation> models = stable_models(
            assume(fr.theory, e), assumed_domain(fr.theory, e), limits);
        for (Interpretation& m : models)
            out.emplace_back(e, std::move(m));
    }
    return out;
}

std::vector<FlaggedExplanation> explain_credulous(const AbductionFramework& fr,
                                                  const SkolemBudget& budget,
                                                  const Query& q,
                                                  const Limits& limits) {
    std::vector<Explanation> subsets =
        subsets_by_size(abducibles_open(fr, budget), limits);
    std::vector<FlaggedExplanation> out;
    for (const Explanation& e : subsets) {
        std::vector<Interpretation> models = stable_models(
            assume(fr.theory, e), assumed_domain(fr.theory, e), limits);
        bool satisfied = false;
        for (const Interpretation& m : models)
            if (eval_query(m, q)) {
                satisfied = true;
                break;
            }
        if (satisfied) out.push_back(FlaggedExplanation{e, false});
    }
    // An explanation is minimal when no strictly smaller explanation works.
    for (FlaggedExplanation& fe : out) {
        fe.minimal = true;
        for (const FlaggedExplanation& other : out) {
            if (other.atoms.size() >= fe.atoms.size()) break;
            if (std::includes(fe.atoms.begin(), fe.atoms.end(),
                              other.atoms.begin(), other.atoms.end())) {
                fe.minimal = false;
                break;
            }
        }
    }
    return out;
}

std::vector<Explanation> gen_skeptical_consequence(
    const AbductionFramework& fr, const SkolemBudget& budget, const Query& q,
    bool require_consistent, const Limits& limits) {
    std::vector<Explanation> subsets =
        subsets_by_size(abducibles_open(fr, budget), limits);
    std::vector<Explanation> out;
    for (const Explanation& e : subsets) {
        std::vector<Interpretation> models = stable_models(
            assume(fr.theory, e), assumed_domain(fr.theory, e), limits);
        if (require_consistent && models.empty()) continue;
        bool all = true;
        for (const Interpretation& m : models)
            if (!eval_query(m, q)) {
                all = false;
                break;
            }
        if (all) out.push_back(e);
    }
    return out;
}

std::vector<Interpretation> gsm_via_pi(const AbductionFramework& fr,
                                       const SkolemBudget& budget,
                                       const Limits& limits) {
    check_scope(fr, budget);
    OpenProgram omega{fr.theory, budget.name_sigs(), fr.abducibles};
    PiProgram pi = translate(omega);
    Program g =
        ground_translate(pi, default_depth_bound(pi.program), limits);
    std::set<Interpretation> restricted;
    for (const Interpretation& m : stable_models(g, {}, limits))
        restricted.insert(restrict_model(m, pi));
    return std::vector<Interpretation>(restricted.begin(), restricted.end());
}

} // namespace openlp
