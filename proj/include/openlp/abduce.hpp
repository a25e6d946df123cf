#pragma once

#include <set>
#include <utility>
#include <vector>

#include "openlp/limits.hpp"
#include "openlp/stable.hpp"
#include "openlp/syntax.hpp"

namespace openlp {

/// An abduction framework: a theory and the predicates whose ground atoms
/// may be assumed. Abducible predicates may also occur in the theory
/// (partial specification).
struct AbductionFramework {
    Program theory;
    std::set<SymbolSig> abducibles;
};

/// A finite prefix of the canonical skolem constant sequence o_sk0,
/// o_sk1, ... — the new individuals abduction is allowed to postulate.
/// The fixed naming makes larger budgets literal supersets of smaller ones.
struct SkolemBudget {
    std::size_t count = 0;

    std::vector<Term> names() const;
    std::set<SymbolSig> name_sigs() const;
};

/// A set of assumed ground abducible atoms.
using Explanation = std::set<Atom>;

struct FlaggedExplanation {
    Explanation atoms;
    bool minimal = false;
};

/// All ground atoms of abducible predicates over the theory's constants.
/// Throws ScopeError if the theory has proper function symbols (the set
/// would be infinite).
std::set<Atom> abducibles(const AbductionFramework& fr);

/// Abducible atoms over the theory's constants plus the budgeted skolems;
/// monotone in the budget. Budget 0 coincides with abducibles().
std::set<Atom> abducibles_open(const AbductionFramework& fr,
                               const SkolemBudget& budget);

/// All pairs (E, M) with E a subset of the budgeted abducibles and M a
/// stable model of theory ∪ E, grounded over the constants of theory ∪ E.
/// Pairs are ordered by E (size, then lexicographic), then by M.
std::vector<std::pair<Explanation, Interpretation>>
gsm_enumerate(const AbductionFramework& fr, const SkolemBudget& budget,
              const Limits& limits = {});

/// Every E such that some stable model of theory ∪ E satisfies q, in
/// size-then-lexicographic order, with the subset-minimal ones flagged.
std::vector<FlaggedExplanation> explain_credulous(const AbductionFramework& fr,
                                                  const SkolemBudget& budget,
                                                  const Query& q,
                                                  const Limits& limits = {});

/// Every E such that all stable models of theory ∪ E satisfy q. With
/// require_consistent (the default), theory ∪ E must also have at least
/// one stable model, ruling out vacuous consequences.
std::vector<Explanation> gen_skeptical_consequence(
    const AbductionFramework& fr, const SkolemBudget& budget, const Query& q,
    bool require_consistent = true, const Limits& limits = {});

/// The models of gsm_enumerate computed the other way: translate
/// ⟨theory, skolems, abducibles⟩, take the stable models of the ground
/// translation, and restrict each to the source vocabulary. Sorted and
/// deduplicated.
std::vector<Interpretation> gsm_via_pi(const AbductionFramework& fr,
                                       const SkolemBudget& budget,
                                       const Limits& limits = {});

} // namespace openlp
