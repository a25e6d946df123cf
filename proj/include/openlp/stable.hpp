#pragma once

#include <set>
#include <vector>

#include "openlp/limits.hpp"
#include "openlp/syntax.hpp"

namespace openlp {

/// A (candidate) model: a set of ground atoms.
using Interpretation = std::set<Atom>;

enum class EntailMode { credulous, skeptical };

/// Reduct of a ground program with respect to an interpretation: drop every
/// rule whose negative body intersects the interpretation, then strip the
/// negative bodies of the survivors. The result is negation-free.
/// Throws ScopeError if the program is not ground.
Program reduct(const Program& pg, const Interpretation& i);

/// Least model of a ground negation-free program, computed as the least
/// fixpoint of the immediate-consequence step. Throws ScopeError if any rule
/// carries a negative body literal or is not ground.
Interpretation least_model(const Program& pg);

/// Whether i is a stable model of the ground program pg, checked by the
/// definition: least_model(reduct(pg, i)) == i. Throws ScopeError if i
/// mentions a predicate or function symbol foreign to pg.
bool is_stable(const Program& pg, const Interpretation& i);

/// All stable models of the grounding of p over the given constant domain,
/// as a deterministic sorted list. Throws CapacityError when the grounding
/// or the residual search space exceeds the limits.
std::vector<Interpretation> stable_models(const Program& p,
                                          const std::set<Term>& domain,
                                          const Limits& limits = {});

/// Truth of a ground query in an interpretation.
bool eval_query(const Interpretation& i, const Query& q);

/// Credulous (some stable model satisfies q) or skeptical (every stable
/// model satisfies q) entailment over the grounding of p. Skeptical
/// entailment is vacuously true for an inconsistent program.
bool entails(const Program& p, const std::set<Term>& domain, EntailMode mode,
             const Query& q, const Limits& limits = {});

/// Whether the grounding of p has at least one stable model.
bool is_consistent(const Program& p, const std::set<Term>& domain,
                   const Limits& limits = {});

} // namespace openlp
