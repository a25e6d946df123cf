#pragma once

#include <set>
#include <string>
#include <vector>

#include "openlp/limits.hpp"
#include "openlp/stable.hpp"
#include "openlp/syntax.hpp"

namespace openlp {

/// Normal form of a completion of an open program: the set of fresh
/// constants the completion activates (makes occur in the program) plus the
/// ground facts it asserts on open predicates. Every completion is
/// equivalent, model by model, to one of these.
struct CompletionNF {
    std::set<Term> activated;
    std::set<Atom> facts;
};

/// The four open-inference modes: credulous, skeptical, and the two
/// consistency-guarded variants (cs: some consistent completion entails
/// skeptically; sc: every consistent completion entails credulously).
enum class OpenMode { crd, skp, cs, sc };

const char* to_string(OpenMode m);

/// A completion normal form realized as a concrete program together with
/// the constant domain its grounding ranges over.
struct Realization {
    Program program;
    std::set<Term> domain;
};

/// All completion normal forms of omega, deterministically ordered by
/// activation subset then fact subset. Requires a function-free program and
/// arity-0 fresh symbols; throws ScopeError otherwise and CapacityError
/// when the enumeration exceeds limits.max_completions.
std::vector<CompletionNF> completions_nf(const OpenProgram& omega,
                                         const Limits& limits = {});

/// Realize a normal form as a legal completion: the program plus the open
/// facts, with a tautological padding rule for each activated constant the
/// facts do not mention. Throws ScopeError if nf is not valid for omega or
/// if a constant is activated while omega has no open predicate.
Realization realize(const CompletionNF& nf, const OpenProgram& omega);

/// Open entailment by brute force over all completion normal forms.
/// jobs > 1 evaluates completions in parallel with early exit; the verdict
/// does not depend on jobs.
bool open_entails(const OpenProgram& omega, OpenMode mode, const Query& q,
                  const Limits& limits = {}, unsigned jobs = 1);

/// Whether some completion of omega has at least one stable model.
bool has_consistent_completion(const OpenProgram& omega,
                               const Limits& limits = {}, unsigned jobs = 1);

} // namespace openlp
