#pragma once

#include <cstddef>
#include <optional>
#include <set>

#include "openlp/syntax.hpp"

namespace openlp {

/// All ground terms over sig's function symbols with nesting depth at most
/// depth_bound. Empty when sig has no constants. Coincides with the full
/// Herbrand universe whenever sig has no function of arity >= 1.
std::set<Term> herbrand_universe(const Signature& sig, std::size_t depth_bound);

/// Default depth bound: no nesting beyond the deepest term in the source.
std::size_t default_depth_bound(const Program& p);

/// Number of instances ground_program would emit, or nullopt on overflow.
std::optional<std::size_t> ground_instance_count(const Program& p, std::size_t domain_size);

/// Every rule instantiated with every substitution mapping its variables
/// into domain. Instances are kept as a sequence, in rule order, without
/// deduplication; ground rules pass through untouched.
Program ground_program(const Program& p, const std::set<Term>& domain);

/// All ground atoms of the given predicates over the domain, sorted.
/// A 0-ary predicate contributes its single atom regardless of domain.
std::vector<Atom> ground_atoms(const std::set<SymbolSig>& preds,
                               const std::set<Term>& domain);

} // namespace openlp
