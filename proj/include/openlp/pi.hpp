#pragma once

#include <map>
#include <optional>
#include <string>

#include "openlp/limits.hpp"
#include "openlp/open.hpp"
#include "openlp/stable.hpp"
#include "openlp/syntax.hpp"

namespace openlp {

/// Names generated by the translation, all under the reserved prefix:
/// the domain predicate U, the selection predicates S and S-bar, one dual
/// predicate per open predicate, and one name constant per function symbol
/// (a constant standing for the symbol, so selection stays first-order).
struct NameMap {
    std::string domain_pred = "o_u";
    std::string select_pred = "o_s";
    std::string deselect_pred = "o_ns";
    std::map<SymbolSig, std::string> open_dual;
    std::map<SymbolSig, std::string> func_name;

    bool is_generated_predicate(const std::string& name) const;
};

/// A translated open program: the plain normal program, the generated
/// names, and the open program it came from.
struct PiProgram {
    Program program;
    NameMap names;
    OpenProgram origin;
};

/// Translate an open program into a plain normal program whose stable
/// models, restricted by restrict_model, are the stable models of the
/// completions. Emits four rule families: the source rules guarded by the
/// domain predicate on each variable; one domain rule per function symbol;
/// one selection fact (fixed symbol) or selection choice pair (fresh
/// symbol) per function symbol; and one choice pair per open predicate.
/// Throws ScopeError when a generated name collides with an input symbol
/// or a fresh symbol already occurs in the program.
PiProgram translate(const OpenProgram& omega);

/// Restrict a stable model of the translation to the vocabulary of the
/// source open program: drop generated predicates, and keep an atom only
/// if the domain predicate holds of each of its arguments.
Interpretation restrict_model(const Interpretation& m, const PiProgram& pi);

/// Ground the translation over its Herbrand universe cut at depth_bound.
/// Exact for function-free input (the bound is then irrelevant); with
/// proper function symbols the grounding is an approximation up to the
/// bound. Throws CapacityError past limits.max_ground_rules.
Program ground_translate(const PiProgram& pi, std::size_t depth_bound,
                         const Limits& limits = {});

/// Credulous or skeptical open entailment decided on the ground
/// translation. Only crd and skp reduce to plain entailment; cs and sc are
/// rejected, as is a query mentioning generated predicates. depth_bound
/// defaults to the deepest term of the translated program.
bool open_entails_via_pi(const OpenProgram& omega, OpenMode mode,
                         const Query& q, const Limits& limits = {},
                         std::optional<std::size_t> depth_bound = {});

/// Partial evaluation of a translation with no fresh symbols: the domain
/// extension is then the constant set of the source program, so the domain
/// and selection machinery can be evaluated away. Returns the source rules
/// and open choice pairs instantiated over that extension. Throws
/// ScopeError when fresh symbols are present or the program has proper
/// function symbols (the extension would be infinite).
Program unfold(const PiProgram& pi);

/// Render a ground program as one rule per line in the input grammar,
/// lines sorted and deduplicated — directly consumable by ASP front-ends
/// that accept plain normal rules.
std::string export_text(const Program& g);

} // namespace openlp
