#pragma once

#include <cstddef>
#include <set>
#include <string>
#include <vector>

namespace openlp {

/// Reserved prefix for generated symbols; rejected in user input.
inline constexpr const char* reserved_prefix = "o_";

bool has_reserved_prefix(const std::string& name);

// A term is a variable or a compound; a constant is a compound of arity 0.
// Variable names start uppercase, functor names start lowercase.
struct Term {
    enum class Kind { variable, compound };

    Kind kind = Kind::compound;
    std::string name;
    std::vector<Term> args;

    static Term variable(std::string name);
    static Term constant(std::string name);
    static Term compound(std::string functor, std::vector<Term> args);

    bool is_variable() const { return kind == Kind::variable; }
    bool is_constant() const { return kind == Kind::compound && args.empty(); }
    bool is_ground() const;

    /// Nesting depth: constants and variables have depth 0, f(a) has depth 1.
    std::size_t depth() const;
};

int compare(const Term& a, const Term& b);
inline bool operator==(const Term& a, const Term& b) { return compare(a, b) == 0; }
inline bool operator<(const Term& a, const Term& b) { return compare(a, b) < 0; }

struct Atom {
    std::string predicate;
    std::vector<Term> args;

    std::size_t arity() const { return args.size(); }
    bool is_ground() const;
};

int compare(const Atom& a, const Atom& b);
inline bool operator==(const Atom& a, const Atom& b) { return compare(a, b) == 0; }
inline bool operator<(const Atom& a, const Atom& b) { return compare(a, b) < 0; }

// head :- pos, not neg. A fact is a rule with empty pos and neg.
// No safety requirement: variables may occur only under negation.
struct Rule {
    Atom head;
    std::vector<Atom> pos;
    std::vector<Atom> neg;

    bool is_fact() const { return pos.empty() && neg.empty(); }
    bool is_ground() const;
};

int compare(const Rule& a, const Rule& b);
inline bool operator==(const Rule& a, const Rule& b) { return compare(a, b) == 0; }
inline bool operator<(const Rule& a, const Rule& b) { return compare(a, b) < 0; }

struct Program {
    std::vector<Rule> rules;

    bool is_ground() const;
    /// Rules sorted and deduplicated.
    Program normalized() const;
};

inline bool operator==(const Program& a, const Program& b) { return a.rules == b.rules; }

/// A predicate or function symbol with its arity.
struct SymbolSig {
    std::string name;
    std::size_t arity = 0;
};

int compare(const SymbolSig& a, const SymbolSig& b);
inline bool operator==(const SymbolSig& a, const SymbolSig& b) { return compare(a, b) == 0; }
inline bool operator<(const SymbolSig& a, const SymbolSig& b) { return compare(a, b) < 0; }

/// The predicate and function symbols occurring in a program.
/// Constants are functions of arity 0; the two symbol classes are disjoint.
struct Signature {
    std::set<SymbolSig> predicates;
    std::set<SymbolSig> functions;
};

Signature signature(const Program& p);
void collect_signature(const Term& t, Signature& sig);
void collect_signature(const Atom& a, Signature& sig);

/// Constants (0-ary functions) occurring in a program, as ground terms.
std::set<Term> constants(const Program& p);

/// Distinct variable names of a rule in first-occurrence order
/// (head, then positive body, then negative body).
std::vector<std::string> rule_variables(const Rule& r);

// An open program (P, F, O): program P, reserved fresh function/constant
// symbols F not occurring in P, and open predicate symbols O whose
// definitions may be extended. P may partially define open predicates.
struct OpenProgram {
    Program program;
    std::set<SymbolSig> fresh;
    std::set<SymbolSig> open;
};

/// Ground boolean query over atoms: Atom | not Q | Q and Q | Q or Q.
struct Query {
    enum class Kind { atom, negation, conjunction, disjunction };

    Kind kind = Kind::atom;
    Atom atom;               // valid when kind == atom
    std::vector<Query> sub;  // 1 child for negation, 2 for conjunction/disjunction

    static Query leaf(Atom a);
    static Query negation(Query q);
    static Query conjunction(Query l, Query r);
    static Query disjunction(Query l, Query r);

    /// All atoms occurring in the formula.
    std::vector<Atom> atoms() const;
};

// Printing. print(parse(text)) == text for normalized sources: one statement
// per line, bodies with positive literals before negative ones.
std::string to_string(const Term& t);
std::string to_string(const Atom& a);
std::string to_string(const Rule& r);
std::string to_string(const Program& p);
std::string to_string(const OpenProgram& omega);
std::string to_string(const Query& q);

} // namespace openlp
