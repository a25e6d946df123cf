#include "openlp/syntax.hpp"

#include <algorithm>
#include <sstream>

namespace openlp {

bool has_reserved_prefix(const std::string& name) {
    return name.rfind(reserved_prefix, 0) == 0;
}

Term Term::variable(std::string name) {
    Term t;
    t.kind = Kind::variable;
    t.name = std::move(name);
    return t;
}

Term Term::constant(std::string name) {
    Term t;
    t.kind = Kind::compound;
    t.name = std::move(name);
    return t;
}

Term Term::compound(std::string functor, std::vector<Term> args) {
    Term t;
    t.kind = Kind::compound;
    t.name = std::move(functor);
    t.args = std::move(args);
    return t;
}

bool Term::is_ground() const {
    if (kind == Kind::variable) {
        return false;
    }
    return std::all_of(args.begin(), args.end(), [](const Term& a) { return a.is_ground(); });
}

std::size_t Term::depth() const {
    std::size_t d = 0;
    for (const Term& a : args) {
        d = std::max(d, a.depth() + 1);
    }
    return d;
}

namespace {

template <typename T>
int compare_seq(const std::vector<T>& a, const std::vector<T>& b) {
    for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
        if (int c = compare(a[i], b[i]); c != 0) {
            return c;
        }
    }
    return a.size() < b.size() ? -1 : a.size() > b.size() ? 1 : 0;
}

} // namespace

int compare(const Term& a, const Term& b) {
    if (a.kind != b.kind) {
        return a.kind < b.kind ? -1 : 1;
    }
    if (int c = a.name.compare(b.name); c != 0) {
        return c < 0 ? -1 : 1;
    }
    return compare_seq(a.args, b.args);
}

bool Atom::is_ground() const {
    return std::all_of(args.begin(), args.end(), [](const Term& t) { return t.is_ground(); });
}

int compare(const Atom& a, const Atom& b) {
    if (int c = a.predicate.compare(b.predicate); c != 0) {
        return c < 0 ? -1 : 1;
    }
    return compare_seq(a.args, b.args);
}

bool Rule::is_ground() const {
    if (!head.is_ground()) {
        return false;
    }
    auto ground = [](const Atom& a) { return a.is_ground(); };
    return std::all_of(pos.begin(), pos.end(), ground) && std::all_of(neg.begin(), neg.end(), ground);
}

int compare(const Rule& a, const Rule& b) {
    if (int c = compare(a.head, b.head); c != 0) {
        return c;
    }
    if (int c = compare_seq(a.pos, b.pos); c != 0) {
        return c;
    }
    return compare_seq(a.neg, b.neg);
}

bool Program::is_ground() const {
    return std::all_of(rules.begin(), rules.end(), [](const Rule& r) { return r.is_ground(); });
}

Program Program::normalized() const {
    Program out = *this;
    std::sort(out.rules.begin(), out.rules.end());
    out.rules.erase(std::unique(out.rules.begin(), out.rules.end()), out.rules.end());
    return out;
}

int compare(const SymbolSig& a, const SymbolSig& b) {
    if (int c = a.name.compare(b.name); c != 0) {
        return c < 0 ? -1 : 1;
    }
    return a.arity < b.arity ? -1 : a.arity > b.arity ? 1 : 0;
}

void collect_signature(const Term& t, Signature& sig) {
    if (t.kind == Term::Kind::variable) {
        return;
    }
    sig.functions.insert({t.name, t.args.size()});
    for (const Term& a : t.args) {
        collect_signature(a, sig);
    }
}

void collect_signature(const Atom& a, Signature& sig) {
    sig.predicates.insert({a.predicate, a.args.size()});
    for (const Term& t : a.args) {
        collect_signature(t, sig);
    }
}

Signature signature(const Program& p) {
    Signature sig;
    for (const Rule& r : p.rules) {
        collect_signature(r.head, sig);
        for (const Atom& a : r.pos) {
            collect_signature(a, sig);
        }
        for (const Atom& a : r.neg) {
            collect_signature(a, sig);
        }
    }
    return sig;
}

std::set<Term> constants(const Program& p) {
    std::set<Term> out;
    for (const SymbolSig& f : signature(p).functions) {
        if (f.arity == 0) {
            out.insert(Term::constant(f.name));
        }
    }
    return out;
}

namespace {

void collect_vars(const Term& t, std::vector<std::string>& out) {
    if (t.kind == Term::Kind::variable) {
        if (std::find(out.begin(), out.end(), t.name) == out.end()) {
            out.push_back(t.name);
        }
        return;
    }
    for (const Term& a : t.args) {
        collect_vars(a, out);
    }
}

void collect_vars(const Atom& a, std::vector<std::string>& out) {
    for (const Term& t : a.args) {
        collect_vars(t, out);
    }
}

} // namespace

std::vector<std::string> rule_variables(const Rule& r) {
    std::vector<std::string> out;
    collect_vars(r.head, out);
    for (const Atom& a : r.pos) {
        collect_vars(a, out);
    }
    for (const Atom& a : r.neg) {
        collect_vars(a, out);
    }
    return out;
}

Query Query::leaf(Atom a) {
    Query q;
    q.kind = Kind::atom;
    q.atom = std::move(a);
    return q;
}

Query Query::negation(Query inner) {
    Query q;
    q.kind = Kind::negation;
    q.sub.push_back(std::move(inner));
    return q;
}

Query Query::conjunction(Query l, Query r) {
    Query q;
    q.kind = Kind::conjunction;
    q.sub.push_back(std::move(l));
    q.sub.push_back(std::move(r));
    return q;
}

Query Query::disjunction(Query l, Query r) {
    Query q;
    q.kind = Kind::disjunction;
    q.sub.push_back(std::move(l));
    q.sub.push_back(std::move(r));
    return q;
}

std::vector<Atom> Query::atoms() const {
    std::vector<Atom> out;
    if (kind == Kind::atom) {
        out.push_back(atom);
        return out;
    }
    for (const Query& q : sub) {
        for (Atom& a : q.atoms()) {
            out.push_back(std::move(a));
        }
    }
    return out;
}

namespace {

void print_term(std::ostream& os, const Term& t) {
    os << t.name;
    if (!t.args.empty()) {
        os << "(";
        const char* sep = "";
        for (const Term& a : t.args) {
            os << sep;
            print_term(os, a);
            sep = ",";
        }
        os << ")";
    }
}

void print_atom(std::ostream& os, const Atom& a) {
    os << a.predicate;
    if (!a.args.empty()) {
        os << "(";
        const char* sep = "";
        for (const Term& t : a.args) {
            os << sep;
            print_term(os, t);
            sep = ",";
        }
        os << ")";
    }
}

void print_rule(std::ostream& os, const Rule& r) {
    print_atom(os, r.head);
    if (!r.is_fact()) {
        os << " :- ";
        const char* sep = "";
        for (const Atom& a : r.pos) {
            os << sep;
            print_atom(os, a);
            sep = ", ";
        }
        for (const Atom& a : r.neg) {
            os << sep << "not ";
            print_atom(os, a);
            sep = ", ";
        }
    }
    os << ".";
}

} // namespace

std::string to_string(const Term& t) {
    std::ostringstream os;
    print_term(os, t);
    return os.str();
}

std::string to_string(const Atom& a) {
    std::ostringstream os;
    print_atom(os, a);
    return os.str();
}

std::string to_string(const Rule& r) {
    std::ostringstream os;
    print_rule(os, r);
    return os.str();
}

std::string to_string(const Program& p) {
    std::ostringstream os;
    for (const Rule& r : p.rules) {
        print_rule(os, r);
        os << "\n";
    }
    return os.str();
}

std::string to_string(const OpenProgram& omega) {
    std::ostringstream os;
    os << to_string(omega.program);
    for (const SymbolSig& f : omega.fresh) {
        os << "#fresh " << f.name << "/" << f.arity << ".\n";
    }
    for (const SymbolSig& p : omega.open) {
        os << "#open " << p.name << "/" << p.arity << ".\n";
    }
    return os.str();
}

std::string to_string(const Query& q) {
    switch (q.kind) {
        case Query::Kind::atom:
            return to_string(q.atom);
        case Query::Kind::negation:
            return "not " + to_string(q.sub[0]);
        case Query::Kind::conjunction:
            return "(" + to_string(q.sub[0]) + " and " + to_string(q.sub[1]) + ")";
        case Query::Kind::disjunction:
            return "(" + to_string(q.sub[0]) + " or " + to_string(q.sub[1]) + ")";
    }
    return {};
}

} // namespace openlp
