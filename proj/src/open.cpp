#include "openlp/open.hpp"

#include <atomic>
#include <exception>
#include <future>
#include <thread>
#include <utility>

#include "openlp/error.hpp"
#include "openlp/ground.hpp"

namespace openlp {

namespace {

// The brute-force oracle only covers function-free programs with arity-0
// fresh symbols; anything else has an unbounded completion space.
void check_scope(const OpenProgram& omega) {
    Signature sig = signature(omega.program);
    for (const SymbolSig& f : sig.functions)
        if (f.arity > 0)
            throw ScopeError("completion oracle requires a function-free program; found " +
                             f.name + "/" + std::to_string(f.arity));
    for (const SymbolSig& f : omega.fresh)
        if (f.arity > 0)
            throw ScopeError("completion oracle requires arity-0 fresh symbols; found " +
                             f.name + "/" + std::to_string(f.arity));
}

// Evaluate a predicate over completion normal forms, stopping at the first
// hit. With jobs > 1 the normal forms are scanned by a small thread pool;
// the outcome is whether a hit exists, which no schedule can change.
template <typename Pred>
bool exists_nf(const std::vector<CompletionNF>& nfs, Pred&& hit,
               unsigned jobs) {
    if (jobs <= 1 || nfs.size() <= 1) {
        for (const CompletionNF& nf : nfs)
            if (hit(nf)) return true;
        return false;
    }
    std::atomic<bool> found{false};
    unsigned workers = static_cast<unsigned>(
        std::min<std::size_t>(jobs, nfs.size()));
    std::vector<std::future<void>> futures;
    futures.reserve(workers);
    for (unsigned t = 0; t < workers; ++t) {
        futures.push_back(std::async(std::launch::async, [&, t] {
            for (std::size_t i = t; i < nfs.size(); i += workers) {
                if (found.load(std::memory_order_relaxed)) return;
                if (hit(nfs[i])) {
                    found.store(true, std::memory_order_relaxed);
                    return;
                }
            }
        }));
    }
    std::exception_ptr first;
    for (auto& f : futures) {
        try {
            f.get();
        } catch (...) {
            if (!first) first = std::current_exception();
        }
    }
    if (first) std::rethrow_exception(first);
    return found.load();
}

} // namespace

const char* to_string(OpenMode m) {
    switch (m) {
    case OpenMode::crd: return "crd";
    case OpenMode::skp: return "skp";
    case OpenMode::cs: return "cs";
    case OpenMode::sc: return "sc";
    }
    return "?";
}

std::vector<CompletionNF> completions_nf(const OpenProgram& omega,
                                         const Limits& limits) {
    check_scope(omega);
    // Without open predicates no rule may be added, so the program is its
    // own sole completion and no fresh constant can be activated.
    if (omega.open.empty()) return {CompletionNF{}};

    std::vector<Term> fresh;
    for (const SymbolSig& f : omega.fresh) fresh.push_back(Term::constant(f.name));
    if (fresh.size() >= 64 ||
        (std::uint64_t{1} << fresh.size()) > limits.max_completions)
        throw CapacityError("completion enumeration over " +
                            std::to_string(fresh.size()) +
                            " fresh constants exceeds cap " +
                            std::to_string(limits.max_completions));

    std::set<Term> base = constants(omega.program);
    std::vector<CompletionNF> out;
    std::uint64_t total = 0;
    for (std::uint64_t cmask = 0; cmask < (std::uint64_t{1} << fresh.size());
         ++cmask) {
        std::set<Term> activated;
        for (std::size_t i = 0; i < fresh.size(); ++i)
            if ((cmask >> i) & 1u) activated.insert(fresh[i]);
        std::set<Term> domain = base;
        domain.insert(activated.begin(), activated.end());
        std::vector<Atom> pool = ground_atoms(omega.open, domain);
        if (pool.size() > 62)
            throw CapacityError("completion enumeration over " +
                                std::to_string(pool.size()) +
                                " candidate open facts");
        std::uint64_t block = std::uint64_t{1} << pool.size();
        if (total > limits.max_completions - block)
            throw CapacityError("completion enumeration exceeds cap " +
                                std::to_string(limits.max_completions));
        total += block;
        for (std::uint64_t emask = 0; emask < block; ++emask) {
            CompletionNF nf;
            nf.activated = activated;
            for (std::size_t i = 0; i < pool.size(); ++i)
                if ((emask >> i) & 1u) nf.facts.insert(pool[i]);
            out.push_back(std::move(nf));
        }
    }
    return out;
}

Realization realize(const CompletionNF& nf, const OpenProgram& omega) {
    for (const Term& c : nf.activated)
        if (!c.is_constant() || !omega.fresh.count(SymbolSig{c.name, 0}))
            throw ScopeError("activated symbol " + to_string(c) +
                             " is not a fresh constant of the open program");
    if (!nf.activated.empty() && omega.open.empty())
        throw ScopeError("cannot activate a fresh constant without an open "
                         "predicate to mention it");

    Realization r;
    r.domain = constants(omega.program);
    r.domain.insert(nf.activated.begin(), nf.activated.end());

    for (const Atom& a : nf.facts) {
        if (!a.is_ground())
            throw ScopeError("completion fact " + to_string(a) +
                             " is not ground");
        if (!omega.open.count(SymbolSig{a.predicate, a.arity()}))
            throw ScopeError("completion fact " + to_string(a) +
                             " is not over an open predicate");
        for (const Term& t : a.args)
            if (!t.is_constant() || !r.domain.count(t))
                throw ScopeError("completion fact " + to_string(a) +
                                 " mentions a constant outside the domain");
    }

    r.program = omega.program;
    for (const Atom& a : nf.facts) r.program.rules.push_back(Rule{a, {}, {}});

    // An activated constant the facts never mention still has to occur in
    // the realized program; a self-supporting tautology on the first open
    // predicate mentions it without touching any stable model.
    if (!nf.activated.empty()) {
        const SymbolSig& pad = *omega.open.begin();
        for (const Term& c : nf.activated) {
            bool mentioned = false;
            for (const Atom& a : nf.facts) {
                for (const Term& t : a.args) mentioned |= (t == c);
                if (mentioned) break;
            }
            if (mentioned) continue;
            Atom head{pad.name, std::vector<Term>(pad.arity, c)};
            r.program.rules.push_back(Rule{head, {head}, {}});
        }
    }
    return r;
}

bool open_entails(const OpenProgram& omega, OpenMode mode, const Query& q,
                  const Limits& limits, unsigned jobs) {
    std::vector<CompletionNF> nfs = completions_nf(omega, limits);

    // Each mode is an existential scan: crd and cs look for a witness
    // completion, skp and sc look for a counterexample.
    auto hit = [&](const CompletionNF& nf) {
        Realization r = realize(nf, omega);
        std::vector<Interpretation> models =
            stable_models(r.program, r.domain, limits);
        switch (mode) {
        case OpenMode::crd: // witness: some model satisfies q
            for (const Interpretation& m : models)
                if (eval_query(m, q)) return true;
            return false;
        case OpenMode::skp: // counterexample: some model violates q
            for (const Interpretation& m : models)
                if (!eval_query(m, q)) return true;
            return false;
        case OpenMode::cs: // witness: consistent and every model satisfies q
            if (models.empty()) return false;
            for (const Interpretation& m : models)
                if (!eval_query(m, q)) return false;
            return true;
        case OpenMode::sc: // counterexample: consistent but no model satisfies q
            if (models.empty()) return false;
            for (const Interpretation& m : models)
                if (eval_query(m, q)) return false;
            return true;
        }
        return false;
    };
    bool found = exists_nf(nfs, hit, jobs);
    return (mode == OpenMode::crd || mode == OpenMode::cs) ? found : !found;
}

bool has_consistent_completion(const OpenProgram& omega, const Limits& limits,
                               unsigned jobs) {
    std::vector<CompletionNF> nfs = completions_nf(omega, limits);
    return exists_nf(
        nfs,
        [&](const CompletionNF& nf) {
            Realization r = realize(nf, omega);
            return !stable_models(r.program, r.domain, limits).empty();
        },
        jobs);
}

} // namespace openlp
