// Release gate: each check prints one PASS/FAIL line; the process exits
// non-zero if any check fails. Timed checks fail when over budget.

#include <algorithm>
#include <chrono>
#include <iostream>
#include <set>
#include <string>
#include <vector>

#include "generators.hpp"
#include "openlp/abduce.hpp"
#include "openlp/ground.hpp"
#include "openlp/open.hpp"
#include "openlp/parser.hpp"
#include "openlp/pi.hpp"
#include "openlp/stable.hpp"
#include "openlp/syntax.hpp"
#include "oracle.hpp"

using namespace openlp;

namespace {

using Clock = std::chrono::steady_clock;

int failures = 0;

void report(int n, const std::string& what, bool ok) {
    std::cout << (ok ? "PASS" : "FAIL") << " " << n << ": " << what << "\n";
    if (!ok) ++failures;
}

double elapsed_s(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

Term a() { return Term::constant("a"); }

OpenProgram running_open() {
    return parse_open_program("p(a). q :- not p(X). #fresh b/0. #open r/1.");
}

std::set<std::string> rule_lines(const Program& p) {
    std::set<std::string> lines;
    for (const Rule& r : p.rules) lines.insert(to_string(r));
    return lines;
}

std::set<Interpretation> translated_model_set(const OpenProgram& omega,
                                              const Limits& limits) {
    PiProgram pi = translate(omega);
    Program g = ground_translate(pi, default_depth_bound(pi.program), limits);
    std::set<Interpretation> out;
    for (const Interpretation& m : stable_models(g, {}, limits))
        out.insert(restrict_model(m, pi));
    return out;
}

std::set<Interpretation> completion_model_set(const OpenProgram& omega,
                                              const Limits& limits) {
    std::set<Interpretation> out;
    for (const CompletionNF& nf : completions_nf(omega, limits)) {
        Realization r = realize(nf, omega);
        for (const Interpretation& m :
             stable_models(r.program, r.domain, limits))
            out.insert(m);
    }
    return out;
}

// 1. On the running example, neither q nor its negation is a skeptical
// consequence, under both the completion scan and the translation.
bool check_skeptical_gap() {
    Clock::time_point start = Clock::now();
    OpenProgram omega = running_open();
    Query q = parse_query("q"), nq = parse_query("not q");
    bool ok = !open_entails(omega, OpenMode::skp, q) &&
              !open_entails(omega, OpenMode::skp, nq) &&
              !open_entails_via_pi(omega, OpenMode::skp, q) &&
              !open_entails_via_pi(omega, OpenMode::skp, nq);
    return ok && elapsed_s(start) < 1.0;
}

// 2. The translation of the running example is exactly nine rules.
bool check_translation_golden() {
    std::set<std::string> expect{
        "p(a).",
        "q :- o_u(X), not p(X).",
        "o_u(a) :- o_s(o_sym_a_0).",
        "o_u(b) :- o_s(o_sym_b_0).",
        "o_s(o_sym_a_0).",
        "o_s(o_sym_b_0) :- not o_ns(o_sym_b_0).",
        "o_ns(o_sym_b_0) :- not o_s(o_sym_b_0).",
        "r(X1) :- o_u(X1), not o_neg_r(X1).",
        "o_neg_r(X1) :- o_u(X1), not r(X1).",
    };
    PiProgram pi = translate(running_open());
    return pi.program.rules.size() == 9 && rule_lines(pi.program) == expect;
}

// 3. Unfolding the fresh-free variant collapses to four rules.
bool check_unfold_golden() {
    std::set<std::string> expect{
        "p(a).",
        "q :- not p(a).",
        "r(a) :- not o_neg_r(a).",
        "o_neg_r(a) :- not r(a).",
    };
    OpenProgram omega = parse_open_program("p(a). q :- not p(X). #open r/1.");
    Program u = unfold(translate(omega));
    return u.rules.size() == 4 && rule_lines(u) == expect;
}

// 4. Abduction: no assumption set over the theory's own constants makes q
// true, one postulated individual does, and its explanation is minimal.
bool check_abduction() {
    Clock::time_point start = Clock::now();
    AbductionFramework fr{parse_program("p(a). q :- r(X), not p(X)."),
                          {{"r", 1}}};
    Query q = parse_query("q");
    bool budget0 = explain_credulous(fr, SkolemBudget{0}, q).empty();
    for (const auto& [e, m] : gsm_enumerate(fr, SkolemBudget{0}))
        if (m.count(Atom{"q", {}})) budget0 = false;

    Atom r_sk{"r", {Term::constant("o_sk0")}};
    Interpretation expect_m{Atom{"p", {a()}}, Atom{"q", {}}, r_sk};
    bool has_model = false;
    for (const auto& [e, m] : gsm_enumerate(fr, SkolemBudget{1}))
        if (m == expect_m && e == Explanation{r_sk}) has_model = true;

    auto flagged = explain_credulous(fr, SkolemBudget{1}, q);
    bool minimal = flagged.size() == 2 && flagged[0].atoms == Explanation{r_sk} &&
                   flagged[0].minimal && !flagged[1].minimal;
    return budget0 && has_model && minimal && elapsed_s(start) < 1.0;
}

// 5. Restricted models of the ground translation equal the union of
// stable models over all completion normal forms, on 200 random open
// programs, within the time budget.
bool check_translation_equivalence() {
    Clock::time_point start = Clock::now();
    testsupport::Gen gen(9005);
    Limits limits{.max_atoms = 30};
    for (int i = 0; i < 200; ++i) {
        OpenProgram omega = testsupport::random_open_program(gen);
        if (translated_model_set(omega, limits) !=
            completion_model_set(omega, limits))
            return false;
    }
    return elapsed_s(start) < 60.0;
}

// 6. Mode algebra on 500 random instances: credulous and skeptical are
// dual through negation, as are the two consistency-guarded modes; given
// a consistent completion the four modes form the expected implications.
bool check_mode_algebra() {
    testsupport::Gen gen(9006);
    std::vector<SymbolSig> preds{{"p", 1}, {"q", 0}, {"r", 1}, {"s", 1}};
    std::vector<Term> consts{a(), Term::constant("b")};
    for (int i = 0; i < 500; ++i) {
        OpenProgram omega = testsupport::random_open_program(gen);
        Query q = testsupport::random_query(gen, preds, consts, 2);
        Query nq = Query::negation(q);
        bool crd = open_entails(omega, OpenMode::crd, q);
        bool skp = open_entails(omega, OpenMode::skp, q);
        bool cs = open_entails(omega, OpenMode::cs, q);
        bool sc = open_entails(omega, OpenMode::sc, q);
        if (crd == open_entails(omega, OpenMode::skp, nq)) return false;
        if (sc == open_entails(omega, OpenMode::cs, nq)) return false;
        if (has_consistent_completion(omega)) {
            if (skp && !(cs && sc)) return false;
            if ((cs || sc) && !crd) return false;
        }
    }
    return true;
}

// 7. Without skolems, direct enumeration of assumption sets, the
// completion semantics, and the translation yield the same model sets,
// on 200 random frameworks.
bool check_abduction_agreement() {
    testsupport::Gen gen(9007);
    Limits limits{.max_atoms = 30};
    for (int i = 0; i < 200; ++i) {
        OpenProgram seed = testsupport::random_open_program(gen);
        AbductionFramework fr{seed.program, seed.open};
        std::set<Interpretation> direct;
        for (const auto& [e, m] : gsm_enumerate(fr, SkolemBudget{0}, limits))
            direct.insert(m);
        std::vector<Interpretation> pi = gsm_via_pi(fr, SkolemBudget{0}, limits);
        if (direct != std::set<Interpretation>(pi.begin(), pi.end()))
            return false;
        OpenProgram omega{fr.theory, {}, fr.abducibles};
        if (direct != completion_model_set(omega, limits)) return false;
    }
    return true;
}

// 8. With nothing open and nothing fresh, all four modes collapse to
// plain credulous/skeptical entailment, on 100 random consistent programs.
bool check_collapse() {
    testsupport::Gen gen(9008);
    std::vector<SymbolSig> preds{{"g0", 0}, {"g1", 0}, {"g2", 0},
                                 {"g3", 0}, {"g4", 0}, {"g5", 0}};
    int done = 0;
    while (done < 100) {
        Program g = testsupport::random_ground_program(gen, 6, 6);
        if (!is_consistent(g, {})) continue;
        ++done;
        Query q = testsupport::random_query(gen, preds, {}, 2);
        bool crd = entails(g, {}, EntailMode::credulous, q);
        bool skp = entails(g, {}, EntailMode::skeptical, q);
        OpenProgram omega{g, {}, {}};
        if (open_entails(omega, OpenMode::crd, q) != crd) return false;
        if (open_entails(omega, OpenMode::sc, q) != crd) return false;
        if (open_entails(omega, OpenMode::skp, q) != skp) return false;
        if (open_entails(omega, OpenMode::cs, q) != skp) return false;
    }
    return true;
}

// 9. Closing the running example with a choice over its own constants
// (narrow) or over program-plus-fresh constants (wide) each contradicts
// the completion verdicts, in opposite directions.
bool check_closed_approximations_unsound() {
    OpenProgram omega = running_open();
    Query q = parse_query("q"), nq = parse_query("not q");
    if (open_entails(omega, OpenMode::skp, q)) return false;
    if (open_entails(omega, OpenMode::skp, nq)) return false;

    Program narrow = parse_program(
        "p(a). q :- not p(X). r(a) :- not rbar(a). rbar(a) :- not r(a).");
    // the narrow closure wrongly certifies the negation
    if (!entails(narrow, constants(narrow), EntailMode::skeptical, nq))
        return false;
    Program wide = parse_program(
        "p(a). q :- not p(X)."
        "r(a) :- not rbar(a). rbar(a) :- not r(a)."
        "r(b) :- not rbar(b). rbar(b) :- not r(b).");
    // the wide closure wrongly certifies the query
    return entails(wide, constants(wide), EntailMode::skeptical, q);
}

// 10. The pruned enumeration engine agrees with 2^n brute force over the
// full atom base on 1000 random ground programs, within the time budget.
bool check_oracle_agreement() {
    Clock::time_point start = Clock::now();
    testsupport::Gen gen(9010);
    for (int i = 0; i < 1000; ++i) {
        Program g = testsupport::random_ground_program(gen, 12, 10);
        std::vector<Interpretation> fast = stable_models(g, {});
        std::vector<Interpretation> slow = testsupport::naive_stable_models(
            g, testsupport::atom_pool(12));
        if (fast != slow) return false;
    }
    return elapsed_s(start) < 60.0;
}

} // namespace

int main() {
    report(1, "running example: neither the query nor its negation is a "
              "skeptical consequence, both engines, < 1 s",
           check_skeptical_gap());
    report(2, "running example translates to exactly the nine expected rules",
           check_translation_golden());
    report(3, "fresh-free translation unfolds to the four expected rules",
           check_unfold_golden());
    report(4, "abduction: empty budget cannot explain the query, one "
              "individual can, minimally, < 1 s",
           check_abduction());
    report(5, "restricted translation models equal completion models on 200 "
              "random open programs, < 60 s",
           check_translation_equivalence());
    report(6, "mode dualities and implications hold on 500 random instances",
           check_mode_algebra());
    report(7, "assumption enumeration, completions, and translation agree "
              "on 200 random frameworks",
           check_abduction_agreement());
    report(8, "all four modes collapse to plain entailment on 100 random "
              "consistent closed programs",
           check_collapse());
    report(9, "closed choice approximations contradict the completion "
              "verdicts in both directions",
           check_closed_approximations_unsound());
    report(10, "search engine matches full powerset brute force on 1000 "
               "random ground programs, < 60 s",
           check_oracle_agreement());
    return failures == 0 ? 0 : 1;
}
