// Command-line front end: stable models, open-world queries, the
// open-program translation, and abduction, as reproducible batch commands.
// Exit status encodes the verdict: 0 = yes/success, 1 = no, 2 = error.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "openlp/abduce.hpp"
#include "openlp/error.hpp"
#include "openlp/ground.hpp"
#include "openlp/open.hpp"
#include "openlp/parser.hpp"
#include "openlp/pi.hpp"
#include "openlp/stable.hpp"

namespace {

using nlohmann::ordered_json;
using namespace openlp;

struct Common {
    std::string file;
    bool json = false;
    std::optional<std::size_t> max_atoms;
    unsigned jobs = 1;
};

void add_common(CLI::App* cmd, Common& c, bool with_jobs = false) {
    cmd->add_option("file", c.file, "program file")
        ->required()
        ->check(CLI::ExistingFile);
    cmd->add_flag("--json", c.json, "emit a JSON report");
    cmd->add_option("--max-atoms", c.max_atoms,
                    "cap on undetermined atoms per stable-model search "
                    "(default 20; env OPENLP_MAX_ATOMS)");
    if (with_jobs)
        cmd->add_option("--jobs", c.jobs,
                        "worker threads for completion enumeration")
            ->check(CLI::PositiveNumber);
}

Limits make_limits(const Common& c) {
    Limits l;
    if (const char* env = std::getenv("OPENLP_MAX_ATOMS")) {
        std::size_t v = 0;
        std::istringstream in{env};
        if (!(in >> v) || !in.eof())
            throw ScopeError("OPENLP_MAX_ATOMS is not a number: " +
                             std::string(env));
        l.max_atoms = v;
    }
    if (c.max_atoms) l.max_atoms = *c.max_atoms;
    return l;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ScopeError("cannot read " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::string atom_set_text(const std::set<Atom>& atoms) {
    std::string out = "{";
    bool first = true;
    for (const Atom& a : atoms) {
        if (!first) out += ", ";
        first = false;
        out += to_string(a);
    }
    return out + "}";
}

ordered_json atom_set_json(const std::set<Atom>& atoms) {
    ordered_json arr = ordered_json::array();
    for (const Atom& a : atoms) arr.push_back(to_string(a));
    return arr;
}

// The report every subcommand builds: verdict, model/explanation lists,
// counters. Wall time goes to stderr so stdout stays byte-identical
// across runs.
struct Report {
    std::optional<bool> verdict;
    std::vector<std::set<Atom>> models;
    std::vector<std::set<Atom>> explanations;
    std::vector<bool> minimal;
    std::vector<std::string> rules;
    ordered_json stats = ordered_json::object();
    // Plain-text body; empty entries fall back to verdict/model printing.
    std::vector<std::string> text;

    int exit_code() const { return (!verdict || *verdict) ? 0 : 1; }

    void print(bool as_json) const {
        if (as_json) {
            ordered_json j;
            j["verdict"] =
                verdict ? ordered_json(*verdict) : ordered_json(nullptr);
            j["models"] = ordered_json::array();
            for (const auto& m : models) j["models"].push_back(atom_set_json(m));
            j["explanations"] = ordered_json::array();
            for (const auto& e : explanations)
                j["explanations"].push_back(atom_set_json(e));
            if (!minimal.empty()) j["minimal"] = minimal;
            if (!rules.empty()) j["rules"] = rules;
            j["stats"] = stats;
            std::cout << j.dump(2) << "\n";
            return;
        }
        for (const std::string& line : text) std::cout << line << "\n";
    }
};

Report run_solve(const Common& c) {
    Program p = parse_program(read_file(c.file));
    std::vector<Interpretation> models =
        stable_models(p, constants(p), make_limits(c));
    Report r;
    r.verdict = !models.empty();
    for (const Interpretation& m : models) {
        r.models.push_back(m);
        r.text.push_back(atom_set_text(m));
    }
    r.stats["models"] = models.size();
    return r;
}

Report run_query(const Common& c, const std::string& query_text,
                 const std::string& mode) {
    Program p = parse_program(read_file(c.file));
    Query q = parse_query(query_text);
    std::vector<Interpretation> models =
        stable_models(p, constants(p), make_limits(c));
    bool verdict;
    if (mode == "credulous") {
        verdict = false;
        for (const Interpretation& m : models) verdict |= eval_query(m, q);
    } else {
        verdict = true;
        for (const Interpretation& m : models) verdict &= eval_query(m, q);
    }
    Report r;
    r.verdict = verdict;
    r.text.push_back(verdict ? "yes" : "no");
    r.stats["models"] = models.size();
    return r;
}

OpenMode open_mode_of(const std::string& name) {
    if (name == "crd") return OpenMode::crd;
    if (name == "skp") return OpenMode::skp;
    if (name == "cs") return OpenMode::cs;
    return OpenMode::sc;
}

Report run_open_query(const Common& c, const std::string& query_text,
                      const std::string& mode, const std::string& engine,
                      std::optional<std::size_t> depth) {
    OpenProgram omega = parse_open_program(read_file(c.file));
    Query q = parse_query(query_text);
    Limits limits = make_limits(c);
    Report r;
    bool verdict;
    if (engine == "oracle") {
        verdict = open_entails(omega, open_mode_of(mode), q, limits, c.jobs);
        r.stats["completions"] = completions_nf(omega, limits).size();
    } else {
        verdict = open_entails_via_pi(omega, open_mode_of(mode), q, limits,
                                      depth);
        PiProgram pi = translate(omega);
        std::size_t bound = depth ? *depth : default_depth_bound(pi.program);
        r.stats["ground_rules"] =
            ground_translate(pi, bound, limits).rules.size();
    }
    r.verdict = verdict;
    r.text.push_back(verdict ? "yes" : "no");
    return r;
}

Report run_translate(const Common& c, bool ground, bool do_unfold,
                     std::optional<std::size_t> depth) {
    OpenProgram omega = parse_open_program(read_file(c.file));
    PiProgram pi = translate(omega);
    Report r;
    std::string body;
    if (do_unfold) {
        body = export_text(unfold(pi));
    } else if (ground) {
        std::size_t bound = depth ? *depth : default_depth_bound(pi.program);
        body = export_text(ground_translate(pi, bound, make_limits(c)));
    } else {
        for (const Rule& rule : pi.program.rules)
            body += to_string(rule) + "\n";
    }
    std::istringstream lines(body);
    for (std::string line; std::getline(lines, line);) {
        r.rules.push_back(line);
        r.text.push_back(line);
    }
    r.stats["rules"] = r.rules.size();
    return r;
}

Report run_abduce(const Common& c, const std::string& query_text,
                  std::size_t budget_count, bool skeptical) {
    OpenProgram omega = parse_open_program(read_file(c.file));
    if (!omega.fresh.empty())
        throw ScopeError("abduction input must not declare fresh symbols; "
                         "skolem constants come from --budget");
    AbductionFramework fr{omega.program, omega.open};
    SkolemBudget budget{budget_count};
    Query q = parse_query(query_text);
    Limits limits = make_limits(c);

    Report r;
    if (skeptical) {
        for (const Explanation& e :
             gen_skeptical_consequence(fr, budget, q, true, limits)) {
            r.explanations.push_back(e);
            r.text.push_back(atom_set_text(e));
        }
    } else {
        for (const FlaggedExplanation& fe :
             explain_credulous(fr, budget, q, limits)) {
            r.explanations.push_back(fe.atoms);
            r.minimal.push_back(fe.minimal);
            r.text.push_back(atom_set_text(fe.atoms) +
                             (fe.minimal ? " (minimal)" : ""));
        }
    }
    r.verdict = !r.explanations.empty();
    r.stats["abducibles"] = abducibles_open(fr, budget).size();
    r.stats["explanations"] = r.explanations.size();
    return r;
}

Report run_check(const Common& c) {
    OpenProgram omega = parse_open_program(read_file(c.file));
    Limits limits = make_limits(c);
    bool verdict = has_consistent_completion(omega, limits, c.jobs);
    Report r;
    r.verdict = verdict;
    r.text.push_back(verdict ? "yes" : "no");
    r.stats["completions"] = completions_nf(omega, limits).size();
    return r;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"normal logic programs with open predicates: stable models, "
                 "open-world inference, translation to plain rules, and "
                 "abduction"};
    app.require_subcommand(1);

    Common c_solve, c_query, c_open, c_xlate, c_abduce, c_check;
    std::string query_text, open_query_text, abduce_query_text;
    std::string query_mode = "credulous", open_mode, engine = "oracle";
    std::optional<std::size_t> open_depth, xlate_depth;
    bool xlate_ground = false, xlate_unfold = false, skeptical = false;
    std::size_t budget = 0;

    CLI::App* solve =
        app.add_subcommand("solve", "enumerate all stable models");
    add_common(solve, c_solve);

    CLI::App* query =
        app.add_subcommand("query", "credulous or skeptical entailment");
    add_common(query, c_query);
    query->add_option("--query", query_text, "ground query")->required();
    query->add_option("--mode", query_mode, "credulous|skeptical")
        ->check(CLI::IsMember({"credulous", "skeptical"}));

    CLI::App* openq = app.add_subcommand(
        "open-query", "entailment over all completions of an open program");
    add_common(openq, c_open, true);
    openq->add_option("--query", open_query_text, "ground query")->required();
    openq->add_option("--mode", open_mode, "crd|skp|cs|sc")
        ->required()
        ->check(CLI::IsMember({"crd", "skp", "cs", "sc"}));
    openq->add_option("--engine", engine,
                      "oracle (completion enumeration) or pi (translation; "
                      "crd/skp only)")
        ->check(CLI::IsMember({"oracle", "pi"}));
    openq->add_option("--depth", open_depth,
                      "term depth bound for grounding the translation");

    CLI::App* xlate = app.add_subcommand(
        "translate", "translate an open program to plain normal rules");
    add_common(xlate, c_xlate);
    xlate->add_flag("--ground", xlate_ground, "emit the ground translation");
    xlate->add_flag("--unfold", xlate_unfold,
                    "partial-evaluate away the domain machinery (closed "
                    "domain only)")
        ->excludes("--ground");
    xlate->add_option("--depth", xlate_depth,
                      "term depth bound for --ground");

    CLI::App* abd = app.add_subcommand(
        "abduce", "explanations for a query; #open declares abducibles");
    add_common(abd, c_abduce);
    abd->add_option("--query", abduce_query_text, "ground query")->required();
    abd->add_option("--budget", budget, "number of skolem constants");
    abd->add_flag("--skeptical-consequence", skeptical,
                  "require the query in all stable models instead of some");

    CLI::App* check = app.add_subcommand(
        "check", "consistency: does some completion have a stable model?");
    add_common(check, c_check, true);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    auto start = std::chrono::steady_clock::now();
    int code = 2;
    try {
        Report r;
        bool json = false;
        if (solve->parsed()) {
            r = run_solve(c_solve);
            json = c_solve.json;
        } else if (query->parsed()) {
            r = run_query(c_query, query_text, query_mode);
            json = c_query.json;
        } else if (openq->parsed()) {
            r = run_open_query(c_open, open_query_text, open_mode, engine,
                               open_depth);
            json = c_open.json;
        } else if (xlate->parsed()) {
            r = run_translate(c_xlate, xlate_ground, xlate_unfold,
                              xlate_depth);
            json = c_xlate.json;
        } else if (abd->parsed()) {
            r = run_abduce(c_abduce, abduce_query_text, budget, skeptical);
            json = c_abduce.json;
        } else {
            r = run_check(c_check);
            json = c_check.json;
        }
        r.print(json);
        code = r.exit_code();
    } catch (const Error& e) {
        std::cerr << "error[" << error_code_name(e.code) << "]: " << e.what()
                  << "\n";
        code = 2;
    } catch (const std::exception& e) {
        std::cerr << "error[internal]: " << e.what() << "\n";
        code = 2;
    }
    auto elapsed = std::chrono::steady_clock::now() - start;
    std::cerr << "time: "
              << std::chrono::duration_cast<std::chrono::milliseconds>(elapsed)
                     .count()
              << " ms\n";
    return code;
}
