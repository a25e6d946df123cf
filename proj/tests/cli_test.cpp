#include "doctest.h"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "json.hpp"

namespace fs = std::filesystem;

namespace {

struct RunResult {
    int exit_code;
    std::string out;
    std::string err;
};

const fs::path& work_dir() {
    static fs::path dir = [] {
        fs::path d = fs::temp_directory_path() / "openlp_cli_test";
        fs::remove_all(d);
        fs::create_directories(d);
        return d;
    }();
    return dir;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

fs::path write_file(const std::string& name, const std::string& text) {
    fs::path p = work_dir() / name;
    std::ofstream(p) << text;
    return p;
}

// Runs the binary through the shell; env can prefix variable assignments.
RunResult run(const std::string& args, const std::string& env = "") {
    fs::path out = work_dir() / "stdout.txt", err = work_dir() / "stderr.txt";
    std::string cmd = env + (env.empty() ? "" : " ") + "'" OPENLP_CLI_PATH
                      "' " + args + " > '" + out.string() + "' 2> '" +
                      err.string() + "'";
    int status = std::system(cmd.c_str());
    int code = (status >= 0 && WIFEXITED(status)) ? WEXITSTATUS(status) : -1;
    return RunResult{code, slurp(out), slurp(err)};
}

std::string q(const fs::path& p) { return "'" + p.string() + "'"; }

} // namespace

TEST_CASE("solve prints one model per line and reports counts in json") {
    fs::path f = write_file("pq.lp", "p :- not q.\nq :- not p.\n");
    RunResult r = run("solve " + q(f));
    CHECK(r.exit_code == 0);
    CHECK(r.out == "{p}\n{q}\n");
    CHECK(r.err.find("time: ") != std::string::npos);
    CHECK(r.err.find("ms") != std::string::npos);

    RunResult j = run("solve " + q(f) + " --json");
    CHECK(j.exit_code == 0);
    nlohmann::json doc = nlohmann::json::parse(j.out);
    CHECK(doc["verdict"] == true); // verdict carries consistency
    CHECK(doc["models"] == nlohmann::json::parse(R"([["p"],["q"]])"));
    CHECK(doc["explanations"].empty());
    CHECK(doc["stats"]["models"] == 2);
}

TEST_CASE("solve of an inconsistent program prints nothing and exits one") {
    fs::path f = write_file("loop.lp", "p :- not p.\n");
    RunResult r = run("solve " + q(f));
    CHECK(r.exit_code == 1);
    CHECK(r.out.empty());
    RunResult j = run("solve " + q(f) + " --json");
    nlohmann::json doc = nlohmann::json::parse(j.out);
    CHECK(doc["verdict"] == false);
    CHECK(doc["models"].empty());
}

TEST_CASE("query answers yes or no through the exit code") {
    fs::path f = write_file("pq2.lp", "p :- not q.\nq :- not p.\n");
    RunResult yes = run("query " + q(f) + " --query 'p or q' --mode skeptical");
    CHECK(yes.exit_code == 0);
    CHECK(yes.out == "yes\n");
    RunResult no = run("query " + q(f) + " --query p --mode skeptical");
    CHECK(no.exit_code == 1);
    CHECK(no.out == "no\n");
    RunResult crd = run("query " + q(f) + " --query p");
    CHECK(crd.exit_code == 0); // credulous is the default mode
}

TEST_CASE("open-query runs the running example on both engines") {
    fs::path f = write_file("open.lp",
                            "p(a).\nq :- not p(X).\n#fresh b/0.\n#open r/1.\n");
    for (std::string engine : {"oracle", "pi"}) {
        RunResult skp = run("open-query " + q(f) +
                            " --mode skp --query q --engine " + engine);
        CHECK(skp.exit_code == 1);
        CHECK(skp.out == "no\n");
        RunResult skpn = run("open-query " + q(f) +
                             " --mode skp --query 'not q' --engine " + engine);
        CHECK(skpn.exit_code == 1);
        RunResult crd = run("open-query " + q(f) +
                            " --mode crd --query q --engine " + engine);
        CHECK(crd.exit_code == 0);
        CHECK(crd.out == "yes\n");
    }
    nlohmann::json oracle = nlohmann::json::parse(
        run("open-query " + q(f) + " --mode crd --query q --json").out);
    CHECK(oracle["verdict"] == true);
    CHECK(oracle["stats"]["completions"] == 6);
    nlohmann::json pi = nlohmann::json::parse(
        run("open-query " + q(f) +
            " --mode crd --query q --engine pi --json")
            .out);
    CHECK(pi["verdict"] == true);
    CHECK(pi["stats"]["ground_rules"] == 18);
}

TEST_CASE("mixed modes are oracle-only") {
    fs::path f = write_file("cs.lp", "q :- not r(a).\n#open r/1.\n");
    RunResult cs = run("open-query " + q(f) + " --mode cs --query q");
    CHECK(cs.exit_code == 0);
    RunResult viapi =
        run("open-query " + q(f) + " --mode cs --query q --engine pi");
    CHECK(viapi.exit_code == 2);
    CHECK(viapi.err.find("error[scope]:") != std::string::npos);
}

TEST_CASE("translate prints the nine rules of the running example") {
    fs::path f = write_file("tr.lp",
                            "p(a).\nq :- not p(X).\n#fresh b/0.\n#open r/1.\n");
    RunResult r = run("translate " + q(f));
    CHECK(r.exit_code == 0);
    CHECK(r.out ==
          "p(a).\n"
          "q :- o_u(X), not p(X).\n"
          "o_u(a) :- o_s(o_sym_a_0).\n"
          "o_u(b) :- o_s(o_sym_b_0).\n"
          "o_s(o_sym_a_0).\n"
          "o_s(o_sym_b_0) :- not o_ns(o_sym_b_0).\n"
          "o_ns(o_sym_b_0) :- not o_s(o_sym_b_0).\n"
          "r(X1) :- o_u(X1), not o_neg_r(X1).\n"
          "o_neg_r(X1) :- o_u(X1), not r(X1).\n");

    nlohmann::json doc =
        nlohmann::json::parse(run("translate " + q(f) + " --json").out);
    CHECK(doc["rules"].size() == 9);
    CHECK(doc["stats"]["rules"] == 9);

    RunResult ground = run("translate " + q(f) + " --ground");
    CHECK(ground.exit_code == 0);
    // exported grounding is sorted; spot-check a choice instance
    CHECK(ground.out.find("r(a) :- o_u(a), not o_neg_r(a).\n") !=
          std::string::npos);
}

TEST_CASE("translate unfolds only fresh-free programs") {
    fs::path f = write_file("uf.lp", "p(a).\nq :- not p(X).\n#open r/1.\n");
    RunResult r = run("translate " + q(f) + " --unfold");
    CHECK(r.exit_code == 0);
    CHECK(r.out ==
          "o_neg_r(a) :- not r(a).\n"
          "p(a).\n"
          "q :- not p(a).\n"
          "r(a) :- not o_neg_r(a).\n");

    fs::path fresh = write_file(
        "uff.lp", "p(a).\nq :- not p(X).\n#fresh b/0.\n#open r/1.\n");
    RunResult bad = run("translate " + q(fresh) + " --unfold");
    CHECK(bad.exit_code == 2);
    CHECK(bad.err.find("error[scope]:") != std::string::npos);

    RunResult both = run("translate " + q(f) + " --ground --unfold");
    CHECK(both.exit_code == 2);
}

TEST_CASE("abduce explains a query under a skolem budget") {
    fs::path f =
        write_file("ab.lp", "p(a).\nq :- r(X), not p(X).\n#open r/1.\n");
    RunResult none = run("abduce " + q(f) + " --query q --budget 0");
    CHECK(none.exit_code == 1);
    CHECK(none.out.empty());

    RunResult one = run("abduce " + q(f) + " --query q --budget 1");
    CHECK(one.exit_code == 0);
    CHECK(one.out ==
          "{r(o_sk0)} (minimal)\n"
          "{r(a), r(o_sk0)}\n");

    nlohmann::json doc = nlohmann::json::parse(
        run("abduce " + q(f) + " --query q --budget 1 --json").out);
    CHECK(doc["verdict"] == true);
    CHECK(doc["explanations"].size() == 2);
    CHECK(doc["minimal"] == nlohmann::json::parse("[true, false]"));
    CHECK(doc["stats"]["abducibles"] == 2);

    RunResult skep = run("abduce " + q(f) +
                         " --query q --budget 1 --skeptical-consequence");
    CHECK(skep.exit_code == 0);

    // declared fresh symbols conflict with budgeted skolems
    fs::path ff = write_file(
        "abf.lp", "p(a).\nq :- r(X), not p(X).\n#fresh b/0.\n#open r/1.\n");
    RunResult bad = run("abduce " + q(ff) + " --query q --budget 1");
    CHECK(bad.exit_code == 2);
    CHECK(bad.err.find("error[scope]:") != std::string::npos);
}

TEST_CASE("check reports completion consistency") {
    fs::path sat = write_file("sat.lp", "p :- not p, not r.\n#open r/0.\n");
    RunResult ok = run("check " + q(sat));
    CHECK(ok.exit_code == 0);
    CHECK(ok.out == "yes\n");
    fs::path unsat = write_file("unsat.lp", "p :- not p.\n");
    RunResult no = run("check " + q(unsat));
    CHECK(no.exit_code == 1);
    CHECK(no.out == "no\n");
}

TEST_CASE("diagnostics go to stderr with an error class") {
    RunResult missing = run("solve '/nonexistent/file.lp'");
    CHECK(missing.exit_code == 2);

    fs::path bad = write_file("bad.lp", "p(a\n");
    RunResult parse = run("solve " + q(bad));
    CHECK(parse.exit_code == 2);
    CHECK(parse.out.empty());
    CHECK(parse.err.find("error[parse]:") != std::string::npos);

    fs::path reserved = write_file("res.lp", "o_u(a).\n");
    CHECK(run("solve " + q(reserved)).err.find("error[parse]:") !=
          std::string::npos);

    RunResult mode = run("open-query " + q(bad) + " --mode bogus --query q");
    CHECK(mode.exit_code == 2);
}

TEST_CASE("the atom cap comes from the flag or the environment") {
    std::string text;
    for (int i = 0; i < 3; ++i) {
        std::string a = "a" + std::to_string(i), b = "b" + std::to_string(i);
        text += a + " :- not " + b + ".\n" + b + " :- not " + a + ".\n";
    }
    fs::path f = write_file("wide.lp", text);
    CHECK(run("solve " + q(f)).exit_code == 0);

    RunResult flag = run("solve " + q(f) + " --max-atoms 5");
    CHECK(flag.exit_code == 2);
    CHECK(flag.err.find("error[capacity]:") != std::string::npos);

    RunResult env = run("solve " + q(f), "OPENLP_MAX_ATOMS=5");
    CHECK(env.exit_code == 2);
    CHECK(env.err.find("error[capacity]:") != std::string::npos);

    // the flag wins over the environment
    RunResult both =
        run("solve " + q(f) + " --max-atoms 30", "OPENLP_MAX_ATOMS=5");
    CHECK(both.exit_code == 0);

    RunResult junk = run("solve " + q(f), "OPENLP_MAX_ATOMS=banana");
    CHECK(junk.exit_code == 2);
    CHECK(junk.err.find("error[scope]:") != std::string::npos);
}

TEST_CASE("output is byte-identical across runs") {
    fs::path f = write_file("det.lp",
                            "p(a).\nq :- not p(X).\n#fresh b/0.\n#open r/1.\n");
    fs::path plain = write_file("det_plain.lp", "p :- not q.\nq :- not p.\n");
    fs::path ab = write_file("det_ab.lp",
                             "p(a).\nq :- r(X), not p(X).\n#open r/1.\n");
    for (std::string args :
         {"solve " + q(plain), "open-query " + q(f) + " --mode crd --query q",
          "translate " + q(f) + " --ground",
          "abduce " + q(ab) + " --query q --budget 1 --json"}) {
        RunResult first = run(args);
        RunResult second = run(args);
        CHECK(first.out == second.out);
        CHECK(first.exit_code == second.exit_code);
    }
}

TEST_CASE("parallel oracle evaluation keeps the verdict and output") {
    fs::path f = write_file("par.lp",
                            "p(a).\nq :- not p(X).\n#fresh b/0.\n#open r/1.\n");
    for (std::string mode : {"crd", "skp", "cs", "sc"}) {
        RunResult seq = run("open-query " + q(f) + " --mode " + mode +
                            " --query q --jobs 1");
        RunResult par = run("open-query " + q(f) + " --mode " + mode +
                            " --query q --jobs 4");
        CHECK(seq.out == par.out);
        CHECK(seq.exit_code == par.exit_code);
    }
}
