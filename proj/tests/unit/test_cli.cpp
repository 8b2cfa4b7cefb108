#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include "fondltl/automaton.hpp"
#include "fondltl/compiler.hpp"
#include "fondltl/pddl.hpp"
#include "support/corpus.hpp"
#include "support/normalize.hpp"

#ifndef FONDLTL_CLI
#error "FONDLTL_CLI must name the command-line binary"
#endif

namespace fs = std::filesystem;
using namespace fondltl;

namespace {

struct Result {
    int code = -1;
    std::string out;
};

Result run(const std::string& args) {
    const std::string cmd = std::string(FONDLTL_CLI) + " " + args + " 2>/dev/null";
    Result r;
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    char buf[4096];
    std::size_t n = 0;
    while ((n = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, n);
    const int status = pclose(p);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string without_timing(const std::string& text) {
    std::istringstream in(text);
    std::string line, out;
    while (std::getline(in, line)) {
        if (line.rfind("# time:", 0) != 0) out += line + "\n";
    }
    return out;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

const fs::path& scratch_root() {
    static const fs::path root = fs::temp_directory_path() / ("fondltl-cli-" + std::to_string(::getpid()));
    static const struct Cleanup {
        ~Cleanup() {
            std::error_code ec;
            fs::remove_all(root, ec);
        }
    } cleanup;
    return root;
}

fs::path scratch(const std::string& name) {
    const fs::path dir = scratch_root() / name;
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir;
}

const std::string kTire = corpus::data("triangle-tire.pddl");
const std::string kTire1 = corpus::data("triangle-tire-1.pddl");
const std::string kTireL23 = corpus::data("triangle-tire-1-l23.pddl");
const std::string kOnce = "'vehicleat(l13) & O(vehicleat(l23))'";

}  // namespace

TEST_CASE("translate") {
    const fs::path dir = scratch("translate");
    Result r = run("translate 'F(vehicleat(l13))' --out " + dir.string());
    CHECK(r.code == 0);
    const auto d = automaton::from_dot(slurp(dir / "automa.dot"));
    CHECK(d.num_states == 2);

    r = run("translate true --out " + dir.string());
    CHECK(r.code == 0);
    CHECK(automaton::from_dot(slurp(dir / "automa.dot")).num_states == 1);

    CHECK(run("translate 'F(a) & O(b)' --out " + dir.string()).code == 2);
    CHECK(run("translate 'F(' --out " + dir.string()).code == 2);
}

TEST_CASE("translate --no-minimize keeps more states") {
    const fs::path dir = scratch("nomin");
    REQUIRE(run("translate " + kOnce + " --no-minimize --out " + dir.string()).code == 0);
    CHECK(automaton::from_dot(slurp(dir / "automa.dot")).num_states > 3);
}

TEST_CASE("formula read from a file") {
    const fs::path dir = scratch("formula-file");
    std::ofstream(dir / "goal.ltl") << "F(vehicleat(l13))\n";
    CHECK(run("translate " + (dir / "goal.ltl").string() + " --out " + dir.string()).code == 0);
    std::ofstream(dir / "two.ltl") << "F(a)\nF(b)\n";
    CHECK(run("translate " + (dir / "two.ltl").string() + " --out " + dir.string()).code == 2);
}

TEST_CASE("compile writes the golden listings") {
    const fs::path dir = scratch("compile");
    REQUIRE(run("compile " + kTire + " " + kTire1 + " 'F(vehicleat(l13))' --emit-dot --out " + dir.string()).code == 0);
    const auto dom = pddl::parse_domain(slurp(dir / "new-dom.pddl"));
    const auto prob = pddl::parse_problem(slurp(dir / "new-prob.pddl"));
    const auto golden = compiler::compile_conditional_effects(pddl::parse_domain(corpus::read("golden/eventually-domain.pddl")));
    CHECK(oracle::domain_diff(dom, golden) == "");
    CHECK(oracle::problem_diff(prob, pddl::parse_problem(corpus::read("golden/eventually-problem.pddl"))) == "");
    CHECK(fs::exists(dir / "automa.dot"));
}

TEST_CASE("compile is byte-identical across runs") {
    const fs::path a = scratch("det-a");
    const fs::path b = scratch("det-b");
    const Result ra = run("compile " + kTire + " " + kTireL23 + " " + kOnce + " --out " + a.string());
    const Result rb = run("compile " + kTire + " " + kTireL23 + " " + kOnce + " --out " + b.string());
    REQUIRE(ra.code == 0);
    REQUIRE(rb.code == 0);
    CHECK(slurp(a / "new-dom.pddl") == slurp(b / "new-dom.pddl"));
    CHECK(slurp(a / "new-prob.pddl") == slurp(b / "new-prob.pddl"));
    std::string oa = without_timing(ra.out), ob = without_timing(rb.out);
    for (std::string* s : {&oa, &ob}) {
        std::size_t at;
        while ((at = s->find("det-")) != std::string::npos) s->erase(at, 5);
    }
    CHECK(oa == ob);
}

TEST_CASE("compile errors exit 2") {
    const fs::path dir = scratch("clash");
    CHECK(run("compile " + corpus::data("clash.pddl") + " " + corpus::data("clash-p1.pddl") + " 'F(p)' --out " +
              dir.string())
              .code == 2);
    CHECK(run("compile " + kTire + " " + kTire1 + " 'F(flying(l13))' --out " + dir.string()).code == 2);
    CHECK(run("compile " + kTire + " /nonexistent.pddl 'F(a)' --out " + dir.string()).code == 2);
    CHECK(run("compile " + corpus::data("nested-when.pddl") + " " + corpus::data("clash-p1.pddl") + " 'F(p)' --out " +
              dir.string())
              .code == 2);
}

TEST_CASE("solve, validate and graph") {
    const fs::path dir = scratch("solve");
    const std::string task = kTire + " " + kTireL23 + " " + kOnce;
    Result r = run("solve " + task + " --out " + dir.string());
    CHECK(r.code == 0);
    CHECK(r.out.find("PASS") != std::string::npos);
    for (const char* f : {"new-dom.pddl", "new-prob.pddl", "policy.txt", "policy-trans.dot", "policy-no-trans.dot"}) {
        CHECK(fs::exists(dir / f));
    }
    const std::string policy = (dir / "policy.txt").string();
    r = run("validate " + task + " " + policy);
    CHECK(r.code == 0);
    CHECK(r.out.find("PASS") != std::string::npos);

    const fs::path gdir = scratch("graph");
    CHECK(run("graph " + task + " " + policy + " --collapse-trans --out " + gdir.string()).code == 0);
    CHECK(slurp(gdir / "policy-no-trans.dot") == slurp(dir / "policy-no-trans.dot"));
    CHECK(run("graph " + task + " " + policy + " --out " + gdir.string()).code == 0);
    CHECK(slurp(gdir / "policy-trans.dot") == slurp(dir / "policy-trans.dot"));
}

TEST_CASE("solve output is deterministic") {
    const fs::path a = scratch("solve-a");
    const fs::path b = scratch("solve-b");
    const std::string task = kTire + " " + kTireL23 + " " + kOnce;
    REQUIRE(run("solve " + task + " --out " + a.string()).code == 0);
    REQUIRE(run("solve " + task + " --out " + b.string()).code == 0);
    for (const char* f : {"policy.txt", "policy-trans.dot", "policy-no-trans.dot"}) CHECK(slurp(a / f) == slurp(b / f));
}

TEST_CASE("unsolvable exits 3") {
    const fs::path dir = scratch("gamble");
    const Result r = run("solve " + corpus::data("gamble.pddl") + " " + corpus::data("gamble-p1.pddl") +
                         " 'F(won)' --out " + dir.string());
    CHECK(r.code == 3);
    CHECK(r.out.find("UNSOLVABLE") != std::string::npos);
}

TEST_CASE("corrupted policy exits 4, foreign policy exits 2") {
    const fs::path dir = scratch("corrupt");
    const std::string task = kTire + " " + kTire1 + " 'F(vehicleat(l13))'";
    REQUIRE(run("solve " + task + " --out " + dir.string()).code == 0);
    std::string text = slurp(dir / "policy.txt");
    const auto at = text.find("\ttrans-0(l13)\n");
    REQUIRE(at != std::string::npos);
    text.replace(at, 14, "\ttrans-1(l13)\n");
    std::ofstream(dir / "bad.txt") << text;
    const Result r = run("validate " + task + " " + (dir / "bad.txt").string());
    CHECK(r.code == 4);
    CHECK(r.out.find("FAIL") != std::string::npos);

    const fs::path other = scratch("foreign");
    REQUIRE(run("solve " + kTire + " " + kTireL23 + " " + kOnce + " --out " + other.string()).code == 0);
    CHECK(run("validate " + task + " " + (other / "policy.txt").string()).code == 2);
}

TEST_CASE("usage errors exit 2") {
    CHECK(run("").code == 2);
    CHECK(run("frobnicate").code == 2);
    CHECK(run("--help").code == 0);
}
