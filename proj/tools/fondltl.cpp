#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "fondltl/automaton.hpp"
#include "fondltl/compiler.hpp"
#include "fondltl/error.hpp"
#include "fondltl/fond.hpp"
#include "fondltl/pddl.hpp"
#include "fondltl/temporal.hpp"

namespace fs = std::filesystem;
using namespace fondltl;

namespace {

enum Exit { kOk = 0, kInputError = 2, kUnsolvable = 3, kValidationFail = 4 };

struct Config {
    std::string domain;
    std::string problem;
    std::string formula;
    std::string policy;
    std::string out = ".";
    bool no_minimize = false;
    bool eval_initial_state = false;
    bool collapse_trans = false;
    bool emit_dot = false;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot read '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const fs::path& path, const std::string& text) {
    if (path.has_parent_path()) fs::create_directories(path.parent_path());
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write '" + path.string() + "'");
    out << text;
    std::cout << "wrote " << path.string() << "\n";
}

// A formula argument naming an existing file is read from that file.
temporal::FormulaPtr load_formula(const std::string& arg) {
    std::string text = arg;
    std::error_code ec;
    if (fs::is_regular_file(arg, ec)) {
        text = read_file(arg);
        while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.pop_back();
        if (text.find('\n') != std::string::npos) throw Error("formula file '" + arg + "' must hold a single line");
    }
    return temporal::parse_formula(text);
}

class Timer {
public:
    explicit Timer(std::string what) : what_(std::move(what)), start_(std::chrono::steady_clock::now()) {}
    ~Timer() {
        const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
        std::printf("# time: %s %.6fs\n", what_.c_str(), s);
        std::fflush(stdout);
    }

private:
    std::string what_;
    std::chrono::steady_clock::time_point start_;
};

struct Loaded {
    pddl::Domain domain;
    pddl::Problem problem;
    temporal::FormulaPtr formula;
    compiler::CompilationResult result;
};

Loaded load_and_compile(const Config& c) {
    Loaded l;
    std::vector<std::string> warnings;
    l.domain = pddl::parse_domain(read_file(c.domain), &warnings);
    for (const std::string& w : warnings) std::cerr << "warning: " << w << "\n";
    l.problem = pddl::parse_problem(read_file(c.problem));
    pddl::check_problem(l.domain, l.problem);
    l.formula = load_formula(c.formula);
    Timer t("compile");
    compiler::CompileOptions opts;
    opts.minimize = !c.no_minimize;
    opts.eval_initial_state = c.eval_initial_state;
    l.result = compiler::compile(l.domain, l.problem, l.formula, opts);
    return l;
}

void write_compiled(const Config& c, const Loaded& l) {
    const fs::path out(c.out);
    write_file(out / "new-dom.pddl", pddl::print_domain(l.result.new_domain));
    write_file(out / "new-prob.pddl", pddl::print_problem(l.result.new_problem));
    if (c.emit_dot) write_file(out / "automa.dot", automaton::to_dot(l.result.dfa));
}

fond::Task ground_compiled(const Loaded& l) {
    Timer t("ground");
    return fond::ground(l.result.new_domain, l.result.new_problem);
}

fond::ValidationReport timed_validate(const Config& c, const Loaded& l, const fond::Task& task, const fond::Policy& pi) {
    Timer t("validate");
    return fond::validate(task, pi, l.formula, l.result.dfa, c.eval_initial_state);
}

int report(const fond::ValidationReport& r) {
    if (r.pass) {
        std::cout << "PASS: " << r.traces << " traces satisfy the goal formula and are accepted by the automaton\n";
        return kOk;
    }
    std::cout << "FAIL: " << r.failure << "\n";
    return kValidationFail;
}

int cmd_translate(const Config& c) {
    const temporal::FormulaPtr f = load_formula(c.formula);
    automaton::BuildOptions opts;
    opts.minimize = !c.no_minimize;
    automaton::Dfa d;
    {
        Timer t("translate");
        d = automaton::formula_to_dfa(f, opts);
    }
    std::cout << "logic: " << temporal::to_string(temporal::classify(f)) << "\n";
    std::cout << "states: " << d.num_states << "\n";
    write_file(fs::path(c.out) / "automa.dot", automaton::to_dot(d));
    return kOk;
}

int cmd_compile(const Config& c) {
    const Loaded l = load_and_compile(c);
    std::cout << "automaton states: " << l.result.dfa.num_states << "\n";
    write_compiled(c, l);
    return kOk;
}

int cmd_solve(const Config& c) {
    const Loaded l = load_and_compile(c);
    write_compiled(c, l);
    const fond::Task task = ground_compiled(l);
    std::optional<fond::Policy> pi;
    {
        Timer t("solve");
        pi = fond::strong_solve(task);
    }
    if (!pi) {
        std::cout << "UNSOLVABLE: no strong policy for the compiled task\n";
        return kUnsolvable;
    }
    const fs::path out(c.out);
    write_file(out / "policy.txt", fond::write_policy(task, *pi));
    const std::vector<fond::ExecTrace> traces = fond::enumerate_traces(task, *pi);
    write_file(out / "policy-trans.dot", fond::to_dot(fond::controller_graph(task, traces, false)));
    write_file(out / "policy-no-trans.dot", fond::to_dot(fond::controller_graph(task, traces, true)));
    std::cout << "policy entries: " << pi->table.size() << "\n";
    return report(timed_validate(c, l, task, *pi));
}

int cmd_validate(const Config& c) {
    const Loaded l = load_and_compile(c);
    const fond::Task task = ground_compiled(l);
    const fond::Policy pi = fond::read_policy(task, read_file(c.policy));
    return report(timed_validate(c, l, task, pi));
}

int cmd_graph(const Config& c) {
    const Loaded l = load_and_compile(c);
    const fond::Task task = ground_compiled(l);
    const fond::Policy pi = fond::read_policy(task, read_file(c.policy));
    const auto traces = fond::enumerate_traces(task, pi);
    const auto g = fond::controller_graph(task, traces, c.collapse_trans);
    write_file(fs::path(c.out) / (c.collapse_trans ? "policy-no-trans.dot" : "policy-trans.dot"), fond::to_dot(g));
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Compile LTLf/PLTLf goals into FOND planning tasks, solve and validate them"};
    app.require_subcommand(1);
    Config c;

    auto add_task = [&](CLI::App* sub) {
        sub->add_option("domain", c.domain, "PDDL domain file")->required()->check(CLI::ExistingFile);
        sub->add_option("problem", c.problem, "PDDL problem file")->required()->check(CLI::ExistingFile);
        sub->add_option("formula", c.formula, "goal formula, or a file holding it")->required();
    };
    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--out", c.out, "output directory");
        sub->add_flag("--no-minimize", c.no_minimize, "keep the unminimized automaton");
    };
    auto add_eval = [&](CLI::App* sub) {
        sub->add_flag("--eval-initial-state", c.eval_initial_state, "let the automaton read the initial state");
    };

    CLI::App* translate = app.add_subcommand("translate", "write the automaton of a formula as DOT");
    translate->add_option("formula", c.formula, "goal formula, or a file holding it")->required();
    add_common(translate);

    CLI::App* compile = app.add_subcommand("compile", "write the compiled domain and problem");
    add_task(compile);
    add_common(compile);
    add_eval(compile);
    compile->add_flag("--emit-dot", c.emit_dot, "also write the automaton");

    CLI::App* solve = app.add_subcommand("solve", "compile, find a strong policy and validate it");
    add_task(solve);
    add_common(solve);
    add_eval(solve);
    solve->add_flag("--emit-dot", c.emit_dot, "also write the automaton");

    CLI::App* validate = app.add_subcommand("validate", "replay a policy file against the goal formula");
    add_task(validate);
    validate->add_option("policy", c.policy, "policy file")->required()->check(CLI::ExistingFile);
    add_common(validate);
    add_eval(validate);

    CLI::App* graph = app.add_subcommand("graph", "write the controller graph of a policy file");
    add_task(graph);
    graph->add_option("policy", c.policy, "policy file")->required()->check(CLI::ExistingFile);
    add_common(graph);
    add_eval(graph);
    graph->add_flag("--collapse-trans", c.collapse_trans, "merge each trans step into the preceding domain step");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kInputError;
    }

    try {
        if (translate->parsed()) return cmd_translate(c);
        if (compile->parsed()) return cmd_compile(c);
        if (solve->parsed()) return cmd_solve(c);
        if (validate->parsed()) return cmd_validate(c);
        if (graph->parsed()) return cmd_graph(c);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInputError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInputError;
    }
    return kInputError;
}
