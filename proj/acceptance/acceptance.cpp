// Acceptance run: one PASS/FAIL line per criterion, exit status 0 iff all pass.

#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <string>

#include "fondltl/automaton.hpp"
#include "fondltl/compiler.hpp"
#include "fondltl/error.hpp"
#include "fondltl/fond.hpp"
#include "fondltl/kernels/oracle.hpp"
#include "fondltl/pddl.hpp"
#include "fondltl/temporal.hpp"
#include "support/corpus.hpp"
#include "support/naive_semantics.hpp"
#include "support/normalize.hpp"

using namespace fondltl;
using pddl::Formula;
using temporal::parse_formula;

namespace {

const char* const kEventually = "F(vehicleat(l13))";
const char* const kOnce = "vehicleat(l13) & O(vehicleat(l23))";

pddl::Domain domain(const std::string& rel) { return pddl::parse_domain(corpus::read(rel)); }
pddl::Problem problem(const std::string& rel) { return pddl::parse_problem(corpus::read(rel)); }

struct Outcome {
    bool pass = true;
    std::string detail;

    void require(bool ok, const std::string& what) {
        if (!ok && pass) {
            pass = false;
            detail = what;
        }
    }
};

std::set<std::string> init_atoms(const pddl::Problem& p) {
    std::set<std::string> s;
    for (const auto& a : p.init) s.insert(pddl::to_string(a));
    return s;
}

// Atoms the compiled problem adds to the original init.
std::set<std::string> init_gain(const pddl::Problem& before, const pddl::Problem& after) {
    std::set<std::string> gained;
    const auto old = init_atoms(before);
    for (const auto& a : init_atoms(after)) {
        if (!old.count(a)) gained.insert(a);
    }
    return gained;
}

Outcome golden_ltlf() {
    Outcome o;
    const auto p = problem("triangle-tire-1.pddl");
    const auto r = compiler::compile(domain("triangle-tire.pddl"), p, parse_formula(kEventually));
    const auto golden = compiler::compile_conditional_effects(domain("golden/eventually-domain.pddl"));
    const std::string dd = oracle::domain_diff(r.new_domain, golden);
    o.require(dd.empty(), "domain: " + dd);
    const std::string pd = oracle::problem_diff(r.new_problem, problem("golden/eventually-problem.pddl"));
    o.require(pd.empty(), "problem: " + pd);
    int qs = 0;
    for (const auto& pr : r.new_domain.predicates) qs += compiler::is_q_name(pr.name);
    o.require(qs == 2, "expected 2 q-predicates, got " + std::to_string(qs));
    o.require(init_gain(p, r.new_problem) == std::set<std::string>{"(turndomain)", "(q1 l13)"}, "init gain differs");
    o.require(pddl::to_string(r.new_problem.goal) == "(and (turndomain) (q2 l13))",
              "goal is " + pddl::to_string(r.new_problem.goal));
    return o;
}

Outcome golden_pltlf() {
    Outcome o;
    const auto p = problem("triangle-tire-1-l23.pddl");
    const auto r = compiler::compile(domain("triangle-tire.pddl"), p, parse_formula(kOnce));
    o.require(r.trans_names.size() == 3, "expected 3 trans actions, got " + std::to_string(r.trans_names.size()));
    const std::string dd = oracle::domain_diff(r.new_domain, domain("golden/once-domain.pddl"));
    o.require(dd.empty(), "domain: " + dd);
    const std::string pd = oracle::problem_diff(r.new_problem, problem("golden/once-problem.pddl"));
    o.require(pd.empty(), "problem: " + pd);
    o.require(init_gain(p, r.new_problem) == std::set<std::string>{"(turndomain)", "(q1 l13 l23)"},
              "init gain differs");
    o.require(oracle::cond_key(r.new_problem.goal, {}) == "(and (q3 l13 l23) (turndomain))",
              "goal is " + pddl::to_string(r.new_problem.goal));
    return o;
}

Outcome oracle_equivalence() {
    Outcome o;
    std::size_t traces = 0;
    auto check = [&](const std::vector<std::string>& list, temporal::Logic want, const char* kind) {
        std::size_t n = 0;
        for (const std::string& text : list) {
            const auto f = parse_formula(text);
            const auto logic = temporal::classify(f);
            if (logic == want) ++n;
            o.require(temporal::atoms(f).size() <= 3, text + " has more than 3 atoms");
            const auto d = automaton::formula_to_dfa(f);
            const auto c = kernels::count_mismatches_parallel(f, d, 5);
            traces += c.traces;
            o.require(c.mismatches == 0, text + ": " + std::to_string(c.mismatches) + " mismatches");
            std::size_t naive = 0;
            oracle::for_each_trace(d.atoms, 5,
                                   [&](const temporal::Trace& t) { naive += d.accepts(t.letters) != oracle::satisfies(f, t); });
            o.require(naive == 0, text + ": " + std::to_string(naive) + " mismatches against the direct definitions");
        }
        o.require(n >= 20, std::string("fewer than 20 ") + kind + " formulas");
    };
    check(corpus::kFuture, temporal::Logic::Future, "LTLf");
    check(corpus::kPast, temporal::Logic::Past, "PLTLf");
    if (o.pass) {
        o.detail = std::to_string(corpus::kFuture.size() + corpus::kPast.size()) + " formulas, " +
                   std::to_string(traces) + " traces";
    }
    return o;
}

Outcome minimal_size() {
    Outcome o;
    const int ev = automaton::formula_to_dfa(parse_formula("F(a)")).num_states;
    o.require(ev == 2, "F(a) has " + std::to_string(ev) + " states");
    const auto d = automaton::formula_to_dfa(parse_formula(kOnce));
    o.require(d.num_states == 3, "once goal has " + std::to_string(d.num_states) + " states");
    o.require(d.accepting == std::set<int>{3}, "once goal accepting set differs");
    return o;
}

Outcome end_to_end() {
    Outcome o;
    struct Task {
        const char* prob;
        const char* formula;
    };
    std::size_t total = 0;
    for (const Task& tk : {Task{"triangle-tire-1.pddl", kEventually}, Task{"triangle-tire-1-l23.pddl", kOnce}}) {
        const auto f = parse_formula(tk.formula);
        const auto r = compiler::compile(domain("triangle-tire.pddl"), problem(tk.prob), f);
        const auto t = fond::ground(r.new_domain, r.new_problem);
        const auto pi = fond::strong_solve(t);
        o.require(pi.has_value(), std::string("no strong policy for ") + tk.formula);
        if (!pi) continue;
        const auto traces = fond::enumerate_traces(t, *pi);
        total += traces.size();
        for (const auto& tr : traces) {
            o.require(fond::alternates(t, tr), "a trace does not alternate");
            o.require(fond::one_q_atom(t, tr), "a state holds other than one q-atom");
            const auto& last = tr.states.back();
            const bool turn = std::binary_search(last.begin(), last.end(), t.atom_id("turndomain"));
            bool accepting = false;
            for (int q : r.dfa.accepting) {
                std::vector<std::string> objs;
                for (const auto& x : r.map.objects()) objs.push_back(x.name);
                const int id = t.atom_id(fond::ground_name(compiler::q_name(q), objs));
                accepting = accepting || (id >= 0 && std::binary_search(last.begin(), last.end(), id));
            }
            o.require(turn && accepting, "a trace ends outside turndomain and an accepting q");
        }
        const auto rep = fond::validate(t, *pi, f, r.dfa);
        o.require(rep.pass, rep.failure);
        for (const auto& v : rep.verdicts) o.require(v.semantics == v.automaton, "verdicts disagree");
    }
    if (o.pass) o.detail = std::to_string(total) + " traces";
    return o;
}

Outcome conditional_effects() {
    Outcome o;
    const auto split = compiler::compile_conditional_effects(domain("golden/trans-when.pddl"));
    o.require(split.actions.size() == 2, "expected 2 actions after splitting");
    const std::string dd = oracle::domain_diff(split, domain("golden/trans-split.pddl"));
    o.require(dd.empty(), dd);
    bool rejected = false;
    try {
        compiler::compile_conditional_effects(domain("nested-when.pddl"));
    } catch (const UnsupportedError&) {
        rejected = true;
    }
    o.require(rejected, "nested when was accepted");
    return o;
}

Outcome property_suite() {
    Outcome o;
    std::size_t files = 0, dfas = 0;
    for (const std::string& rel : corpus::pddl_files()) {
        const std::string text = corpus::read(rel);
        if (corpus::is_problem(text)) {
            const auto p = pddl::parse_problem(text);
            o.require(pddl::parse_problem(pddl::print_problem(p)) == p, "round trip failed on " + rel);
        } else {
            const auto d = pddl::parse_domain(text);
            o.require(pddl::parse_domain(pddl::print_domain(d)) == d, "round trip failed on " + rel);
        }
        ++files;
    }
    std::vector<std::string> formulas = corpus::kFuture;
    formulas.insert(formulas.end(), corpus::kPast.begin(), corpus::kPast.end());
    for (const std::string& text : formulas) {
        const auto f = parse_formula(text);
        o.require(temporal::equal(parse_formula(f->str()), f), "formula round trip failed on " + text);
        for (bool min : {true, false}) {
            automaton::BuildOptions b;
            b.minimize = min;
            const auto d = automaton::formula_to_dfa(f, b);
            std::string why;
            o.require(automaton::guards_partition(d, &why), text + ": " + why);
            o.require(automaton::from_dot(automaton::to_dot(d)) == d, "DOT round trip failed on " + text);
            ++dfas;
        }
    }

    const auto f = parse_formula(kEventually);
    const auto r = compiler::compile(domain("triangle-tire.pddl"), problem("triangle-tire-1.pddl"), f);
    const auto t = fond::ground(r.new_domain, r.new_problem);
    auto pi = fond::strong_solve(t);
    o.require(pi.has_value(), "no policy for the mutation test");
    if (pi) {
        o.require(fond::validate(t, *pi, f, r.dfa).pass, "unmutated policy fails");
        bool mutated = false;
        for (auto& [s, a] : pi->table) {
            if (t.actions[static_cast<std::size_t>(a)].schema == "trans-0") {
                a = t.action_id("trans-1(l13)");
                mutated = true;
                break;
            }
        }
        o.require(mutated, "no trans edge to corrupt");
        o.require(!fond::validate(t, *pi, f, r.dfa).pass, "corrupted policy still passes");
    }
    if (o.pass) o.detail = std::to_string(files) + " files, " + std::to_string(dfas) + " automata";
    return o;
}

struct Criterion {
    int id;
    const char* title;
    double budget_s;
    std::function<Outcome()> run;
};

}  // namespace

int main() {
    const Criterion criteria[] = {
        {1, "golden compilation, LTLf goal", 1.0, golden_ltlf},
        {2, "golden compilation, PLTLf goal", 1.0, golden_pltlf},
        {3, "DFA oracle equivalence", 60.0, oracle_equivalence},
        {4, "minimal automaton sizes", 0.0, minimal_size},
        {5, "end-to-end theorem check", 30.0, end_to_end},
        {6, "conditional-effect compilation", 0.0, conditional_effects},
        {7, "property suite", 0.0, property_suite},
    };
    bool all = true;
    for (const Criterion& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o.pass = false;
            o.detail = std::string("exception: ") + e.what();
        }
        const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (c.budget_s > 0 && s >= c.budget_s && o.pass) {
            o.pass = false;
            o.detail = "over the " + std::to_string(c.budget_s) + " s budget";
        }
        all = all && o.pass;
        std::printf("criterion %d %s: %s (%.3f s)%s%s\n", c.id, o.pass ? "PASS" : "FAIL", c.title, s,
                    o.detail.empty() ? "" : ": ", o.detail.c_str());
    }
    std::printf("criterion 8 EXCLUDED: external SAT-planner controller size and timings; criterion 5 checks policy existence instead\n");
    return all ? 0 : 1;
}
