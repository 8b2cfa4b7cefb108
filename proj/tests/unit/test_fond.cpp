#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "fondltl/automaton.hpp"
#include "fondltl/compiler.hpp"
#include "fondltl/error.hpp"
#include "fondltl/fond.hpp"
#include "fondltl/pddl.hpp"
#include "fondltl/temporal.hpp"
#include "support/corpus.hpp"
#include "support/fixpoint.hpp"

using namespace fondltl;
using namespace fondltl::fond;
using temporal::parse_formula;

namespace {

pddl::Domain domain(const std::string& rel) { return pddl::parse_domain(corpus::read(rel)); }
pddl::Problem problem(const std::string& rel) { return pddl::parse_problem(corpus::read(rel)); }

struct Run {
    compiler::CompilationResult compiled;
    temporal::FormulaPtr formula;
    Task task;
};

Run compiled(const std::string& dom, const std::string& prob, const std::string& f, bool eval_initial = false) {
    Run r;
    r.formula = parse_formula(f);
    compiler::CompileOptions o;
    o.eval_initial_state = eval_initial;
    r.compiled = compiler::compile(domain(dom), problem(prob), r.formula, o);
    r.task = ground(r.compiled.new_domain, r.compiled.new_problem);
    return r;
}

std::size_t count_schema(const Task& t, const std::string& schema) {
    return static_cast<std::size_t>(
        std::count_if(t.actions.begin(), t.actions.end(), [&](const GroundAction& a) { return a.schema == schema; }));
}

bool holds(const Task& t, const WorldState& s, const std::string& atom) {
    const int id = t.atom_id(atom);
    return id >= 0 && std::binary_search(s.begin(), s.end(), id);
}

struct Case {
    const char* dom;
    const char* prob;
    const char* formula;
};

const Case kCases[] = {
    {"triangle-tire.pddl", "triangle-tire-1.pddl", "F(vehicleat(l13))"},
    {"triangle-tire.pddl", "triangle-tire-1-l23.pddl", "vehicleat(l13) & O(vehicleat(l23))"},
    {"triangle-tire.pddl", "triangle-tire-1.pddl", "F(vehicleat(l31)) & F(vehicleat(l13))"},
    {"triangle-tire.pddl", "triangle-tire-1.pddl", "G(!vehicleat(l21)) & F(vehicleat(l13))"},
    {"hanoi-domain.pddl", "hanoi-prob-3.pddl", "F(on(d3,rod3))"},
    {"hanoi-domain.pddl", "hanoi-prob.pddl", "F(on(d3,rod3))"},
    {"blocksworld.pddl", "blocksworld-p1.pddl", "F(on(b2,b3)) & G(!holding(b3))"},
    {"lights.pddl", "lights-p1.pddl", "F(on(a) & on(b))"},
    {"gamble.pddl", "gamble-p1.pddl", "F(won)"},
};

}  // namespace

TEST_CASE("ground: move-car bindings") {
    const Task t = ground(domain("triangle-tire.pddl"), problem("triangle-tire-1.pddl"));
    CHECK(count_schema(t, "move-car") == 81);
    CHECK(count_schema(t, "changetire") == 9);
    for (const auto& a : t.actions) {
        if (a.schema == "move-car") CHECK(a.outcomes.size() == 2);
    }
    CHECK(std::is_sorted(t.atoms.begin(), t.atoms.end()));
    CHECK(std::is_sorted(t.actions.begin(), t.actions.end(),
                         [](const GroundAction& x, const GroundAction& y) { return x.name < y.name; }));
}

TEST_CASE("ground: equality prunes bindings") {
    const Task t = ground(domain("hanoi-domain.pddl"), problem("hanoi-prob.pddl"));
    CHECK(count_schema(t, "move") == 6 * 6 * 6 - 6 * 6);
    for (const auto& a : t.actions) CHECK(a.args[1] != a.args[2]);
}

TEST_CASE("ground: compiled trans instances") {
    const Run r = compiled("triangle-tire.pddl", "triangle-tire-1.pddl", "F(vehicleat(l13))");
    CHECK(count_schema(r.task, "trans-1") == 9);
    for (const auto& a : r.task.actions) {
        if (a.schema == "trans-1") CHECK(a.outcomes.size() == 1);
    }
    const int id = r.task.action_id("trans-1(l13)");
    REQUIRE(id >= 0);
    const GroundAction& tr = r.task.actions[static_cast<std::size_t>(id)];
    const WorldState s{r.task.atom_id("q2(l13)")};
    CHECK(tr.precondition.holds(s));
    CHECK_FALSE(tr.precondition.holds({r.task.atom_id("q1(l13)")}));
}

TEST_CASE("ground: serial and parallel agree") {
    const Run r = compiled("triangle-tire.pddl", "triangle-tire-1-l23.pddl", "vehicleat(l13) & O(vehicleat(l23))");
    GroundOptions serial;
    serial.parallel = false;
    const Task a = ground(r.compiled.new_domain, r.compiled.new_problem, serial);
    CHECK(a.atoms == r.task.atoms);
    REQUIRE(a.actions.size() == r.task.actions.size());
    for (std::size_t i = 0; i < a.actions.size(); ++i) {
        CHECK(a.actions[i].name == r.task.actions[i].name);
        CHECK(a.actions[i].outcomes == r.task.actions[i].outcomes);
    }
}

TEST_CASE("ground: residual conditional effects are rejected") {
    CHECK_THROWS_AS(ground(domain("lights.pddl"), problem("lights-p1.pddl")), UnsupportedError);
}

TEST_CASE("conditions under the closed world") {
    Condition empty;
    empty.kind = Condition::Kind::And;
    CHECK(empty.holds({}));
    Condition atom;
    atom.kind = Condition::Kind::Atom;
    atom.atom = 3;
    Condition neg;
    neg.kind = Condition::Kind::Not;
    neg.children = {atom};
    CHECK(neg.holds({1, 2}));
    CHECK_FALSE(neg.holds({3}));
}

TEST_CASE("apply: add wins over delete") {
    const WorldState s = apply({1, 4}, Outcome{{2, 4}, {1, 4}});
    CHECK(s == WorldState{2, 4});
}

TEST_CASE("strong_solve agrees with the fixpoint oracle") {
    for (const Case& c : kCases) {
        CAPTURE(c.formula);
        CAPTURE(c.prob);
        const Run r = compiled(c.dom, c.prob, c.formula);
        const auto pi = strong_solve(r.task);
        CHECK(pi.has_value() == oracle::strongly_solvable(r.task));
    }
}

TEST_CASE("solved tasks replay and validate") {
    for (const Case& c : kCases) {
        CAPTURE(c.formula);
        CAPTURE(c.prob);
        const Run r = compiled(c.dom, c.prob, c.formula);
        const auto pi = strong_solve(r.task);
        if (!pi) continue;
        const auto traces = enumerate_traces(r.task, *pi);
        const std::size_t reachable = oracle::reachable_states(r.task).size();
        for (const ExecTrace& tr : traces) {
            CHECK(r.task.is_goal(tr.states.back()));
            CHECK(alternates(r.task, tr));
            CHECK(one_q_atom(r.task, tr));
            CHECK(tr.actions.size() < reachable);
        }
        const auto report = validate(r.task, *pi, r.formula, r.compiled.dfa);
        CHECK_MESSAGE(report.pass, report.failure);
        CHECK(report.traces == traces.size());
        for (const auto& v : report.verdicts) CHECK(v.semantics == v.automaton);
    }
}

TEST_CASE("unsolvable when the only goal action may fail") {
    const Run r = compiled("gamble.pddl", "gamble-p1.pddl", "F(won)");
    CHECK_FALSE(strong_solve(r.task).has_value());
    CHECK_FALSE(oracle::strongly_solvable(r.task));
}

TEST_CASE("eventually task: every trace ends in the accepting q") {
    const Run r = compiled("triangle-tire.pddl", "triangle-tire-1.pddl", "F(vehicleat(l13))");
    const auto pi = strong_solve(r.task);
    REQUIRE(pi);
    for (const ExecTrace& tr : enumerate_traces(r.task, *pi)) {
        CHECK(holds(r.task, tr.states.back(), "q2(l13)"));
        CHECK(holds(r.task, tr.states.back(), "turndomain"));
    }
}

TEST_CASE("once task routes through l23") {
    const Run r = compiled("triangle-tire.pddl", "triangle-tire-1-l23.pddl", "vehicleat(l13) & O(vehicleat(l23))");
    const auto pi = strong_solve(r.task);
    REQUIRE(pi);
    const auto report = validate(r.task, *pi, r.formula, r.compiled.dfa);
    REQUIRE(report.pass);
    for (const auto& v : report.verdicts) {
        const auto& letters = v.projected.letters;
        REQUIRE(!letters.empty());
        // bit 0 = vehicleat(l13), bit 1 = vehicleat(l23)
        CHECK(letters.back() == 0b01);
        CHECK(std::any_of(letters.begin(), letters.end(), [](temporal::Letter l) { return (l & 0b10) != 0; }));
    }
}

TEST_CASE("deterministic chain has one trace") {
    const char* dom = R"((define (domain chain) (:predicates (s0) (s1) (s2))
        (:action a :parameters () :precondition (s0) :effect (and (s1) (not (s0))))
        (:action b :parameters () :precondition (s1) :effect (and (s2) (not (s1))))))";
    const char* prob = R"((define (problem c) (:domain chain) (:init (s0)) (:goal (s2))))";
    const Task t = ground(pddl::parse_domain(dom), pddl::parse_problem(prob));
    const auto pi = strong_solve(t);
    REQUIRE(pi);
    const auto traces = enumerate_traces(t, *pi);
    REQUIRE(traces.size() == 1);
    CHECK(traces[0].actions.size() == 2);
}

TEST_CASE("missing policy entry names the state") {
    const Run r = compiled("triangle-tire.pddl", "triangle-tire-1.pddl", "F(vehicleat(l13))");
    auto pi = *strong_solve(r.task);
    pi.table.erase(r.task.init);
    try {
        enumerate_traces(r.task, pi);
        FAIL("expected a policy error");
    } catch (const PolicyError& e) {
        CHECK(std::string(e.what()).find("vehicleat(l11)") != std::string::npos);
    }
    const auto report = validate(r.task, pi, r.formula, r.compiled.dfa);
    CHECK_FALSE(report.pass);
}

TEST_CASE("mutation: swapping a trans edge fails validation") {
    const Run r = compiled("triangle-tire.pddl", "triangle-tire-1.pddl", "F(vehicleat(l13))");
    auto pi = *strong_solve(r.task);
    bool mutated = false;
    for (auto& [s, a] : pi.table) {
        if (r.task.actions[static_cast<std::size_t>(a)].schema != "trans-0") continue;
        a = r.task.action_id("trans-1(l13)");
        mutated = true;
        break;
    }
    REQUIRE(mutated);
    const auto report = validate(r.task, pi, r.formula, r.compiled.dfa);
    CHECK_FALSE(report.pass);
    CHECK(report.failure.find("trans-1(l13)") != std::string::npos);
}

TEST_CASE("validation catches a disagreeing automaton") {
    const Run r = compiled("triangle-tire.pddl", "triangle-tire-1.pddl", "F(vehicleat(l13))");
    const auto pi = *strong_solve(r.task);
    auto dfa = r.compiled.dfa;
    dfa.accepting = {1};
    const auto report = validate(r.task, pi, r.formula, dfa);
    CHECK_FALSE(report.pass);
    CHECK(report.failure.find("[") != std::string::npos);
}

TEST_CASE("policy file round trip and errors") {
    const Run r = compiled("triangle-tire.pddl", "triangle-tire-1.pddl", "F(vehicleat(l13))");
    const auto pi = *strong_solve(r.task);
    const std::string text = write_policy(r.task, pi);
    CHECK(read_policy(r.task, text).table == pi.table);
    CHECK(write_policy(r.task, read_policy(r.task, text)) == text);

    const std::string first = text.substr(0, text.find('\n') + 1);
    CHECK_THROWS_AS(read_policy(r.task, "abc\tdef\n"), PolicyError);
    CHECK_THROWS_AS(read_policy(r.task, first + first), PolicyError);
    std::string bad_hash = first;
    bad_hash[0] = bad_hash[0] == '0' ? '1' : '0';
    CHECK_THROWS_AS(read_policy(r.task, bad_hash), PolicyError);
    std::string bad_action = first.substr(0, first.rfind('\t') + 1) + "fly(l11)\n";
    CHECK_THROWS_AS(read_policy(r.task, bad_action), PolicyError);
    const std::string atoms = "vehicleat(l99)";
    CHECK_THROWS_AS(read_policy(r.task, state_hash(atoms) + "\t" + atoms + "\ttrans-0(l13)\n"), PolicyError);
}

TEST_CASE("state hash is FNV-1a") {
    CHECK(state_hash("") == "cbf29ce484222325");
    CHECK(state_hash("a") == "af63dc4c8601ec8c");
}

TEST_CASE("controller graphs") {
    const Run r = compiled("triangle-tire.pddl", "triangle-tire-1-l23.pddl", "vehicleat(l13) & O(vehicleat(l23))");
    const auto pi = *strong_solve(r.task);
    const auto traces = enumerate_traces(r.task, pi);
    const auto full = controller_graph(r.task, traces, false);
    const auto collapsed = controller_graph(r.task, traces, true);
    CHECK(full.nodes[0] == r.task.init);
    CHECK(collapsed.nodes.size() < full.nodes.size());
    for (const auto& e : collapsed.edges) CHECK(e.label.rfind("trans-", 0) != 0);
    // in the full graph every domain edge is followed by trans edges only
    for (const auto& e : full.edges) {
        const bool domain_edge = e.label.rfind("trans-", 0) != 0;
        for (const auto& f : full.edges) {
            if (f.from == e.to) CHECK((f.label.rfind("trans-", 0) == 0) == domain_edge);
        }
    }
    const std::string dot = to_dot(collapsed);
    CHECK(dot.find("digraph policy") != std::string::npos);
    CHECK(dot.find("doublecircle") != std::string::npos);
}

TEST_CASE("collapse needs alternation") {
    const char* dom = R"((define (domain chain) (:predicates (s0) (s1))
        (:action a :parameters () :precondition (s0) :effect (and (s1) (not (s0))))))";
    const char* prob = R"((define (problem c) (:domain chain) (:init (s0)) (:goal (s1))))";
    const Task t = ground(pddl::parse_domain(dom), pddl::parse_problem(prob));
    const auto traces = enumerate_traces(t, *strong_solve(t));
    CHECK_THROWS_AS(controller_graph(t, traces, true), Error);
}

TEST_CASE("empty policy on a satisfied goal") {
    const char* dom = R"((define (domain done) (:predicates (g)) (:action a :parameters () :precondition (g) :effect (g))))";
    const char* prob = R"((define (problem d) (:domain done) (:init (g)) (:goal (g))))";
    const Task t = ground(pddl::parse_domain(dom), pddl::parse_problem(prob));
    const auto pi = strong_solve(t);
    REQUIRE(pi);
    CHECK(pi->table.empty());
    const auto traces = enumerate_traces(t, *pi);
    const auto g = controller_graph(t, traces, false);
    CHECK(g.nodes.size() == 1);
    CHECK(g.goal[0]);
    CHECK(g.edges.empty());
}

TEST_CASE("evaluating the initial state") {
    const Run r = compiled("triangle-tire.pddl", "triangle-tire-1.pddl", "F(vehicleat(l11))", true);
    const auto pi = strong_solve(r.task);
    REQUIRE(pi);
    CHECK(pi->table.empty());
    const auto report = validate(r.task, *pi, r.formula, r.compiled.dfa, true);
    CHECK_MESSAGE(report.pass, report.failure);
    REQUIRE(report.verdicts.size() == 1);
    CHECK(report.verdicts[0].projected.size() == 1);
}

TEST_CASE("projection drops trans steps") {
    const Run r = compiled("triangle-tire.pddl", "triangle-tire-1.pddl", "F(vehicleat(l13))");
    const auto pi = *strong_solve(r.task);
    for (const ExecTrace& tr : enumerate_traces(r.task, pi)) {
        const auto proj = domain_trace(r.task, tr, r.compiled.dfa.atoms, false);
        CHECK(proj.size() * 2 == tr.actions.size());
        CHECK(domain_trace(r.task, tr, r.compiled.dfa.atoms, true).size() == proj.size() + 1);
    }
}
