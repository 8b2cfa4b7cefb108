#pragma once

#include <string>
#include <vector>

#include "fondltl/automaton/dfa.hpp"
#include "fondltl/fond/solve.hpp"
#include "fondltl/temporal/formula.hpp"

namespace fondltl::fond {

/// True for actions grounded from a synthesized automaton-step schema.
bool is_trans(const GroundAction& a);

/// Actions alternate domain, trans, domain, ... and the last one is a trans.
bool alternates(const Task& t, const ExecTrace& tr);
/// Every state holds exactly one q-atom.
bool one_q_atom(const Task& t, const ExecTrace& tr);

/// Letter over `atoms` of a world state.
temporal::Letter project(const Task& t, const WorldState& s, const std::vector<temporal::GroundedSymbol>& atoms);

/// The propositional trace the automaton reads along `tr`: the states
/// reached by domain actions (preceded by s0 when `include_initial`),
/// projected onto `atoms`.
temporal::Trace domain_trace(const Task& t, const ExecTrace& tr, const std::vector<temporal::GroundedSymbol>& atoms,
                             bool include_initial);

struct TraceVerdict {
    temporal::Trace projected;
    bool semantics = false;
    bool automaton = false;
};

struct ValidationReport {
    bool pass = false;
    std::size_t traces = 0;
    std::vector<TraceVerdict> verdicts;
    /// Empty on PASS; otherwise the reason and a counterexample.
    std::string failure;
};

/// Replays `pi` on the compiled task and checks every execution against the
/// goal formula directly and through `dfa`. PASS iff both verdicts hold on
/// every trace. Policy errors (missing entry, inapplicable action, cycle)
/// are reported as FAIL rather than thrown.
ValidationReport validate(const Task& t, const Policy& pi, const temporal::FormulaPtr& f,
                          const automaton::Dfa& dfa, bool eval_initial_state = false);

std::string describe(const temporal::Trace& tr);

/// Policy graph over the states visited by `traces`.
struct ControllerGraph {
    struct Edge {
        int from = 0;
        int to = 0;
        std::string label;

        friend bool operator==(const Edge&, const Edge&) = default;
    };
    std::vector<WorldState> nodes;  // nodes[0] is the initial state
    std::vector<bool> goal;
    std::vector<Edge> edges;
};

/// With `collapse_trans`, each domain edge is composed with the trans edge
/// after it and labelled by the domain action; throws Error when a trace
/// does not alternate.
ControllerGraph controller_graph(const Task& t, const std::vector<ExecTrace>& traces, bool collapse_trans);

std::string to_dot(const ControllerGraph& g);

}  // namespace fondltl::fond
