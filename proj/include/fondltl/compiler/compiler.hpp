#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fondltl/automaton/dfa.hpp"
#include "fondltl/pddl/ast.hpp"
#include "fondltl/temporal/formula.hpp"

namespace fondltl::compiler {

/// Bookkeeping predicate that hands control back and forth between domain
/// actions and automaton steps.
inline constexpr std::string_view kTurnDomain = "turndomain";

/// `q<state>`, the predicate tracking automaton state `state`.
std::string q_name(int state);
bool is_q_name(std::string_view name);
/// True for names of the form `trans-<digits>`.
bool is_trans_name(std::string_view name);

struct ObjectVar {
    std::string object;
    std::string variable;
    std::optional<std::string> type;

    friend bool operator==(const ObjectVar&, const ObjectVar&) = default;
};

/// Objects of the goal formula mapped to fresh variables, in order of first
/// occurrence (scanning atoms in order, each atom's objects left to right).
struct ObjectVarMap {
    std::vector<ObjectVar> entries;

    /// Typed variable declarations, for action parameters and predicates.
    std::vector<pddl::Term> parameters() const;
    /// The objects in variable order (the inverse map).
    std::vector<pddl::Term> objects() const;
    const ObjectVar* find(std::string_view object) const;
    /// The variable standing for `object`; throws if unmapped.
    pddl::Term variable(std::string_view object) const;

    friend bool operator==(const ObjectVarMap&, const ObjectVarMap&) = default;
};

struct CompileOptions {
    bool minimize = true;
    /// Start the automaton in δ(q0, s0) instead of q0, so the initial state
    /// is read by the automaton too.
    bool eval_initial_state = false;
};

struct CompilationResult {
    pddl::Domain new_domain;
    pddl::Problem new_problem;
    automaton::Dfa dfa;
    ObjectVarMap map;
    /// Names of the synthesized automaton-step actions.
    std::vector<std::string> trans_names;
};

/// Variable `<declared-arg-name><rank>` per distinct object, typed by the
/// declared predicate argument at the object's first occurrence.
ObjectVarMap derive_parameters(const pddl::Domain& d, const std::vector<temporal::GroundedSymbol>& atoms);

/// One `trans-<k>` action per destination state with an incoming
/// transition, in ascending destination order.
std::vector<pddl::ActionSchema> synthesize_trans(const automaton::Dfa& dfa, const ObjectVarMap& map);

/// Compiles away simple (non-nested) conditional effects by conjoining each
/// condition into the precondition; an action with n `when`s inside a
/// conjunction becomes `<name>-0` .. `<name>-(n-1)`.
pddl::Domain compile_conditional_effects(const pddl::Domain& d);

/// Adds (turndomain) to every action's precondition and its negation to
/// every effect, appends `trans`, and declares turndomain and q1..q<n>.
pddl::Domain rewrite_domain(const pddl::Domain& d, const std::vector<pddl::ActionSchema>& trans, int num_states,
                            const ObjectVarMap& map);

/// New init: the original atoms, (turndomain) and q<initial>(objects). New
/// goal: (turndomain) and the accepting q atoms (one, or their disjunction).
pddl::Problem rewrite_problem(const pddl::Problem& p, const automaton::Dfa& dfa, const ObjectVarMap& map,
                              bool eval_initial_state = false);

/// Letter of the problem's initial state over `dfa.atoms`.
automaton::Letter initial_letter(const pddl::Problem& p, const automaton::Dfa& dfa);

/// classify → build DFA → (minimize) → derive_parameters →
/// compile_conditional_effects → synthesize_trans → rewrite_domain →
/// rewrite_problem.
CompilationResult compile(const pddl::Domain& d, const pddl::Problem& p, const temporal::FormulaPtr& f,
                          const CompileOptions& opts = {});

}  // namespace fondltl::compiler
