#pragma once

#include <map>
#include <string>
#include <vector>

#include "fondltl/pddl/ast.hpp"

namespace fondltl::fond {

/// Set of true ground atoms, as ascending atom ids. Atom ids follow the
/// lexicographic order of the atom names, so the id order is also the
/// name order.
using WorldState = std::vector<int>;

/// Ground condition. `name` is only used while grounding, before atoms are
/// interned.
struct Condition {
    enum class Kind { True, False, Atom, Not, And, Or };

    Kind kind = Kind::True;
    int atom = -1;
    std::string name;
    std::vector<Condition> children;

    bool holds(const WorldState& s) const;
};

struct Outcome {
    std::vector<int> add;
    std::vector<int> del;

    friend bool operator==(const Outcome&, const Outcome&) = default;
};

struct GroundAction {
    std::string name;    // `schema(arg1,...)`, or the bare schema name
    std::string schema;
    std::vector<std::string> args;
    Condition precondition;
    std::vector<Outcome> outcomes;  // one per nondeterministic alternative
};

/// A grounded planning task: atoms, actions sorted by name, initial state
/// and goal.
struct Task {
    std::vector<std::string> atoms;  // sorted; index = atom id
    std::vector<GroundAction> actions;
    WorldState init;
    Condition goal;

    /// Binary searches; -1 when unknown.
    int atom_id(const std::string& name) const;
    int action_id(const std::string& name) const;
    bool is_goal(const WorldState& s) const { return goal.holds(s); }
    /// Successor states of `a` in `s`, deduplicated, in outcome order.
    std::vector<WorldState> successors(const WorldState& s, const GroundAction& a) const;
    /// Atom names separated by single spaces.
    std::string str(const WorldState& s) const;
    /// Parses the output of `str`; throws PolicyError on an unknown atom.
    WorldState parse_state(const std::string& text) const;
};

bool applicable(const WorldState& s, const GroundAction& a);
WorldState apply(const WorldState& s, const Outcome& o);

struct GroundOptions {
    /// Ground schemas on OpenMP worker threads. Output is identical either way.
    bool parallel = true;
};

/// All type-consistent bindings of every schema. `=` is decided at binding
/// time and bindings whose precondition becomes false are dropped;
/// quantifiers are expanded over the objects of the bound type. Effects
/// become outcome lists: `and` multiplies, `oneof` unions. A remaining
/// `when` or `forall` effect throws UnsupportedError.
Task ground(const pddl::Domain& d, const pddl::Problem& p, const GroundOptions& opts = {});

/// `name(a1,...,ak)`, or `name` without arguments.
std::string ground_name(const std::string& name, const std::vector<std::string>& args);

}  // namespace fondltl::fond
