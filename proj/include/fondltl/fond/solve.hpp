#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fondltl/fond/task.hpp"

namespace fondltl::fond {

/// Memoryless policy: state → index into Task::actions. Goal states carry
/// no entry.
struct Policy {
    std::map<WorldState, int> table;

    const int* find(const WorldState& s) const {
        auto it = table.find(s);
        return it == table.end() ? nullptr : &it->second;
    }
};

struct SolveStats {
    std::size_t expanded = 0;
    std::size_t proven = 0;
    std::size_t disproven = 0;
};

/// Strong (acyclic) policy by AND-OR depth-first proof search, trying
/// applicable actions in name order. Returns nullopt when none exists. The
/// returned policy only covers non-goal states reachable under it.
std::optional<Policy> strong_solve(const Task& t, SolveStats* stats = nullptr);

/// One execution: states s0..sn and the n actions between them.
struct ExecTrace {
    std::vector<WorldState> states;
    std::vector<int> actions;
};

/// Every execution of `pi` from the initial state, branching over all
/// outcomes, each ending in a goal state. Throws PolicyError when a
/// reachable non-goal state has no entry or its action is inapplicable, and
/// Error when an execution revisits a state or `limit` traces are exceeded.
std::vector<ExecTrace> enumerate_traces(const Task& t, const Policy& pi, std::size_t limit = 1000000);

/// Policy file: one `hash<TAB>atoms<TAB>action` line per entry, sorted. The
/// hash is FNV-1a (64-bit, hex) of the atom list.
std::string write_policy(const Task& t, const Policy& pi);
Policy read_policy(const Task& t, const std::string& text);
std::string state_hash(const std::string& atoms);

}  // namespace fondltl::fond
