#pragma once

#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "fondltl/temporal/formula.hpp"
#include "fondltl/temporal/semantics.hpp"

namespace fondltl::automaton {

using temporal::GroundedSymbol;
using temporal::Letter;

/// Hard cap on the alphabet size: constructions enumerate all 2^n letters.
inline constexpr std::size_t kMaxAtoms = 20;

/// Ternary transition label over the DFA's atom order: '1' atom must hold,
/// '0' atom must not hold, 'X' don't care.
struct Guard {
    std::string bits;

    bool matches(Letter letter) const;

    friend bool operator==(const Guard&, const Guard&) = default;
};

struct Transition {
    Guard guard;
    int dest = 0;

    friend bool operator==(const Transition&, const Transition&) = default;
};

/// Deterministic, complete automaton with states numbered 1..num_states.
/// Letter bit i corresponds to atoms[i].
struct Dfa {
    std::vector<GroundedSymbol> atoms;
    int num_states = 0;
    int initial = 1;
    std::set<int> accepting;
    std::vector<std::vector<Transition>> transitions;  // [state - 1]

    const std::vector<Transition>& out(int state) const { return transitions.at(static_cast<std::size_t>(state - 1)); }
    bool is_accepting(int state) const { return accepting.count(state) > 0; }
    /// Successor of `state` on `letter`; throws if no guard matches.
    int step(int state, Letter letter) const;
    int run(const std::vector<Letter>& word) const;
    /// Acceptance of a word over this DFA's atom order.
    bool accepts(const std::vector<Letter>& word) const { return is_accepting(run(word)); }

    friend bool operator==(const Dfa&, const Dfa&) = default;
};

/// Explicit transition table, 0-based states, columns indexed by letter
/// rank (see `letter_at_rank`).
struct TableDfa {
    std::vector<GroundedSymbol> atoms;
    std::vector<std::vector<int>> next;
    int initial = 0;
    std::vector<bool> accepting;

    std::size_t size() const { return next.size(); }
};

/// Number of letters over `num_atoms` atoms.
std::size_t letter_count(std::size_t num_atoms);

/// Letters ordered lexicographically by their guard string, atom 0 first and
/// '0' before '1'. This is the order BFS numbering and guard emission use.
Letter letter_at_rank(std::size_t rank, std::size_t num_atoms);

/// How guards are derived from a transition table.
enum class GuardStyle {
    /// One guard per path of the reduced ordered decision diagram of each
    /// state's successor function (atoms tested in order, skipped atoms are
    /// 'X'); the shape MONA prints.
    DecisionPaths,
    /// DecisionPaths, then guards with the same source and destination are
    /// merged while the merge is exact.
    Merged,
};

TableDfa to_table(const Dfa& d);
Dfa from_table(const TableDfa& t, GuardStyle style = GuardStyle::DecisionPaths);

/// Drops unreachable states and renumbers breadth-first from the initial
/// state (initial = 1), visiting successors in letter-rank order.
TableDfa canonical(const TableDfa& t);

/// True when, for every state, exactly one guard matches each letter. On
/// failure `why` (if given) names the state and letter.
bool guards_partition(const Dfa& d, std::string* why = nullptr);

}  // namespace fondltl::automaton
