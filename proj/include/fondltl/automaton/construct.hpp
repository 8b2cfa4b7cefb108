#pragma once

#include <string>
#include <string_view>

#include "fondltl/automaton/dfa.hpp"
#include "fondltl/temporal/formula.hpp"

namespace fondltl::automaton {

struct BuildOptions {
    bool minimize = true;
    GuardStyle guards = GuardStyle::DecisionPaths;
};

/// DFA for a future (or propositional) formula by progression: states are
/// canonical residual obligations, starting from the formula's NNF.
Dfa ltlf_to_dfa(const temporal::FormulaPtr& f, const BuildOptions& opts = {});

/// DFA for a past (or propositional) formula: states are truth assignments
/// over the subformula closure plus a never-accepting pre-initial state.
Dfa pltlf_to_dfa(const temporal::FormulaPtr& f, const BuildOptions& opts = {});

/// Dispatches on `classify(f)`; propositional formulas use the LTLf route.
/// Mixed formulas throw FragmentError.
Dfa formula_to_dfa(const temporal::FormulaPtr& f, const BuildOptions& opts = {});

/// Language-equivalent DFA with the fewest states, renumbered as in
/// `canonical`.
Dfa minimize(const Dfa& d, GuardStyle style = GuardStyle::DecisionPaths);

/// MONA-convention DOT: `doublecircle` accepting nodes, an `init` arrow
/// into the initial state, edge labels over '1'/'0'/'X' in atom order. The
/// atom order is kept in a `// atoms:` comment line.
std::string to_dot(const Dfa& d);

/// Reads the format written by `to_dot`. When the atom comment is absent,
/// `atoms` supplies the order. Throws SyntaxError on malformed text or a
/// guard of the wrong length.
Dfa from_dot(std::string_view text, const std::vector<GroundedSymbol>* atoms = nullptr);

}  // namespace fondltl::automaton
