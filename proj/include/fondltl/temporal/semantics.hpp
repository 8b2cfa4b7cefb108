#pragma once

#include <cstdint>
#include <vector>

#include "fondltl/temporal/formula.hpp"

namespace fondltl::temporal {

/// One instant: bit i set iff the i-th atom of the owning trace holds.
using Letter = std::uint32_t;

/// Finite propositional trace over an explicit atom order. Atoms not listed
/// are false at every instant.
struct Trace {
    std::vector<GroundedSymbol> atoms;
    std::vector<Letter> letters;

    std::size_t size() const { return letters.size(); }
    bool holds(const GroundedSymbol& s, std::size_t i) const;
};

/// Truth of `f` at position `i` of `t` under finite-trace semantics. Future
/// operators look towards the end (X needs a successor, WX does not), past
/// operators towards the start (Y needs a predecessor).
bool evaluate(const FormulaPtr& f, const Trace& t, std::size_t i);

/// Truth of `f` at every position of `t`.
std::vector<bool> evaluate_all(const FormulaPtr& f, const Trace& t);

/// Future and propositional formulas are checked at the first instant, past
/// formulas at the last one. Mixed formulas throw FragmentError.
bool satisfies(const FormulaPtr& f, const Trace& t);

}  // namespace fondltl::temporal
