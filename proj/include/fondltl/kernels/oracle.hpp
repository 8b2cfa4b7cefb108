#pragma once

#include <cstddef>

#include "fondltl/automaton/dfa.hpp"
#include "fondltl/temporal/formula.hpp"

namespace fondltl::kernels {

struct OracleCount {
    std::size_t traces = 0;
    std::size_t mismatches = 0;
};

/// Compares `dfa.accepts` with `temporal::satisfies` on every trace of
/// length 1..max_len over the automaton's atoms.
OracleCount count_mismatches_serial(const temporal::FormulaPtr& f, const automaton::Dfa& dfa, std::size_t max_len);

/// Same count, traces split across OpenMP threads.
OracleCount count_mismatches_parallel(const temporal::FormulaPtr& f, const automaton::Dfa& dfa, std::size_t max_len);

}  // namespace fondltl::kernels
