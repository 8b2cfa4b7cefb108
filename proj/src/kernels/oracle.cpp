#include "fondltl/kernels/oracle.hpp"

#include "fondltl/error.hpp"
#include "fondltl/temporal/semantics.hpp"

namespace fondltl::kernels {

namespace {

// Trace number `index` of length `len`: letter i is bits [i*n, (i+1)*n).
bool agrees(const temporal::FormulaPtr& f, const automaton::Dfa& dfa, std::size_t len, std::uint64_t index) {
    const std::size_t n = dfa.atoms.size();
    temporal::Trace tr;
    tr.atoms = dfa.atoms;
    const std::uint64_t mask = (std::uint64_t{1} << n) - 1;
    for (std::size_t i = 0; i < len; ++i) tr.letters.push_back(static_cast<temporal::Letter>((index >> (i * n)) & mask));
    return temporal::satisfies(f, tr) == dfa.accepts(tr.letters);
}

std::uint64_t traces_of_length(std::size_t atoms, std::size_t len) {
    if (atoms * len >= 40) throw UnsupportedError("exhaustive trace enumeration is limited to 2^40 traces per length");
    return std::uint64_t{1} << (atoms * len);
}

}  // namespace

OracleCount count_mismatches_serial(const temporal::FormulaPtr& f, const automaton::Dfa& dfa, std::size_t max_len) {
    OracleCount c;
    for (std::size_t len = 1; len <= max_len; ++len) {
        const std::uint64_t total = traces_of_length(dfa.atoms.size(), len);
        for (std::uint64_t k = 0; k < total; ++k) {
            if (!agrees(f, dfa, len, k)) ++c.mismatches;
        }
        c.traces += total;
    }
    return c;
}

OracleCount count_mismatches_parallel(const temporal::FormulaPtr& f, const automaton::Dfa& dfa, std::size_t max_len) {
    OracleCount c;
    for (std::size_t len = 1; len <= max_len; ++len) {
        const auto total = static_cast<long long>(traces_of_length(dfa.atoms.size(), len));
        std::size_t bad = 0;
#pragma omp parallel for schedule(static) reduction(+ : bad)
        for (long long k = 0; k < total; ++k) {
            if (!agrees(f, dfa, len, static_cast<std::uint64_t>(k))) ++bad;
        }
        c.mismatches += bad;
        c.traces += static_cast<std::size_t>(total);
    }
    return c;
}

}  // namespace fondltl::kernels
