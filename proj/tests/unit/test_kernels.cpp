#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "fondltl/automaton.hpp"
#include "fondltl/kernels/oracle.hpp"
#include "fondltl/temporal.hpp"
#include "support/corpus.hpp"

using namespace fondltl;
using temporal::parse_formula;

TEST_CASE("trace count covers every length") {
    const auto f = parse_formula("a U (b & c)");
    const auto d = automaton::formula_to_dfa(f);
    const auto c = kernels::count_mismatches_serial(f, d, 3);
    CHECK(c.traces == 8 + 64 + 512);
    CHECK(c.mismatches == 0);
}

TEST_CASE("serial and parallel agree on the corpus") {
    std::vector<std::string> all = corpus::kFuture;
    all.insert(all.end(), corpus::kPast.begin(), corpus::kPast.end());
    for (const std::string& text : all) {
        CAPTURE(text);
        const auto f = parse_formula(text);
        const auto d = automaton::formula_to_dfa(f);
        const auto s = kernels::count_mismatches_serial(f, d, 4);
        const auto p = kernels::count_mismatches_parallel(f, d, 4);
        CHECK(s.traces == p.traces);
        CHECK(s.mismatches == p.mismatches);
        CHECK(s.mismatches == 0);
    }
}

TEST_CASE("a broken automaton is counted the same way") {
    const auto f = parse_formula("O(a) & b");
    auto d = automaton::formula_to_dfa(f);
    d.accepting = {1};
    const auto s = kernels::count_mismatches_serial(f, d, 5);
    const auto p = kernels::count_mismatches_parallel(f, d, 5);
    CHECK(s.mismatches > 0);
    CHECK(s.mismatches == p.mismatches);
}

TEST_CASE("atomless formulas have one letter") {
    const auto f = parse_formula("X(true)");
    const auto d = automaton::formula_to_dfa(f);
    const auto c = kernels::count_mismatches_parallel(f, d, 5);
    CHECK(c.traces == 5);
    CHECK(c.mismatches == 0);
}
