#pragma once

#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "fondltl/pddl/ast.hpp"

namespace fondltl::pddl {

struct Token {
    enum class Kind { LParen, RParen, Hyphen, Equals, Name, Variable, Reserved, End };

    Kind kind = Kind::End;
    std::string text;  // lowercased; variables without '?'
    int line = 0;
};

/// The reserved words recognised by the lexer.
const std::set<std::string>& reserved_words();

/// Splits PDDL text into tokens. Identifiers are lowercased; `;` starts a
/// comment running to the end of the line.
std::vector<Token> tokenize(std::string_view text);

/// Parses a domain and checks it: unique action and predicate names, every
/// predicate used by an action is declared with matching arity, and every
/// variable is a parameter or quantifier-bound. Non-fatal diagnostics (e.g.
/// `oneof` without `:non-deterministic`) are appended to `warnings` if given.
Domain parse_domain(std::string_view text, std::vector<std::string>* warnings = nullptr);

/// Parses a problem. Init atoms must be ground; the goal must be a ground
/// atom or a conjunction of ground atoms.
Problem parse_problem(std::string_view text);

/// Cross-checks a problem against its domain: domain name, declared
/// predicates and arities, and that every object used in init/goal is a
/// problem object or a domain constant.
void check_problem(const Domain& domain, const Problem& problem);

}  // namespace fondltl::pddl
