#pragma once

#include <string>

#include "fondltl/pddl/ast.hpp"

namespace fondltl::pddl {

std::string to_string(const Term& t);
std::string to_string(const Predicate& p);
std::string to_string(const Literal& l);
std::string to_string(const Formula& f);
std::string to_string(const ActionSchema& a);

/// Canonical PDDL text; `parse_domain(print_domain(d)) == d`.
std::string print_domain(const Domain& d);
/// Canonical PDDL text; `parse_problem(print_problem(p)) == p`.
std::string print_problem(const Problem& p);

}  // namespace fondltl::pddl
