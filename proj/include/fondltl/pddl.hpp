#pragma once

#include "fondltl/pddl/ast.hpp"
#include "fondltl/pddl/parser.hpp"
#include "fondltl/pddl/printer.hpp"
