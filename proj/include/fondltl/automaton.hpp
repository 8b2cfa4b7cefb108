#pragma once

#include "fondltl/automaton/construct.hpp"
#include "fondltl/automaton/dfa.hpp"
