#pragma once

#include "fondltl/temporal/formula.hpp"
#include "fondltl/temporal/semantics.hpp"
