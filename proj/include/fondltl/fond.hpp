#pragma once

#include "fondltl/fond/solve.hpp"
#include "fondltl/fond/task.hpp"
#include "fondltl/fond/validate.hpp"
