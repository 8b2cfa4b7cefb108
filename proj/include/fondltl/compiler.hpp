#pragma once

#include "fondltl/compiler/compiler.hpp"
