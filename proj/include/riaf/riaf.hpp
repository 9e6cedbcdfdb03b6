#pragma once

#include "riaf/core.hpp"
#include "riaf/semantics.hpp"
#include "riaf/completions.hpp"
#include "riaf/reasoning.hpp"
#include "riaf/sat/cnf.hpp"
#include "riaf/sat/solver.hpp"
#include "riaf/sat/dimacs.hpp"
#include "riaf/sat/external.hpp"
#include "riaf/sat/procedures.hpp"
#include "riaf/engine.hpp"
#include "riaf/io.hpp"
#include "riaf/generator.hpp"
