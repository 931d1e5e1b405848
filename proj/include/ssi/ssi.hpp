#pragma once

#include "ssi/errors.hpp"
#include "ssi/game.hpp"
#include "ssi/instances.hpp"
#include "ssi/pgsolver.hpp"
#include "ssi/play_value.hpp"
#include "ssi/reduction.hpp"
#include "ssi/rules.hpp"
#include "ssi/solver.hpp"
#include "ssi/strategy.hpp"
#include "ssi/trace.hpp"
#include "ssi/trace_io.hpp"
#include "ssi/valuation.hpp"
