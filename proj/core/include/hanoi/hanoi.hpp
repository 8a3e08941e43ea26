#pragma once

#include "hanoi/cache.hpp"
#include "hanoi/check.hpp"
#include "hanoi/error.hpp"
#include "hanoi/graph.hpp"
#include "hanoi/metric.hpp"
#include "hanoi/parallel.hpp"
#include "hanoi/solver.hpp"
#include "hanoi/state.hpp"
#include "hanoi/symmetry.hpp"
