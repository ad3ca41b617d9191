#pragma once

#include "error.hpp"
#include "generators.hpp"
#include "graph.hpp"
#include "graph_io.hpp"
#include "ic.hpp"
#include "interval.hpp"
#include "ordering.hpp"
#include "rational.hpp"
#include "search.hpp"
#include "solvers.hpp"
#include "subset_dp.hpp"
#include "vertex_set.hpp"
#include "witness.hpp"
