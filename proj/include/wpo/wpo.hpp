#pragma once

#include "wpo/generators.hpp"
#include "wpo/graph.hpp"
#include "wpo/io.hpp"
#include "wpo/oracle.hpp"
#include "wpo/reductions.hpp"
#include "wpo/subset_sum.hpp"
#include "wpo/tree_decomposition.hpp"
#include "wpo/tree_solver.hpp"
#include "wpo/twdp.hpp"
