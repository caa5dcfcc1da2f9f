#pragma once

#include "connectivity.hpp"
#include "errors.hpp"
#include "euler_walks.hpp"
#include "excess_search.hpp"
#include "factors.hpp"
#include "graph.hpp"
#include "json_io.hpp"
#include "instance_gen.hpp"
#include "oracle.hpp"
#include "parity_forest.hpp"
#include "rational.hpp"
#include "tree_packing.hpp"
