#pragma once

#include "rdg/edge_list.hpp"
#include "rdg/edge_probability.hpp"
#include "rdg/errors.hpp"
#include "rdg/expected_degree.hpp"
#include "rdg/graph_analysis.hpp"
#include "rdg/lattice.hpp"
#include "rdg/rng.hpp"
#include "rdg/sampled_graph.hpp"
#include "rdg/samplers.hpp"
#include "rdg/shell_counts.hpp"
#include "rdg/sweep.hpp"
