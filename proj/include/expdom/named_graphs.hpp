#pragma once

#include <string>
#include <vector>

#include "expdom/graph.hpp"

namespace expdom {

/// k4, k33, petersen, heawood, mcgee, tutte-coxeter, prism. Throws UnknownName.
Graph named_graph(const std::string& name);

std::vector<std::string> named_graph_names();

/// Hamiltonian cubic graph from LCF notation: `jumps` repeated `repeats` times.
Graph lcf_graph(const std::vector<int>& jumps, std::size_t repeats);

}  // namespace expdom
