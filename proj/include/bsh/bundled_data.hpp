#pragma once

#include "bsh/graph.hpp"

#include <string>
#include <vector>

namespace bsh {

// Names: "srg-36-10-4-2", "shrikhande", "lattice-4x4".
std::vector<std::string> bundled_names();

// Reads <data dir>/<name>.txt and validates it as an SRG with the expected parameters.
// The data directory is $BSH_DATA_DIR when set, else the source tree's data/.
IntMatrix bundled_data(const std::string& name);
SrgParams bundled_parameters(const std::string& name);
std::string data_directory();

// Regenerates a dataset from its combinatorial description (used to freeze and audit the files).
IntMatrix generate_dataset(const std::string& name);

// K_m □ K_m: vertices (i,j), adjacent when they share exactly one coordinate.
IntMatrix rook_graph(std::size_t m);
// Cayley graph on Z4 × Z4 with connection set {±(1,0), ±(0,1), ±(1,1)}.
IntMatrix shrikhande_graph();

}  // namespace bsh
