#pragma once

#include <string>
#include <vector>

#include "stablereg/graph.hpp"

namespace stablereg {

struct CorpusEntry {
    std::string name;
    Graph graph;
};

// Deterministic 200-graph corpus with n <= 10: every generator family plus
// seeded random graphs.  Shared by the test suite and the bench driver.
std::vector<CorpusEntry> small_corpus();

}  // namespace stablereg
