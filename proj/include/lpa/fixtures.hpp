#pragma once

#include <string>
#include <vector>

#include "lpa/graph.hpp"

namespace lpa {

struct Fixture {
  std::string name;
  std::string description;
  Graph graph;
};

/// G1..G7: the small named graphs used throughout the tests and the CLI.
const std::vector<Fixture>& fixtures();
/// Throws ValidationError for an unknown name.
const Fixture& fixture(const std::string& name);

}  // namespace lpa
