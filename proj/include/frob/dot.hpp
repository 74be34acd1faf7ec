#pragma once

#include "frob/constellation.hpp"
#include "frob/fan.hpp"
#include "frob/ggraph.hpp"

#include <string>
#include <vector>

namespace frob {

/// McKay quiver with the nonzero arrows of the constellation drawn solid, the others dashed.
std::string quiver_dot(const GConstellation& c);

/// One cluster per graph, boxes placed at their exponent coordinates.
std::string staircase_dot(const std::vector<GGraph>& graphs);

/// Rays as edges from the origin, labelled with their coordinates.
std::string fan_dot(const Fan2& fan);

} // namespace frob
