#ifndef BANDGRAPH_CONFIGS_HPP
#define BANDGRAPH_CONFIGS_HPP

#include <string_view>

#include "bandgraph/geometry.hpp"

namespace bandgraph {

/// Named reference configurations:
///   "a4"        four lines over Q(sqrt(2)) realizing the path A4 with all
///               edge abscissas at |x| = 1 and non-edges at |x| = 3+2*sqrt(2)
///   "a5"        five lines over Q(sqrt(5)); kept for inspection only — two
///               of its pairs are parallel and it does not realize A5 as-is
///   "pentagram" five rational lines through a near-regular pentagon, the
///               5-star witness that C5 is ball-realizable
Configuration config_catalog(std::string_view name);

}  // namespace bandgraph

#endif
