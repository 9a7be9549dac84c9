#pragma once

#include "vomas/model.hpp"

namespace vomas::models {

/// Publishing researchers: each tick every researcher submits to a venue
/// chosen by its policy and climbs as its publication count grows.
///
/// Draw order per tick, ascending id: policy `none` draws the venue coin
/// first (< 0.5 means conference), then every researcher draws acceptance.
ModelDef researchers_model();

/// Position law: y = min(pubs * y_scale, largest double below height).
double researcher_y(std::int64_t pubs, double y_scale, double height);

/// Policy colour legend: conference -> lime, journal -> red, none -> cyan.
std::string policy_color(const std::string& policy);

}  // namespace vomas::models
