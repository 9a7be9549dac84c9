#pragma once

#include "vomas/model.hpp"

namespace vomas::models {

/// Wolf-sheep predation without grass.
///
/// Per tick, ascending id over the animals alive at tick start (animals eaten
/// earlier in the same tick are skipped): draw a heading and move `step`;
/// a wolf eats the nearest live sheep within `eat_radius` (ties to the lowest
/// id), gains `energy_gain` and pays `energy_cost`; every animal then draws
/// once for reproduction. A wolf whose energy fell to <= 0 dies instead of
/// reproducing. Deaths and births take effect at the end of the tick.
ModelDef wolfsheep_model();

}  // namespace vomas::models
