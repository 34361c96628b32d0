#pragma once

#include <json.hpp>

#include "gabortile/gabor.hpp"
#include "gabortile/liu_wang.hpp"
#include "gabortile/shift_set.hpp"
#include "gabortile/step_window.hpp"
#include "gabortile/tiling.hpp"

namespace gabortile::io {

using nlohmann::json;

// {"breakpoints": [...], "values": [[re, im], ...]}; plain numbers are
// accepted as real values on input.
StepWindow window_from_json(const json& j);
json window_to_json(const StepWindow& w);

// {"type": "periodic", "a": 2, "offsets": [0, 0.5]}
// {"type": "aps", "progressions": [[2, 0], [2, 0.5]]}
// {"type": "explicit", "points": [...], "window": [lo, hi]}
// {"type": "perturbed", "base": {...}, "rule": {"kind": "jitter"|"alternating",
//   "amplitude": a, "seed": n, "spacing": d}}
ShiftSet set_from_json(const json& j);
json set_to_json(const ShiftSet& s);

struct SystemDescription {
    StepWindow window;
    ShiftSet time_shifts;
    ShiftSet freq_shifts;
};

// {"window": {...}, "T": {...}, "S": {...}}
SystemDescription system_from_json(const json& j);
json system_to_json(const SystemDescription& sys);

json to_json(const TimeFreqAtom& a);
json to_json(const GramReport& r);
json to_json(const TilingReport& r);
json to_json(const DensityEstimate& r);
json to_json(const FlcResult& r);
json to_json(const PeriodicForm& r);
json to_json(const SupNormReport& r);
json to_json(const PairReport& r);
json to_json(const LiuWangReport& r);
json to_json(const NonnegativeStructureReport& r);
json to_json(const ZeroSetReport& r);

}  // namespace gabortile::io
