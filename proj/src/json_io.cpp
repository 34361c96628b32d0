#include "gabortile/json_io.hpp"

#include <stdexcept>

namespace gabortile::io {

namespace {

std::vector<double> doubles(const json& j, const char* what) {
    if (!j.is_array()) throw std::invalid_argument(std::string(what) + ": expected an array");
    std::vector<double> out;
    out.reserve(j.size());
    for (const auto& e : j) {
        if (!e.is_number()) throw std::invalid_argument(std::string(what) + ": expected numbers");
        out.push_back(e.get<double>());
    }
    return out;
}

const json& field(const json& j, const char* key) {
    const auto it = j.find(key);
    if (it == j.end()) {
        throw std::invalid_argument(std::string("missing field \"") + key + "\"");
    }
    return *it;
}

}  // namespace

StepWindow window_from_json(const json& j) {
    if (!j.is_object()) throw std::invalid_argument("window: expected an object");
    const auto bps = doubles(field(j, "breakpoints"), "window.breakpoints");
    const json& vj = field(j, "values");
    if (!vj.is_array()) throw std::invalid_argument("window.values: expected an array");
    std::vector<cplx> vals;
    vals.reserve(vj.size());
    for (const auto& e : vj) {
        if (e.is_number()) {
            vals.emplace_back(e.get<double>(), 0.0);
        } else if (e.is_array() && e.size() == 2 && e[0].is_number() && e[1].is_number()) {
            vals.emplace_back(e[0].get<double>(), e[1].get<double>());
        } else {
            throw std::invalid_argument("window.values: entries must be numbers or [re, im] pairs");
        }
    }
    return StepWindow(bps, vals);
}

json window_to_json(const StepWindow& w) {
    json vals = json::array();
    for (const cplx& v : w.values()) vals.push_back({v.real(), v.imag()});
    return json{{"breakpoints", w.breakpoints()}, {"values", vals}};
}

ShiftSet set_from_json(const json& j) {
    if (!j.is_object()) throw std::invalid_argument("shift set: expected an object");
    const std::string type = field(j, "type").get<std::string>();
    if (type == "periodic") {
        const double a = field(j, "a").get<double>();
        return ShiftSet::periodic(a, doubles(field(j, "offsets"), "offsets"));
    }
    if (type == "aps") {
        const json& pj = field(j, "progressions");
        if (!pj.is_array()) throw std::invalid_argument("progressions: expected an array");
        std::vector<ArithmeticProgression> items;
        for (const auto& e : pj) {
            if (!e.is_array() || e.size() != 2) {
                throw std::invalid_argument("progressions: entries must be [period, offset] pairs");
            }
            items.push_back({e[0].get<double>(), e[1].get<double>()});
        }
        return ShiftSet::progressions(std::move(items));
    }
    if (type == "explicit") {
        auto pts = doubles(field(j, "points"), "points");
        const auto win = doubles(field(j, "window"), "window");
        if (win.size() != 2) throw std::invalid_argument("window: expected [lo, hi]");
        return ShiftSet::explicit_points(std::move(pts), {win[0], win[1]});
    }
    if (type == "perturbed") {
        ShiftSet base = set_from_json(field(j, "base"));
        const json& rj = field(j, "rule");
        DisplacementRule rule;
        const std::string kind = field(rj, "kind").get<std::string>();
        if (kind == "jitter") {
            rule.kind = DisplacementRule::Kind::jitter;
        } else if (kind == "alternating") {
            rule.kind = DisplacementRule::Kind::alternating;
        } else {
            throw std::invalid_argument("rule.kind: expected \"jitter\" or \"alternating\"");
        }
        rule.amplitude = field(rj, "amplitude").get<double>();
        if (rj.contains("seed")) rule.seed = rj["seed"].get<std::uint64_t>();
        if (rj.contains("spacing")) rule.reference_spacing = rj["spacing"].get<double>();
        return ShiftSet::perturbed(std::move(base), rule);
    }
    throw std::invalid_argument("shift set: unknown type \"" + type + "\"");
}

json set_to_json(const ShiftSet& s) {
    if (s.is_periodic()) {
        const auto& rep = s.as_periodic();
        return json{{"type", "periodic"}, {"a", rep.period}, {"offsets", rep.offsets}};
    }
    if (s.is_progressions()) {
        json items = json::array();
        for (const auto& ap : s.as_progressions().items) items.push_back({ap.period, ap.offset});
        return json{{"type", "aps"}, {"progressions", items}};
    }
    if (s.is_explicit()) {
        const auto& rep = s.as_explicit();
        return json{{"type", "explicit"},
                    {"points", rep.points},
                    {"window", {rep.valid_window.lo, rep.valid_window.hi}}};
    }
    const auto& rep = s.as_perturbed();
    json rule{{"kind", rep.rule.kind == DisplacementRule::Kind::jitter ? "jitter" : "alternating"},
              {"amplitude", rep.rule.amplitude}};
    if (rep.rule.kind == DisplacementRule::Kind::jitter) {
        rule["seed"] = rep.rule.seed;
    } else {
        rule["spacing"] = rep.rule.reference_spacing;
    }
    return json{{"type", "perturbed"}, {"base", set_to_json(*rep.base)}, {"rule", rule}};
}

SystemDescription system_from_json(const json& j) {
    if (!j.is_object()) throw std::invalid_argument("system: expected an object");
    return {window_from_json(field(j, "window")), set_from_json(field(j, "T")),
            set_from_json(field(j, "S"))};
}

json system_to_json(const SystemDescription& sys) {
    return json{{"window", window_to_json(sys.window)},
                {"T", set_to_json(sys.time_shifts)},
                {"S", set_to_json(sys.freq_shifts)}};
}

json to_json(const TimeFreqAtom& a) { return json{{"time", a.time}, {"freq", a.freq}}; }

json to_json(const GramReport& r) {
    return json{{"atoms", r.atoms},
                {"pairs_evaluated", r.pairs_evaluated},
                {"pairs_skipped_disjoint", r.pairs_skipped_disjoint},
                {"max_off_diagonal", r.max_off_diagonal},
                {"max_diagonal_deviation", r.max_diagonal_deviation},
                {"worst_a", to_json(r.worst_a)},
                {"worst_b", to_json(r.worst_b)},
                {"trunc_time", r.trunc_time},
                {"trunc_freq", r.trunc_freq}};
}

json to_json(const TilingReport& r) {
    return json{{"grid", r.grid_description},
                {"level_target", r.level_target},
                {"max_abs_deviation", r.max_abs_deviation},
                {"truncation_tail_bound", r.truncation_tail_bound},
                {"worst_x", r.worst_x},
                {"trunc", r.trunc},
                {"tolerance", r.tolerance},
                {"verdict", r.verdict}};
}

json to_json(const DensityEstimate& r) {
    json samples = json::array();
    for (const auto& s : r.samples) {
        samples.push_back({{"r", s.r}, {"min_ratio", s.min_ratio}, {"max_ratio", s.max_ratio}});
    }
    return json{{"estimate", r.estimate},
                {"error_band", r.error_band},
                {"max_gap", r.max_gap},
                {"samples", samples}};
}

json to_json(const FlcResult& r) {
    return json{{"verdict", r.verdict}, {"gap_values", r.gap_values}};
}

json to_json(const PeriodicForm& r) {
    return json{{"a", r.period}, {"offsets", r.offsets}, {"density", r.density()}};
}

json to_json(const SupNormReport& r) {
    return json{{"sup_time", r.sup_time},
                {"bound_time", r.bound_time},
                {"slack_time", r.slack_time},
                {"time_ok", r.time_ok},
                {"sup_freq_grid", r.sup_freq_grid},
                {"freq_lipschitz", r.freq_lipschitz},
                {"sup_freq_upper", r.sup_freq_upper},
                {"bound_freq", r.bound_freq},
                {"slack_freq", r.slack_freq},
                {"freq_ok", r.freq_ok},
                {"grid", r.grid_description}};
}

json to_json(const PairReport& r) {
    return json{{"kind", r.kind == PairReport::Kind::tiling ? "tiling" : "spectral"},
                {"verdict", r.verdict},
                {"max_violation", r.max_violation},
                {"witness", r.witness},
                {"density_ratio", r.density_ratio},
                {"completeness_defect", r.completeness_defect},
                {"trunc", r.trunc},
                {"detail", r.detail}};
}

json to_json(const LiuWangReport& r) {
    return json{{"modulus_constant", r.modulus_constant},
                {"modulus_deviation", r.modulus_deviation},
                {"modulus_target", r.modulus_target},
                {"tiling", to_json(r.tiling)},
                {"spectral", to_json(r.spectral)},
                {"verdict", r.verdict}};
}

json to_json(const NonnegativeStructureReport& r) {
    json j{{"translates_disjoint", r.translates_disjoint},
           {"density_time", r.density_time},
           {"density_exact", r.density_exact},
           {"level_deviation", r.level_deviation},
           {"level_ok", r.level_ok},
           {"density_product", r.density_product},
           {"product_ok", r.product_ok},
           {"spectral", to_json(r.spectral)},
           {"verdict", r.verdict}};
    if (r.overlap_witness) {
        j["overlap_witness"] = {r.overlap_witness->lo, r.overlap_witness->hi};
    }
    return j;
}

json to_json(const ZeroSetReport& r) {
    return json{{"differences_checked", r.differences_checked},
                {"max_abs_value", r.max_abs_value},
                {"worst_difference", r.worst_difference},
                {"tolerance", r.tolerance},
                {"verdict", r.verdict}};
}

}  // namespace gabortile::io
