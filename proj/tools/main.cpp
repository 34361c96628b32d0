// Command-line front door: parse system descriptions, run the checkers, and
// emit text, JSON, or plot-ready CSV. Exit codes: 0 verdict true, 1 verdict
// false, 2 input or usage error.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gabortile/gabor.hpp"
#include "gabortile/json_io.hpp"
#include "gabortile/liu_wang.hpp"
#include "gabortile/shift_set.hpp"
#include "gabortile/step_window.hpp"
#include "gabortile/tiling.hpp"

namespace gt = gabortile;
using gt::Interval;
using gt::io::json;

namespace {

struct CommonOpts {
    std::string input;
    double trunc_time = -1.0;  // < 0 means: use the command's default
    double trunc_freq = -1.0;
    double grid_step = -1.0;
    double tol = -1.0;
    std::string format = "text";
    std::string out;
};

void add_common(CLI::App* cmd, CommonOpts& o) {
    cmd->add_option("input", o.input, "Path to a JSON description, or inline JSON")->required();
    cmd->add_option("--trunc-time", o.trunc_time, "Time-shift truncation radius");
    cmd->add_option("--trunc-freq", o.trunc_freq, "Frequency-shift truncation radius");
    cmd->add_option("--grid-step", o.grid_step, "Grid step for sampled checks");
    cmd->add_option("--tol", o.tol, "Primary tolerance override");
    cmd->add_option("--format", o.format, "Output format")
        ->check(CLI::IsMember({"json", "csv", "text"}));
    cmd->add_option("--out", o.out, "Write the report to this file instead of stdout");
}

double pick(double override_v, double dflt) { return override_v > 0.0 ? override_v : dflt; }

json load_input(const std::string& arg) {
    std::string text;
    if (!arg.empty() && (arg.front() == '{' || arg.front() == '[')) {
        text = arg;
    } else {
        std::ifstream in(arg);
        if (!in) throw std::runtime_error("cannot open input file: " + arg);
        std::ostringstream ss;
        ss << in.rdbuf();
        text = ss.str();
    }
    return json::parse(text);
}

void write_out(const CommonOpts& o, const std::string& content) {
    if (!o.out.empty()) {
        std::ofstream f(o.out);
        if (!f) throw std::runtime_error("cannot open output file: " + o.out);
        f << content;
    } else {
        std::cout << content;
    }
}

std::string num(double v) {
    std::ostringstream os;
    os << std::setprecision(12) << v;
    return os.str();
}

std::string join_nums(const std::vector<double>& vs) {
    std::ostringstream os;
    for (std::size_t i = 0; i < vs.size(); ++i) {
        if (i) os << ",";
        os << vs[i];
    }
    return os.str();
}

std::string csv_grid(const std::vector<double>& xs, const std::vector<double>& vals) {
    std::ostringstream os;
    os << "abscissa,value,running_sum\n";
    double run = 0.0;
    char buf[160];
    for (std::size_t i = 0; i < xs.size(); ++i) {
        run += vals[i];
        std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g\n", xs[i], vals[i], run);
        os << buf;
    }
    return os.str();
}

[[noreturn]] void reject_csv() {
    throw std::runtime_error("csv output is only available for the tiling and h-function commands");
}

// Shift set from any of the accepted input shapes: a typed set object, a bare
// {"points": [...]} list, or a full system (T is taken).
gt::ShiftSet set_from_any(const json& j, std::vector<double>* raw_points) {
    if (j.is_object() && j.contains("type")) return gt::io::set_from_json(j);
    if (j.is_object() && j.contains("points")) {
        std::vector<double> pts = j.at("points").get<std::vector<double>>();
        if (pts.size() < 2) throw std::invalid_argument("points: need at least 2 entries");
        std::sort(pts.begin(), pts.end());
        if (raw_points) *raw_points = pts;
        return gt::ShiftSet::explicit_points(pts, {pts.front() - 1.0, pts.back() + 1.0});
    }
    if (j.is_object() && j.contains("T")) return gt::io::system_from_json(j).time_shifts;
    throw std::invalid_argument(
        "input must be a shift set, a {\"points\": [...]} object, or a full system");
}

Interval clamp_window(const gt::ShiftSet& s, double radius) {
    Interval w{-radius, radius};
    if (auto vw = s.valid_window()) {
        w.lo = std::max(w.lo, vw->lo);
        w.hi = std::min(w.hi, vw->hi);
    }
    if (!(w.lo < w.hi)) throw std::invalid_argument("empty enumeration window");
    return w;
}

int run_verify_onb(const CommonOpts& o) {
    const auto sd = gt::io::system_from_json(load_input(o.input));
    gt::GaborSystem sys{sd.window, sd.time_shifts, sd.freq_shifts, pick(o.trunc_time, 6.0),
                        pick(o.trunc_freq, 6.0)};
    const gt::GramReport gram = gt::gram_report(sys);
    double r_used = 0.0;
    const double defect = gt::parseval_defect_adaptive(sys, sd.window, 1e-4, &r_used);
    const double rel = defect / sd.window.norm_sq();
    const double tol = pick(o.tol, 1e-10);
    const double defect_tol = 0.02;
    const bool verdict = gram.max_off_diagonal <= tol && gram.max_diagonal_deviation <= tol &&
                         std::abs(rel) <= defect_tol;

    if (o.format == "csv") reject_csv();
    std::string content;
    if (o.format == "json") {
        json r{{"command", "verify-onb"},
               {"gram", gt::io::to_json(gram)},
               {"parseval",
                {{"defect", defect},
                 {"relative", rel},
                 {"freq_trunc_used", r_used},
                 {"tolerance", defect_tol}}},
               {"tolerance", tol},
               {"verdict", verdict}};
        content = r.dump(2) + "\n";
    } else {
        std::ostringstream os;
        os << "verify-onb: " << (verdict ? "PASS" : "FAIL") << "\n"
           << "  atoms: " << gram.atoms << " (trunc_time=" << num(sys.trunc_time)
           << ", trunc_freq=" << num(sys.trunc_freq) << ")\n"
           << "  max off-diagonal = " << num(gram.max_off_diagonal) << " at a=(t="
           << num(gram.worst_a.time) << ", s=" << num(gram.worst_a.freq) << "), b=(t="
           << num(gram.worst_b.time) << ", s=" << num(gram.worst_b.freq) << ")\n"
           << "  max diagonal deviation = " << num(gram.max_diagonal_deviation) << "\n"
           << "  parseval defect (f = window) = " << num(defect) << " (relative " << num(rel)
           << ", freq truncation " << num(r_used) << ")\n"
           << "  tolerances: gram " << num(tol) << ", relative defect " << num(defect_tol) << "\n";
        content = os.str();
    }
    write_out(o, content);
    return verdict ? 0 : 1;
}

int run_tiling(const CommonOpts& o, const std::string& side) {
    const auto sd = gt::io::system_from_json(load_input(o.input));
    const bool time_side = (side == "time");

    const gt::ShiftSet& set = time_side ? sd.time_shifts : sd.freq_shifts;
    const gt::ResolvedDensity rd = gt::resolved_density(set, 200.0, 10.0);
    const double level = rd.value;
    const gt::GridSpec grid{0.0, rd.form ? rd.form->period : 4.0, pick(o.grid_step, 1.0 / 128.0)};
    const double trunc = time_side ? pick(o.trunc_time, 40.0) : pick(o.trunc_freq, 60.0);
    const double tol = pick(o.tol, time_side ? 1e-12 : 0.02);

    const gt::TileFunction phi = time_side
                                     ? gt::TileFunction::from_step(sd.window.square_modulus())
                                     : gt::TileFunction::spectrum_of(sd.window, 100.0, 1e-9);
    const gt::TilingReport rep = gt::tiling_sum(phi, set, grid, trunc, level, tol);

    std::string content;
    if (o.format == "csv") {
        content = csv_grid(grid.points(), gt::tiling_profile(phi, set, grid, trunc));
    } else if (o.format == "json") {
        json r{{"command", "tiling"},
               {"side", side},
               {"level", {{"value", level}, {"exact", rd.exact}}},
               {"report", gt::io::to_json(rep)},
               {"verdict", rep.verdict}};
        content = r.dump(2) + "\n";
    } else {
        std::ostringstream os;
        os << "tiling (" << side << " side): " << (rep.verdict ? "PASS" : "FAIL") << "\n"
           << "  level D = " << num(level) << (rd.exact ? " (exact)" : " (estimated)") << "\n"
           << "  grid: " << rep.grid_description << ", truncation " << num(trunc) << "\n"
           << "  max deviation = " << num(rep.max_abs_deviation) << " at x = " << num(rep.worst_x)
           << "\n"
           << "  truncation tail bound = " << num(rep.truncation_tail_bound) << "\n"
           << "  tolerance = " << num(tol) << "\n";
        content = os.str();
    }
    write_out(o, content);
    return rep.verdict ? 0 : 1;
}

int run_density(const CommonOpts& o) {
    const auto sd = gt::io::system_from_json(load_input(o.input));
    const double r_time = pick(o.trunc_time, 200.0);
    const double r_freq = pick(o.trunc_freq, 200.0);
    const gt::ResolvedDensity dt = gt::resolved_density(sd.time_shifts, r_time, 10.0);
    const gt::ResolvedDensity ds = gt::resolved_density(sd.freq_shifts, r_freq, 10.0);
    const double product_est = dt.estimate.estimate * ds.estimate.estimate;
    const double tol = pick(o.tol, 0.02);
    const bool verdict = std::abs(product_est - 1.0) <= tol;

    if (o.format == "csv") reject_csv();
    std::string content;
    if (o.format == "json") {
        json r{{"command", "density"},
               {"time",
                {{"estimate", gt::io::to_json(dt.estimate)},
                 {"value", dt.value},
                 {"exact", dt.exact}}},
               {"freq",
                {{"estimate", gt::io::to_json(ds.estimate)},
                 {"value", ds.value},
                 {"exact", ds.exact}}},
               {"product_estimated", product_est},
               {"product_resolved", dt.value * ds.value},
               {"tolerance", tol},
               {"verdict", verdict}};
        content = r.dump(2) + "\n";
    } else {
        std::ostringstream os;
        os << "density: " << (verdict ? "PASS" : "FAIL") << "\n"
           << "  D(T) = " << num(dt.estimate.estimate) << " +/- " << num(dt.estimate.error_band)
           << (dt.exact ? " (exact " + num(dt.value) + ")" : "") << "\n"
           << "  D(S) = " << num(ds.estimate.estimate) << " +/- " << num(ds.estimate.error_band)
           << (ds.exact ? " (exact " + num(ds.value) + ")" : "") << "\n"
           << "  D(T) * D(S) = " << num(product_est) << " (tolerance " << num(tol) << ")\n";
        content = os.str();
    }
    write_out(o, content);
    return verdict ? 0 : 1;
}

int run_detect_period(const CommonOpts& o) {
    const json j = load_input(o.input);
    std::vector<double> pts;
    if (j.is_object() && j.contains("points") && !j.contains("type")) {
        pts = j.at("points").get<std::vector<double>>();
        std::sort(pts.begin(), pts.end());
    } else {
        const gt::ShiftSet s = set_from_any(j, nullptr);
        pts = s.enumerate(clamp_window(s, pick(o.trunc_time, 100.0)));
    }
    const double tol = pick(o.tol, 1e-9);
    const auto pf = gt::detect_periodic_form(pts, 10.0, tol);

    if (o.format == "csv") reject_csv();
    std::string content;
    if (o.format == "json") {
        json r{{"command", "detect-period"}, {"tolerance", tol}, {"detected", pf.has_value()}};
        if (pf) r["form"] = gt::io::to_json(*pf);
        content = r.dump(2) + "\n";
    } else if (pf) {
        std::ostringstream os;
        os << "a=" << pf->period << ", offsets=[" << join_nums(pf->offsets) << "]\n";
        content = os.str();
    } else {
        content = "no periodic form detected (max period 10)\n";
    }
    write_out(o, content);
    return pf ? 0 : 1;
}

int run_flc(const CommonOpts& o) {
    const json j = load_input(o.input);
    const gt::ShiftSet s = set_from_any(j, nullptr);
    const Interval w = clamp_window(s, pick(o.trunc_time, 100.0));
    const double gap_tol = pick(o.tol, 1e-9);
    const gt::FlcResult res = gt::flc_check(s, w, gap_tol, 64);

    if (o.format == "csv") reject_csv();
    std::string content;
    if (o.format == "json") {
        json r{{"command", "flc"},
               {"window", {w.lo, w.hi}},
               {"gap_tol", gap_tol},
               {"report", gt::io::to_json(res)}};
        content = r.dump(2) + "\n";
    } else {
        std::ostringstream os;
        os << "flc: " << (res.verdict ? "PASS" : "FAIL") << " (" << res.gap_values.size()
           << " distinct gap values on [" << num(w.lo) << ", " << num(w.hi) << "])\n"
           << "  gaps: [" << join_nums(res.gap_values) << "]\n";
        content = os.str();
    }
    write_out(o, content);
    return res.verdict ? 0 : 1;
}

int run_h_function(const CommonOpts& o) {
    const json j = load_input(o.input);
    const auto sd = gt::io::system_from_json(j);
    const gt::StepWindow f = j.contains("f") ? gt::io::window_from_json(j.at("f")) : sd.window;

    const gt::HFunction h = gt::build_h_function(f, sd.window, sd.time_shifts);
    const double trunc = pick(o.trunc_freq, 60.0);
    const gt::ResolvedDensity rds = gt::resolved_density(sd.freq_shifts, 200.0, 10.0);
    const gt::GridSpec grid{0.0, rds.form ? rds.form->period : 4.0, pick(o.grid_step, 1.0 / 128.0)};
    const double tol = pick(o.tol, 0.02);

    const gt::TilingReport tiling = gt::verify_h_tiling(h, sd.freq_shifts, grid, trunc, tol);
    const gt::TileFunction tile = gt::tile_from_h(h, 100.0, 1e-9);
    const double dens_from_h = gt::density_from_tiling(tile, 1.0);
    const double mismatch = std::abs(dens_from_h - rds.value) / rds.value;
    const bool density_ok = mismatch <= 0.02;
    const bool verdict = tiling.verdict && density_ok;

    std::string content;
    if (o.format == "csv") {
        // (xi, H(xi), sum_s H(xi - s)) triples
        gt::TileFunction h_tile;
        h_tile.eval = [&h](double xi) { return h(xi); };
        h_tile.decay_constant = h.decay_constant();
        const auto xs = grid.points();
        const auto sums = gt::tiling_profile(h_tile, sd.freq_shifts, grid, trunc);
        std::ostringstream os;
        os << "abscissa,value,running_sum\n";
        char buf[160];
        for (std::size_t i = 0; i < xs.size(); ++i) {
            std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g\n", xs[i], h(xs[i]), sums[i]);
            os << buf;
        }
        content = os.str();
    } else if (o.format == "json") {
        json r{{"command", "h-function"},
               {"integral", tile.integral},
               {"integral_tail", tile.integral_tail},
               {"density_from_tiling", dens_from_h},
               {"density_estimate", rds.value},
               {"density_exact", rds.exact},
               {"relative_mismatch", mismatch},
               {"tiling", gt::io::to_json(tiling)},
               {"verdict", verdict}};
        content = r.dump(2) + "\n";
    } else {
        std::ostringstream os;
        os << "h-function: " << (verdict ? "PASS" : "FAIL") << "\n"
           << "  integral of H = " << num(tile.integral) << " (tail bound "
           << num(tile.integral_tail) << ")\n"
           << "  density from tiling = " << num(dens_from_h) << ", D(S) = " << num(rds.value)
           << " (relative mismatch " << num(mismatch) << ")\n"
           << "  shifted-sum max deviation = " << num(tiling.max_abs_deviation) << " at xi = "
           << num(tiling.worst_x) << ", tail bound " << num(tiling.truncation_tail_bound) << "\n"
           << "  grid: " << tiling.grid_description << ", truncation " << num(trunc)
           << ", tolerance " << num(tol) << "\n";
        content = os.str();
    }
    write_out(o, content);
    return verdict ? 0 : 1;
}

int run_liu_wang(const CommonOpts& o) {
    const auto sd = gt::io::system_from_json(load_input(o.input));

    gt::LiuWangOptions opts;
    opts.tiling_trunc = pick(o.trunc_time, 40.0);
    opts.spectral.trunc = pick(o.trunc_freq, 40.0);
    if (o.grid_step > 0.0) opts.time_grid.step = o.grid_step;
    if (o.tol > 0.0) opts.modulus_tol = o.tol;
    const gt::LiuWangReport rep = gt::liu_wang_conditions(sd.window, sd.time_shifts,
                                                          sd.freq_shifts, opts);

    std::optional<gt::NonnegativeStructureReport> structure;
    std::string structure_note;
    try {
        gt::NonnegativeStructureOptions nopts;
        nopts.trunc = pick(o.trunc_time, 40.0);
        nopts.spectral.trunc = pick(o.trunc_freq, 40.0);
        structure = gt::nonnegative_structure(sd.window, sd.time_shifts, sd.freq_shifts, nopts);
    } catch (const std::invalid_argument& e) {
        structure_note = e.what();
    }
    const bool verdict = rep.verdict && (!structure || structure->verdict);

    if (o.format == "csv") reject_csv();
    std::string content;
    if (o.format == "json") {
        json r{{"command", "liu-wang"},
               {"conditions", gt::io::to_json(rep)},
               {"verdict", verdict}};
        if (structure) {
            r["structure"] = gt::io::to_json(*structure);
        } else {
            r["structure_skipped"] = structure_note;
        }
        content = r.dump(2) + "\n";
    } else {
        std::ostringstream os;
        os << "liu-wang: " << (verdict ? "PASS" : "FAIL") << "\n"
           << "  (i) constant modulus: " << (rep.modulus_constant ? "ok" : "violated")
           << " (target " << num(rep.modulus_target) << ", deviation "
           << num(rep.modulus_deviation) << ")\n"
           << "  (ii) tiling pair: " << (rep.tiling.verdict ? "ok" : "violated") << " — "
           << rep.tiling.detail << "\n"
           << "  (iii) spectral pair: " << (rep.spectral.verdict ? "ok" : "violated") << " — "
           << rep.spectral.detail << "\n";
        if (structure) {
            os << "  nonnegative structure: " << (structure->verdict ? "ok" : "violated") << "\n"
               << "    translates disjoint: " << (structure->translates_disjoint ? "yes" : "no");
            if (structure->overlap_witness) {
                os << " (overlap on [" << num(structure->overlap_witness->lo) << ", "
                   << num(structure->overlap_witness->hi) << "])";
            }
            os << "\n    |g|^2 vs D(T): deviation " << num(structure->level_deviation)
               << (structure->level_ok ? " (ok)" : " (violated)") << "\n"
               << "    D(T) * mes(support) = " << num(structure->density_product)
               << (structure->product_ok ? " (ok)" : " (violated)") << "\n";
        } else {
            os << "  nonnegative structure: skipped (" << structure_note << ")\n";
        }
        content = os.str();
    }
    write_out(o, content);
    return verdict ? 0 : 1;
}

int run_zero_set(const CommonOpts& o) {
    const auto sd = gt::io::system_from_json(load_input(o.input));
    const Interval w = clamp_window(sd.freq_shifts, pick(o.trunc_freq, 40.0));
    const double tol = pick(o.tol, 1e-10);
    const gt::ZeroSetReport rep = gt::difference_zero_set_check(sd.window, sd.freq_shifts, w, tol);

    if (o.format == "csv") reject_csv();
    std::string content;
    if (o.format == "json") {
        json r{{"command", "zero-set"},
               {"window", {w.lo, w.hi}},
               {"report", gt::io::to_json(rep)},
               {"verdict", rep.verdict}};
        content = r.dump(2) + "\n";
    } else {
        std::ostringstream os;
        os << "zero-set: " << (rep.verdict ? "PASS" : "FAIL") << "\n"
           << "  differences checked: " << rep.differences_checked << " on [" << num(w.lo) << ", "
           << num(w.hi) << "]\n"
           << "  max |(|g|^2)^| = " << num(rep.max_abs_value) << " at d = "
           << num(rep.worst_difference) << " (tolerance " << num(tol) << ")\n";
        content = os.str();
    }
    write_out(o, content);
    return rep.verdict ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Verification toolkit for Gabor systems with piecewise-constant windows"};
    app.require_subcommand(1);

    CommonOpts o_onb, o_tiling, o_density, o_detect, o_flc, o_h, o_lw, o_zero;
    std::string side = "time";

    CLI::App* c_onb = app.add_subcommand("verify-onb", "Gram matrix + Parseval defect check");
    add_common(c_onb, o_onb);
    CLI::App* c_tiling = app.add_subcommand("tiling", "Tiling sum check (time or frequency side)");
    add_common(c_tiling, o_tiling);
    c_tiling->add_option("--side", side, "Which side to check")
        ->check(CLI::IsMember({"time", "freq"}));
    CLI::App* c_density = app.add_subcommand("density", "Uniform densities and their product");
    add_common(c_density, o_density);
    CLI::App* c_detect = app.add_subcommand("detect-period", "Detect a single-period form a Z + offsets");
    add_common(c_detect, o_detect);
    CLI::App* c_flc = app.add_subcommand("flc", "Finite-local-complexity check of the gap values");
    add_common(c_flc, o_flc);
    CLI::App* c_h = app.add_subcommand("h-function", "Build H and check its shifted-sum identity");
    add_common(c_h, o_h);
    CLI::App* c_lw = app.add_subcommand("liu-wang", "Constant-modulus / tiling-pair / spectral-pair conditions");
    add_common(c_lw, o_lw);
    CLI::App* c_zero = app.add_subcommand("zero-set", "Transform of |g|^2 on the difference set");
    add_common(c_zero, o_zero);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (c_onb->parsed()) return run_verify_onb(o_onb);
        if (c_tiling->parsed()) return run_tiling(o_tiling, side);
        if (c_density->parsed()) return run_density(o_density);
        if (c_detect->parsed()) return run_detect_period(o_detect);
        if (c_flc->parsed()) return run_flc(o_flc);
        if (c_h->parsed()) return run_h_function(o_h);
        if (c_lw->parsed()) return run_liu_wang(o_lw);
        if (c_zero->parsed()) return run_zero_set(o_zero);
    } catch (const json::parse_error& e) {
        std::cerr << "JSON parse error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
