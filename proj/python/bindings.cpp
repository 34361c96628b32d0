#include <pybind11/complex.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "gabortile/gabor.hpp"
#include "gabortile/liu_wang.hpp"
#include "gabortile/shift_set.hpp"
#include "gabortile/step_window.hpp"
#include "gabortile/tiling.hpp"

namespace py = pybind11;
using namespace gabortile;

namespace {

std::string interval_repr(const Interval& iv) {
    std::ostringstream os;
    os << "Interval(" << iv.lo << ", " << iv.hi << ")";
    return os.str();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Verification toolkit for Gabor systems with piecewise-constant windows";

    py::class_<Interval>(m, "Interval")
        .def(py::init<>())
        .def(py::init([](double lo, double hi) { return Interval{lo, hi}; }), py::arg("lo"),
             py::arg("hi"))
        .def_readwrite("lo", &Interval::lo)
        .def_readwrite("hi", &Interval::hi)
        .def("length", &Interval::length)
        .def("midpoint", &Interval::midpoint)
        .def("contains", &Interval::contains)
        .def("__repr__", &interval_repr);

    py::class_<GridSpec>(m, "GridSpec")
        .def(py::init<>())
        .def(py::init([](double lo, double hi, double step) {
                 return GridSpec{lo, hi, step};
             }),
             py::arg("lo"), py::arg("hi"), py::arg("step") = 1.0 / 128.0)
        .def_readwrite("lo", &GridSpec::lo)
        .def_readwrite("hi", &GridSpec::hi)
        .def_readwrite("step", &GridSpec::step)
        .def("points", &GridSpec::points)
        .def("describe", &GridSpec::describe);

    py::class_<SupportSet>(m, "SupportSet")
        .def_readonly("intervals", &SupportSet::intervals)
        .def("measure", &SupportSet::measure)
        .def("lo", &SupportSet::lo)
        .def("hi", &SupportSet::hi)
        .def("translated", &SupportSet::translated)
        .def("overlaps", [](const SupportSet& a, const SupportSet& b) -> py::object {
            Interval witness;
            if (a.overlaps(b, &witness)) return py::cast(witness);
            return py::none();
        });

    py::class_<StepWindow>(m, "StepWindow")
        .def(py::init<>())
        .def(py::init<std::vector<double>, std::vector<cplx>>(), py::arg("breakpoints"),
             py::arg("values"))
        .def_static("indicator", &StepWindow::indicator, py::arg("lo"), py::arg("hi"),
                    py::arg("value") = cplx{1.0, 0.0})
        .def_static("from_support", &StepWindow::from_support, py::arg("omega"),
                    py::arg("value") = cplx{1.0, 0.0})
        .def_property_readonly("breakpoints", &StepWindow::breakpoints)
        .def_property_readonly("values", &StepWindow::values)
        .def("__call__", &StepWindow::operator())
        .def("fourier", &StepWindow::fourier)
        .def("square_modulus", &StepWindow::square_modulus)
        .def("translated", &StepWindow::translated)
        .def("scaled", &StepWindow::scaled)
        .def("simplified", &StepWindow::simplified, py::arg("tol") = 0.0)
        .def("support", &StepWindow::support, py::arg("tol") = 1e-12)
        .def("norm_sq", &StepWindow::norm_sq)
        .def("integral", &StepWindow::integral)
        .def("max_abs_value", &StepWindow::max_abs_value)
        .def("total_jump", &StepWindow::total_jump)
        .def("support_lo", &StepWindow::support_lo)
        .def("support_hi", &StepWindow::support_hi)
        .def("diameter", &StepWindow::diameter)
        .def("is_zero", &StepWindow::is_zero, py::arg("tol") = 0.0);

    m.def("product", &product, py::arg("a"), py::arg("b"), py::arg("conjugate_b") = false);

    py::class_<ArithmeticProgression>(m, "ArithmeticProgression")
        .def(py::init([](double period, double offset) {
                 return ArithmeticProgression{period, offset};
             }),
             py::arg("period"), py::arg("offset"))
        .def_readwrite("period", &ArithmeticProgression::period)
        .def_readwrite("offset", &ArithmeticProgression::offset);

    py::class_<DisplacementRule> rule(m, "DisplacementRule");
    py::enum_<DisplacementRule::Kind>(rule, "Kind")
        .value("jitter", DisplacementRule::Kind::jitter)
        .value("alternating", DisplacementRule::Kind::alternating);
    rule.def(py::init<>())
        .def_readwrite("kind", &DisplacementRule::kind)
        .def_readwrite("amplitude", &DisplacementRule::amplitude)
        .def_readwrite("seed", &DisplacementRule::seed)
        .def_readwrite("reference_spacing", &DisplacementRule::reference_spacing);

    py::class_<ShiftSet>(m, "ShiftSet")
        .def_static("periodic", &ShiftSet::periodic, py::arg("period"), py::arg("offsets"))
        .def_static("progressions", &ShiftSet::progressions, py::arg("items"))
        .def_static("explicit_points", &ShiftSet::explicit_points, py::arg("points"),
                    py::arg("valid_window"))
        .def_static("perturbed", &ShiftSet::perturbed, py::arg("base"), py::arg("rule"))
        .def("enumerate", &ShiftSet::enumerate, py::arg("window"))
        .def("valid_window", &ShiftSet::valid_window);

    py::class_<DensitySample>(m, "DensitySample")
        .def_readonly("r", &DensitySample::r)
        .def_readonly("min_ratio", &DensitySample::min_ratio)
        .def_readonly("max_ratio", &DensitySample::max_ratio);

    py::class_<DensityEstimate>(m, "DensityEstimate")
        .def_readonly("estimate", &DensityEstimate::estimate)
        .def_readonly("error_band", &DensityEstimate::error_band)
        .def_readonly("max_gap", &DensityEstimate::max_gap)
        .def_readonly("samples", &DensityEstimate::samples);

    m.def(
        "uniform_density",
        [](const ShiftSet& s, const std::vector<double>& r_list, int x_samples) {
            return uniform_density(s, r_list, x_samples);
        },
        py::arg("s"), py::arg("r_list"), py::arg("x_samples") = 64);
    m.def("min_gap", &min_gap, py::arg("s"), py::arg("window"));

    py::class_<FlcResult>(m, "FlcResult")
        .def_readonly("verdict", &FlcResult::verdict)
        .def_readonly("gap_values", &FlcResult::gap_values);
    m.def("flc_check", &flc_check, py::arg("s"), py::arg("window"), py::arg("gap_tol") = 1e-9,
          py::arg("max_distinct") = 64);

    py::class_<PeriodicForm>(m, "PeriodicForm")
        .def_readonly("period", &PeriodicForm::period)
        .def_readonly("offsets", &PeriodicForm::offsets)
        .def("density", &PeriodicForm::density);
    m.def(
        "detect_periodic_form",
        [](const std::vector<double>& points, double max_period, double tol) {
            return detect_periodic_form(points, max_period, tol);
        },
        py::arg("points"), py::arg("max_period"), py::arg("tol") = 1e-9);

    py::class_<ResolvedDensity>(m, "ResolvedDensity")
        .def_readonly("value", &ResolvedDensity::value)
        .def_readonly("exact", &ResolvedDensity::exact)
        .def_readonly("estimate", &ResolvedDensity::estimate)
        .def_readonly("form", &ResolvedDensity::form);
    m.def("resolved_density", &resolved_density, py::arg("s"), py::arg("radius") = 200.0,
          py::arg("detect_max_period") = 10.0);

    m.def("difference_set", &difference_set, py::arg("s"), py::arg("window"),
          py::arg("dedup_tol") = 1e-9);

    py::class_<TimeFreqAtom>(m, "TimeFreqAtom")
        .def(py::init([](double time, double freq) {
                 return TimeFreqAtom{time, freq};
             }),
             py::arg("time"), py::arg("freq"))
        .def_readwrite("time", &TimeFreqAtom::time)
        .def_readwrite("freq", &TimeFreqAtom::freq);

    py::class_<GaborSystem>(m, "GaborSystem")
        .def(py::init([](StepWindow w, ShiftSet t, ShiftSet s, double tt, double tf) {
                 return GaborSystem{std::move(w), std::move(t), std::move(s), tt, tf};
             }),
             py::arg("window"), py::arg("time_shifts"), py::arg("freq_shifts"),
             py::arg("trunc_time") = 6.0, py::arg("trunc_freq") = 6.0)
        .def_readonly("window", &GaborSystem::window)
        .def_readonly("time_shifts", &GaborSystem::time_shifts)
        .def_readonly("freq_shifts", &GaborSystem::freq_shifts)
        .def_readwrite("trunc_time", &GaborSystem::trunc_time)
        .def_readwrite("trunc_freq", &GaborSystem::trunc_freq);

    m.def("inner_product", &inner_product, py::arg("g"), py::arg("a"), py::arg("b"));
    m.def("gabor_coefficient", &gabor_coefficient, py::arg("f"), py::arg("g"), py::arg("atom"));

    py::class_<GramReport>(m, "GramReport")
        .def_readonly("atoms", &GramReport::atoms)
        .def_readonly("pairs_evaluated", &GramReport::pairs_evaluated)
        .def_readonly("pairs_skipped_disjoint", &GramReport::pairs_skipped_disjoint)
        .def_readonly("max_off_diagonal", &GramReport::max_off_diagonal)
        .def_readonly("max_diagonal_deviation", &GramReport::max_diagonal_deviation)
        .def_readonly("worst_a", &GramReport::worst_a)
        .def_readonly("worst_b", &GramReport::worst_b)
        .def_readonly("trunc_time", &GramReport::trunc_time)
        .def_readonly("trunc_freq", &GramReport::trunc_freq);
    m.def("gram_report", &gram_report, py::arg("system"));

    m.def("parseval_defect", &parseval_defect, py::arg("system"), py::arg("f"));
    m.def(
        "parseval_defect_adaptive",
        [](const GaborSystem& sys, const StepWindow& f, double rel_change) {
            double r_used = 0.0;
            const double d = parseval_defect_adaptive(sys, f, rel_change, &r_used);
            return py::make_tuple(d, r_used);
        },
        py::arg("system"), py::arg("f"), py::arg("rel_change") = 1e-4,
        "Returns (defect, freq_trunc_used)");

    py::class_<HFunction>(m, "HFunction")
        .def("__call__", &HFunction::operator())
        .def("sample", &HFunction::sample)
        .def("decay_constant", &HFunction::decay_constant)
        .def_property_readonly("terms", &HFunction::terms)
        .def_property_readonly("norm_f_sq", &HFunction::norm_f_sq);
    m.def("build_h_function", &build_h_function, py::arg("f"), py::arg("g"), py::arg("time_set"));

    py::class_<TileFunction>(m, "TileFunction")
        .def_static("from_step", &TileFunction::from_step, py::arg("w"))
        .def_static("spectrum_of", &TileFunction::spectrum_of, py::arg("w"),
                    py::arg("radius") = 100.0, py::arg("quad_tol") = 1e-9)
        .def("__call__", [](const TileFunction& t, double x) { return t.eval(x); })
        .def_readonly("support", &TileFunction::support)
        .def_readonly("decay_constant", &TileFunction::decay_constant)
        .def_readonly("integral", &TileFunction::integral)
        .def_readonly("integral_tail", &TileFunction::integral_tail)
        .def_readonly("label", &TileFunction::label);

    py::class_<TilingReport>(m, "TilingReport")
        .def_readonly("grid_description", &TilingReport::grid_description)
        .def_readonly("level_target", &TilingReport::level_target)
        .def_readonly("max_abs_deviation", &TilingReport::max_abs_deviation)
        .def_readonly("truncation_tail_bound", &TilingReport::truncation_tail_bound)
        .def_readonly("worst_x", &TilingReport::worst_x)
        .def_readonly("trunc", &TilingReport::trunc)
        .def_readonly("tolerance", &TilingReport::tolerance)
        .def_readonly("verdict", &TilingReport::verdict);

    m.def("tiling_sum", &tiling_sum, py::arg("phi"), py::arg("t_set"), py::arg("grid"),
          py::arg("trunc"), py::arg("level"), py::arg("tol"));
    m.def("tiling_profile", &tiling_profile, py::arg("phi"), py::arg("t_set"), py::arg("grid"),
          py::arg("trunc"));
    m.def("density_from_tiling", &density_from_tiling, py::arg("phi"), py::arg("level") = 1.0);
    m.def("lattice_decay_tail", &lattice_decay_tail, py::arg("c2"), py::arg("s"), py::arg("trunc"),
          py::arg("grid_range"));
    m.def(
        "ap_decomposition",
        [](const std::vector<double>& points, double support_diam, double tol) {
            return ap_decomposition(points, support_diam, tol);
        },
        py::arg("points"), py::arg("support_diam"), py::arg("tol") = 1e-9);

    m.def("verify_h_tiling", &verify_h_tiling, py::arg("h"), py::arg("freq_set"), py::arg("grid"),
          py::arg("s_trunc"), py::arg("tol") = 0.02);
    m.def("tile_from_h", &tile_from_h, py::arg("h"), py::arg("radius") = 100.0,
          py::arg("quad_tol") = 1e-9);

    py::class_<SupNormReport>(m, "SupNormReport")
        .def_readonly("sup_time", &SupNormReport::sup_time)
        .def_readonly("bound_time", &SupNormReport::bound_time)
        .def_readonly("slack_time", &SupNormReport::slack_time)
        .def_readonly("time_ok", &SupNormReport::time_ok)
        .def_readonly("sup_freq_grid", &SupNormReport::sup_freq_grid)
        .def_readonly("freq_lipschitz", &SupNormReport::freq_lipschitz)
        .def_readonly("sup_freq_upper", &SupNormReport::sup_freq_upper)
        .def_readonly("bound_freq", &SupNormReport::bound_freq)
        .def_readonly("slack_freq", &SupNormReport::slack_freq)
        .def_readonly("freq_ok", &SupNormReport::freq_ok)
        .def_readonly("grid_description", &SupNormReport::grid_description);
    m.def("sup_norm_check", &sup_norm_check, py::arg("g"), py::arg("density_time"),
          py::arg("density_freq"), py::arg("freq_grid"));

    py::class_<PairReport> pair(m, "PairReport");
    py::enum_<PairReport::Kind>(pair, "Kind")
        .value("tiling", PairReport::Kind::tiling)
        .value("spectral", PairReport::Kind::spectral);
    pair.def_readonly("kind", &PairReport::kind)
        .def_readonly("verdict", &PairReport::verdict)
        .def_readonly("max_violation", &PairReport::max_violation)
        .def_readonly("witness", &PairReport::witness)
        .def_readonly("density_ratio", &PairReport::density_ratio)
        .def_readonly("completeness_defect", &PairReport::completeness_defect)
        .def_readonly("trunc", &PairReport::trunc)
        .def_readonly("detail", &PairReport::detail);

    py::class_<SpectralOptions>(m, "SpectralOptions")
        .def(py::init<>())
        .def_readwrite("trunc", &SpectralOptions::trunc)
        .def_readwrite("ortho_tol", &SpectralOptions::ortho_tol)
        .def_readwrite("density_tol", &SpectralOptions::density_tol)
        .def_readwrite("completeness_tol", &SpectralOptions::completeness_tol)
        .def_readwrite("density_radius", &SpectralOptions::density_radius)
        .def_readwrite("max_doublings", &SpectralOptions::max_doublings);

    m.def("tiling_pair_check", &tiling_pair_check, py::arg("omega"), py::arg("t_set"),
          py::arg("grid"), py::arg("trunc"), py::arg("tol") = 1e-12);
    m.def("spectral_pair_check", &spectral_pair_check, py::arg("omega"), py::arg("lambda_set"),
          py::arg("opts") = SpectralOptions{});

    py::class_<LiuWangOptions>(m, "LiuWangOptions")
        .def(py::init<>())
        .def_readwrite("modulus_tol", &LiuWangOptions::modulus_tol)
        .def_readwrite("time_grid", &LiuWangOptions::time_grid)
        .def_readwrite("tiling_trunc", &LiuWangOptions::tiling_trunc)
        .def_readwrite("tiling_tol", &LiuWangOptions::tiling_tol)
        .def_readwrite("spectral", &LiuWangOptions::spectral);

    py::class_<LiuWangReport>(m, "LiuWangReport")
        .def_readonly("modulus_constant", &LiuWangReport::modulus_constant)
        .def_readonly("modulus_deviation", &LiuWangReport::modulus_deviation)
        .def_readonly("modulus_target", &LiuWangReport::modulus_target)
        .def_readonly("tiling", &LiuWangReport::tiling)
        .def_readonly("spectral", &LiuWangReport::spectral)
        .def_readonly("verdict", &LiuWangReport::verdict);
    m.def("liu_wang_conditions", &liu_wang_conditions, py::arg("g"), py::arg("t_set"),
          py::arg("s_set"), py::arg("opts") = LiuWangOptions{});

    py::class_<NonnegativeStructureOptions>(m, "NonnegativeStructureOptions")
        .def(py::init<>())
        .def_readwrite("value_tol", &NonnegativeStructureOptions::value_tol)
        .def_readwrite("trunc", &NonnegativeStructureOptions::trunc)
        .def_readwrite("level_tol", &NonnegativeStructureOptions::level_tol)
        .def_readwrite("product_tol", &NonnegativeStructureOptions::product_tol)
        .def_readwrite("density_radius", &NonnegativeStructureOptions::density_radius)
        .def_readwrite("detect_max_period", &NonnegativeStructureOptions::detect_max_period)
        .def_readwrite("spectral", &NonnegativeStructureOptions::spectral);

    py::class_<NonnegativeStructureReport>(m, "NonnegativeStructureReport")
        .def_readonly("translates_disjoint", &NonnegativeStructureReport::translates_disjoint)
        .def_readonly("overlap_witness", &NonnegativeStructureReport::overlap_witness)
        .def_readonly("density_time", &NonnegativeStructureReport::density_time)
        .def_readonly("density_exact", &NonnegativeStructureReport::density_exact)
        .def_readonly("level_deviation", &NonnegativeStructureReport::level_deviation)
        .def_readonly("level_ok", &NonnegativeStructureReport::level_ok)
        .def_readonly("density_product", &NonnegativeStructureReport::density_product)
        .def_readonly("product_ok", &NonnegativeStructureReport::product_ok)
        .def_readonly("spectral", &NonnegativeStructureReport::spectral)
        .def_readonly("verdict", &NonnegativeStructureReport::verdict);
    m.def("nonnegative_structure", &nonnegative_structure, py::arg("g"), py::arg("t_set"),
          py::arg("s_set"), py::arg("opts") = NonnegativeStructureOptions{});

    py::class_<ZeroSetReport>(m, "ZeroSetReport")
        .def_readonly("differences_checked", &ZeroSetReport::differences_checked)
        .def_readonly("max_abs_value", &ZeroSetReport::max_abs_value)
        .def_readonly("worst_difference", &ZeroSetReport::worst_difference)
        .def_readonly("tolerance", &ZeroSetReport::tolerance)
        .def_readonly("verdict", &ZeroSetReport::verdict);
    m.def("difference_zero_set_check", &difference_zero_set_check, py::arg("g"), py::arg("s_set"),
          py::arg("window"), py::arg("tol") = 1e-10);
}
