// Python surface.  Model specs and innovation families travel as JSON
// strings in the same grammar the CLI reads, so one schema serves every
// entry point.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cstdint>
#include <string>
#include <vector>

#include "cyclekit/amplitude_analytics.hpp"
#include "cyclekit/classic_cycles.hpp"
#include "cyclekit/linear_filters.hpp"
#include "cyclekit/modulated_cycle.hpp"
#include "cyclekit/process_spec.hpp"
#include "cyclekit/spectral.hpp"
#include "cyclekit/stationarity_lab.hpp"

namespace py = pybind11;

namespace {

using namespace cyclekit;

ProcessSpec spec_from_json(const std::string& text) {
    ProcessSpec spec = parse_process_spec_json(text);
    validate(spec);
    return spec;
}

ModulatedCycleSpec modulated_from_json(const std::string& text) {
    ProcessSpec spec = spec_from_json(text);
    if (auto* m = std::get_if<ModulatedCycleSpec>(&spec)) return *m;
    throw std::invalid_argument("expected a modulated_cycle spec, got '" +
                                model_tag(spec) + "'");
}

SeriesPath path_from_values(const std::vector<double>& values) {
    SeriesPath path;
    path.values = values;
    return path;
}

}  // namespace

PYBIND11_MODULE(_cyclekit, m) {
    m.doc() = "simulation and verification for zero-mean stationary cyclical series";

    // Model specs (JSON in, JSON or numbers out).
    m.def(
        "normalize_spec",
        [](const std::string& text, int indent) {
            return process_spec_to_json(spec_from_json(text), indent);
        },
        py::arg("spec_json"), py::arg("indent") = 2,
        "Parse, validate, and re-serialize a model spec document.");
    m.def(
        "model_tag",
        [](const std::string& text) { return model_tag(spec_from_json(text)); },
        py::arg("spec_json"), "Model discriminator of a spec document.");
    m.def(
        "simulate",
        [](const std::string& text, std::uint64_t seed, int n, std::int64_t start) {
            return simulate(spec_from_json(text), seed, n, start).values;
        },
        py::arg("spec_json"), py::arg("seed"), py::arg("n"), py::arg("start") = 0,
        "Draw one path of the process described by the spec document.");
    m.def(
        "theoretical_acf",
        [](const std::string& text, int tau) {
            return theoretical_acf(spec_from_json(text), tau);
        },
        py::arg("spec_json"), py::arg("tau"),
        "Closed-form autocovariance at the given lag.");

    // Amplitude analytics (innovation-family JSON).
    m.def(
        "icv",
        [](const std::string& family) { return icv(parse_family_json(family)); },
        py::arg("family_json"),
        "Inverse coefficient of variation of the amplitude law.");
    m.def(
        "icv_numeric",
        [](const std::string& family) { return icv_numeric(parse_family_json(family)); },
        py::arg("family_json"), "Quadrature route to the same quantity.");
    m.def(
        "amplitude_pdf",
        [](const std::string& family, double x) {
            return amplitude_pdf(parse_family_json(family), x);
        },
        py::arg("family_json"), py::arg("x"), "Amplitude density at a point.");
    m.def(
        "sample_amplitudes",
        [](const std::string& family, std::size_t n, std::uint64_t seed) {
            return sample_amplitudes(parse_family_json(family), n, seed);
        },
        py::arg("family_json"), py::arg("n"), py::arg("seed"),
        "Draw amplitudes from an innovation family.");
    m.def(
        "empirical_icv",
        [](const std::vector<double>& amplitudes) {
            const EmpiricalIcv est = empirical_icv(amplitudes);
            py::dict out;
            out["value"] = est.value;
            out["std_error"] = est.std_error;
            out["n"] = est.n;
            return out;
        },
        py::arg("amplitudes"),
        "Sample inverse coefficient of variation with a delta-method error.");

    // Linear-filter utilities.
    m.def(
        "arma_acf",
        [](const std::vector<double>& ar, const std::vector<double>& ma, double sigma,
           int tau) { return arma_acf(ArmaSpec{ar, ma, sigma}, tau); },
        py::arg("ar"), py::arg("ma"), py::arg("sigma"), py::arg("tau"),
        "Stationary ARMA autocovariance.");
    m.def(
        "psi_weights",
        [](const std::vector<double>& ar, const std::vector<double>& ma, double sigma,
           int n_max) { return psi_weights(ArmaSpec{ar, ma, sigma}, n_max).weights; },
        py::arg("ar"), py::arg("ma"), py::arg("sigma"), py::arg("n_max"),
        "Moving-average representation weights psi_0..psi_n.");

    // Sample-path statistics.
    m.def(
        "empirical_acf",
        [](const std::vector<double>& values, int max_lag) {
            return empirical_acf(path_from_values(values), max_lag);
        },
        py::arg("values"), py::arg("max_lag"),
        "Mean-removed sample autocovariance, lags 0..max_lag.");
    m.def(
        "periodogram",
        [](const std::vector<double>& values, const std::vector<double>& omegas) {
            return periodogram(path_from_values(values), omegas).value;
        },
        py::arg("values"), py::arg("omegas"), "Periodogram on a frequency grid.");

    // Modulated-cycle product moments.
    m.def(
        "stationary_moment",
        [](const std::string& text, const std::vector<int>& lags) {
            return stationary_moment(modulated_from_json(text), LagPattern(lags));
        },
        py::arg("spec_json"), py::arg("lags"),
        "Closed-form product moment for an integrated-phase modulated cycle.");
    m.def(
        "apc_moment",
        [](const std::string& text, const std::vector<int>& lags, std::int64_t t) {
            return apc_moment(modulated_from_json(text), LagPattern(lags), t);
        },
        py::arg("spec_json"), py::arg("lags"), py::arg("t"),
        "Almost-periodic product moment at base time t.");
    m.def(
        "mc_product_moment",
        [](const std::string& text, const std::vector<int>& lags, std::int64_t t,
           std::uint64_t replications, std::uint64_t seed, int threads) {
            const MomentEstimate est = mc_product_moment(
                modulated_from_json(text), LagPattern(lags), t, replications, seed,
                threads);
            py::dict out;
            out["mean"] = est.mean;
            out["std_error"] = est.std_error;
            return out;
        },
        py::arg("spec_json"), py::arg("lags"), py::arg("t"), py::arg("replications"),
        py::arg("seed"), py::arg("threads") = 1,
        "Monte Carlo product moment; deterministic for a fixed seed.");
    m.def(
        "even_moment_and_kurtosis",
        [](const std::string& text) {
            const EvenMoments even = even_moment_and_kurtosis(modulated_from_json(text));
            py::dict out;
            out["second"] = even.second;
            out["fourth"] = even.fourth;
            out["kurtosis"] = even.kurtosis;
            return out;
        },
        py::arg("spec_json"),
        "Marginal even moments of an integrated-phase modulated cycle.");
}
