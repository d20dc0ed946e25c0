#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "wignerbell/axis.hpp"
#include "wignerbell/counting.hpp"
#include "wignerbell/entropy.hpp"
#include "wignerbell/errors.hpp"
#include "wignerbell/exhaustive.hpp"
#include "wignerbell/experiment.hpp"
#include "wignerbell/microstates.hpp"
#include "wignerbell/pair_types.hpp"
#include "wignerbell/quantum.hpp"
#include "wignerbell/version.hpp"

namespace py = pybind11;
using namespace wignerbell;

namespace {

py::object to_fraction(const Rational& r) {
    return py::module_::import("fractions").attr("Fraction")(r.numerator(), r.denominator());
}

Rational from_fraction(const py::handle& obj) {
    const auto num = obj.attr("numerator").cast<std::int64_t>();
    const auto den = obj.attr("denominator").cast<std::int64_t>();
    return Rational(num, den);
}

Particle to_particle(int particle) {
    if (particle != 1 && particle != 2) throw DomainError("particle must be 1 or 2");
    return static_cast<Particle>(particle);
}

void init_core(py::module_& m) {
    py::enum_<Sign>(m, "Sign")
        .value("PLUS", Sign::Plus)
        .value("MINUS", Sign::Minus)
        .def("__int__", [](Sign s) { return to_int(s); })
        .def("__neg__", [](Sign s) { return -s; });

    py::enum_<AxisLabel>(m, "AxisLabel")
        .value("A", AxisLabel::A)
        .value("B", AxisLabel::B)
        .value("C", AxisLabel::C);

    py::class_<Axis>(m, "Axis")
        .def(py::init<double, double, double>(), py::arg("x"), py::arg("y"), py::arg("z"))
        .def_static("normalized", &Axis::normalized)
        .def_static("from_spherical", &Axis::from_spherical, py::arg("polar"),
                    py::arg("azimuth") = 0.0)
        .def_property_readonly("components", &Axis::components)
        .def("__neg__", [](const Axis& a) { return -a; })
        .def("__eq__", [](const Axis& a, const Axis& b) { return a == b; })
        .def("__repr__", [](const Axis& a) {
            return "Axis(" + std::to_string(a.x()) + ", " + std::to_string(a.y()) + ", " +
                   std::to_string(a.z()) + ")";
        });

    py::class_<AxisTriple>(m, "AxisTriple")
        .def(py::init<Axis, Axis, Axis>(), py::arg("a"), py::arg("b"), py::arg("c"))
        .def_static("coplanar", &AxisTriple::coplanar, py::arg("theta"))
        .def_readonly("a", &AxisTriple::a)
        .def_readonly("b", &AxisTriple::b)
        .def_readonly("c", &AxisTriple::c);

    py::class_<PairType>(m, "PairType")
        .def_readonly("index", &PairType::index)
        .def_readonly("particle1", &PairType::particle1)
        .def_readonly("particle2", &PairType::particle2)
        .def("__repr__", [](const PairType& t) {
            return "PairType(" + std::to_string(t.index) + ", " + format_signs(t.particle1) +
                   " / " + format_signs(t.particle2) + ")";
        });

    m.def("pair_type_table", [] {
        const auto& table = pair_type_table();
        return std::vector<PairType>(table.begin(), table.end());
    });
    m.def("lhv_outcome", [](int alpha, int particle, AxisLabel label) {
        return lhv_outcome(alpha, to_particle(particle), label);
    }, py::arg("alpha"), py::arg("particle"), py::arg("label"));
    m.def("joint_lhv_outcome", &joint_lhv_outcome, py::arg("alpha"), py::arg("alice"),
          py::arg("bob"));
    m.def("angle_between", &angle_between);
}

void init_reports(py::module_& m) {
    py::class_<InequalityReport>(m, "InequalityReport")
        .def_readonly("lhs", &InequalityReport::lhs)
        .def_readonly("rhs", &InequalityReport::rhs)
        .def_readonly("slack", &InequalityReport::slack)
        .def_readonly("satisfied", &InequalityReport::satisfied)
        .def_property_readonly("violated", &InequalityReport::violated);

    py::class_<ExactInequalityReport>(m, "ExactInequalityReport")
        .def_property_readonly("lhs", [](const ExactInequalityReport& r) { return to_fraction(r.lhs); })
        .def_property_readonly("rhs", [](const ExactInequalityReport& r) { return to_fraction(r.rhs); })
        .def_property_readonly("slack", [](const ExactInequalityReport& r) { return to_fraction(r.slack); })
        .def_readonly("satisfied", &ExactInequalityReport::satisfied)
        .def("to_real", &ExactInequalityReport::to_real);
}

void init_quantum(py::module_& m) {
    py::class_<QuantumProbabilities>(m, "QuantumProbabilities")
        .def_static("singlet", &QuantumProbabilities::singlet)
        .def_readonly("pPP", &QuantumProbabilities::pPP)
        .def_readonly("pPM", &QuantumProbabilities::pPM)
        .def_readonly("pMP", &QuantumProbabilities::pMP)
        .def_readonly("pMM", &QuantumProbabilities::pMM);

    m.def("quantum_joint_probability", &quantum_joint_probability, py::arg("x"), py::arg("y"),
          py::arg("alice"), py::arg("bob"));
    m.def("correlation", &correlation);
    m.def("wigner_quantum", &wigner_quantum);
    m.def("coplanar_scan", [](int steps) {
        std::vector<std::pair<double, InequalityReport>> rows;
        for (const ScanPoint& p : coplanar_scan(steps)) rows.emplace_back(p.theta, p.report);
        return rows;
    }, py::arg("steps"));

    py::class_<CounterStream>(m, "CounterStream")
        .def(py::init<std::uint64_t, std::uint64_t>(), py::arg("key"), py::arg("position") = 0)
        .def_static("derive", &CounterStream::derive, py::arg("seed"), py::arg("repetition"),
                    py::arg("setting"))
        .def("next_u64", &CounterStream::next_u64)
        .def("uniform", &CounterStream::uniform)
        .def_property_readonly("position", &CounterStream::position);

    m.def("sample_joint", [](const Axis& x, const Axis& y, CounterStream& stream) {
        const JointOutcome o = sample_joint(x, y, stream);
        return std::make_pair(o.alice, o.bob);
    });
}

void init_counting(py::module_& m) {
    py::class_<Population>(m, "Population")
        .def(py::init<const std::array<Count, kPairTypeCount>&>(), py::arg("counts"))
        .def_property_readonly("counts", &Population::counts)
        .def("total", &Population::total)
        .def("__getitem__", &Population::count)
        .def("__eq__", [](const Population& a, const Population& b) { return a == b; })
        .def("__repr__", [](const Population& p) {
            std::string s = "Population([";
            for (int i = 0; i < kPairTypeCount; ++i) {
                s += (i ? ", " : "") + std::to_string(p.counts()[i]);
            }
            return s + "])";
        });

    m.def("multiplicity_inequality", &multiplicity_inequality);
    m.def("joint_probability",
          [](const Population& pop, AxisLabel alice, Sign sa, AxisLabel bob, Sign sb) {
              return to_fraction(joint_probability(pop, alice, sa, bob, sb));
          });
    m.def("wigner_inequality", py::overload_cast<const Population&>(&wigner_inequality));
    m.def("wigner_inequality_normalized", [](const py::sequence& probabilities) {
        if (py::len(probabilities) != kPairTypeCount) throw DomainError("expected 8 fractions");
        Distribution d;
        for (int i = 0; i < kPairTypeCount; ++i) d[i] = from_fraction(probabilities[i]);
        return wigner_inequality(d);
    });
    m.def("normalize", [](const Population& pop) {
        py::list out;
        for (const Rational& r : normalize(pop)) out.append(to_fraction(r));
        return out;
    });
    m.def("partition_function", &partition_function);

    py::class_<MacrostateEntropy>(m, "MacrostateEntropy")
        .def_readonly("alpha", &MacrostateEntropy::alpha)
        .def_readonly("value", &MacrostateEntropy::value)
        .def("scaled", &MacrostateEntropy::scaled, py::arg("boltzmann_constant"));
    m.def("boltzmann_entropy", &boltzmann_entropy, py::arg("pop"), py::arg("alpha"));
    m.def("gibbs_entropy", [](const std::vector<double>& p) { return gibbs_entropy(p); });
    m.def("entropy_inequality", &entropy_inequality);

    py::class_<AggregateState>(m, "AggregateState")
        .def(py::init<const Population&, std::vector<int>>(), py::arg("pop"), py::arg("members"))
        .def_property_readonly("members", &AggregateState::members)
        .def_property_readonly("total_entropy", &AggregateState::total_entropy);
    m.def("accessible", &accessible, py::arg("x"), py::arg("y"));

    m.def("microstate_count", &microstate_count, py::arg("m"), py::arg("macro"));

    m.def("check_exhaustive", [](const std::string& which, int max_sum) {
        const ExhaustiveCheckResult r = check_exhaustive(parse_inequality_kind(which), max_sum);
        py::dict d;
        d["kind"] = std::string(to_string(r.kind));
        d["max_sum"] = r.max_sum;
        d["checked"] = r.checked;
        d["violations"] = r.violations;
        d["max_slack_deviation"] = r.max_slack_deviation;
        return d;
    }, py::arg("which"), py::arg("max_sum"));
}

void init_experiment(py::module_& m) {
    py::enum_<SourceKind>(m, "SourceKind")
        .value("LHV", SourceKind::Lhv)
        .value("QUANTUM", SourceKind::Quantum);

    py::class_<SourceSpec>(m, "SourceSpec")
        .def_static("lhv", &SourceSpec::lhv, py::arg("weights"))
        .def_static("quantum", &SourceSpec::quantum)
        .def_property_readonly("kind", &SourceSpec::kind)
        .def_property_readonly("weights", &SourceSpec::weights);

    py::class_<ExperimentConfig>(m, "ExperimentConfig")
        .def(py::init([](const SourceSpec& source, const AxisTriple& axes, std::int64_t n,
                         std::int64_t repetitions, std::uint64_t seed) {
                 ExperimentConfig c{source, axes, n, repetitions, seed};
                 c.validate();
                 return c;
             }),
             py::arg("source"), py::arg("axes"), py::arg("pairs_per_setting"),
             py::arg("repetitions") = 1, py::arg("seed") = 0)
        .def_readonly("source", &ExperimentConfig::source)
        .def_readonly("axes", &ExperimentConfig::axes)
        .def_readonly("pairs_per_setting", &ExperimentConfig::pairs_per_setting)
        .def_readonly("repetitions", &ExperimentConfig::repetitions)
        .def_readonly("seed", &ExperimentConfig::seed);

    py::class_<Setting>(m, "Setting")
        .def(py::init<AxisLabel, Sign, AxisLabel, Sign>(), py::arg("alice"),
             py::arg("alice_sign"), py::arg("bob"), py::arg("bob_sign"))
        .def_readonly("alice", &Setting::alice)
        .def_readonly("alice_sign", &Setting::alice_sign)
        .def_readonly("bob", &Setting::bob)
        .def_readonly("bob_sign", &Setting::bob_sign);

    py::class_<SettingEstimate>(m, "SettingEstimate")
        .def_readonly("setting", &SettingEstimate::setting)
        .def_readonly("pairs", &SettingEstimate::pairs)
        .def_readonly("counts", &SettingEstimate::counts)
        .def_readonly("hits", &SettingEstimate::hits)
        .def_readonly("p_hat", &SettingEstimate::p_hat)
        .def_readonly("std_error", &SettingEstimate::std_error);

    py::class_<EstimateReport>(m, "EstimateReport")
        .def_readonly("repetition", &EstimateReport::repetition)
        .def_readonly("settings", &EstimateReport::settings)
        .def_readonly("empirical", &EstimateReport::empirical)
        .def_readonly("violated", &EstimateReport::violated)
        .def_readonly("slack_std_error", &EstimateReport::slack_std_error)
        .def_readonly("significant_violation", &EstimateReport::significant_violation);

    py::class_<ViolationPoint>(m, "ViolationPoint")
        .def_readonly("pairs", &ViolationPoint::pairs)
        .def_readonly("repetitions", &ViolationPoint::repetitions)
        .def_readonly("violations", &ViolationPoint::violations)
        .def_readonly("significant_violations", &ViolationPoint::significant_violations)
        .def_readonly("rate", &ViolationPoint::rate)
        .def_property_readonly("interval", [](const ViolationPoint& p) {
            return std::make_pair(p.interval.lo, p.interval.hi);
        });

    m.def("run_setting", &run_setting, py::arg("config"), py::arg("setting"),
          py::arg("repetition") = 0, py::call_guard<py::gil_scoped_release>());
    m.def("estimate_wigner", &estimate_wigner, py::arg("config"), py::arg("repetition") = 0,
          py::call_guard<py::gil_scoped_release>());
    m.def("violation_curve", [](const ExperimentConfig& config,
                                const std::vector<std::int64_t>& schedule, unsigned threads) {
        py::gil_scoped_release release;
        return violation_curve(config, schedule, threads).points;
    }, py::arg("config"), py::arg("schedule"), py::arg("threads") = 1);
    m.def("random_population", &random_population, py::arg("m"), py::arg("weights"),
          py::arg("stream"));
    m.def("wilson_interval", [](std::int64_t k, std::int64_t n, double z) {
        const ConfidenceInterval ci = wilson_interval(k, n, z);
        return std::make_pair(ci.lo, ci.hi);
    }, py::arg("successes"), py::arg("trials"), py::arg("z") = kWilsonZ95);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Wigner-form Bell inequality: population counting, entropy, and singlet sampling";
    m.attr("__version__") = std::string(kVersion);

    auto& domain_error = py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
    py::register_exception<EmptyPopulationError>(m, "EmptyPopulationError", domain_error.ptr());
    py::register_exception<UndefinedEntropyError>(m, "UndefinedEntropyError", domain_error.ptr());
    py::register_exception<ConfigError>(m, "ConfigError", PyExc_ValueError);

    init_core(m);
    init_reports(m);
    init_quantum(m);
    init_counting(m);
    init_experiment(m);
}
