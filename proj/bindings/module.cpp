#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "croac/adaptive.hpp"
#include "croac/harness.hpp"

namespace py = pybind11;
using namespace croac;

PYBIND11_MODULE(_core, m) {
    m.doc() = "Chemical reaction optimization core";

    py::enum_<Variant>(m, "Variant")
        .value("CRO_AC", Variant::CroAc)
        .value("CRO_AC_0_2", Variant::CroAc02)
        .value("CRO_AC_1STEP", Variant::CroAc1Step)
        .value("CRO_BP", Variant::CroBp)
        .value("CRO_HP", Variant::CroHp)
        .value("CRO_BB", Variant::CroBb);

    py::enum_<BoundaryScheme>(m, "BoundaryScheme")
        .value("REFLECT", BoundaryScheme::Reflect)
        .value("CLIP", BoundaryScheme::Clip)
        .value("RESAMPLE", BoundaryScheme::Resample);

    py::class_<AlgorithmConfig>(m, "AlgorithmConfig")
        .def(py::init<>())
        .def_readwrite("variant", &AlgorithmConfig::variant)
        .def_readwrite("pop_size", &AlgorithmConfig::pop_size)
        .def_readwrite("step_size", &AlgorithmConfig::step_size)
        .def_readwrite("init_buffer", &AlgorithmConfig::init_buffer)
        .def_readwrite("init_ke", &AlgorithmConfig::init_ke)
        .def_readwrite("coll_rate_init", &AlgorithmConfig::coll_rate_init)
        .def_readwrite("ke_loss_rate", &AlgorithmConfig::ke_loss_rate)
        .def_readwrite("dec_threshold", &AlgorithmConfig::dec_threshold)
        .def_readwrite("syn_threshold", &AlgorithmConfig::syn_threshold)
        .def_readwrite("max_fe", &AlgorithmConfig::max_fe)
        .def_readwrite("boundary", &AlgorithmConfig::boundary)
        .def_readwrite("dec_perturbations", &AlgorithmConfig::dec_perturbations)
        .def_readwrite("seed", &AlgorithmConfig::seed)
        .def("validate", &AlgorithmConfig::validate);

    py::class_<BenchmarkSpec>(m, "BenchmarkSpec")
        .def_readonly("id", &BenchmarkSpec::id)
        .def_readonly("dim", &BenchmarkSpec::dim)
        .def_readonly("lower", &BenchmarkSpec::lower)
        .def_readonly("upper", &BenchmarkSpec::upper)
        .def_readonly("scale", &BenchmarkSpec::scale)
        .def_readonly("shift", &BenchmarkSpec::shift)
        .def_readonly("griewank_sqrt_divisor", &BenchmarkSpec::griewank_sqrt_divisor)
        .def("__repr__", [](const BenchmarkSpec& s) {
            return "<BenchmarkSpec " + function_name(s.id) + " dim=" +
                   std::to_string(s.dim) + ">";
        });

    py::class_<RunRecord>(m, "RunRecord")
        .def_readonly("best_value", &RunRecord::best_value)
        .def_readonly("best_value_raw", &RunRecord::best_value_raw)
        .def_readonly("best_structure", &RunRecord::best_structure)
        .def_readonly("fe_used", &RunRecord::fe_used)
        .def_readonly("best_trajectory", &RunRecord::best_trajectory)
        .def_readonly("coll_rate_trace", &RunRecord::coll_rate_trace)
        .def_readonly("seed", &RunRecord::seed)
        .def_readonly("wall_time", &RunRecord::wall_time);

    py::class_<SampleSummary>(m, "SampleSummary")
        .def_readonly("n", &SampleSummary::n)
        .def_readonly("mean", &SampleSummary::mean)
        .def_readonly("std_dev", &SampleSummary::std_dev)
        .def_readonly("values", &SampleSummary::values);

    m.def("generate_spec", &generate_spec, py::arg("id"), py::arg("dim") = 30,
          py::arg("seed") = 0);
    m.def("load_spec", &load_spec, py::arg("path"));
    m.def("save_spec", &save_spec, py::arg("spec"), py::arg("path"));
    m.def("evaluate", &evaluate, py::arg("x"), py::arg("spec"));
    m.def("transform", &transform, py::arg("x"), py::arg("spec"));
    m.def("optimum_point", &optimum_point, py::arg("spec"));
    m.def("penalty_u", &penalty_u, py::arg("x"), py::arg("a"), py::arg("k"),
          py::arg("m"));

    m.def(
        "run",
        [](const AlgorithmConfig& cfg, const BenchmarkSpec& spec) {
            return run(cfg, spec);
        },
        py::arg("config"), py::arg("spec"),
        py::call_guard<py::gil_scoped_release>());

    m.def("coll_rate", &adaptive::coll_rate, py::arg("counter"), py::arg("max_fe"));

    m.def("summarize", &summarize, py::arg("values"));
    m.def("t_statistic", &t_statistic, py::arg("a"), py::arg("b"));
    m.def("significant_95", &significant_95, py::arg("t"), py::arg("n_a"),
          py::arg("n_b"));

    m.def("derive_run_seed", &derive_run_seed, py::arg("master_seed"),
          py::arg("function_id"), py::arg("algorithm_id"), py::arg("run_index"));

    m.attr("ZERO_THRESHOLD") = kZeroThreshold;
}
