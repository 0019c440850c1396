#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "paley/cayley_graph.hpp"
#include "paley/clique_solver.hpp"
#include "paley/errors.hpp"
#include "paley/fourier_probe.hpp"
#include "paley/harness.hpp"
#include "paley/independence_lab.hpp"
#include "paley/number_theory.hpp"
#include "paley/rng.hpp"
#include "paley/second_moment.hpp"
#include "paley/sign_models.hpp"

namespace py = pybind11;

namespace {

std::vector<int> values_as_ints(const paley::SignFunction& f) {
  return std::vector<int>(f.values.begin(), f.values.end());
}

}  // namespace

PYBIND11_MODULE(_paley, m) {
  m.doc() = "Random sign models on Z/NZ, sum graphs, and clique experiments";

  py::register_exception<paley::CapacityError>(m, "CapacityError",
                                               PyExc_RuntimeError);

  // number theory
  m.def("is_prime", &paley::nt::is_prime, py::arg("n"));
  m.def(
      "sieve_primes",
      [](std::uint64_t limit) { return paley::nt::sieve_primes(limit).primes; },
      py::arg("limit"));
  m.def("legendre_symbol", &paley::nt::legendre_symbol, py::arg("a"),
        py::arg("p"));
  m.def("jacobi_symbol", &paley::nt::jacobi_symbol, py::arg("a"), py::arg("n"));
  m.def("least_qnr", &paley::nt::least_qnr, py::arg("p"));

  // rng
  m.def("derive_subseed", &paley::derive_subseed, py::arg("master_seed"),
        py::arg("n"), py::arg("trial_index"));

  py::enum_<paley::Model>(m, "Model")
      .value("multiplicative", paley::Model::multiplicative)
      .value("iid", paley::Model::iid)
      .value("character", paley::Model::character);

  py::class_<paley::SignFunction>(m, "SignFunction")
      .def_readonly("n", &paley::SignFunction::n)
      .def_readonly("q", &paley::SignFunction::q)
      .def_readonly("model", &paley::SignFunction::model)
      .def_readonly("seed", &paley::SignFunction::seed)
      .def_property_readonly("values", &values_as_ints)
      .def("at", &paley::SignFunction::at, py::arg("x"))
      .def("to_json",
           [](const paley::SignFunction& f) { return paley::to_json(f).dump(); });

  m.def("sample_multiplicative", &paley::sample_multiplicative, py::arg("n"),
        py::arg("q"), py::arg("seed"));
  m.def(
      "sample_multiplicative_conditioned",
      [](std::uint64_t n, std::uint64_t q, std::uint64_t seed,
         const std::map<std::uint64_t, int>& forced) {
        paley::Conditioning cond;
        cond.forced = forced;
        return paley::sample_multiplicative_conditioned(n, q, seed, cond);
      },
      py::arg("n"), py::arg("q"), py::arg("seed"), py::arg("forced"));
  m.def("sample_iid", &paley::sample_iid, py::arg("n"), py::arg("seed"));
  m.def("character_function", &paley::character_function, py::arg("n"));
  m.def("verify_multiplicativity", &paley::verify_multiplicativity,
        py::arg("f"));
  m.def("default_q", &paley::default_q, py::arg("n"), py::arg("c") = 0.25);
  m.def("sign_function_from_json", [](const std::string& text) {
    return paley::sign_function_from_json(nlohmann::json::parse(text));
  });

  py::class_<paley::SumGraph>(m, "SumGraph")
      .def_readonly("n", &paley::SumGraph::n)
      .def("adjacent", &paley::SumGraph::adjacent, py::arg("u"), py::arg("v"))
      .def("degree", &paley::SumGraph::degree, py::arg("v"))
      .def("edge_count", &paley::SumGraph::edge_count)
      .def("edge_list", [](const paley::SumGraph& g) {
        std::ostringstream os;
        paley::write_edge_list(os, g);
        return os.str();
      });

  m.def("build_graph", &paley::build_graph, py::arg("f"));
  m.def(
      "restricted_sumset",
      [](const std::vector<std::uint64_t>& a, std::uint64_t n) {
        return paley::restricted_sumset(a, n);
      },
      py::arg("a"), py::arg("n"));
  m.def(
      "is_clique",
      [](const paley::SumGraph& g, const std::vector<std::uint64_t>& a) {
        return paley::is_clique(g, a);
      },
      py::arg("g"), py::arg("vertices"));

  py::class_<paley::SearchBudget>(m, "SearchBudget")
      .def(py::init([](std::uint64_t max_nodes, double time_limit_ms) {
             return paley::SearchBudget{max_nodes, time_limit_ms};
           }),
           py::arg("max_nodes") = 0, py::arg("time_limit_ms") = 0.0)
      .def_readwrite("max_nodes", &paley::SearchBudget::max_nodes)
      .def_readwrite("time_limit_ms", &paley::SearchBudget::time_limit_ms);

  py::class_<paley::CliqueResult>(m, "CliqueResult")
      .def_readonly("size", &paley::CliqueResult::size)
      .def_readonly("witness", &paley::CliqueResult::witness)
      .def_readonly("optimal", &paley::CliqueResult::optimal)
      .def_readonly("nodes_expanded", &paley::CliqueResult::nodes_expanded)
      .def_readonly("elapsed_ms", &paley::CliqueResult::elapsed_ms);

  m.def("max_clique_exact", &paley::max_clique_exact, py::arg("g"),
        py::arg("budget") = paley::SearchBudget{});
  m.def("brute_force_max_clique", &paley::brute_force_max_clique, py::arg("g"));
  m.def("max_clique_greedy", &paley::max_clique_greedy, py::arg("g"),
        py::arg("restarts"), py::arg("seed"));
  m.def("coloring_upper_bound", &paley::coloring_upper_bound, py::arg("g"));

  py::class_<paley::WindowedSignal>(m, "WindowedSignal")
      .def_readonly("q", &paley::WindowedSignal::q)
      .def("at", &paley::WindowedSignal::at, py::arg("n"))
      .def("nonzero_count", &paley::WindowedSignal::nonzero_count);

  py::class_<paley::FourierScan>(m, "FourierScan")
      .def_readonly("q", &paley::FourierScan::q)
      .def_readonly("level", &paley::FourierScan::level)
      .def_readonly("grid_step", &paley::FourierScan::grid_step)
      .def_readonly("grid_max", &paley::FourierScan::grid_max)
      .def_readonly("argmax_theta", &paley::FourierScan::argmax_theta)
      .def_readonly("certified_sup_bound",
                    &paley::FourierScan::certified_sup_bound);

  m.def("window_g", &paley::window_g, py::arg("f"));
  m.def("fourier_coefficient", &paley::fourier_coefficient, py::arg("g"),
        py::arg("theta"));
  m.def("sup_fourier", &paley::sup_fourier, py::arg("g"), py::arg("level"),
        py::arg("grid_constant") = 80.0);
  m.def(
      "witness_lower_bound",
      [](const paley::WindowedSignal& g, const std::vector<std::int64_t>& c,
         const std::vector<std::int64_t>& d) {
        return paley::witness_lower_bound(g, c, d);
      },
      py::arg("g"), py::arg("c"), py::arg("d"));

  py::class_<paley::indep::CountTable>(m, "CountTable")
      .def_readonly("x", &paley::indep::CountTable::x)
      .def_readonly("y", &paley::indep::CountTable::y)
      .def_readonly("pattern_bits", &paley::indep::CountTable::pattern_bits)
      .def_readonly("counts", &paley::indep::CountTable::counts)
      .def_readonly("total", &paley::indep::CountTable::total);

  m.def("count_patterns", &paley::indep::count_patterns, py::arg("x"),
        py::arg("y"));
  m.def("variance_direct", &paley::indep::variance_direct, py::arg("table"));
  m.def(
      "variance_parseval",
      [](std::uint64_t x, std::uint64_t y) {
        return paley::indep::variance_parseval(
            paley::indep::divisor_spectrum(x, y));
      },
      py::arg("x"), py::arg("y"));
  m.def("baseline_variance", &paley::indep::baseline_variance, py::arg("x"),
        py::arg("y"));
  m.def("montgomery_search", &paley::indep::montgomery_search, py::arg("x"),
        py::arg("y"));

  py::class_<paley::UFamily>(m, "UFamily")
      .def_readonly("n", &paley::UFamily::n)
      .def_readonly("k", &paley::UFamily::k)
      .def_readonly("interval_lo", &paley::UFamily::interval_lo)
      .def_readonly("interval_hi", &paley::UFamily::interval_hi)
      .def_readonly("members", &paley::UFamily::members)
      .def_readonly("count", &paley::UFamily::count);

  m.def("enumerate_U", &paley::enumerate_U, py::arg("n"), py::arg("k"),
        py::arg("candidate_cap") = 10'000'000);
  m.def("count_R", &paley::count_R, py::arg("f"), py::arg("u"));
  m.def("expected_R", &paley::expected_R, py::arg("u"));

  py::class_<paley::ExperimentConfig>(m, "ExperimentConfig")
      .def(py::init<>())
      .def_readwrite("primes", &paley::ExperimentConfig::primes)
      .def_readwrite("models", &paley::ExperimentConfig::models)
      .def_readwrite("c", &paley::ExperimentConfig::c)
      .def_readwrite("q_override", &paley::ExperimentConfig::q_override)
      .def_readwrite("trials", &paley::ExperimentConfig::trials)
      .def_readwrite("master_seed", &paley::ExperimentConfig::master_seed)
      .def_readwrite("epsilon", &paley::ExperimentConfig::epsilon)
      .def_readwrite("solver_budget", &paley::ExperimentConfig::solver_budget)
      .def_readwrite("output_path", &paley::ExperimentConfig::output_path);

  py::class_<paley::ExperimentRecord>(m, "ExperimentRecord")
      .def_readonly("n", &paley::ExperimentRecord::n)
      .def_readonly("q", &paley::ExperimentRecord::q)
      .def_readonly("model", &paley::ExperimentRecord::model)
      .def_readonly("trial_index", &paley::ExperimentRecord::trial_index)
      .def_readonly("seed", &paley::ExperimentRecord::seed)
      .def_readonly("omega", &paley::ExperimentRecord::omega)
      .def_readonly("optimal", &paley::ExperimentRecord::optimal)
      .def_readonly("all_small_primes_positive",
                    &paley::ExperimentRecord::all_small_primes_positive)
      .def_readonly("elapsed_ms", &paley::ExperimentRecord::elapsed_ms);

  m.def("run_concentration", &paley::run_concentration, py::arg("cfg"));
  m.def("run_character_baseline", &paley::run_character_baseline,
        py::arg("cfg"));
  m.def(
      "records_jsonl",
      [](const std::vector<paley::ExperimentRecord>& records) {
        std::ostringstream os;
        paley::write_records_jsonl(os, records);
        return os.str();
      },
      py::arg("records"));
}
