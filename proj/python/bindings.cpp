#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qtoda/bethe.hpp"
#include "qtoda/hamiltonian.hpp"
#include "qtoda/q1_limit.hpp"
#include "qtoda/report.hpp"
#include "qtoda/spectrum.hpp"
#include "qtoda/verify.hpp"

namespace py = pybind11;
using namespace qtoda;

namespace {

py::array_t<double> to_array(const std::vector<double>& v) {
  py::array_t<double> out(static_cast<py::ssize_t>(v.size()));
  std::copy(v.begin(), v.end(), out.mutable_data());
  return out;
}

py::array_t<double> to_matrix(const std::vector<double>& v, std::size_t dim) {
  py::array_t<double> out({static_cast<py::ssize_t>(dim), static_cast<py::ssize_t>(dim)});
  std::copy(v.begin(), v.end(), out.mutable_data());
  return out;
}

Partition make_partition(const std::vector<int>& parts, int n, int m) {
  return Partition(parts, LatticeConfig{n, m});
}

}  // namespace

PYBIND11_MODULE(_qtoda, mod) {
  mod.doc() = "Bethe Ansatz solver for the open q-deformed Toda chain on a finite lattice";

  py::class_<ModelParams>(mod, "ModelParams")
      .def(py::init<double, double, double, double, double>(), py::arg("q") = 0.0,
           py::arg("p_plus") = 0.0, py::arg("q_plus") = 0.0, py::arg("p_minus") = 0.0,
           py::arg("q_minus") = 0.0)
      .def_readonly("q", &ModelParams::q)
      .def_readonly("p_plus", &ModelParams::p_plus)
      .def_readonly("q_plus", &ModelParams::q_plus)
      .def_readonly("p_minus", &ModelParams::p_minus)
      .def_readonly("q_minus", &ModelParams::q_minus)
      .def_property_readonly("alpha_plus", &ModelParams::alpha_plus)
      .def_property_readonly("beta_plus", &ModelParams::beta_plus)
      .def_property_readonly("alpha_minus", &ModelParams::alpha_minus)
      .def_property_readonly("beta_minus", &ModelParams::beta_minus)
      .def("__repr__", [](const ModelParams& p) {
        return "ModelParams(q=" + format_double(p.q) + ", p_plus=" + format_double(p.p_plus) +
               ", q_plus=" + format_double(p.q_plus) + ", p_minus=" + format_double(p.p_minus) +
               ", q_minus=" + format_double(p.q_minus) + ")";
      });

  py::class_<BetheSolution>(mod, "BetheSolution")
      .def_property_readonly("kappa",
                             [](const BetheSolution& s) { return s.kappa.parts(); })
      .def_property_readonly("xi", [](const BetheSolution& s) { return to_array(s.xi.xi); })
      .def_readonly("grad_norm", &BetheSolution::grad_norm)
      .def_readonly("hessian_min_eig", &BetheSolution::hessian_min_eig)
      .def_readonly("energy", &BetheSolution::energy)
      .def_readonly("bae_residual", &BetheSolution::bae_residual)
      .def_readonly("iterations", &BetheSolution::iterations);

  mod.def("lattice_dimension",
          [](int n, int m) { return lattice_dimension(LatticeConfig{n, m}); }, py::arg("n"),
          py::arg("m"));

  mod.def(
      "enumerate_partitions",
      [](int n, int m) {
        std::vector<std::vector<int>> out;
        for (const auto& p : enumerate_partitions(LatticeConfig{n, m})) out.push_back(p.parts());
        return out;
      },
      py::arg("n"), py::arg("m"), "all of Lambda^(n,m) in ascending lexicographic order");

  mod.def(
      "conjugate",
      [](const std::vector<int>& parts, int n, int m) {
        return conjugate(make_partition(parts, n, m)).parts();
      },
      py::arg("parts"), py::arg("n"), py::arg("m"));

  mod.def("q_pochhammer", &q_pochhammer, py::arg("a"), py::arg("q"), py::arg("l"));

  mod.def(
      "toda_weight",
      [](const std::vector<int>& parts, int n, int m, const ModelParams& params) {
        return toda_weight(make_partition(parts, n, m), params);
      },
      py::arg("parts"), py::arg("n"), py::arg("m"), py::arg("params"));

  mod.def(
      "weights",
      [](int n, int m, const ModelParams& params, const std::string& kind) {
        WeightKind k = WeightKind::toda;
        if (kind == "conjugate") k = WeightKind::conjugate;
        else if (kind == "multinomial") k = WeightKind::multinomial;
        else if (kind != "toda") throw std::invalid_argument("kind must be toda|conjugate|multinomial");
        return to_array(make_weight_table(k, LatticeConfig{n, m}, params).values);
      },
      py::arg("n"), py::arg("m"), py::arg("params"), py::arg("kind") = "toda");

  mod.def(
      "build_toda",
      [](int n, int m, const ModelParams& params) {
        const auto op = build_toda(LatticeConfig{n, m}, params);
        return to_matrix(op.matrix, op.dim());
      },
      py::arg("n"), py::arg("m"), py::arg("params"));

  mod.def(
      "build_toda_q1",
      [](int n, int m, const ModelParams& params) {
        const auto op = build_toda_q1(LatticeConfig{n, m}, params);
        return to_matrix(op.matrix, op.dim());
      },
      py::arg("n"), py::arg("m"), py::arg("params"));

  mod.def(
      "hl_polynomial",
      [](const std::vector<int>& lam, const std::vector<double>& xi, int n,
         const ModelParams& params) {
        const int m = static_cast<int>(xi.size());
        return hl_polynomial(make_partition(lam, m, n), SpectralPoint{xi}, params);
      },
      py::arg("lam"), py::arg("xi"), py::arg("n"), py::arg("params"),
      "R_lam(xi) for lam in Lambda^(m,n), m = len(xi)");

  mod.def(
      "wave_function",
      [](const std::vector<double>& xi, int n, int m, const ModelParams& params) {
        return to_array(wave_function(SpectralPoint{xi}, LatticeConfig{n, m}, params).values);
      },
      py::arg("xi"), py::arg("n"), py::arg("m"), py::arg("params"));

  mod.def("poincare_value", &poincare_value, py::arg("m"), py::arg("params"));

  mod.def(
      "solve_bethe",
      [](int n, int m, const ModelParams& params, const std::vector<int>& kappa, double tol) {
        return solve_bethe(
            MorseProblem(LatticeConfig{n, m}, params, make_partition(kappa, m, n)), tol);
      },
      py::arg("n"), py::arg("m"), py::arg("params"), py::arg("kappa"), py::arg("tol") = 1e-12);

  mod.def(
      "bethe_energies",
      [](int n, int m, const ModelParams& params, double tol) {
        const auto es = build_eigensystem(LatticeConfig{n, m}, params, tol);
        std::vector<double> energies;
        for (const auto& s : es.solutions) energies.push_back(s.energy);
        std::sort(energies.begin(), energies.end());
        return to_array(energies);
      },
      py::arg("n"), py::arg("m"), py::arg("params"), py::arg("tol") = 1e-12,
      "sorted spectrum from the Bethe Ansatz route");

  mod.def(
      "oracle_spectrum",
      [](int n, int m, const ModelParams& params, bool q1) {
        const LatticeConfig cfg{n, m};
        const auto op = q1 ? build_toda_q1(cfg, params) : build_toda(cfg, params);
        return to_array(oracle_spectrum(op));
      },
      py::arg("n"), py::arg("m"), py::arg("params"), py::arg("q1") = false,
      "sorted spectrum from the dense Jacobi eigensolver");

  mod.def(
      "gradient_flow",
      [](int n, int m, const ModelParams& params, const std::vector<int>& kappa,
         const std::vector<double>& xi0, double t_end, int samples) {
        const MorseProblem prob(LatticeConfig{n, m}, params, make_partition(kappa, m, n));
        const auto traj = gradient_flow(prob, SpectralPoint{xi0}, t_end, samples);
        py::array_t<double> out(
            {static_cast<py::ssize_t>(traj.size()), static_cast<py::ssize_t>(m + 2)});
        auto* data = out.mutable_data();
        for (std::size_t r = 0; r < traj.size(); ++r) {
          data[r * (m + 2)] = traj[r].t;
          for (int j = 0; j < m; ++j) data[r * (m + 2) + 1 + j] = traj[r].xi.xi[j];
          data[r * (m + 2) + m + 1] = traj[r].grad_norm;
        }
        return out;
      },
      py::arg("n"), py::arg("m"), py::arg("params"), py::arg("kappa"), py::arg("xi0"),
      py::arg("t_end"), py::arg("samples") = 100,
      "rows (t, xi_1..xi_m, grad_norm) of the descent trajectory");

  mod.def(
      "aw_roots",
      [](int n, const ModelParams& params) { return to_array(aw_roots(n, params).thetas); },
      py::arg("n"), py::arg("params"));

  mod.def(
      "verification_json",
      [](int n, int m, const ModelParams& params, double tol) {
        return verification_to_json(run_verification(LatticeConfig{n, m}, params, tol));
      },
      py::arg("n"), py::arg("m"), py::arg("params"), py::arg("tol") = 1e-12);

  mod.def(
      "verify",
      [](int n, int m, const ModelParams& params, double tol) {
        return run_verification(LatticeConfig{n, m}, params, tol).passed;
      },
      py::arg("n"), py::arg("m"), py::arg("params"), py::arg("tol") = 1e-12);

  mod.def(
      "q1_verification_json",
      [](int n, int m, const ModelParams& params, double tol) {
        return q1_report_to_json(verify_q1_eigensystem(LatticeConfig{n, m}, params, tol));
      },
      py::arg("n"), py::arg("m"), py::arg("params"), py::arg("tol") = 1e-9);
}
