#include "nsghz/nonsym_ghz.hpp"

#include <cmath>

namespace nsghz {

StateVector ghz_qubit(int n, double alpha) {
  if (n < 1) throw std::invalid_argument("need at least one site");
  StateVector psi(2, n);
  psi.amp(0) = Cx{std::cos(alpha * kPi / 2.0), 0.0};
  psi.amp(psi.size() - 1) = Cx{std::sin(alpha * kPi / 2.0), 0.0};
  return psi;
}

StateVector ghz_qubit_via_circuit(int n, double alpha) {
  if (n < 1) throw std::invalid_argument("need at least one site");
  StateVector psi(2, n);
  // Site-1 preparation X * X^alpha with the shifted-power convention
  // (x_alpha_qubit(alpha + 1)); the net site-1 operator is x_alpha_qubit(alpha).
  apply_local_inplace(psi, x_alpha_qubit(alpha + 1.0), 1);
  apply_local_inplace(psi, pauli_x(2), 1);
  for (int target = 2; target <= n; ++target) {
    apply_controlled_u_inplace(psi, ControlledGateSpec{{1}, target, pauli_x(2)});
  }
  kernels::scale(psi.data(), psi.size(), std::polar(1.0, kPi * alpha / 2.0),
                 kernels::run_parallel(psi.size()));
  return psi;
}

StateVector ghz_qudit(int n, int d, double alpha) {
  if (n < 1) throw std::invalid_argument("need at least one site");
  StateVector psi(d, n);
  apply_local_inplace(psi, x_alpha_qudit(d, alpha), 1);
  for (int target = 2; target <= n; ++target) {
    apply_controlled_u_inplace(psi, ControlledGateSpec{{1}, target, pauli_x(d)});
  }
  return psi;
}

StateVector ghz_general(int n, int d, std::vector<Cx> a) {
  if (n < 1) throw std::invalid_argument("need at least one site");
  if (static_cast<int>(a.size()) != d) {
    throw std::invalid_argument("amplitude vector must have d entries");
  }
  double nrm2 = 0.0;
  for (const Cx& c : a) nrm2 += std::norm(c);
  const double nrm = std::sqrt(nrm2);
  if (nrm < 1e-12) throw std::domain_error("amplitude vector is (near-)zero");
  StateVector psi(d, n);
  psi.amp(0) = Cx{0.0, 0.0};
  const std::size_t repdigit_step =
      (psi.size() - 1) / static_cast<std::size_t>(d - 1);
  for (int k = 0; k < d; ++k) {
    psi.amp(static_cast<std::size_t>(k) * repdigit_step) = a[k] / nrm;
  }
  return psi;
}

WeightedHypergraph fully_connected_weighted_hypergraph(int n, double alpha) {
  if (n < 2) throw std::invalid_argument("need at least two sites");
  WeightedHypergraph g(2, n);
  // Every vertex subset of size m >= 2 carries weight (-2)^{m-1} alpha.
  std::vector<int> subset;
  double weight = alpha;  // (-2)^{m-1} alpha for current m
  for (int m = 2; m <= n; ++m) {
    weight *= -2.0;
    subset.assign(static_cast<std::size_t>(m), 0);
    for (int i = 0; i < m; ++i) subset[static_cast<std::size_t>(i)] = i + 1;
    while (true) {
      g.add_edge(subset, weight);
      int i = m - 1;
      while (i >= 0 && subset[static_cast<std::size_t>(i)] == n - (m - 1 - i)) {
        --i;
      }
      if (i < 0) break;
      ++subset[static_cast<std::size_t>(i)];
      for (int j = i + 1; j < m; ++j) {
        subset[static_cast<std::size_t>(j)] = subset[static_cast<std::size_t>(j - 1)] + 1;
      }
    }
  }
  return g;
}

WeightedHypergraph fully_connected_graph(int n) {
  if (n < 2) throw std::invalid_argument("need at least two sites");
  WeightedHypergraph g(2, n);
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) g.add_edge({i, j}, 1.0);
  }
  return g;
}

StateVector apply_pipeline(StateVector psi, const LocalPipeline& pipeline) {
  for (const auto& [site, op] : pipeline.gates) {
    apply_local_inplace(psi, op, site);
  }
  return psi;
}

LocalPipeline ghz_to_hypergraph_pipeline(int n, double alpha) {
  LocalPipeline p;
  p.gates.emplace_back(1, phase_gate(2, kPi / 2.0).adjoint());
  for (int site = 1; site <= n; ++site) p.gates.emplace_back(site, hadamard(2));
  for (int site = 2; site <= n; ++site) {
    p.gates.emplace_back(site, phase_gate(2, alpha * kPi).adjoint());
  }
  p.gates.emplace_back(1, rz_gate(alpha * kPi).adjoint());
  return p;
}

LocalOperator complete_unitary_a(const std::vector<Cx>& a) {
  const int d = static_cast<int>(a.size());
  if (d < 2) throw std::invalid_argument("need at least two amplitudes");
  double nrm2 = 0.0;
  for (const Cx& c : a) nrm2 += std::norm(c);
  const double nrm = std::sqrt(nrm2);
  if (nrm < 1e-12) throw std::domain_error("amplitude vector is (near-)zero");

  std::vector<std::vector<Cx>> cols;
  std::vector<Cx> first(a);
  for (Cx& c : first) c /= nrm;
  cols.push_back(std::move(first));

  auto project_out = [&](std::vector<Cx>& v) {
    for (const std::vector<Cx>& c : cols) {
      Cx overlap{0.0, 0.0};
      for (int i = 0; i < d; ++i) overlap += std::conj(c[i]) * v[i];
      for (int i = 0; i < d; ++i) v[i] -= overlap * c[i];
    }
  };

  for (int j = 0; j < d && static_cast<int>(cols.size()) < d; ++j) {
    std::vector<Cx> v(static_cast<std::size_t>(d), Cx{0.0, 0.0});
    v[static_cast<std::size_t>(j)] = Cx{1.0, 0.0};
    project_out(v);
    project_out(v);  // re-orthogonalize for numerical safety
    double vnrm2 = 0.0;
    for (const Cx& c : v) vnrm2 += std::norm(c);
    const double vnrm = std::sqrt(vnrm2);
    if (vnrm < 1e-8) continue;  // candidate nearly parallel to the span
    for (Cx& c : v) c /= vnrm;
    cols.push_back(std::move(v));
  }
  if (static_cast<int>(cols.size()) != d) {
    throw std::logic_error("unitary completion failed to span");
  }
  LocalOperator out(d);
  for (int col = 0; col < d; ++col) {
    for (int row = 0; row < d; ++row) {
      out.at(row, col) = cols[static_cast<std::size_t>(col)][static_cast<std::size_t>(row)];
    }
  }
  if (out.unitarity_defect() > 1e-10) {
    throw std::logic_error("unitary completion is not unitary");
  }
  return out;
}

LocalOperator u_from_completion(const LocalOperator& a_completion) {
  const int d = a_completion.dim();
  const LocalOperator h = hadamard(d);
  return h * a_completion.adjoint() * pauli_z(d) * a_completion * h.adjoint();
}

LocalOperator u_from_a(const std::vector<Cx>& a) {
  return u_from_completion(complete_unitary_a(a));
}

VerificationReport verify_ghz_weighted_hypergraph(int n, double alpha,
                                                  double tol) {
  VerificationReport report;
  report.id = "prop1";
  report.add_param("n", static_cast<long long>(n));
  report.add_param("alpha", alpha);

  const StateVector target =
      build_hypergraph_state(fully_connected_weighted_hypergraph(n, alpha));
  const StateVector mapped =
      apply_pipeline(ghz_qubit(n, alpha), ghz_to_hypergraph_pipeline(n, alpha));

  report.add_fidelity("fidelity", fidelity(mapped, target), tol);
  report.add_residual("entrywise_residual", max_amp_diff(mapped, target), tol);
  return report;
}

VerificationReport verify_qudit_ghz_hypergraph(int n, int d, double alpha,
                                               double tol) {
  VerificationReport report;
  report.id = "qudit-ghz";
  report.add_param("n", static_cast<long long>(n));
  report.add_param("d", static_cast<long long>(d));
  report.add_param("alpha", alpha);

  StateVector mapped = ghz_qudit(n, d, alpha);
  const LocalOperator h = hadamard(d);
  for (int site = 1; site <= n; ++site) apply_local_inplace(mapped, h, site);

  // diag(omega^{alpha ((sum of digits) mod d)}) |+>^n
  StateVector target = plus_state(d, n);
  kernels::map_amplitudes(
      target.data(), target.size(), kernels::run_parallel(target.size()),
      [&](std::size_t index) {
        long long digit_sum = 0;
        std::size_t rest = index;
        for (int site = 0; site < n; ++site) {
          digit_sum += static_cast<long long>(rest % static_cast<std::size_t>(d));
          rest /= static_cast<std::size_t>(d);
        }
        return omega_power(d, alpha * static_cast<double>(digit_sum % d));
      });

  report.add_fidelity("fidelity", fidelity(mapped, target), tol);
  report.add_residual("entrywise_residual", max_amp_diff(mapped, target), tol);
  return report;
}

VerificationReport verify_cu_star(int n, int d, const std::vector<Cx>& a,
                                  double tol) {
  VerificationReport report;
  report.id = "prop3";
  report.add_param("n", static_cast<long long>(n));
  report.add_param("d", static_cast<long long>(d));
  {
    std::string a_str;
    for (std::size_t k = 0; k < a.size(); ++k) {
      if (k > 0) a_str += ",";
      a_str += format_double(a[k].real());
      a_str += a[k].imag() < 0.0 ? "-" : "+";
      a_str += format_double(std::abs(a[k].imag()));
      a_str += "i";
    }
    report.add_param("a", a_str);
  }

  const LocalOperator completion = complete_unitary_a(a);
  const LocalOperator u = u_from_completion(completion);
  const LocalOperator h = hadamard(d);
  report.add_residual("completion_defect", completion.unitarity_defect(), 1e-10);

  // Disentangling route: H on leaves, CZ† center-leaf, A† then H on center.
  StateVector unwound = ghz_general(n, d, a);
  for (int site = 2; site <= n; ++site) apply_local_inplace(unwound, h, site);
  for (int site = 2; site <= n; ++site) {
    apply_cz_power_inplace(unwound, {1, site}, -1.0);
  }
  apply_local_inplace(unwound, completion.adjoint(), 1);
  apply_local_inplace(unwound, h, 1);
  report.add_residual("disentangle_residual",
                      max_amp_diff(unwound, plus_state(d, n)), tol);

  // Direct route onto the controlled-unitary star.
  StateVector mapped = ghz_general(n, d, a);
  for (int site = 2; site <= n; ++site) apply_local_inplace(mapped, h, site);
  apply_local_inplace(mapped, completion.adjoint(), 1);
  apply_local_inplace(mapped, h, 1);
  const StateVector star = build_cu_star(n, d, u);
  report.add_fidelity("star_fidelity", fidelity(mapped, star), tol);
  report.add_residual("star_entrywise_residual", max_amp_diff(mapped, star), tol);
  return report;
}

}  // namespace nsghz
