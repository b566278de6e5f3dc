// Non-symmetric GHZ forms, the weighted-hypergraph equivalence pipeline, and
// the completion-based controlled-unitary star construction.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <random>
#include <stdexcept>
#include <vector>

#include "nsghz/hypergraph.hpp"
#include "nsghz/kernels.hpp"
#include "nsghz/nonsym_ghz.hpp"
#include "nsghz/qudit_core.hpp"
#include "nsghz/state_builder.hpp"

using namespace nsghz;

namespace {

double unit_double(std::mt19937_64& gen) {
  return static_cast<double>(gen() >> 11) * 0x1.0p-53;
}

std::size_t repdigit_index(int n, int d, int k) {
  std::size_t idx = 0;
  for (int s = 0; s < n; ++s) idx = idx * static_cast<std::size_t>(d) + k;
  return idx;
}

// Pascal rule, exact in integers.
long long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::vector<long long> row(static_cast<std::size_t>(n) + 1, 0);
  row[0] = 1;
  for (int i = 1; i <= n; ++i) {
    for (int j = i; j >= 1; --j) row[j] += row[j - 1];
  }
  return row[k];
}

int hamming_weight(std::size_t index, int n) {
  int w = 0;
  for (int s = 0; s < n; ++s) w += static_cast<int>((index >> s) & 1u);
  return w;
}

}  // namespace

TEST_CASE("two-branch GHZ places cosine and sine on the extreme labels") {
  const double alpha = 0.4;
  const StateVector psi = ghz_qubit(3, alpha);
  CHECK(std::abs(psi.amp(0) - Cx(std::cos(alpha * kPi / 2), 0)) < 1e-15);
  CHECK(std::abs(psi.amp(7) - Cx(std::sin(alpha * kPi / 2), 0)) < 1e-15);
  for (std::size_t i = 1; i < 7; ++i) CHECK(std::abs(psi.amp(i)) == 0.0);

  CHECK(max_amp_diff(ghz_qubit(2, 0.0), StateVector(2, 2)) < 1e-15);
  const StateVector one = ghz_qubit(1, 0.3);
  CHECK(std::abs(one.amp(0) - Cx(std::cos(0.15 * kPi), 0)) < 1e-15);
  CHECK(std::abs(one.amp(1) - Cx(std::sin(0.15 * kPi), 0)) < 1e-15);
  CHECK_THROWS_AS(ghz_qubit(0, 0.5), std::invalid_argument);
}

TEST_CASE("qudit GHZ amplitudes follow the fractional shift column") {
  const int d = 3;
  const int n = 2;
  const double alpha = 0.35;
  const StateVector psi = ghz_qudit(n, d, alpha);
  for (std::size_t idx = 0; idx < psi.size(); ++idx) {
    bool repdigit = false;
    for (int k = 0; k < d; ++k) repdigit |= (idx == repdigit_index(n, d, k));
    if (!repdigit) CHECK(std::abs(psi.amp(idx)) < 1e-15);
  }
  for (int k = 0; k < d; ++k) {
    Cx expected(0, 0);
    for (int l = 0; l < d; ++l) {
      expected += omega_power(d, static_cast<double>(l) * (alpha - k));
    }
    expected /= static_cast<double>(d);
    CHECK(std::abs(psi.amp(repdigit_index(n, d, k)) - expected) < 1e-13);
  }
  CHECK(psi.norm() == doctest::Approx(1.0).epsilon(1e-12));

  // Integer power: the state collapses onto a single repeated label.
  const StateVector shifted = ghz_qudit(3, 3, 1.0);
  CHECK(std::abs(shifted.amp(repdigit_index(3, 3, 1)) - Cx(1, 0)) < 1e-12);
}

TEST_CASE("general amplitude vector lands on the diagonal labels") {
  const std::vector<Cx> a = {Cx(0.5, 0), Cx(0, 0.5), Cx(std::sqrt(0.5), 0)};
  const StateVector psi = ghz_general(2, 3, a);
  for (int k = 0; k < 3; ++k) {
    CHECK(std::abs(psi.amp(repdigit_index(2, 3, k)) - a[k]) < 1e-14);
  }
  CHECK(psi.norm() == doctest::Approx(1.0).epsilon(1e-12));

  // Unnormalized input is normalized on entry.
  const StateVector scaled = ghz_general(2, 3, {Cx(2, 0), Cx(0, 0), Cx(0, 0)});
  CHECK(std::abs(scaled.amp(0) - Cx(1, 0)) < 1e-14);

  CHECK_THROWS_AS(ghz_general(2, 3, {Cx(1, 0)}), std::invalid_argument);
  CHECK_THROWS_AS(ghz_general(2, 3, {Cx(0, 0), Cx(0, 0), Cx(0, 0)}),
                  std::domain_error);
}

TEST_CASE("two-level qudit GHZ equals the two-branch GHZ after a quarter turn") {
  for (double alpha : {0.0, 0.2, 0.5, 0.85, 1.0}) {
    const int n = 3;
    StateVector rotated = ghz_qudit(n, 2, alpha);
    apply_local_inplace(rotated, phase_gate(2, kPi / 2), 1);

    StateVector reference = ghz_qubit(n, alpha);
    kernels::scale(reference.data(), reference.size(),
                   std::polar(1.0, kPi * alpha / 2), false);
    CHECK(max_amp_diff(rotated, reference) < 1e-13);
  }
}

TEST_CASE("fanout circuit output relates to the GHZ by a quarter turn") {
  // At integer powers the circuit hits the GHZ exactly (up to global phase).
  CHECK(max_amp_diff(ghz_qubit_via_circuit(3, 0.0), StateVector(2, 3)) < 1e-14);
  CHECK(fidelity(ghz_qubit_via_circuit(3, 1.0), ghz_qubit(3, 1.0)) ==
        doctest::Approx(1.0).epsilon(1e-12));

  for (double alpha : {0.1, 0.35, 0.5, 0.8}) {
    const int n = 4;
    const StateVector via = ghz_qubit_via_circuit(n, alpha);

    // Exact identity: a quarter-turn phase on site 1 sends the circuit output
    // onto the GHZ times e^{i pi a}.
    StateVector rotated = via;
    apply_local_inplace(rotated, phase_gate(2, kPi / 2), 1);
    StateVector reference = ghz_qubit(n, alpha);
    kernels::scale(reference.data(), reference.size(),
                   std::polar(1.0, kPi * alpha), false);
    CHECK(max_amp_diff(rotated, reference) < 1e-13);

    // Without that correction the overlap is pinned at cos^4 + sin^4 < 1:
    // the raw circuit does not reproduce the GHZ for fractional powers.
    const double c = std::cos(alpha * kPi / 2);
    const double s = std::sin(alpha * kPi / 2);
    const double expected = c * c * c * c + s * s * s * s;
    CHECK(fidelity(via, ghz_qubit(n, alpha)) ==
          doctest::Approx(expected).epsilon(1e-12));
  }
}

TEST_CASE("fully connected weighted hypergraph carries doubling weights") {
  const double alpha = 0.3;
  const WeightedHypergraph g = fully_connected_weighted_hypergraph(5, alpha);
  CHECK(g.edges().size() == (1u << 5) - 5 - 1);  // every subset of size >= 2

  auto expected = [&](int m) {
    double w = alpha;
    for (int i = 1; i < m; ++i) w *= -2.0;
    return canonical_weight(w, 2);
  };
  CHECK(g.edge_weight({1, 2}) == doctest::Approx(expected(2)).epsilon(1e-13));
  CHECK(g.edge_weight({2, 4}) == doctest::Approx(expected(2)).epsilon(1e-13));
  CHECK(g.edge_weight({1, 3, 5}) == doctest::Approx(expected(3)).epsilon(1e-13));
  CHECK(g.edge_weight({1, 2, 3, 4}) ==
        doctest::Approx(expected(4)).epsilon(1e-13));
  CHECK(g.edge_weight({1, 2, 3, 4, 5}) ==
        doctest::Approx(expected(5)).epsilon(1e-13));
}

TEST_CASE("half power collapses the hypergraph onto the plain graph") {
  // At a = 1/2 the pair weights become 1 and all larger subsets vanish.
  CHECK(approx_equal(fully_connected_weighted_hypergraph(4, 0.5),
                     fully_connected_graph(4), 1e-13));
  // Integer even powers leave no edges at all.
  CHECK(fully_connected_weighted_hypergraph(3, 0.0).edges().empty());
  CHECK(fully_connected_weighted_hypergraph(3, 2.0).edges().empty());
}

TEST_CASE("local pipeline sends the GHZ onto the hypergraph state exactly") {
  for (int n : {2, 3, 4}) {
    for (double alpha : {0.0, 0.3, 0.5, 0.9, 1.0}) {
      const StateVector target =
          build_hypergraph_state(fully_connected_weighted_hypergraph(n, alpha));
      const StateVector mapped =
          apply_pipeline(ghz_qubit(n, alpha), ghz_to_hypergraph_pipeline(n, alpha));
      CHECK(max_amp_diff(mapped, target) < 1e-13);
    }
  }
}

TEST_CASE("hypergraph state amplitudes depend only on the label weight") {
  const int n = 4;
  const double alpha = 0.35;
  const StateVector psi =
      build_hypergraph_state(fully_connected_weighted_hypergraph(n, alpha));
  const double scale = std::pow(2.0, -n / 2.0);
  for (std::size_t idx = 0; idx < psi.size(); ++idx) {
    const int w = hamming_weight(idx, n);
    // Sum over subset sizes collapses to an even offset: -2 floor(w/2).
    const Cx expected =
        scale * std::polar(1.0, kPi * alpha * (-2.0) * std::floor(w / 2.0));
    CHECK(std::abs(psi.amp(idx) - expected) < 1e-13);
  }
}

TEST_CASE("subset weight sums collapse in exact integer arithmetic") {
  for (int n = 0; n <= 12; ++n) {
    for (int w = 0; w <= n; ++w) {
      long long sum = 0;
      long long sign = -2;  // (-2)^{m-1} for m = 2
      for (int m = 2; m <= n; ++m) {
        sum += sign * binomial(w, m);
        sign *= -2;
      }
      const long long expected = (w % 2 == 0) ? -w : 1 - w;  // -2 floor(w/2)
      CHECK(sum == expected);
    }
  }
}

TEST_CASE("unitary completion extends a first column") {
  CHECK(complete_unitary_a({Cx(1, 0), Cx(0, 0), Cx(0, 0)})
            .max_abs_diff(LocalOperator::identity(3)) < 1e-14);

  std::mt19937_64 gen(2024);
  for (int trial = 0; trial < 8; ++trial) {
    const int d = 2 + static_cast<int>(gen() % 4);
    std::vector<Cx> a(static_cast<std::size_t>(d));
    for (auto& x : a) x = Cx(unit_double(gen) - 0.5, unit_double(gen) - 0.5);
    const LocalOperator u = complete_unitary_a(a);
    CHECK(u.is_unitary(1e-10));

    double norm = 0.0;
    for (const Cx& x : a) norm += std::norm(x);
    norm = std::sqrt(norm);
    for (int r = 0; r < d; ++r) {
      CHECK(std::abs(u.at(r, 0) - a[static_cast<std::size_t>(r)] / norm) < 1e-12);
    }
  }

  // Nearly degenerate directions still complete cleanly.
  const LocalOperator tight = complete_unitary_a({Cx(1, 0), Cx(1e-7, 0)});
  CHECK(tight.is_unitary(1e-10));

  CHECK_THROWS_AS(complete_unitary_a({Cx(0, 0), Cx(0, 0)}), std::domain_error);
}

TEST_CASE("completion-conjugated clock for a basis column is the inverse shift") {
  for (int d : {2, 3, 4}) {
    std::vector<Cx> e0(static_cast<std::size_t>(d), Cx(0, 0));
    e0[0] = Cx(1, 0);
    CHECK(u_from_a(e0).max_abs_diff(pauli_x(d).adjoint()) < 1e-13);
  }
}

TEST_CASE("two-level completion gives the antidiagonal phase pair") {
  for (double alpha : {0.0, 0.25, 0.5, 0.8, 1.3}) {
    // The preparation operator X * X^{a+1} reduces to the fractional power
    // X^a, whose conjugated clock is the antidiagonal pair of phases.
    const LocalOperator prep = pauli_x(2) * x_alpha_qubit(alpha + 1.0);
    CHECK(prep.max_abs_diff(x_alpha_qubit(alpha)) < 1e-13);

    const LocalOperator u = u_from_completion(prep);
    LocalOperator expected(2);
    expected.at(0, 1) = std::polar(1.0, kPi * alpha);
    expected.at(1, 0) = std::polar(1.0, -kPi * alpha);
    CHECK(u.max_abs_diff(expected) < 1e-13);

    // Prepending one more flip negates the conjugated clock.
    const LocalOperator u_flip = u_from_completion(pauli_x(2) * x_alpha_qubit(alpha));
    LocalOperator negated(2);
    negated.at(0, 1) = -expected.at(0, 1);
    negated.at(1, 0) = -expected.at(1, 0);
    CHECK(u_flip.max_abs_diff(negated) < 1e-13);
  }
}

TEST_CASE("hypergraph equivalence verification passes on a parameter grid") {
  for (int n : {2, 3, 5}) {
    for (double alpha : {0.0, 0.15, 0.5, 0.85, 1.0}) {
      const VerificationReport report =
          verify_ghz_weighted_hypergraph(n, alpha, 1e-10);
      CHECK(report.passed());
      CHECK(report.id == "prop1");
    }
  }
}

TEST_CASE("qudit hypergraph verification passes on a parameter grid") {
  for (int d : {2, 3, 5}) {
    for (int n : {2, 3}) {
      for (double alpha : {0.0, 0.4, 1.0}) {
        CHECK(verify_qudit_ghz_hypergraph(n, d, alpha, 1e-10).passed());
      }
    }
  }
}

TEST_CASE("controlled-unitary star verification passes for random amplitudes") {
  std::mt19937_64 gen(99);
  for (int d : {2, 3, 4}) {
    for (int n : {2, 3}) {
      std::vector<Cx> a(static_cast<std::size_t>(d));
      for (auto& x : a) x = Cx(unit_double(gen) - 0.5, unit_double(gen) - 0.5);
      const VerificationReport report = verify_cu_star(n, d, a, 1e-10);
      CHECK(report.passed());
      CHECK(report.id == "prop3");
    }
  }
}
