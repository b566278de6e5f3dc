#include "nsghz/state_builder.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <unordered_map>

namespace nsghz {

namespace {

std::vector<int> checked_sites(std::vector<int> sites, int n) {
  if (sites.empty()) throw std::invalid_argument("empty site list");
  std::sort(sites.begin(), sites.end());
  for (std::size_t i = 0; i < sites.size(); ++i) {
    if (sites[i] < 1 || sites[i] > n) {
      throw std::invalid_argument("site " + std::to_string(sites[i]) +
                                  " out of range 1.." + std::to_string(n));
    }
    if (i > 0 && sites[i] == sites[i - 1]) {
      throw std::invalid_argument("repeated site " + std::to_string(sites[i]));
    }
  }
  return sites;
}

}  // namespace

StateVector plus_state(int d, int n) {
  StateVector psi(d, n);
  double amp = 1.0;
  for (int i = 0; i < n; ++i) amp /= std::sqrt(static_cast<double>(d));
  std::fill(psi.data(), psi.data() + psi.size(), Cx{amp, 0.0});
  return psi;
}

void apply_cz_power_inplace(StateVector& psi, const std::vector<int>& vertices,
                            double weight) {
  const std::vector<int> sites = checked_sites(vertices, psi.sites());
  const int d = psi.qudit_dim();
  std::vector<std::size_t> strides;
  strides.reserve(sites.size());
  for (int s : sites) strides.push_back(psi.stride(s));
  kernels::map_amplitudes(
      psi.data(), psi.size(), kernels::run_parallel(psi.size()),
      [&](std::size_t index) {
        long long product = 1;
        for (std::size_t v = 0; v < strides.size(); ++v) {
          product *= static_cast<long long>((index / strides[v]) %
                                            static_cast<std::size_t>(d));
          if (product == 0) break;
        }
        if (product == 0) return Cx{1.0, 0.0};
        return omega_power(d, weight, product);
      });
}

StateVector apply_cz_power(StateVector psi, const std::vector<int>& vertices,
                           double weight) {
  apply_cz_power_inplace(psi, vertices, weight);
  return psi;
}

void apply_phase_edge_inplace(StateVector& psi, const PhaseEdge& edge) {
  const std::vector<int> sites = checked_sites(edge.vertices, psi.sites());
  const int d = psi.qudit_dim();
  std::size_t expected = 1;
  for (std::size_t i = 0; i < sites.size(); ++i) {
    expected *= static_cast<std::size_t>(d);
  }
  if (edge.exponents.size() != expected) {
    throw std::invalid_argument("phase edge exponent table has wrong size");
  }
  std::vector<std::size_t> strides;
  strides.reserve(sites.size());
  for (int s : sites) strides.push_back(psi.stride(s));
  kernels::map_amplitudes(
      psi.data(), psi.size(), kernels::run_parallel(psi.size()),
      [&](std::size_t index) {
        std::size_t flat = 0;
        for (std::size_t v = 0; v < strides.size(); ++v) {
          flat = flat * static_cast<std::size_t>(d) +
                 (index / strides[v]) % static_cast<std::size_t>(d);
        }
        const double e = edge.exponents[flat];
        if (e == 0.0) return Cx{1.0, 0.0};
        return omega_power(d, e);
      });
}

StateVector apply_phase_edge(StateVector psi, const PhaseEdge& edge) {
  apply_phase_edge_inplace(psi, edge);
  return psi;
}

StateVector build_hypergraph_state(const WeightedHypergraph& g) {
  StateVector psi = plus_state(g.qudit_dim(), g.sites());
  for (const Hyperedge& e : g.edges()) {
    apply_cz_power_inplace(psi, e.vertices, e.weight);
  }
  for (const PhaseEdge& e : g.phase_edges()) {
    apply_phase_edge_inplace(psi, e);
  }
  return psi;
}

namespace {

// The d amplitudes at base, base+stride, ... mixed by the d x d matrix `op`.
inline void mix_group(Cx* amps, std::size_t base, int d, std::size_t stride,
                      const Cx* op, Cx* scratch) {
  for (int k = 0; k < d; ++k) scratch[k] = amps[base + k * stride];
  for (int r = 0; r < d; ++r) {
    Cx acc{0.0, 0.0};
    const Cx* row = op + static_cast<std::size_t>(r) * d;
    for (int k = 0; k < d; ++k) acc += row[k] * scratch[k];
    amps[base + r * stride] = acc;
  }
}

}  // namespace

void apply_controlled_u_inplace(StateVector& psi, const ControlledGateSpec& gate) {
  const int d = psi.qudit_dim();
  std::vector<int> controls = checked_sites(gate.controls, psi.sites());
  if (gate.target < 1 || gate.target > psi.sites()) {
    throw std::invalid_argument("target site out of range");
  }
  if (std::binary_search(controls.begin(), controls.end(), gate.target)) {
    throw std::invalid_argument("target site is also a control");
  }
  if (gate.unitary.dim() != d) {
    throw std::invalid_argument("controlled operator dimension mismatch");
  }
  if (!gate.unitary.is_unitary(1e-10)) {
    throw std::invalid_argument("controlled operator must be unitary");
  }

  // The exponent is the product of control digits; 0 means identity.  All
  // attainable nonzero exponents are products of one value in 1..d-1 per
  // control; the distinct-value set stays tiny.
  std::set<long long> exponents = {1};
  for (std::size_t c = 0; c < controls.size(); ++c) {
    std::set<long long> next;
    for (long long p : exponents) {
      for (int v = 1; v < d; ++v) next.insert(p * v);
    }
    exponents = std::move(next);
    if (exponents.size() > (std::size_t{1} << 20)) {
      throw std::invalid_argument("too many distinct control exponents");
    }
  }

  std::unordered_map<long long, std::vector<Cx>> powers;
  powers.reserve(exponents.size());
  for (long long e : exponents) {
    powers.emplace(e, gate.unitary.power(e).entries());
  }

  const std::size_t stride = psi.stride(gate.target);
  std::vector<std::size_t> control_strides;
  control_strides.reserve(controls.size());
  for (int c : controls) control_strides.push_back(psi.stride(c));

  Cx* amps = psi.data();
  const std::size_t groups = psi.size() / static_cast<std::size_t>(d);
  const bool par = kernels::run_parallel(psi.size());
  constexpr int kSmallD = 16;

  auto group_exponent = [&](std::size_t base) -> long long {
    long long product = 1;
    for (std::size_t v = 0; v < control_strides.size(); ++v) {
      product *= static_cast<long long>((base / control_strides[v]) %
                                        static_cast<std::size_t>(d));
      if (product == 0) return 0;
    }
    return product;
  };

#ifdef _OPENMP
  if (par) {
#pragma omp parallel
    {
      std::vector<Cx> scratch(static_cast<std::size_t>(std::max(d, kSmallD)));
#pragma omp for schedule(static)
      for (long long g = 0; g < static_cast<long long>(groups); ++g) {
        const std::size_t base =
            (static_cast<std::size_t>(g) / stride) * stride *
                static_cast<std::size_t>(d) +
            static_cast<std::size_t>(g) % stride;
        const long long e = group_exponent(base);
        if (e == 0) continue;
        mix_group(amps, base, d, stride, powers.at(e).data(), scratch.data());
      }
    }
    return;
  }
#endif
  std::vector<Cx> scratch(static_cast<std::size_t>(std::max(d, kSmallD)));
  for (std::size_t g = 0; g < groups; ++g) {
    const std::size_t base =
        (g / stride) * stride * static_cast<std::size_t>(d) + g % stride;
    const long long e = group_exponent(base);
    if (e == 0) continue;
    mix_group(amps, base, d, stride, powers.at(e).data(), scratch.data());
  }
}

StateVector apply_controlled_u(StateVector psi, const ControlledGateSpec& gate) {
  apply_controlled_u_inplace(psi, gate);
  return psi;
}

StateVector build_cu_star(int n, int d, const LocalOperator& u) {
  if (n < 2) throw std::invalid_argument("star layout needs >= 2 sites");
  StateVector psi = plus_state(d, n);
  for (int l = 2; l <= n; ++l) {
    apply_controlled_u_inplace(psi, ControlledGateSpec{{l}, 1, u});
  }
  return psi;
}

}  // namespace nsghz
