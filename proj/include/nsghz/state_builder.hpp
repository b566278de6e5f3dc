// Builds dense states from hypergraphs and controlled-unitary layouts.

#pragma once

#include <vector>

#include "nsghz/hypergraph.hpp"
#include "nsghz/qudit_core.hpp"

namespace nsghz {

StateVector plus_state(int d, int n);  // H^{⊗n} |0...0>, all amps d^{-n/2}

// Generalized controlled-Z power on a vertex set: multiplies the amplitude
// at digits (k_1,...,k_m) by omega^{w * k_1 * ... * k_m}.  A single-vertex
// edge is Z^w on that site.
void apply_cz_power_inplace(StateVector& psi, const std::vector<int>& vertices,
                            double weight);
StateVector apply_cz_power(StateVector psi, const std::vector<int>& vertices,
                           double weight);

// Generic diagonal phase edge (see PhaseEdge).
void apply_phase_edge_inplace(StateVector& psi, const PhaseEdge& edge);
StateVector apply_phase_edge(StateVector psi, const PhaseEdge& edge);

// |g> = (diagonal of all edges) H^{⊗n}|0...0>.
StateVector build_hypergraph_state(const WeightedHypergraph& g);

// Controlled unitary: controls contribute the product of their digits as the
// exponent, CU = sum_k |k><k|_controls ⊗ U^{k_1...k_c}_target.
struct ControlledGateSpec {
  std::vector<int> controls;  // 1-based, distinct, disjoint from target
  int target = 0;
  LocalOperator unitary;
};

void apply_controlled_u_inplace(StateVector& psi, const ControlledGateSpec& gate);
StateVector apply_controlled_u(StateVector psi, const ControlledGateSpec& gate);

// |+>^n with CU(control=l, target=1, U) applied for every l in 2..n.
StateVector build_cu_star(int n, int d, const LocalOperator& u);

}  // namespace nsghz
