// Tensor-product stabilizer operators for graph states and for the dressed
// ancilla (star + fractional center power) states.

#pragma once

#include <vector>

#include "nsghz/hypergraph.hpp"
#include "nsghz/qudit_core.hpp"
#include "nsghz/report.hpp"

namespace nsghz {

// One local operator per site, applied as a tensor product.
struct StabilizerOperator {
  std::vector<LocalOperator> site_ops;
};

StateVector apply_stabilizer(StateVector psi, const StabilizerOperator& k);

// Plain eigenvector residual ||K|psi> - |psi>|| — a state counts as
// stabilized only when K|psi> = |psi> exactly (eigenvalue +1, not merely a
// phase).  Invariant under a global phase on |psi>.
double stabilizer_residual(const StabilizerOperator& k, const StateVector& psi);

// Largest entry of max_i |K_a K_b - K_b K_a| over all pairs, built densely;
// intended for the small (d, n) used in verification.
double max_commutator_residual(const std::vector<StabilizerOperator>& ops,
                               int d, int n);

// Standard graph-state stabilizers K_i = X_i prod_{j ~ i} Z_j^{w_ij}; only
// size-2 integer-weight edges are allowed.
std::vector<StabilizerOperator> graph_stabilizers(const WeightedHypergraph& g);

// Ancilla construction over n_leaves + 1 sites (site 1 = center).
//
// Qubit convention (two-level):   center dressing X^a,  K1 = X_1 Z^{⊗leaves},
//   K_j = (X^a Z X^{-a})_1 ⊗ (P†(a pi) X P(a pi))_j.
// Qudit convention (d-level):     center dressing X^{-a},
//   K_j = (X^{-a} Z X^{a})_1 ⊗ (P†(a pi) X P(a pi))_j.
// Bare set: no leaf dressing,     K_j = (X^{±a} Z X^{∓a})_1 ⊗ X_j, which
//   stabilizes the undressed X^{±a}_1 |star>.
std::vector<StabilizerOperator> ancilla_stabilizers_qubit(int n_leaves,
                                                          double alpha);
std::vector<StabilizerOperator> ancilla_stabilizers_qudit(int n_leaves, int d,
                                                          double alpha);
std::vector<StabilizerOperator> ancilla_stabilizers_bare(int n_leaves, int d,
                                                         double alpha);

// P†(a pi) on every leaf of X^{±a}_1 |star> (sign by convention; d == 2 uses
// the qubit convention, d > 2 the qudit one).
StateVector stabilized_state(int n_leaves, int d, double alpha);
StateVector stabilized_state_qubit(int n_leaves, double alpha);
StateVector stabilized_state_qudit(int n_leaves, int d, double alpha);
StateVector stabilized_state_bare(int n_leaves, int d, double alpha);

// Alternative phase-gate extension diag(1, e^{i phi}, 1, ..., 1) used to
// probe the dressing-choice sensitivity of the qudit construction.
LocalOperator phase_gate_embedded(int d, double phi);

// Max stabilizer residual + pairwise commutator residual for the dressed
// state/set pair; the qudit report also probes the embedded-P dressing and
// the bare set, and both dressings are expected to pass (the residual is
// invariant under the conjugation that defines the dressing).
VerificationReport verify_ancilla_stabilizers_qubit(int n_leaves, double alpha,
                                                    double tol);
VerificationReport verify_ancilla_stabilizers_qudit(int n_leaves, int d,
                                                    double alpha, double tol);

}  // namespace nsghz
