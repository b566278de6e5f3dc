// Non-symmetric GHZ states (amplitude-weighted superpositions of the two/d
// repdigit basis states) and their equivalences with weighted hypergraph and
// controlled-unitary star states.

#pragma once

#include <vector>

#include "nsghz/hypergraph.hpp"
#include "nsghz/qudit_core.hpp"
#include "nsghz/report.hpp"
#include "nsghz/state_builder.hpp"

namespace nsghz {

// cos(a pi/2)|0...0> + sin(a pi/2)|1...1> on n qubits.
StateVector ghz_qubit(int n, double alpha);

// Fan-out preparation: e^{i pi a / 2} * (CX_{1->2} ... CX_{1->n}) applied to
// (X X^{1+a})_1 |0...0>  — net site-1 operator X^a.  NOTE: this produces
// e^{i pi a}(cos|0..0> - i sin|1..1>); it matches ghz_qubit only at integer
// a.  The two differ by a quarter-turn phase between the branches that no
// global phase removes: P(pi/2) on site 1 plus global e^{-i pi a} maps this
// state exactly onto ghz_qubit (tested).  See verify notes.
StateVector ghz_qubit_via_circuit(int n, double alpha);

// n qudits: fan-out of X^a|0> via CX = sum_k |k><k| ⊗ X^k from site 1,
// amplitudes (1/d) sum_l omega^{l(a-k)} on each repdigit |k...k>.
StateVector ghz_qudit(int n, int d, double alpha);

// sum_k a_k |k...k>, input renormalized (throws on ~zero vectors).
StateVector ghz_general(int n, int d, std::vector<Cx> a);

// Fully connected weighted hypergraph over n qubits: every edge of size
// m >= 2 carries weight (-2)^{m-1} * alpha (reduced mod 2).
WeightedHypergraph fully_connected_weighted_hypergraph(int n, double alpha);
// Plain fully connected graph (size-2 edges, weight 1).
WeightedHypergraph fully_connected_graph(int n);

// Sequence of (site, operator) applied front to back.
struct LocalPipeline {
  std::vector<std::pair<int, LocalOperator>> gates;
};
StateVector apply_pipeline(StateVector psi, const LocalPipeline& pipeline);

// Local maps sending ghz_qubit(n, alpha) exactly onto the state of
// fully_connected_weighted_hypergraph(n, alpha):
//   P†(pi/2) on site 1, then H on every site, then P†(a pi) on sites 2..n,
//   then RZ†(a pi) on site 1.
LocalPipeline ghz_to_hypergraph_pipeline(int n, double alpha);

// Unitary completion of a normalized first column `a` (Gram-Schmidt over
// basis candidates, skipping near-parallel ones).
LocalOperator complete_unitary_a(const std::vector<Cx>& a);
// U = H A† Z A H† for an explicit completion A, and for A built from a.
LocalOperator u_from_completion(const LocalOperator& a_completion);
LocalOperator u_from_a(const std::vector<Cx>& a);

// ghz_qubit vs weighted hypergraph under the local pipeline (fidelity and
// entrywise residual, both at tol).
VerificationReport verify_ghz_weighted_hypergraph(int n, double alpha, double tol);

// H^{⊗n} ghz_qudit(n,d,a) vs diag(omega^{a * ((sum of digits) mod d)})|+>^n.
VerificationReport verify_qudit_ghz_hypergraph(int n, int d, double alpha,
                                               double tol);

// ghz_general(n,d,a) vs the controlled-unitary star under local maps, with
// A = complete_unitary_a(a) and U = u_from_completion(A):
//   disentangle residual: applying H_{2..n}, then CZ†_{1l} for l=2..n, then
//     A†_1, then H_1 to |ghz_a> must land exactly on |+>^n;
//   star match: (prod_{l>=2} H_l)(H_1 A†_1)|ghz_a> equals
//     build_cu_star(n, d, U) (fidelity and entrywise residual).
VerificationReport verify_cu_star(int n, int d, const std::vector<Cx>& a,
                                  double tol);

}  // namespace nsghz
