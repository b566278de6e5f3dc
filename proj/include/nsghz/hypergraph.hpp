// Weighted hypergraphs with optional generic phase edges, plus the text
// serialization the CLI consumes.
//
// Canonical form (maintained by every mutator):
//   - edge vertex lists sorted ascending, 1-based, no repeats;
//   - edges sorted lexicographically by (size, vertices);
//   - weights reduced mod d into [0, d) for all d (a weight-w edge phase is
//     omega^{w * digit product}, period d in w; at d=2 that is e^{i pi w});
//   - parallel edges merged additively at insertion; edges whose canonical
//     weight is below 1e-12 are dropped;
//   - phase-edge exponent vectors reduced entrywise mod d, merged additively,
//     dropped when identically zero.

#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace nsghz {

struct Hyperedge {
  std::vector<int> vertices;  // sorted ascending, 1-based
  double weight = 0.0;        // in [0, d)
};

// Generic diagonal gate on a vertex set: amplitude at digits (k_1,...,k_m)
// picks up omega^{exponents[flat(k)]}, flat index in the vertex order with
// the first listed vertex most significant.
struct PhaseEdge {
  std::vector<int> vertices;      // sorted ascending, 1-based
  std::vector<double> exponents;  // length d^|vertices|, entries in [0, d)
};

double canonical_weight(double w, int d);  // reduce mod d into [0, d)

class WeightedHypergraph {
 public:
  WeightedHypergraph(int d, int n);

  int qudit_dim() const { return d_; }
  int sites() const { return n_; }

  const std::vector<Hyperedge>& edges() const { return edges_; }
  const std::vector<PhaseEdge>& phase_edges() const { return phase_edges_; }

  // Merge-or-insert keeping canonical form; weight may be any real.
  void add_edge(std::vector<int> vertices, double weight);
  void add_phase_edge(std::vector<int> vertices, std::vector<double> exponents);

  // Weight of the exact vertex set, 0 if absent.
  double edge_weight(const std::vector<int>& vertices) const;

 private:
  int d_;
  int n_;
  std::vector<Hyperedge> edges_;
  std::vector<PhaseEdge> phase_edges_;
};

// True when both graphs have identical edge sets with weights (and phase
// exponents) matching within tol.
bool approx_equal(const WeightedHypergraph& a, const WeightedHypergraph& b,
                  double tol = 1e-12);

// Star over n_total vertices: vertex 1 joined to each of 2..n_total, weight 1.
WeightedHypergraph star_graph(int n_total, int d);

// Dense symmetric rank-k adjacency tensor, shape (n+1)^k with index 0 used
// as padding for edges smaller than k.  Entry = edge weight on every
// permutation of each size-<=k edge's zero-padded index tuple.
std::vector<double> adjacency_tensor(const WeightedHypergraph& g, int k);

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what);
  int line() const { return line_; }

 private:
  int line_;
};

// Text format (one item per line, '#' starts a comment):
//   d=2 n=3
//   edge 1 2 : 1
//   edge 1 2 3 : 0.5
//   phase 2 3 : 0 0 0 1
// Weights are plain reals in the core format.  When `alpha` is supplied
// (CLI template mode) a weight may also be "alpha" or "<real>*alpha".
WeightedHypergraph parse_hypergraph(const std::string& text,
                                    std::optional<double> alpha = std::nullopt);
std::string serialize_hypergraph(const WeightedHypergraph& g);

}  // namespace nsghz
