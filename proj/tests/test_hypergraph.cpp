// Canonical hypergraph container, adjacency tensors, and the text format.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "nsghz/hypergraph.hpp"

using namespace nsghz;

namespace {

double unit_double(std::mt19937_64& gen) {
  return static_cast<double>(gen() >> 11) * 0x1.0p-53;
}

// Random graph with a bounded number of distinct edges; subset sampling is
// capped so small vertex counts cannot loop forever.
WeightedHypergraph random_graph(std::uint64_t seed, bool with_phase_edges) {
  std::mt19937_64 gen(seed);
  const int n = 2 + static_cast<int>(gen() % 5);
  const int d = 2 + static_cast<int>(gen() % 3);
  WeightedHypergraph g(d, n);

  const int edge_target = 1 + static_cast<int>(gen() % 6);
  for (int attempt = 0; attempt < 4 * edge_target; ++attempt) {
    std::vector<int> vertices;
    for (int v = 1; v <= n; ++v) {
      if (gen() % 2 == 0) vertices.push_back(v);
    }
    if (vertices.empty()) continue;
    g.add_edge(vertices, 4.0 * unit_double(gen) - 2.0);
  }
  if (with_phase_edges && n >= 2) {
    std::vector<double> exponents(static_cast<std::size_t>(d) * d);
    for (auto& x : exponents) x = static_cast<double>(d) * unit_double(gen);
    g.add_phase_edge({1, 2}, exponents);
  }
  return g;
}

}  // namespace

TEST_CASE("weights reduce into the canonical interval") {
  CHECK(canonical_weight(-0.5, 2) == doctest::Approx(1.5).epsilon(1e-14));
  CHECK(canonical_weight(2.0, 2) == 0.0);
  CHECK(canonical_weight(5.5, 2) == doctest::Approx(1.5).epsilon(1e-14));
  CHECK(canonical_weight(-1e-15, 2) == 0.0);  // snaps instead of wrapping to 2
  CHECK(canonical_weight(2.0 - 1e-15, 2) == 0.0);
  CHECK(canonical_weight(4.2, 3) == doctest::Approx(1.2).epsilon(1e-13));
  // Never returns a negative zero (matters for byte-stable serialization).
  const double z = canonical_weight(-0.0, 2);
  CHECK(std::signbit(z) == false);
}

TEST_CASE("edges merge additively and cancel exactly") {
  WeightedHypergraph g(2, 3);
  g.add_edge({3, 1, 2}, -0.5);  // stored sorted, weight 1.5
  CHECK(g.edges().size() == 1);
  CHECK(g.edges()[0].vertices == std::vector<int>{1, 2, 3});
  CHECK(g.edge_weight({1, 2, 3}) == doctest::Approx(1.5).epsilon(1e-14));

  g.add_edge({1, 2, 3}, 1.5);  // 3.0 -> 1.0
  CHECK(g.edge_weight({1, 2, 3}) == doctest::Approx(1.0).epsilon(1e-14));

  g.add_edge({1, 2, 3}, 1.0);  // 2.0 -> gone
  CHECK(g.edges().empty());
  CHECK(g.edge_weight({1, 2, 3}) == 0.0);
}

TEST_CASE("edge storage is independent of insertion order") {
  std::vector<std::pair<std::vector<int>, double>> edges = {
      {{1, 2}, 0.5}, {{2, 3}, 1.5}, {{1, 2, 3}, 0.25}, {{3}, 1.0}};
  WeightedHypergraph forward(2, 3);
  for (const auto& [v, w] : edges) forward.add_edge(v, w);

  WeightedHypergraph backward(2, 3);
  for (auto it = edges.rbegin(); it != edges.rend(); ++it) {
    backward.add_edge(it->first, it->second);
  }
  CHECK(approx_equal(forward, backward, 1e-14));
  CHECK(serialize_hypergraph(forward) == serialize_hypergraph(backward));
}

TEST_CASE("edge validation rejects malformed vertex sets") {
  WeightedHypergraph g(2, 3);
  CHECK_THROWS_AS(g.add_edge({}, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(g.add_edge({0}, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(g.add_edge({4}, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(g.add_edge({1, 1}, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(g.add_phase_edge({1, 2}, {0.0, 0.0}), std::invalid_argument);
}

TEST_CASE("phase edges merge entrywise modulo the local dimension") {
  WeightedHypergraph g(2, 2);
  g.add_phase_edge({1, 2}, {0.0, 0.0, 0.0, 0.5});
  g.add_phase_edge({1, 2}, {0.0, 0.0, 0.0, 1.75});
  REQUIRE(g.phase_edges().size() == 1);
  CHECK(g.phase_edges()[0].exponents[3] == doctest::Approx(0.25).epsilon(1e-13));

  g.add_phase_edge({1, 2}, {0.0, 0.0, 0.0, 1.75});  // back to all-zero: drops
  CHECK(g.phase_edges().empty());
}

TEST_CASE("star graph serializes to the documented text") {
  CHECK(serialize_hypergraph(star_graph(3, 2)) ==
        "d=2 n=3\nedge 1 2 : 1\nedge 1 3 : 1\n");
}

TEST_CASE("adjacency tensor is symmetric and zero-pads smaller edges") {
  const WeightedHypergraph g = star_graph(3, 2);
  const auto t2 = adjacency_tensor(g, 2);  // (n+1)^2 with index 0 padding
  REQUIRE(t2.size() == 16);
  auto at2 = [&](int i, int j) { return t2[static_cast<std::size_t>(i) * 4 + j]; };
  CHECK(at2(1, 2) == 1.0);
  CHECK(at2(2, 1) == 1.0);
  CHECK(at2(1, 3) == 1.0);
  CHECK(at2(3, 1) == 1.0);
  int nonzero = 0;
  for (double x : t2) nonzero += (x != 0.0);
  CHECK(nonzero == 4);

  // Rank 3 places the pair edges on zero-padded index triples.
  const auto t3 = adjacency_tensor(g, 3);
  REQUIRE(t3.size() == 64);
  auto at3 = [&](int i, int j, int k) {
    return t3[(static_cast<std::size_t>(i) * 4 + j) * 4 + k];
  };
  CHECK(at3(0, 1, 2) == 1.0);
  CHECK(at3(1, 0, 2) == 1.0);
  CHECK(at3(2, 1, 0) == 1.0);
  CHECK(at3(1, 2, 3) == 0.0);

  WeightedHypergraph h(2, 3);
  h.add_edge({1, 2, 3}, 0.5);
  const auto h2 = adjacency_tensor(h, 2);  // triples don't fit in rank 2
  for (double x : h2) CHECK(x == 0.0);

  WeightedHypergraph p(2, 2);
  p.add_phase_edge({1, 2}, {0.0, 0.0, 0.0, 0.5});
  CHECK_THROWS_AS(adjacency_tensor(p, 2), std::invalid_argument);
}

TEST_CASE("parser accepts the documented format") {
  const std::string text =
      "# weighted hypergraph\n"
      "d=2 n=3\n"
      "\n"
      "edge 2 1 : 1\n"
      "edge 1 2 3 : -0.5\n"
      "phase 2 3 : 0 0 0 1\n";
  const WeightedHypergraph g = parse_hypergraph(text, std::nullopt);
  CHECK(g.qudit_dim() == 2);
  CHECK(g.sites() == 3);
  CHECK(g.edge_weight({1, 2}) == 1.0);
  CHECK(g.edge_weight({1, 2, 3}) == doctest::Approx(1.5).epsilon(1e-14));
  REQUIRE(g.phase_edges().size() == 1);
  CHECK(g.phase_edges()[0].vertices == std::vector<int>{2, 3});
  CHECK(g.phase_edges()[0].exponents == std::vector<double>{0, 0, 0, 1});
}

TEST_CASE("parser reports the offending line") {
  auto line_of = [](const std::string& text) {
    try {
      parse_hypergraph(text, std::nullopt);
    } catch (const ParseError& e) {
      return e.line();
    }
    return -1;
  };
  CHECK(line_of("edge 1 2 : 1\n") == 1);                      // missing header
  CHECK(line_of("d=2 n=3\nedge 1 2 : what\n") == 2);          // bad weight
  CHECK(line_of("d=2 n=3\nedge 1 2 : 1\nbogus 1 : 2\n") == 3);  // directive
  CHECK(line_of("d=2 n=2\nedge 1 5 : 1\n") == 2);             // vertex range
  CHECK(line_of("d=2 n=2\nphase 1 2 : 0 0 1\n") == 2);        // wrong count
  CHECK(line_of("d=2 n=2\nedge 1 2 1\n") == 2);               // missing colon
  CHECK(line_of("d=0 n=2\n") == 1);
}

TEST_CASE("template weights need the scale parameter") {
  const std::string text =
      "d=2 n=2\n"
      "edge 1 : alpha\n"
      "edge 2 : -alpha\n"
      "edge 1 2 : 2*alpha\n";
  const WeightedHypergraph g = parse_hypergraph(text, 0.25);
  CHECK(g.edge_weight({1}) == doctest::Approx(0.25).epsilon(1e-14));
  CHECK(g.edge_weight({2}) == doctest::Approx(1.75).epsilon(1e-14));
  CHECK(g.edge_weight({1, 2}) == doctest::Approx(0.5).epsilon(1e-14));

  CHECK_THROWS_AS(parse_hypergraph(text, std::nullopt), ParseError);
}

TEST_CASE("serialization round-trips exactly") {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const WeightedHypergraph g = random_graph(seed, seed % 3 == 0);
    const std::string text = serialize_hypergraph(g);
    const WeightedHypergraph back = parse_hypergraph(text, std::nullopt);
    CHECK(approx_equal(g, back, 1e-13));
    CHECK(serialize_hypergraph(back) == text);
  }
}

TEST_CASE("approximate equality respects the weight circle") {
  WeightedHypergraph a(2, 2);
  WeightedHypergraph b(2, 2);
  a.add_edge({1, 2}, 1e-9);
  b.add_edge({1, 2}, 2.0 - 1e-9);  // circle distance 2e-9, linear distance ~2
  CHECK(approx_equal(a, b, 1e-8));
  CHECK_FALSE(approx_equal(a, b, 1e-10));

  WeightedHypergraph c(2, 2);
  c.add_edge({1, 2}, 2.0 - 1e-13);  // snaps to zero on entry: edge dropped
  CHECK(approx_equal(c, WeightedHypergraph(2, 2), 1e-12));
  CHECK_FALSE(approx_equal(a, c, 1e-12));  // a kept its edge, c did not
}
