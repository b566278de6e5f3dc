#include "nsghz/hypergraph.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <sstream>

#include "nsghz/qudit_core.hpp"

namespace nsghz {

namespace {

constexpr double kWeightEps = 1e-12;

bool edge_key_less(const std::vector<int>& a, const std::vector<int>& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

std::vector<int> checked_vertices(std::vector<int> vertices, int n) {
  if (vertices.empty()) {
    throw std::invalid_argument("edge needs at least one vertex");
  }
  std::sort(vertices.begin(), vertices.end());
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (vertices[i] < 1 || vertices[i] > n) {
      throw std::invalid_argument("vertex " + std::to_string(vertices[i]) +
                                  " out of range 1.." + std::to_string(n));
    }
    if (i > 0 && vertices[i] == vertices[i - 1]) {
      throw std::invalid_argument("repeated vertex " + std::to_string(vertices[i]));
    }
  }
  return vertices;
}

std::string format_weight(double w) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", w);
  return buf;
}

}  // namespace

double canonical_weight(double w, int d) {
  double r = std::fmod(w, static_cast<double>(d));
  if (r < 0.0) r += static_cast<double>(d);
  if (r > static_cast<double>(d) - kWeightEps) r = 0.0;
  return r == 0.0 ? 0.0 : r;  // also normalizes -0
}

WeightedHypergraph::WeightedHypergraph(int d, int n) : d_(d), n_(n) {
  if (d < 2) throw std::invalid_argument("qudit dimension must be >= 2");
  if (n < 1) throw std::invalid_argument("site count must be >= 1");
}

void WeightedHypergraph::add_edge(std::vector<int> vertices, double weight) {
  vertices = checked_vertices(std::move(vertices), n_);
  auto it = std::lower_bound(
      edges_.begin(), edges_.end(), vertices,
      [](const Hyperedge& e, const std::vector<int>& key) {
        return edge_key_less(e.vertices, key);
      });
  const bool present = it != edges_.end() && it->vertices == vertices;
  const double merged =
      canonical_weight((present ? it->weight : 0.0) + weight, d_);
  if (merged < kWeightEps) {
    if (present) edges_.erase(it);
    return;
  }
  if (present) {
    it->weight = merged;
  } else {
    edges_.insert(it, Hyperedge{std::move(vertices), merged});
  }
}

void WeightedHypergraph::add_phase_edge(std::vector<int> vertices,
                                        std::vector<double> exponents) {
  vertices = checked_vertices(std::move(vertices), n_);
  std::size_t expected = 1;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    expected *= static_cast<std::size_t>(d_);
  }
  if (exponents.size() != expected) {
    throw std::invalid_argument("phase edge on " +
                                std::to_string(vertices.size()) +
                                " vertices needs " + std::to_string(expected) +
                                " exponents, got " +
                                std::to_string(exponents.size()));
  }
  auto it = std::lower_bound(
      phase_edges_.begin(), phase_edges_.end(), vertices,
      [](const PhaseEdge& e, const std::vector<int>& key) {
        return edge_key_less(e.vertices, key);
      });
  const bool present = it != phase_edges_.end() && it->vertices == vertices;
  std::vector<double> merged(expected, 0.0);
  bool nonzero = false;
  for (std::size_t i = 0; i < expected; ++i) {
    merged[i] =
        canonical_weight((present ? it->exponents[i] : 0.0) + exponents[i], d_);
    if (merged[i] < kWeightEps) merged[i] = 0.0;
    nonzero = nonzero || merged[i] != 0.0;
  }
  if (!nonzero) {
    if (present) phase_edges_.erase(it);
    return;
  }
  if (present) {
    it->exponents = std::move(merged);
  } else {
    phase_edges_.insert(it, PhaseEdge{std::move(vertices), std::move(merged)});
  }
}

double WeightedHypergraph::edge_weight(const std::vector<int>& vertices) const {
  std::vector<int> key = checked_vertices(vertices, n_);
  auto it = std::lower_bound(
      edges_.begin(), edges_.end(), key,
      [](const Hyperedge& e, const std::vector<int>& k) {
        return edge_key_less(e.vertices, k);
      });
  if (it != edges_.end() && it->vertices == key) return it->weight;
  return 0.0;
}

bool approx_equal(const WeightedHypergraph& a, const WeightedHypergraph& b,
                  double tol) {
  if (a.qudit_dim() != b.qudit_dim() || a.sites() != b.sites()) return false;
  if (a.edges().size() != b.edges().size()) return false;
  if (a.phase_edges().size() != b.phase_edges().size()) return false;
  const int d = a.qudit_dim();
  auto weight_close = [&](double x, double y) {
    // Compare on the circle: 0 and d are the same weight.
    const double diff = std::abs(canonical_weight(x - y, d));
    return diff <= tol || diff >= d - tol;
  };
  for (std::size_t i = 0; i < a.edges().size(); ++i) {
    if (a.edges()[i].vertices != b.edges()[i].vertices) return false;
    if (!weight_close(a.edges()[i].weight, b.edges()[i].weight)) return false;
  }
  for (std::size_t i = 0; i < a.phase_edges().size(); ++i) {
    const PhaseEdge& ea = a.phase_edges()[i];
    const PhaseEdge& eb = b.phase_edges()[i];
    if (ea.vertices != eb.vertices) return false;
    for (std::size_t k = 0; k < ea.exponents.size(); ++k) {
      if (!weight_close(ea.exponents[k], eb.exponents[k])) return false;
    }
  }
  return true;
}

WeightedHypergraph star_graph(int n_total, int d) {
  if (n_total < 2) throw std::invalid_argument("star graph needs >= 2 vertices");
  WeightedHypergraph g(d, n_total);
  for (int leaf = 2; leaf <= n_total; ++leaf) g.add_edge({1, leaf}, 1.0);
  return g;
}

std::vector<double> adjacency_tensor(const WeightedHypergraph& g, int k) {
  if (k < 1) throw std::invalid_argument("tensor rank must be >= 1");
  if (!g.phase_edges().empty()) {
    throw std::invalid_argument(
        "adjacency tensor is defined for plain weighted edges only");
  }
  const std::size_t side = static_cast<std::size_t>(g.sites()) + 1;
  std::size_t total = 1;
  for (int i = 0; i < k; ++i) {
    if (total > (std::size_t{1} << 26) / side) {
      throw std::invalid_argument("adjacency tensor too large");
    }
    total *= side;
  }
  std::vector<double> tensor(total, 0.0);
  for (const Hyperedge& e : g.edges()) {
    if (static_cast<int>(e.vertices.size()) > k) continue;
    std::vector<int> tuple(static_cast<std::size_t>(k), 0);
    std::copy(e.vertices.begin(), e.vertices.end(),
              tuple.begin() + (k - static_cast<int>(e.vertices.size())));
    std::sort(tuple.begin(), tuple.end());
    do {
      std::size_t flat = 0;
      for (int i = 0; i < k; ++i) {
        flat = flat * side + static_cast<std::size_t>(tuple[static_cast<std::size_t>(i)]);
      }
      tensor[flat] = e.weight;
    } while (std::next_permutation(tuple.begin(), tuple.end()));
  }
  return tensor;
}

ParseError::ParseError(int line, const std::string& what)
    : std::runtime_error("line " + std::to_string(line) + ": " + what),
      line_(line) {}

namespace {

std::vector<std::string> tokenize(const std::string& line) {
  std::vector<std::string> tokens;
  std::istringstream in(line);
  std::string tok;
  while (in >> tok) tokens.push_back(tok);
  return tokens;
}

double parse_real(const std::string& tok, int line) {
  const char* begin = tok.c_str();
  char* end = nullptr;
  const double v = std::strtod(begin, &end);
  if (end != begin + tok.size() || tok.empty()) {
    throw ParseError(line, "expected a number, got '" + tok + "'");
  }
  return v;
}

long parse_int(const std::string& tok, int line) {
  const char* begin = tok.c_str();
  char* end = nullptr;
  const long v = std::strtol(begin, &end, 10);
  if (end != begin + tok.size() || tok.empty()) {
    throw ParseError(line, "expected an integer, got '" + tok + "'");
  }
  return v;
}

// Weight token: a real, or (template mode) "alpha", "-alpha", "<real>*alpha".
double parse_weight(const std::string& tok, std::optional<double> alpha,
                    int line) {
  const auto star = tok.find('*');
  const bool is_template =
      tok == "alpha" || tok == "-alpha" ||
      (star != std::string::npos && tok.substr(star + 1) == "alpha");
  if (!is_template) return parse_real(tok, line);
  if (!alpha.has_value()) {
    throw ParseError(line,
                     "weight '" + tok + "' requires an alpha substitution");
  }
  if (tok == "alpha") return *alpha;
  if (tok == "-alpha") return -*alpha;
  return parse_real(tok.substr(0, star), line) * *alpha;
}

}  // namespace

WeightedHypergraph parse_hypergraph(const std::string& text,
                                    std::optional<double> alpha) {
  std::istringstream input(text);
  std::string raw;
  int line_no = 0;
  bool have_header = false;
  int d = 0;
  int n = 0;
  std::optional<WeightedHypergraph> graph;

  while (std::getline(input, raw)) {
    ++line_no;
    const auto hash = raw.find('#');
    if (hash != std::string::npos) raw.erase(hash);
    std::vector<std::string> tokens = tokenize(raw);
    if (tokens.empty()) continue;

    if (!have_header) {
      if (tokens.size() != 2 || tokens[0].rfind("d=", 0) != 0 ||
          tokens[1].rfind("n=", 0) != 0) {
        throw ParseError(line_no, "expected header 'd=<int> n=<int>'");
      }
      d = static_cast<int>(parse_int(tokens[0].substr(2), line_no));
      n = static_cast<int>(parse_int(tokens[1].substr(2), line_no));
      if (d < 2) throw ParseError(line_no, "d must be >= 2");
      if (n < 1) throw ParseError(line_no, "n must be >= 1");
      graph.emplace(d, n);
      have_header = true;
      continue;
    }

    const std::string& kind = tokens[0];
    if (kind != "edge" && kind != "phase") {
      throw ParseError(line_no, "unknown directive '" + kind + "'");
    }
    const auto colon = std::find(tokens.begin() + 1, tokens.end(), ":");
    if (colon == tokens.end() || colon == tokens.begin() + 1) {
      throw ParseError(line_no, "expected '<vertices> : <values>'");
    }
    std::vector<int> vertices;
    for (auto it = tokens.begin() + 1; it != colon; ++it) {
      const long v = parse_int(*it, line_no);
      vertices.push_back(static_cast<int>(v));
    }
    try {
      if (kind == "edge") {
        if (colon + 1 == tokens.end() || colon + 2 != tokens.end()) {
          throw ParseError(line_no, "edge needs exactly one weight");
        }
        graph->add_edge(std::move(vertices),
                        parse_weight(*(colon + 1), alpha, line_no));
      } else {
        std::vector<double> exponents;
        for (auto it = colon + 1; it != tokens.end(); ++it) {
          exponents.push_back(parse_weight(*it, alpha, line_no));
        }
        graph->add_phase_edge(std::move(vertices), std::move(exponents));
      }
    } catch (const std::invalid_argument& err) {
      throw ParseError(line_no, err.what());
    }
  }

  if (!have_header) throw ParseError(line_no, "missing 'd=<int> n=<int>' header");
  return *std::move(graph);
}

std::string serialize_hypergraph(const WeightedHypergraph& g) {
  std::string out = "d=" + std::to_string(g.qudit_dim()) +
                    " n=" + std::to_string(g.sites()) + "\n";
  for (const Hyperedge& e : g.edges()) {
    out += "edge";
    for (int v : e.vertices) out += " " + std::to_string(v);
    out += " : " + format_weight(e.weight) + "\n";
  }
  for (const PhaseEdge& e : g.phase_edges()) {
    out += "phase";
    for (int v : e.vertices) out += " " + std::to_string(v);
    out += " :";
    for (double x : e.exponents) out += " " + format_weight(x);
    out += "\n";
  }
  return out;
}

}  // namespace nsghz
