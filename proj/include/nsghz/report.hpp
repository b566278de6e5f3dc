// Verification reports: a named check producing metrics with pass/fail
// thresholds, renderable as human text or as byte-stable JSON-lines records.

#pragma once

#include <string>
#include <utility>
#include <vector>

namespace nsghz {

struct Metric {
  enum class Kind {
    ResidualBelow,    // pass iff value < threshold (strict; threshold 0 fails)
    FidelityAtLeast,  // pass iff value >= 1 - threshold
    Flag,             // pass iff value != 0
  };
  std::string name;
  double value = 0.0;
  double threshold = 0.0;
  Kind kind = Kind::ResidualBelow;
  bool pass = false;
};

struct VerificationReport {
  std::string id;  // external check id, e.g. "prop1"
  std::vector<std::pair<std::string, std::string>> params;
  std::vector<Metric> metrics;
  std::vector<std::string> notes;
  double elapsed_seconds = 0.0;  // never rendered into records

  void add_param(const std::string& key, const std::string& value);
  void add_param(const std::string& key, long long value);
  void add_param(const std::string& key, double value);
  void add_residual(const std::string& name, double value, double tol);
  void add_fidelity(const std::string& name, double value, double tol);
  void add_flag(const std::string& name, bool ok);

  bool passed() const;  // all metrics pass
};

std::string format_double(double v);  // %.17g, round-trip exact

std::string render_text(const VerificationReport& report);
// One JSON object per metric per line; key order and float formatting are
// deterministic, and no timing data is included, so output is byte-stable.
std::string render_records(const VerificationReport& report);
std::string render_records(const std::vector<VerificationReport>& reports);

}  // namespace nsghz
