#include "nsghz/report.hpp"

#include <cstdio>

#include <json.hpp>

namespace nsghz {

namespace {

bool metric_passes(const Metric& m) {
  switch (m.kind) {
    case Metric::Kind::ResidualBelow:
      return m.value < m.threshold;
    case Metric::Kind::FidelityAtLeast:
      return m.value >= 1.0 - m.threshold;
    case Metric::Kind::Flag:
      return m.value != 0.0;
  }
  return false;
}

}  // namespace

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

void VerificationReport::add_param(const std::string& key,
                                   const std::string& value) {
  params.emplace_back(key, value);
}

void VerificationReport::add_param(const std::string& key, long long value) {
  params.emplace_back(key, std::to_string(value));
}

void VerificationReport::add_param(const std::string& key, double value) {
  params.emplace_back(key, format_double(value));
}

void VerificationReport::add_residual(const std::string& name, double value,
                                      double tol) {
  Metric m{name, value, tol, Metric::Kind::ResidualBelow, false};
  m.pass = metric_passes(m);
  metrics.push_back(std::move(m));
}

void VerificationReport::add_fidelity(const std::string& name, double value,
                                      double tol) {
  Metric m{name, value, tol, Metric::Kind::FidelityAtLeast, false};
  m.pass = metric_passes(m);
  metrics.push_back(std::move(m));
}

void VerificationReport::add_flag(const std::string& name, bool ok) {
  Metric m{name, ok ? 1.0 : 0.0, 0.5, Metric::Kind::Flag, ok};
  metrics.push_back(std::move(m));
}

bool VerificationReport::passed() const {
  if (metrics.empty()) return false;
  for (const Metric& m : metrics) {
    if (!m.pass) return false;
  }
  return true;
}

std::string render_text(const VerificationReport& report) {
  std::string out = "check " + report.id;
  for (const auto& [key, value] : report.params) {
    out += " " + key + "=" + value;
  }
  out += "\n";
  for (const Metric& m : report.metrics) {
    out += std::string("  ") + (m.pass ? "pass" : "FAIL") + "  " + m.name +
           " = " + format_double(m.value);
    switch (m.kind) {
      case Metric::Kind::ResidualBelow:
        out += "  (require < " + format_double(m.threshold) + ")";
        break;
      case Metric::Kind::FidelityAtLeast:
        out += "  (require >= 1 - " + format_double(m.threshold) + ")";
        break;
      case Metric::Kind::Flag:
        out += "  (require true)";
        break;
    }
    out += "\n";
  }
  for (const std::string& note : report.notes) {
    out += "  note: " + note + "\n";
  }
  out += std::string("  result: ") + (report.passed() ? "pass" : "FAIL") + "\n";
  return out;
}

std::string render_records(const VerificationReport& report) {
  // One metric per line; ordered_json keeps insertion order, and doubles are
  // emitted with round-trip precision, so records are byte-stable.
  std::string out;
  for (const Metric& m : report.metrics) {
    nlohmann::ordered_json rec;
    rec["prop"] = report.id;
    nlohmann::ordered_json params = nlohmann::ordered_json::object();
    for (const auto& [key, value] : report.params) params[key] = value;
    rec["params"] = params;
    rec["metric"] = m.name;
    rec["value"] = m.value;
    switch (m.kind) {
      case Metric::Kind::ResidualBelow:
        rec["require"] = "lt";
        rec["threshold"] = m.threshold;
        break;
      case Metric::Kind::FidelityAtLeast:
        rec["require"] = "fidelity_ge";
        rec["threshold"] = 1.0 - m.threshold;
        break;
      case Metric::Kind::Flag:
        rec["require"] = "true";
        break;
    }
    rec["pass"] = m.pass;
    out += rec.dump();
    out += "\n";
  }
  return out;
}

std::string render_records(const std::vector<VerificationReport>& reports) {
  std::string out;
  for (const VerificationReport& r : reports) out += render_records(r);
  return out;
}

}  // namespace nsghz
