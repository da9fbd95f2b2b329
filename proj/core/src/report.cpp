#include "tubeb/report.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>

#include "tubeb/errors.hpp"

namespace tubeb {

CheckReport make_check(std::string id, std::string anchor, double expected,
                       std::string provenance, double observed, double std_error,
                       double rel_tol, double abs_tol) {
  CheckReport c;
  c.id = std::move(id);
  c.anchor = std::move(anchor);
  c.expected = expected;
  c.provenance = std::move(provenance);
  c.observed = observed;
  c.std_error = std_error;
  c.tol = std::max({3.0 * std_error, rel_tol * std::fabs(expected), abs_tol});
  c.pass = std::isfinite(observed) && std::fabs(observed - expected) <= c.tol;
  return c;
}

CheckReport make_count_check(std::string id, std::string anchor, long violations,
                             std::string provenance) {
  return make_check(std::move(id), std::move(anchor), 0.0, std::move(provenance),
                    static_cast<double>(violations), 0.0, 0.0, 0.0);
}

void SuiteConfig::validate() const {
  domain.validate();
  quad.validate();
  if (!(rel_tol >= 0.0)) throw ConfigError("SuiteConfig: rel_tol must be nonnegative");
  if (format != "json" && format != "csv") {
    throw ConfigError("SuiteConfig: format must be json or csv");
  }
  if (jobs < 1) throw ConfigError("SuiteConfig: jobs must be positive");
}

bool all_pass(const std::vector<CheckReport>& checks) {
  for (const auto& c : checks) {
    if (!c.pass) return false;
  }
  return true;
}

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

namespace {

std::string json_escape(const std::string& s) {
  std::string out;
  out.reserve(s.size() + 2);
  for (char ch : s) {
    switch (ch) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      default: out += ch;
    }
  }
  return out;
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  out += '"';
  return out;
}

void append_check_json(std::string& out, const CheckReport& c) {
  out += "{\"id\":\"" + json_escape(c.id) + "\"";
  out += ",\"anchor\":\"" + json_escape(c.anchor) + "\"";
  out += ",\"expected\":" + format_double(c.expected);
  out += ",\"provenance\":\"" + json_escape(c.provenance) + "\"";
  out += ",\"observed\":" + format_double(c.observed);
  out += ",\"stderr\":" + format_double(c.std_error);
  out += ",\"tol\":" + format_double(c.tol);
  out += std::string(",\"pass\":") + (c.pass ? "true" : "false");
  out += ",\"seconds\":" + format_double(c.seconds);
  out += "}";
}

}  // namespace

std::string to_json(const SuiteConfig& cfg, const std::vector<CheckReport>& checks) {
  std::string out = "{\"suite\":\"" + json_escape(cfg.suite) + "\"";
  out += ",\"config\":{";
  out += "\"n\":" + std::to_string(cfg.domain.n);
  out += ",\"alpha\":" + format_double(cfg.domain.alpha);
  out += ",\"samples\":" + std::to_string(cfg.quad.samples);
  out += ",\"seed\":" + std::to_string(cfg.quad.seed);
  out += ",\"kappa\":" + format_double(cfg.quad.kappa_or(cfg.domain.alpha));
  out += "}";
  out += ",\"checks\":[";
  for (std::size_t k = 0; k < checks.size(); ++k) {
    if (k) out += ",";
    append_check_json(out, checks[k]);
  }
  out += "]";
  out += std::string(",\"all_pass\":") + (all_pass(checks) ? "true" : "false");
  out += "}\n";
  return out;
}

std::string to_csv(const std::vector<CheckReport>& checks) {
  std::string out = "id,anchor,expected,provenance,observed,stderr,tol,pass,seconds\n";
  for (const auto& c : checks) {
    out += csv_escape(c.id) + "," + csv_escape(c.anchor) + "," + format_double(c.expected) +
           "," + csv_escape(c.provenance) + "," +
           format_double(c.observed) + "," + format_double(c.std_error) + "," +
           format_double(c.tol) + "," + (c.pass ? "true" : "false") + "," +
           format_double(c.seconds) + "\n";
  }
  return out;
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw ConfigError("cannot open for writing: " + path);
  f << content;
  if (!f) throw ConfigError("write failed: " + path);
}

}  // namespace tubeb
