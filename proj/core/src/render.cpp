#include "cylo/render.hpp"

#include <sstream>

#include "json.hpp"

namespace cylo {

namespace {

using Json = nlohmann::ordered_json;

std::string witness_list(const std::vector<std::string>& w) {
  std::string out = "[";
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += ", ";
    out += w[i];
  }
  return out + "]";
}

}  // namespace

std::string render_text(const ValidationReport& rep) {
  std::ostringstream out;
  out << "== " << rep.subject() << "\n";
  int failed = 0;
  for (const auto& c : rep.checks()) {
    if (c.pass) {
      out << "ok   " << c.axiom;
      if (!c.detail.empty()) out << "  (" << c.detail << ")";
    } else {
      ++failed;
      out << "FAIL " << c.axiom;
      if (!c.witness.empty()) out << " " << witness_list(c.witness);
      if (!c.detail.empty()) out << " -- " << c.detail;
    }
    out << "\n";
  }
  if (failed == 0)
    out << rep.checks().size() << " checks, all passed\n";
  else
    out << rep.checks().size() << " checks, " << failed << " FAILED\n";
  return out.str();
}

std::string render_json(const ValidationReport& rep) {
  Json j;
  j["subject"] = rep.subject();
  j["ok"] = rep.ok();
  Json checks = Json::array();
  for (const auto& c : rep.checks()) {
    Json e;
    e["axiom"] = c.axiom;
    e["pass"] = c.pass;
    e["witness"] = c.witness;
    e["detail"] = c.detail;
    checks.push_back(std::move(e));
  }
  j["checks"] = std::move(checks);
  return j.dump(2) + "\n";
}

std::string render_text(const Lattice& lat, const FilterSpectrum& spec) {
  std::vector<bool> prime = prime_flags(lat, spec);
  std::ostringstream out;
  out << spec.size() << " proper filters ("
      << (spec.oracle_checked ? "cross-checked against the subset scan"
                              : "principal enumeration; carrier above the scan guard")
      << ")\n";
  for (int i = 0; i < spec.size(); ++i) {
    out << spec.names[i] << " = {";
    bool first = true;
    spec.filters[i].for_each([&](int a) {
      if (!first) out << ", ";
      out << lat.name(a);
      first = false;
    });
    out << "}";
    if (prime[i]) out << "  prime";
    out << "\n";
  }
  return out.str();
}

std::string render_json(const Lattice& lat, const FilterSpectrum& spec) {
  std::vector<bool> prime = prime_flags(lat, spec);
  Json j;
  j["count"] = spec.size();
  j["oracle_checked"] = spec.oracle_checked;
  Json filters = Json::array();
  for (int i = 0; i < spec.size(); ++i) {
    Json e;
    e["name"] = spec.names[i];
    Json members = Json::array();
    spec.filters[i].for_each([&](int a) { members.push_back(lat.name(a)); });
    e["members"] = std::move(members);
    e["generator"] = lat.name(spec.generators[i]);
    e["prime"] = static_cast<bool>(prime[i]);
    filters.push_back(std::move(e));
  }
  j["filters"] = std::move(filters);
  return j.dump(2) + "\n";
}

}  // namespace cylo
