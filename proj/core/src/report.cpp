#include <nlohmann/json.hpp>

#include <sstream>

#include "anomaly/verify.hpp"

namespace anomaly {

using json = nlohmann::ordered_json;

namespace {

std::string dump(const json& j, bool pretty) { return pretty ? j.dump(2) + "\n" : j.dump(); }

json setting_json(const Setting& s) {
  return json{{"kind", to_string(s.kind)},        {"k", s.k},
              {"l", s.l},                          {"q_order", s.q_order},
              {"weight", s.weight()},              {"series_order", s.series_order()}};
}

}  // namespace

std::string report_json(const VerificationReport& r, bool pretty) {
  json j;
  j["schema"] = 1;
  j["type"] = "verification";
  j["theorem"] = r.theorem;
  j["setting"] = setting_json(r.setting);
  j["status"] = to_string(r.status);
  json h = json::array();
  for (std::size_t i = 0; i < r.h.size(); ++i) {
    const auto& p = r.h[i];
    h.push_back(json{{"r", i},
                     {"normalized", p.attached() ? p.str() : "0"},
                     {"standard", p.attached() ? to_standard_basis(p).str() : "0"}});
  }
  j["h"] = h;
  json coeffs = json::array();
  for (const auto& row : r.solve_coeffs) {
    json jr = json::array();
    for (const auto& c : row) jr.push_back(c.str());
    coeffs.push_back(jr);
  }
  j["solve_coeffs"] = coeffs;
  j["integral"] = r.integral;
  json res = json::array();
  for (const auto& x : r.residuals) {
    json e{{"name", x.name}, {"role", to_string(x.role)}};
    if (!x.variant_of.empty()) e["variant_of"] = x.variant_of;
    e["zero"] = x.zero;
    e["value"] = x.value;
    res.push_back(e);
  }
  j["residuals"] = res;
  j["notes"] = r.notes;
  if (r.seconds) j["seconds"] = *r.seconds;
  return dump(j, pretty);
}

std::string audit_json(const DivisibilityAudit& a, bool pretty) {
  json j;
  j["schema"] = 1;
  j["type"] = "divisibility";
  j["corollary"] = a.corollary;
  j["m"] = a.m;
  j["k"] = a.k;
  j["l"] = a.l;
  j["assumed_v2_h"] = a.assumed_v2_h;
  json terms = json::array();
  for (const auto& t : a.terms) terms.push_back(json{{"r", t.r}, {"exponent", t.exponent}});
  j["terms"] = terms;
  j["implied_exponent"] = a.implied_exponent ? json(*a.implied_exponent) : json(nullptr);
  j["claimed_exponent"] = a.claimed_exponent;
  j["outcome"] = a.gap ? "GAP" : "PASS";
  j["integral"] = a.integral ? json(*a.integral) : json(nullptr);
  return dump(j, pretty);
}

std::string render_text(const std::string& text) {
  const json j = json::parse(text);
  std::ostringstream os;
  const std::string type = j.value("type", "");
  if (type == "verification") {
    const auto& s = j["setting"];
    os << "theorem " << j["theorem"].get<std::string>() << "  " << s["kind"].get<std::string>()
       << "  k=" << s["k"] << " l=" << s["l"] << " q_order=" << s["q_order"] << "  "
       << j["status"].get<std::string>() << "\n";
    for (const auto& h : j["h"])
      os << "  h" << h["r"] << " = " << h["standard"].get<std::string>() << "\n";
    os << "  solve coefficients " << (j["integral"].get<bool>() ? "integral" : "NOT integral") << "\n";
    for (const auto& r : j["residuals"]) {
      os << "  [" << (r["zero"].get<bool>() ? "zero" : "NONZERO") << "] " << r["name"].get<std::string>() << " ("
         << r["role"].get<std::string>() << ")";
      if (!r["zero"].get<bool>()) os << ": " << r["value"].get<std::string>();
      os << "\n";
    }
    for (const auto& n : j["notes"]) os << "  note: " << n.get<std::string>() << "\n";
    if (j.contains("seconds")) os << "  time " << j["seconds"].get<double>() << " s\n";
  } else if (type == "divisibility") {
    os << "corollary " << j["corollary"].get<std::string>() << "  m=" << j["m"] << " k=" << j["k"] << " l=" << j["l"]
       << " v2(h)=" << j["assumed_v2_h"] << "  ";
    if (j["implied_exponent"].is_null())
      os << "empty sum (trivially divisible)";
    else
      os << "implied 2^" << j["implied_exponent"] << " vs claimed 2^" << j["claimed_exponent"];
    os << "  " << j["outcome"].get<std::string>() << "\n";
  } else {
    os << j.dump(2) << "\n";
  }
  return os.str();
}

}  // namespace anomaly
