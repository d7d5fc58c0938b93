#include "plumbtight/report.hpp"

#include <algorithm>
#include <iomanip>
#include <set>
#include <sstream>

#include "json.hpp"
#include "plumbtight/slopes.hpp"

namespace plumbtight {

namespace {

using Json = nlohmann::ordered_json;

Json integer_json(const Integer& z) {
  if (z.fits_slong_p()) return z.get_si();
  return z.get_str();
}

Json presentation_json(const Presentation& p) {
  Json a = Json::array();
  for (const auto& leg : p.n) a.push_back(leg);
  return a;
}

Json graph_json(const PlumbingGraph& g) {
  Json legs = Json::array();
  for (const auto& leg : g.legs) legs.push_back(leg);
  return Json{{"center", g.center_weight}, {"legs", legs}};
}

Json verification_json(const Verification& v) {
  Json j = Json::object();
  auto put = [&](const char* key, const std::optional<bool>& b) {
    if (b) j[key] = *b;
  };
  put("oracle", v.oracle);
  put("oracle_l_space", v.oracle_l_space);
  put("slopes", v.slopes);
  put("ot_implication", v.ot_implication);
  j["mismatches"] = v.mismatches;
  return j;
}

std::string csv_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

std::string yes_no(const std::optional<bool>& b) { return b ? (*b ? "yes" : "NO") : "-"; }

}  // namespace

std::string verdict_name(VerdictKind k) { return k == VerdictKind::proper_ends ? "tight" : "overtwisted"; }

Verification verify(const Manifold& m, const ClassificationReport& r, bool oracle, bool slopes,
                    const OracleOptions& options) {
  Verification v;
  if (oracle) {
    const TightnessOracle o(m, options);
    v.oracle = true;
    for (const Component& c : r.classes)
      for (const Presentation& p : c.members)
        if (o.tight(p) != (c.verdict == VerdictKind::proper_ends)) {
          v.oracle = false;
          v.mismatches.push_back("oracle " + p.to_json());
        }
    v.oracle_l_space = o.result().l_space() == l_space_test(m.seifert());
  }
  if (slopes) {
    std::vector<Presentation> tight;
    std::vector<std::vector<Presentation>> walker;
    v.ot_implication = true;
    for (const Component& c : r.classes) {
      if (c.verdict == VerdictKind::proper_ends) {
        tight.insert(tight.end(), c.members.begin(), c.members.end());
        walker.push_back(c.members);
      } else {
        continue;
      }
      for (const Presentation& p : c.members)
        if (ot_check(p, m.gamma())) {
          v.ot_implication = false;
          v.mismatches.push_back("ot " + p.to_json());
        }
    }
    std::sort(tight.begin(), tight.end());
    std::sort(walker.begin(), walker.end());
    const auto closure = isotopy_closure(tight, m.gamma());
    v.slopes = closure == walker;
    if (!*v.slopes) v.mismatches.push_back("slopes partition");
  }
  return v;
}

std::string report_json(const ClassificationReport& r, const Verification* v, int indent, std::optional<double> timing_ms) {
  Json doc;
  doc["manifold"] = r.manifold.str();
  doc["l_space"] = true;
  doc["h1"] = integer_json(r.h1);
  doc["gamma"] = graph_json(r.gamma);
  doc["gamma_dual"] = graph_json(r.dual);
  doc["presentations"] = r.presentation_count;
  doc["tight_classes"] = r.tight_count();
  Json classes = Json::array();
  for (const Component& c : r.classes) {
    Json jc;
    jc["verdict"] = verdict_name(c.verdict);
    Json members = Json::array();
    for (const Presentation& p : c.members) members.push_back(presentation_json(p));
    jc["members"] = members;
    jc["spin_c"] = c.spin_c;
    jc["d3"] = c.d3 ? Json(c.d3->str()) : Json(nullptr);
    jc["d"] = c.d ? Json(c.d->str()) : Json(nullptr);
    jc["initial_end"] = c.verdict == VerdictKind::proper_ends ? Json(c.initial_end) : Json(nullptr);
    jc["terminal_end"] = c.verdict == VerdictKind::proper_ends ? Json(c.terminal_end) : Json(nullptr);
    classes.push_back(jc);
  }
  doc["classes"] = classes;
  if (v) doc["verification"] = verification_json(*v);
  if (timing_ms) doc["timing_ms"] = *timing_ms;
  return doc.dump(indent);
}

std::string report_csv_header() { return "manifold,h1,class,verdict,size,spin_c,d3,d,members,oracle,slopes\n"; }

std::string report_csv(const ClassificationReport& r, const Verification* v) {
  std::ostringstream os;
  for (std::size_t i = 0; i < r.classes.size(); ++i) {
    const Component& c = r.classes[i];
    std::string members;
    for (const Presentation& p : c.members) members += (members.empty() ? "" : ";") + p.to_json();
    auto opt = [&](const std::optional<bool>& b) -> std::string { return b ? (*b ? "true" : "false") : ""; };
    os << csv_quote(r.manifold.str()) << ',' << r.h1.get_str() << ',' << i << ',' << verdict_name(c.verdict) << ','
       << c.members.size() << ',' << csv_quote(c.spin_c) << ',' << (c.d3 ? c.d3->str() : "") << ','
       << (c.d ? c.d->str() : "") << ',' << csv_quote(members) << ',' << (v ? opt(v->oracle) : "") << ','
       << (v ? opt(v->slopes) : "") << '\n';
  }
  return os.str();
}

std::string report_table(const ClassificationReport& r, const Verification* v) {
  std::ostringstream os;
  os << "M(" << r.manifold.str() << ")  |H1| = " << r.h1.get_str() << "  presentations = " << r.presentation_count
     << "  tight classes = " << r.tight_count() << '\n';
  os << "  Gamma  " << r.gamma.to_json() << "\n  Gamma' " << r.dual.to_json() << '\n';
  for (std::size_t i = 0; i < r.classes.size(); ++i) {
    const Component& c = r.classes[i];
    os << "  [" << i << "] " << std::left << std::setw(12) << verdict_name(c.verdict);
    if (c.d) os << "d3 = d = " << c.d->str() << "  ";
    else if (c.d3) os << "d3 = " << c.d3->str() << "  ";
    os << "spin^c " << c.spin_c << '\n';
    for (const Presentation& p : c.members) os << "        " << format_presentation(r.gamma, p) << '\n';
  }
  if (v) {
    os << "  verify: oracle " << yes_no(v->oracle) << ", oracle l-space " << yes_no(v->oracle_l_space) << ", slopes "
       << yes_no(v->slopes) << ", ot implication " << yes_no(v->ot_implication) << '\n';
    for (const auto& s : v->mismatches) os << "    mismatch " << s << '\n';
  }
  return os.str();
}

}  // namespace plumbtight
