#include <algorithm>
#include <atomic>
#include <chrono>
#include <condition_variable>
#include <iostream>
#include <mutex>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "plumbtight/fullpath.hpp"
#include "plumbtight/oracle.hpp"
#include "plumbtight/plumbing.hpp"
#include "plumbtight/report.hpp"
#include "plumbtight/slopes.hpp"

namespace pt = plumbtight;
using Json = nlohmann::ordered_json;

namespace {

enum ExitCode : int { ok = 0, parse_error = 1, not_l_space = 2, invariant_violation = 3, capacity_exceeded = 4 };

class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Flags {
  std::string format = "table";
  std::string verify;
  unsigned jobs = 1;
  int max_alpha = 4;
  bool timing = false;
};

bool wants_oracle(const Flags& f) { return f.verify == "oracle" || f.verify == "all"; }
bool wants_slopes(const Flags& f) { return f.verify == "slopes" || f.verify == "all"; }

pt::SeifertData parse_manifold(const std::string& text) {
  try {
    auto s = pt::SeifertData::parse(text);
    if (s.e0 != -1) throw ParseError("only e0 = -1 is supported, got " + std::to_string(s.e0));
    return s;
  } catch (const ParseError&) {
    throw;
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  } catch (const std::domain_error& e) {
    throw ParseError(e.what());
  }
}

pt::Presentation parse_presentation(const pt::PlumbingGraph& gamma, const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error&) {
    throw ParseError("n-matrix must look like [[0],[1],[0,2]], got '" + text + "'");
  }
  pt::Presentation p;
  if (!j.is_array() || j.size() != 3) throw ParseError("n-matrix needs exactly three legs");
  for (int i = 0; i < 3; ++i) {
    if (!j[i].is_array() || j[i].size() != gamma.legs[i].size())
      throw ParseError("leg " + std::to_string(i) + " of the n-matrix needs " + std::to_string(gamma.legs[i].size()) +
                       " entries");
    for (const auto& x : j[i]) {
      if (!x.is_number_integer()) throw ParseError("n-matrix entries must be integers");
      p.n[i].push_back(x.get<int>());
    }
  }
  if (!pt::in_range(gamma, p)) throw ParseError("n-matrix entry out of range for " + gamma.to_json());
  return p;
}

pt::OracleOptions oracle_options(const Flags& f) {
  pt::OracleOptions o;
  o.jobs = f.jobs;
  return o;
}

struct Rendered {
  std::string text;
  bool verified = true;
};

bool all_true(const pt::Verification& v) {
  for (const auto& b : {v.oracle, v.oracle_l_space, v.slopes, v.ot_implication})
    if (b && !*b) return false;
  return true;
}

// Manifold-level parallelism already uses the workers, so the oracle runs single-threaded here.
Rendered render(const pt::SeifertData& s, const Flags& f, unsigned oracle_jobs, bool first_csv_row) {
  const auto start = std::chrono::steady_clock::now();
  if (auto pair = pt::realizing_pair(s)) throw pt::NotLSpaceError(s, *pair);
  const pt::Manifold m(s);
  const pt::ClassificationReport r = pt::classify(m);
  std::optional<pt::Verification> v;
  if (!f.verify.empty()) {
    pt::OracleOptions o;
    o.jobs = oracle_jobs;
    v = pt::verify(m, r, wants_oracle(f), wants_slopes(f), o);
  }
  const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  Rendered out;
  out.verified = !v || all_true(*v);
  const pt::Verification* vp = v ? &*v : nullptr;
  if (f.format == "json") {
    out.text = pt::report_json(r, vp, 2, f.timing ? std::optional<double>(ms) : std::nullopt) + "\n";
  } else if (f.format == "jsonl") {
    out.text = pt::report_json(r, vp, -1, f.timing ? std::optional<double>(ms) : std::nullopt) + "\n";
  } else if (f.format == "csv") {
    out.text = (first_csv_row ? pt::report_csv_header() : "") + pt::report_csv(r, vp);
  } else {
    out.text = pt::report_table(r, vp);
    if (f.timing) out.text += "  time " + std::to_string(ms) + " ms\n";
  }
  return out;
}

int cmd_classify(const std::string& input, const Flags& f) {
  const auto s = parse_manifold(input);
  const Rendered out = render(s, f, f.jobs, true);
  std::cout << out.text;
  return out.verified ? ok : invariant_violation;
}

std::vector<pt::SeifertData> sweep_inputs(int max_alpha) {
  std::vector<pt::Rational> fr;
  for (int q = 2; q <= max_alpha; ++q)
    for (int p = 1; p < q; ++p)
      if (std::gcd(p, q) == 1) fr.emplace_back(pt::Integer(p), pt::Integer(q));
  std::sort(fr.begin(), fr.end(), [](const pt::Rational& a, const pt::Rational& b) { return a > b; });
  std::vector<pt::SeifertData> out;
  for (std::size_t i = 0; i < fr.size(); ++i)
    for (std::size_t j = i; j < fr.size(); ++j)
      for (std::size_t k = j; k < fr.size(); ++k) {
        auto s = pt::SeifertData::make(-1, {fr[i], fr[j], fr[k]});
        if (pt::l_space_test(s)) out.push_back(s);
      }
  return out;
}

int cmd_sweep(const Flags& f) {
  if (f.max_alpha < 2) throw ParseError("--max-alpha must be at least 2");
  const auto inputs = sweep_inputs(f.max_alpha);
  Flags per = f;
  if (per.format == "json") per.format = "jsonl";

  struct Slot {
    std::optional<std::string> text;
    int code = ok;
  };
  std::vector<Slot> slots(inputs.size());
  std::mutex mu;
  std::condition_variable ready;
  std::atomic<std::size_t> next{0};

  auto work = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < inputs.size();) {
      Slot s;
      try {
        const Rendered r = render(inputs[i], per, 1, i == 0);
        s.text = r.text;
        s.code = r.verified ? ok : invariant_violation;
      } catch (const pt::CapacityError& e) {
        s.code = capacity_exceeded;
        s.text = per.format == "jsonl" ? Json{{"manifold", inputs[i].str()}, {"error", e.what()}}.dump() + "\n"
                                       : (per.format == "csv" && i == 0 ? pt::report_csv_header() : std::string());
        std::cerr << inputs[i].str() << ": " << e.what() << '\n';
      } catch (const std::logic_error& e) {
        s.code = invariant_violation;
        s.text = per.format == "jsonl" ? Json{{"manifold", inputs[i].str()}, {"error", e.what()}}.dump() + "\n"
                                       : (per.format == "csv" && i == 0 ? pt::report_csv_header() : std::string());
        std::cerr << inputs[i].str() << ": invariant violation: " << e.what() << '\n';
      }
      {
        std::lock_guard lock(mu);
        slots[i] = std::move(s);
      }
      ready.notify_all();
    }
  };

  const unsigned jobs = std::max(1u, f.jobs);
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(work);

  int code = ok;
  for (std::size_t i = 0; i < inputs.size(); ++i) {
    std::unique_lock lock(mu);
    ready.wait(lock, [&] { return slots[i].text.has_value(); });
    std::cout << *slots[i].text << std::flush;
    if (slots[i].code == invariant_violation || code == ok) code = slots[i].code;
  }
  for (auto& t : pool) t.join();
  return code;
}

void print_json_or(const Flags& f, const Json& j, const std::string& text) {
  if (f.format == "json") std::cout << j.dump(2) << '\n';
  else std::cout << text;
}

// The lattice search needs a negative definite dual form, which holds exactly when e(M) > 0.
bool dual_definite(const pt::SeifertData& s) { return (pt::Rational(s.e0) + s.r[0] + s.r[1] + s.r[2]).sign() > 0; }

int cmd_d3(const std::string& input, const std::string& matrix, const Flags& f) {
  const auto s = parse_manifold(input);
  if (pt::homology_order(s) == 0) {
    if (auto pair = pt::realizing_pair(s)) throw pt::NotLSpaceError(s, *pair);
    throw ParseError(s.str() + " has infinite H1");
  }
  const auto gamma = pt::build_gamma(s);
  const auto p = parse_presentation(gamma, matrix);
  const auto via_gamma = pt::d3_via_gamma(gamma, p);
  const auto via_x = pt::d3_via_x(gamma, p);
  if (via_gamma != via_x) throw pt::InvariantError("d3 disagreement: " + via_gamma.str() + " vs " + via_x.str());
  print_json_or(f, Json{{"manifold", s.str()}, {"presentation", Json::parse(p.to_json())}, {"d3", via_gamma.str()}},
                via_gamma.str() + "\n");
  return ok;
}

int cmd_dinv(const std::string& input, const std::optional<std::string>& matrix, const Flags& f) {
  const auto s = parse_manifold(input);
  if (!dual_definite(s)) {
    if (auto pair = pt::realizing_pair(s)) throw pt::NotLSpaceError(s, *pair);
    throw ParseError(s.str() + " has no negative definite dual plumbing");
  }
  const pt::Manifold m(s);
  const pt::OracleResult res = pt::osz_good_vectors(m.dual(), oracle_options(f));
  if (matrix) {
    const auto p = parse_presentation(m.gamma(), *matrix);
    const pt::Covector k = m.dual_covector(pt::canonical_sign_vector(m.gamma(), m.basis(), p));
    const pt::Rational d = -pt::d_invariant(m.dual(), res, k);
    print_json_or(f,
                  Json{{"manifold", s.str()},
                       {"presentation", Json::parse(p.to_json())},
                       {"spin_c", m.spin_c_string(k)},
                       {"d", d.str()}},
                  d.str() + "\n");
    return ok;
  }
  Json classes = Json::array();
  std::ostringstream text;
  for (const auto& c : res.classes) {
    const pt::Rational d = -c.d_minus;
    const std::string label = m.spin_c_string(pt::Covector(c.label.begin(), c.label.end()));
    classes.push_back(Json{{"spin_c", label}, {"d", d.str()}, {"good_vectors", c.good_initial.size()}});
    text << label << ' ' << d.str() << '\n';
  }
  print_json_or(f, Json{{"manifold", s.str()}, {"classes", classes}}, text.str());
  return ok;
}

int cmd_lspace(const std::string& input, const Flags& f) {
  const auto s = parse_manifold(input);
  const auto pair = pt::realizing_pair(s);
  Json j{{"manifold", s.str()}, {"l_space", !pair.has_value()}};
  if (pair) j["realizing_pair"] = {pair->m, pair->a};
  std::string text = pair ? "false\n" : "true\n";
  if (wants_oracle(f) && !dual_definite(s)) {
    j["oracle_l_space"] = nullptr;
    text += "oracle n/a (dual form not negative definite)\n";
  } else if (wants_oracle(f)) {
    const bool o = pt::oracle_l_space(pt::build_gamma_dual(s), oracle_options(f));
    j["oracle_l_space"] = o;
    text += std::string("oracle ") + (o ? "true" : "false") + "\n";
    if (o == pair.has_value()) {
      print_json_or(f, j, text);
      return invariant_violation;
    }
  }
  print_json_or(f, j, text);
  return ok;
}

int cmd_dual(const std::string& input, const Flags& f) {
  const auto s = parse_manifold(input);
  const auto gamma = pt::build_gamma(s);
  const auto dual = pt::build_gamma_dual(s);
  print_json_or(f, Json{{"manifold", s.str()}, {"gamma", Json::parse(gamma.to_json())}, {"gamma_dual", Json::parse(dual.to_json())}},
                "gamma  " + gamma.to_json() + "\ngamma' " + dual.to_json() + "\n");
  return ok;
}

int cmd_slopes(const std::string& input, const std::optional<std::string>& matrix, const Flags& f) {
  const auto s = parse_manifold(input);
  const auto gamma = pt::build_gamma(s);
  Json legs = Json::array();
  std::ostringstream text;
  for (int i = 0; i < 3; ++i) {
    const auto cf = pt::neg_cf_expand(s.r[i]);
    const auto mat = pt::cf_to_matrix(cf);
    const auto crit = pt::critical_slope(s, i);
    legs.push_back(Json{{"r", s.r[i].str()},
                        {"cf", cf.digits},
                        {"matrix", {{mat.a.get_str(), mat.b.get_str()}, {mat.c.get_str(), mat.d.get_str()}}},
                        {"critical_slope", crit.str()}});
    text << "leg " << i << "  r = " << s.r[i].str() << "  cf = [";
    for (std::size_t j = 0; j < cf.digits.size(); ++j) text << (j ? "," : "") << cf.digits[j];
    text << "]  matrix ((" << mat.a.get_str() << ',' << mat.b.get_str() << "),(" << mat.c.get_str() << ','
         << mat.d.get_str() << "))  critical " << crit.str() << '\n';
  }
  Json j{{"manifold", s.str()}, {"legs", legs}};
  if (matrix) {
    const auto p = parse_presentation(gamma, *matrix);
    const bool ot = pt::ot_check(p, gamma);
    Json moves = Json::array();
    text << "presentation " << p.to_json() << "  ot_check " << (ot ? "true" : "false") << '\n';
    for (const auto& q : pt::isotopy_moves(p, gamma)) {
      moves.push_back(Json::parse(q.to_json()));
      text << "  move -> " << q.to_json() << '\n';
    }
    j["presentation"] = Json::parse(p.to_json());
    j["ot_check"] = ot;
    j["isotopy_moves"] = moves;
  }
  print_json_or(f, j, text.str());
  return ok;
}

int cmd_oracle(const std::string& input, const Flags& f) {
  const auto s = parse_manifold(input);
  if (auto pair = pt::realizing_pair(s)) throw pt::NotLSpaceError(s, *pair);
  const pt::Manifold m(s);
  const pt::TightnessOracle o(m, oracle_options(f));
  Json rows = Json::array();
  std::ostringstream text;
  text << "M(" << s.str() << ")  oracle l-space " << (o.result().l_space() ? "true" : "false") << "  good vectors "
       << o.result().good_count << " / " << o.result().box_size << '\n';
  for (const auto& p : pt::enumerate_presentations(m.gamma())) {
    const bool tight = o.tight(p);
    const auto d3 = pt::d3_via_gamma(m.gamma(), p);
    const auto d = o.d(p);
    rows.push_back(Json{{"presentation", Json::parse(p.to_json())},
                        {"verdict", tight ? "tight" : "overtwisted"},
                        {"d3", d3.str()},
                        {"d", d.str()}});
    text << "  " << pt::format_presentation(m.gamma(), p) << "  " << (tight ? "tight      " : "overtwisted")
         << "  d3 = " << d3.str() << "  d = " << d.str() << '\n';
  }
  print_json_or(f,
                Json{{"manifold", s.str()},
                     {"l_space", o.result().l_space()},
                     {"box_size", o.result().box_size},
                     {"good_vectors", o.result().good_count},
                     {"presentations", rows}},
                text.str());
  return ok;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Tight contact structures on small Seifert L-spaces via full paths"};
  app.require_subcommand(1);
  Flags flags;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", flags.format, "Output format")->check(CLI::IsMember({"json", "csv", "table"}));
    sub->add_option("--jobs", flags.jobs, "Worker threads")->check(CLI::PositiveNumber);
  };

  std::string manifold;
  std::optional<std::string> matrix;
  std::string required_matrix;

  auto* classify = app.add_subcommand("classify", "Classify all presentations of M(e0;r1,r2,r3)");
  classify->add_option("manifold", manifold, "Seifert data, e.g. -1;1/2,1/2,1/2")->required();
  add_common(classify);
  classify->add_option("--verify", flags.verify, "Cross-check against the oracle and/or slope moves")
      ->check(CLI::IsMember({"oracle", "slopes", "all"}));
  classify->add_flag("--timing", flags.timing, "Include wall time");

  auto* sweep = app.add_subcommand("sweep", "Classify every L-space M(-1;r1,r2,r3) with bounded denominators");
  add_common(sweep);
  sweep->add_option("--max-alpha", flags.max_alpha, "Largest denominator")->check(CLI::Range(2, 64));
  sweep->add_option("--verify", flags.verify, "Cross-check against the oracle and/or slope moves")
      ->check(CLI::IsMember({"oracle", "slopes", "all"}));
  sweep->add_flag("--timing", flags.timing, "Include wall time");

  auto* d3 = app.add_subcommand("d3", "d3 of one presentation");
  d3->add_option("manifold", manifold)->required();
  d3->add_option("n-matrix", required_matrix, "Stabilization counts, e.g. [[0],[1],[1]]")->required();
  add_common(d3);

  auto* dinv = app.add_subcommand("dinv", "d-invariants per spin^c, or of one presentation's spin^c");
  dinv->add_option("manifold", manifold)->required();
  dinv->add_option("n-matrix", matrix);
  add_common(dinv);

  auto* lspace = app.add_subcommand("lspace", "L-space test by realizability");
  lspace->add_option("manifold", manifold)->required();
  add_common(lspace);
  lspace->add_option("--verify", flags.verify, "Also run the oracle")->check(CLI::IsMember({"oracle", "all"}));

  auto* dual = app.add_subcommand("dual", "Plumbing graph and its dual");
  dual->add_option("manifold", manifold)->required();
  add_common(dual);

  auto* slopes = app.add_subcommand("slopes", "Leg slopes, critical slopes, ot_check and isotopy moves");
  slopes->add_option("manifold", manifold)->required();
  slopes->add_option("n-matrix", matrix);
  add_common(slopes);

  auto* oracle = app.add_subcommand("oracle", "Per-presentation d3 = d verdicts from the lattice search");
  oracle->add_option("manifold", manifold)->required();
  add_common(oracle);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? ok : parse_error;
  }

  try {
    if (*classify) return cmd_classify(manifold, flags);
    if (*sweep) return cmd_sweep(flags);
    if (*d3) return cmd_d3(manifold, required_matrix, flags);
    if (*dinv) return cmd_dinv(manifold, matrix, flags);
    if (*lspace) return cmd_lspace(manifold, flags);
    if (*dual) return cmd_dual(manifold, flags);
    if (*slopes) return cmd_slopes(manifold, matrix, flags);
    if (*oracle) return cmd_oracle(manifold, flags);
  } catch (const pt::NotLSpaceError& e) {
    std::cerr << "plumbtight: " << e.what() << '\n';
    return not_l_space;
  } catch (const ParseError& e) {
    std::cerr << "plumbtight: " << e.what() << '\n';
    return parse_error;
  } catch (const pt::CapacityError& e) {
    std::cerr << "plumbtight: " << e.what() << " (raise PLUMBTIGHT_CAP to allow it)\n";
    return capacity_exceeded;
  } catch (const std::logic_error& e) {
    std::cerr << "plumbtight: internal invariant violated: " << e.what() << '\n';
    return invariant_violation;
  } catch (const std::exception& e) {
    std::cerr << "plumbtight: " << e.what() << '\n';
    return parse_error;
  }
  return ok;
}
