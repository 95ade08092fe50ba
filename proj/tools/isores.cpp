// Command-line front end: singularity profiles, residueless counts, chamber
// signatures, decorated-graph enumeration, batch scans and self-verification.
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "isores/boundary.hpp"
#include "isores/chambers.hpp"
#include "isores/counting.hpp"
#include "isores/fiber.hpp"
#include "isores/realgraphs.hpp"
#include "isores/verify.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace isores;

constexpr const char* kVersion = "1.0.0";

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitInvariant = 2;
constexpr int kExitResource = 3;

json json_stratum(const Stratum& s) {
  return json{{"mu", format_mu(s)},
              {"zero_orders", s.zero_orders},
              {"pole_orders", s.pole_orders}};
}

json json_form(const ResidueForm& f) {
  return json{{"coeffs", f.coeffs}, {"pretty", format_form(f)}};
}

const char* source_kind_name(SourceKind k) {
  switch (k) {
    case SourceKind::ZeroMerge: return "zero-merge";
    case SourceKind::Horizontal: return "horizontal";
    case SourceKind::Cherry: return "cherry";
  }
  return "?";
}

json json_source(const Source& src, const BigInt& mult, int p) {
  json j;
  j["kind"] = source_kind_name(src.kind);
  if (src.kind != SourceKind::ZeroMerge) {
    j["I"] = src.I;
    j["J"] = src.J;
    if (src.kind == SourceKind::Cherry) {
      std::vector<int> K;
      std::vector<char> taken(p + 1, 0);
      for (int v : src.I) taken[v] = 1;
      for (int v : src.J) taken[v] = 1;
      for (int v = 1; v <= p; ++v)
        if (!taken[v]) K.push_back(v);
      j["K"] = K;
    }
  }
  j["multiplicity"] = mult.str();
  return j;
}

json report_header(const std::string& command) {
  return json{{"tool", "isores"}, {"version", kVersion}, {"command", command}};
}

void emit(const json& report) { std::cout << report.dump(2) << "\n"; }

json profile_report(const Stratum& s) {
  const FiberProfile prof = profile(s);
  json rep = report_header("profile");
  rep["stratum"] = json_stratum(s);
  json records = json::array();
  for (const auto& e : prof.entries) {
    json r;
    r["kind"] = e.kind == SingKind::Zero ? "zero" : "pole";
    r["order"] = e.order;
    r["multiplicity"] = e.multiplicity.str();
    r["residue"] = json_form(e.residue);
    json sources = json::array();
    for (const auto& [src, mult] : e.sources)
      sources.push_back(json_source(src, mult, s.num_poles()));
    r["sources"] = sources;
    records.push_back(std::move(r));
  }
  rep["records"] = records;
  rep["degree"] = prof.degree.str();
  rep["euler_characteristic"] = euler_characteristic(prof).str();
  rep["num_components"] = prof.num_components;
  rep["genus_per_component"] = prof.genus_per_component.str();
  rep["all_poles_simple"] = json{{"mu_pattern", mu_all_poles_simple(s)},
                                 {"profile", profile_all_poles_simple(prof)}};
  rep["all_even"] = json{{"mu_pattern", mu_all_even(s)},
                         {"profile", profile_all_even(prof)}};
  rep["divisibility_factor"] = divisibility_factor(prof);
  return rep;
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::string token;
  std::stringstream ss(text);
  while (std::getline(ss, token, ',')) {
    try {
      out.push_back(std::stoi(token));
    } catch (const std::exception&) {
      throw Error(Errc::ParseError, "cannot parse '" + token + "' as an integer");
    }
  }
  if (out.empty()) throw Error(Errc::ParseError, "empty integer list");
  return out;
}

std::string wall_pretty(const WallFunctional& w) {
  std::string out = w.x_index == 1 ? "x1" : "x2";
  for (int label : w.support) out += "-y" + std::to_string(label);
  if (w.constant != 0) out += std::to_string(w.constant);
  return out;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact invariants of generic isoresidual fibers of two-zero strata"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);

  std::string mu_text;
  std::string b_text;
  std::string dot_out;
  std::string format = "json";
  std::string inject_fault;
  int a1 = 0, a2 = 0;
  int positive_pole = 1;
  int max_poles = 4;
  int max_order = 6;
  int chamber_max_poles = 5;
  int max_sum_b = 12;
  int max_sum_b_xi = 14;
  int max_genus_a = 8;
  int scan_sum_b = 8;
  int jobs = 1;
  bool no_limits = false;
  bool skip_graphs = false;
  bool skip_determinism = false;
  bool scan_only = false;

  auto* cmd_profile = app.add_subcommand("profile", "full singularity profile of the fiber form");
  cmd_profile->add_option("--mu", mu_text, "stratum signature, e.g. 2,3,-1,-2,-4")->required();
  cmd_profile->add_option("--format", format, "output format")->check(CLI::IsMember({"json"}));

  auto* cmd_xi = app.add_subcommand("xi", "residueless count: closed form, oracle and recursion");
  cmd_xi->add_option("--a1", a1, "first zero order (>= 0)")->required();
  cmd_xi->add_option("--a2", a2, "second zero order (>= 0)")->required();
  cmd_xi->add_option("--b", b_text, "pole orders, e.g. 6,2,2")->required();

  auto* cmd_components = app.add_subcommand("components", "connected components of the generic fiber");
  cmd_components->add_option("--mu", mu_text)->required();

  auto* cmd_chamber = app.add_subcommand("chamber", "wall signature in the singularity pattern space");
  cmd_chamber->add_option("--mu", mu_text)->required();
  cmd_chamber->add_option("--max-poles", chamber_max_poles, "wall enumeration bound (default 5)");

  auto* cmd_graphs = app.add_subcommand("graphs", "decorated graphs over a real residue configuration");
  cmd_graphs->add_option("--mu", mu_text)->required();
  cmd_graphs->add_option("--positive-pole", positive_pole, "label of the positive-residue pole");
  cmd_graphs->add_option("--max-poles", max_poles, "pole bound for mixed orders (default 4)");
  cmd_graphs->add_option("--max-order", max_order, "bound on a1+a2 for mixed orders (default 6)");
  cmd_graphs->add_flag("--no-limits", no_limits, "disable the resource bounds");
  cmd_graphs->add_option("--dot-out", dot_out, "write the graph-description export to this path");

  auto* cmd_verify = app.add_subcommand("verify", "run the full self-verification suite");
  cmd_verify->add_option("--max-sum-b", max_sum_b, "profile scans bound (default 12)");
  cmd_verify->add_option("--max-sum-b-xi", max_sum_b_xi, "cross-oracle bound (default 14)");
  cmd_verify->add_option("--max-genus-a", max_genus_a, "simple-pole genus bound (default 8)");
  cmd_verify->add_option("--jobs", jobs, "worker count");
  cmd_verify->add_flag("--skip-graphs", skip_graphs, "skip the graph-enumeration checks");
  cmd_verify->add_flag("--skip-determinism", skip_determinism, "skip the determinism check");
  cmd_verify->add_flag("--scan-only", scan_only, "run only the range-driven identity scans");
  cmd_verify->add_option("--inject-fault", inject_fault)->group("");  // test harness hook

  auto* cmd_scan = app.add_subcommand("scan", "CSV of invariants over all two-zero strata");
  cmd_scan->add_option("--max-sum-b", scan_sum_b, "bound on the total pole order (default 8)");
  cmd_scan->add_option("--jobs", jobs, "worker count");
  cmd_scan->add_option("--format", format, "output format")->check(CLI::IsMember({"csv"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (cmd_profile->parsed()) {
      emit(profile_report(parse_mu(mu_text)));
      return kExitOk;
    }

    if (cmd_xi->parsed()) {
      const XiQuery q = make_xi_query(a1, a2, parse_int_list(b_text));
      json rep = report_header("xi");
      rep["query"] = json{{"a1", q.a1}, {"a2", q.a2}, {"b", q.b}};
      const BigInt closed = xi_closed(q);
      const BigInt oracle = xi_oracle(q);
      rep["closed"] = closed.str();
      rep["oracle"] = oracle.str();
      json rec = json::array();
      bool all_equal = closed == oracle;
      for (int pole = 1; pole <= q.p(); ++pole) {
        const BigInt r = xi_recursion_rhs(q, pole);
        all_equal = all_equal && r == closed;
        rec.push_back(json{{"pole", pole}, {"value", r.str()}});
      }
      rep["recursion"] = rec;
      rep["all_equal"] = all_equal;
      emit(rep);
      return all_equal ? kExitOk : kExitInvariant;
    }

    if (cmd_components->parsed()) {
      const Stratum s = parse_mu(mu_text);
      json rep = report_header("components");
      rep["stratum"] = json_stratum(s);
      const int k = num_components(s);
      rep["num_components"] = k;
      int simple = 0;
      for (int b : s.pole_orders)
        if (b == 1) ++simple;
      std::string family = "generic";
      if (k > 1) family = simple == 2 ? "two-simple-poles-gcd" : "even-orders-with-simple-poles";
      rep["family"] = family;
      emit(rep);
      return kExitOk;
    }

    if (cmd_chamber->parsed()) {
      const Stratum s = parse_mu(mu_text);
      const ChamberLimits limits{chamber_max_poles, false};
      const auto wall_list = walls(s.num_poles(), limits);
      const ChamberSignature sig = signature(s, limits);
      json rep = report_header("chamber");
      rep["stratum"] = json_stratum(s);
      rep["wall_count"] = wall_list.size();
      rep["signature"] = sig.values;
      rep["signature_hash"] = signature_hash(sig);
      json on_walls = json::array();
      for (size_t i = 0; i < wall_list.size(); ++i)
        if (sig.values[i] == 0)
          on_walls.push_back(json{{"index", i}, {"form", wall_pretty(wall_list[i])}});
      rep["on_walls"] = on_walls;
      json oc;
      oc["in_chamber"] = in_one_chamber(s);
      if (in_one_chamber(s)) oc["leading"] = one_chamber_leading(s).str();
      rep["one_chamber"] = oc;
      emit(rep);
      return kExitOk;
    }

    if (cmd_graphs->parsed()) {
      const Stratum s = parse_mu(mu_text);
      GraphLimits limits;
      limits.max_poles = max_poles;
      limits.max_zero_order = max_order;
      limits.max_poles_simple = std::max(7, max_poles);
      limits.override_limits = no_limits;
      const auto zero_graphs = enumerate_zero_graphs(s, positive_pole, limits);
      const auto saddle_graphs = enumerate_saddle_graphs(s, positive_pole, limits);
      const int comps = adjacency_components(s, positive_pole, limits);
      const int pattern = num_components(s);
      json rep = report_header("graphs");
      rep["stratum"] = json_stratum(s);
      rep["positive_pole"] = positive_pole;
      rep["zero_graphs"] = zero_graphs.size();
      rep["expected_f"] = f_count(s.zero_orders[0] + s.zero_orders[1], s.num_poles()).str();
      rep["saddle_graphs"] = saddle_graphs.size();
      json lengths = json::array();
      for (const auto& sg : saddle_graphs) lengths.push_back(format_form(sg.length_form));
      rep["saddle_lengths"] = lengths;
      rep["adjacency_components"] = comps;
      rep["num_components_pattern"] = pattern;
      rep["match"] = comps == pattern &&
                     BigInt(static_cast<long long>(zero_graphs.size())) ==
                         f_count(s.zero_orders[0] + s.zero_orders[1], s.num_poles());
      if (!dot_out.empty()) {
        std::vector<DecoratedGraph> all = zero_graphs;
        for (const auto& sg : saddle_graphs) all.push_back(sg.graph);
        std::ofstream out(dot_out, std::ios::binary);
        if (!out) throw Error(Errc::ParseError, "cannot open '" + dot_out + "' for writing");
        out << export_dot(all);
        rep["dot_out"] = dot_out;
      }
      emit(rep);
      return rep["match"].get<bool>() ? kExitOk : kExitInvariant;
    }

    if (cmd_verify->parsed()) {
      VerifyOptions opts;
      opts.max_sum_b = max_sum_b;
      opts.max_sum_b_recursion = max_sum_b;
      opts.max_sum_b_xi = max_sum_b_xi;
      opts.max_genus_a = max_genus_a;
      opts.jobs = jobs;
      opts.with_graphs = !skip_graphs;
      opts.with_determinism = !skip_determinism && !scan_only;
      opts.with_fixed = !scan_only;
      if (inject_fault == "xi") {
        opts.xi_closed_fn = [](const XiQuery& q) {
          BigInt v = xi_closed(q);
          if (q.a1 + q.a2 == 2) v += 1;
          return v;
        };
      } else if (!inject_fault.empty()) {
        throw Error(Errc::ParseError, "unknown fault '" + inject_fault + "'");
      }
      const auto results = run_verification(opts);
      long long total_cases = 0;
      for (const auto& r : results) {
        total_cases += r.cases;
        std::cout << (r.pass ? "ok   " : "FAIL ") << r.name << " (" << r.cases << " cases)";
        if (!r.pass) std::cout << " :: " << r.detail;
        std::cout << "\n";
      }
      if (total_cases == 0) std::cout << "note: 0 checks\n";
      std::cout << (all_passed(results) ? "all checks passed" : "verification FAILED") << "\n";
      return all_passed(results) ? kExitOk : kExitInvariant;
    }

    if (cmd_scan->parsed()) {
      if (scan_sum_b > 16)
        throw Error(Errc::ResourceLimit, "scan bound sum(b) <= 16");
      std::cout << scan_csv(scan_sum_b, jobs);
      return kExitOk;
    }
  } catch (const Error& e) {
    std::cerr << "error (" << errc_name(e.code()) << "): " << e.what() << "\n";
    return e.code() == Errc::ResourceLimit ? kExitResource : kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
