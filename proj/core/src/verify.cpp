#include "isores/verify.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <mutex>
#include <numeric>
#include <sstream>
#include <thread>

#include "isores/boundary.hpp"
#include "isores/chambers.hpp"
#include "isores/fiber.hpp"
#include "isores/realgraphs.hpp"
#include "isores/stratum.hpp"

namespace isores {

namespace {

void parallel_for(long long n, int jobs, const std::function<void(long long)>& body) {
  jobs = std::max(1, jobs);
  if (jobs == 1 || n < 2) {
    for (long long i = 0; i < n; ++i) body(i);
    return;
  }
  std::atomic<long long> next{0};
  std::vector<std::thread> pool;
  for (int t = 0; t < jobs; ++t)
    pool.emplace_back([&] {
      for (long long i = next.fetch_add(1); i < n; i = next.fetch_add(1)) body(i);
    });
  for (auto& th : pool) th.join();
}

void ordered_compositions(int total, const std::function<void(const std::vector<int>&)>& sink) {
  std::vector<int> parts;
  std::function<void(int)> rec = [&](int remaining) {
    if (remaining == 0) {
      sink(parts);
      return;
    }
    for (int first = 1; first <= remaining; ++first) {
      parts.push_back(first);
      rec(remaining - first);
      parts.pop_back();
    }
  };
  rec(total);
}

// All two-zero strata with sum(b) <= max_sum_b, in lexicographic mu order.
std::vector<Stratum> two_zero_strata(int max_sum_b) {
  std::vector<Stratum> out;
  for (int s = 4; s <= max_sum_b; ++s) {
    const int a = s - 2;
    for (int a1 = 1; a1 < a; ++a1) {
      ordered_compositions(s, [&](const std::vector<int>& b) {
        out.push_back(validate({a1, a - a1}, b));
      });
    }
  }
  std::sort(out.begin(), out.end(), [](const Stratum& x, const Stratum& y) {
    if (x.zero_orders != y.zero_orders) return x.zero_orders < y.zero_orders;
    return x.pole_orders < y.pole_orders;
  });
  return out;
}

struct Failure {
  long long index = -1;
  std::string detail;
};

// Runs body over indices, recording the smallest failing index for a
// deterministic counterexample report.
CheckResult run_indexed(const std::string& name, long long n, int jobs,
                        const std::function<std::string(long long)>& body) {
  std::mutex mu;
  Failure worst;
  parallel_for(n, jobs, [&](long long i) {
    std::string detail;
    try {
      detail = body(i);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    if (!detail.empty()) {
      std::lock_guard<std::mutex> lock(mu);
      if (worst.index < 0 || i < worst.index) worst = Failure{i, std::move(detail)};
    }
  });
  CheckResult res;
  res.name = name;
  res.cases = n;
  res.pass = worst.index < 0;
  res.detail = worst.detail;
  return res;
}

std::string entry_line(const ProfileEntry& e) {
  std::string out = e.kind == SingKind::Zero ? "zero" : "pole";
  out += " order=" + std::to_string(e.order);
  out += " mult=" + e.multiplicity.str();
  out += " residue=[";
  for (int j = 0; j < e.residue.p(); ++j) {
    if (j) out += ',';
    out += std::to_string(e.residue.coeffs[j]);
  }
  out += "]";
  return out;
}

std::string render_profile(const FiberProfile& prof) {
  std::string out = format_mu(prof.stratum) + "\n";
  for (const auto& e : prof.entries) out += entry_line(e) + "\n";
  out += "degree=" + prof.degree.str() + " components=" + std::to_string(prof.num_components) +
         " genus=" + prof.genus_per_component.str() + "\n";
  return out;
}

struct ExpectedEntry {
  SingKind kind;
  int order;
  long long mult;
  std::vector<long long> residue;
};

std::string compare_profile(const FiberProfile& prof, const std::vector<ExpectedEntry>& expected) {
  if (prof.entries.size() != expected.size())
    return format_mu(prof.stratum) + ": expected " + std::to_string(expected.size()) +
           " entries, got " + std::to_string(prof.entries.size());
  for (size_t i = 0; i < expected.size(); ++i) {
    const auto& e = prof.entries[i];
    const auto& x = expected[i];
    if (e.kind != x.kind || e.order != x.order || e.multiplicity != x.mult ||
        e.residue.coeffs != x.residue)
      return format_mu(prof.stratum) + ": entry " + std::to_string(i) + " is " + entry_line(e);
  }
  return "";
}

} // namespace

std::string scan_csv(int max_sum_b, int jobs) {
  const std::vector<Stratum> strata = two_zero_strata(max_sum_b);
  std::vector<std::string> rows(strata.size());
  parallel_for(static_cast<long long>(strata.size()), jobs, [&](long long i) {
    const Stratum& s = strata[i];
    const FiberProfile prof = profile(s);
    const ChamberSignature sig =
        signature(s, ChamberLimits{std::max(5, s.num_poles()), true});
    std::string row = format_mu(s);
    row += "," + euler_characteristic(prof).str();
    row += "," + prof.degree.str();
    row += "," + std::to_string(prof.num_components);
    row += "," + prof.genus_per_component.str();
    row += "," + std::to_string(divisibility_factor(prof));
    row += "," + signature_hash(sig);
    rows[i] = std::move(row);
  });
  std::string out = "mu,chi,degree,components,genus_per_component,divisibility_factor,signature_hash\n";
  for (const auto& row : rows) {
    out += row;
    out += '\n';
  }
  return out;
}

namespace {

CheckResult check_xi_cross_oracle(const VerifyOptions& opts) {
  auto closed = opts.xi_closed_fn ? opts.xi_closed_fn
                                  : [](const XiQuery& q) { return xi_closed(q); };
  std::vector<XiQuery> queries;
  for (int s = 2; s <= opts.max_sum_b_xi; ++s)
    for (int a1 = 0; a1 <= s - 2; ++a1)
      ordered_compositions(s, [&](const std::vector<int>& b) {
        queries.push_back(make_xi_query(a1, s - 2 - a1, b));
      });
  return run_indexed("criterion-01-xi-cross-oracle", queries.size(), opts.jobs,
                     [&](long long i) -> std::string {
                       const XiQuery& q = queries[i];
                       BigInt lhs = closed(q);
                       BigInt rhs = xi_oracle(q);
                       if (lhs == rhs) return "";
                       std::ostringstream os;
                       os << "Xi(" << q.a1 << "," << q.a2 << "; b=";
                       for (size_t j = 0; j < q.b.size(); ++j)
                         os << (j ? "," : "") << q.b[j];
                       os << "): closed=" << lhs << " oracle=" << rhs;
                       return os.str();
                     });
}

CheckResult check_xi_recursion(const VerifyOptions& opts) {
  std::vector<std::pair<XiQuery, int>> cases;
  for (int s = 2; s <= opts.max_sum_b_recursion; ++s)
    for (int a1 = 0; a1 <= s - 2; ++a1)
      ordered_compositions(s, [&](const std::vector<int>& b) {
        XiQuery q = make_xi_query(a1, s - 2 - a1, b);
        for (int pole = 1; pole <= q.p(); ++pole) cases.emplace_back(q, pole);
      });
  return run_indexed("criterion-02-xi-recursion", cases.size(), opts.jobs,
                     [&](long long i) -> std::string {
                       const auto& [q, pole] = cases[i];
                       BigInt lhs = xi_recursion_rhs(q, pole);
                       BigInt rhs = xi_closed(q);
                       if (lhs == rhs) return "";
                       std::ostringstream os;
                       os << "Xi(" << q.a1 << "," << q.a2 << "; pole " << pole
                          << "): recursion=" << lhs << " closed=" << rhs;
                       return os.str();
                     });
}

CheckResult check_zero_graph_counts(const VerifyOptions& opts) {
  struct Case {
    Stratum s;
    int positive_pole;
  };
  std::vector<Case> cases;
  // mixed orders: p <= 4, a1 + a2 <= 6, every choice of positive pole
  for (int a = 2; a <= 6; ++a)
    for (int a1 = 1; a1 < a; ++a1)
      ordered_compositions(a + 2, [&](const std::vector<int>& b) {
        if (static_cast<int>(b.size()) > 4) return;
        Stratum s = validate({a1, a - a1}, b);
        for (int pole = 1; pole <= s.num_poles(); ++pole) cases.push_back({s, pole});
      });
  // all poles simple: up to 7 poles
  for (int a = 2; a <= 5; ++a)
    for (int a1 = 1; a1 < a; ++a1)
      cases.push_back({validate({a1, a - a1}, std::vector<int>(a + 2, 1)), 1});

  return run_indexed(
      "criterion-03-zero-graph-count", cases.size(), opts.jobs, [&](long long i) -> std::string {
        const auto& [s, pole] = cases[i];
        const GraphLimits limits{4, 6, 7, false};
        const auto graphs = enumerate_zero_graphs(s, pole, limits);
        const BigInt expected =
            f_count(s.zero_orders[0] + s.zero_orders[1], s.num_poles());
        if (BigInt(static_cast<long long>(graphs.size())) == expected) return "";
        return format_mu(s) + " P=" + std::to_string(pole) + ": got " +
               std::to_string(graphs.size()) + ", expected f = " + expected.str();
      });
}

CheckResult check_residue_theorem(const std::vector<Stratum>& strata,
                                  const std::vector<FiberProfile>& profiles, int jobs) {
  return run_indexed("criterion-04-fiber-residue-theorem", strata.size(), jobs,
                     [&](long long i) -> std::string {
                       const FiberProfile& prof = profiles[i];
                       const int p = prof.stratum.num_poles();
                       std::vector<BigInt> total(p, 0);
                       for (const auto& e : prof.entries) {
                         if (e.kind != SingKind::Pole) continue;
                         for (int j = 0; j < p; ++j)
                           total[j] += e.multiplicity * e.residue.coeffs[j];
                       }
                       for (int j = 1; j < p; ++j)
                         if (total[j] != total[0])
                           return format_mu(prof.stratum) +
                                  ": weighted residue sum is not a multiple of (1,...,1)";
                       return "";
                     });
}

CheckResult check_genus_simple(const VerifyOptions& opts) {
  std::vector<std::pair<int, int>> cases;
  for (int a = 2; a <= opts.max_genus_a; ++a)
    for (int a1 = 1; a1 < a; ++a1) cases.emplace_back(a1, a - a1);
  CheckResult res =
      run_indexed("criterion-05-genus-simple-poles", cases.size(), opts.jobs,
                  [&](long long i) -> std::string {
                    const auto& [a1, a2] = cases[i];
                    Stratum s = validate({a1, a2}, std::vector<int>(a1 + a2 + 2, 1));
                    const BigInt from_profile = profile(s).degree;
                    const BigInt from_formula = genus_simple_poles(a1, a2);
                    if (from_profile == from_formula) return "";
                    return format_mu(s) + ": profile 2g-2 = " + from_profile.str() +
                           ", formula = " + from_formula.str();
                  });
  if (res.pass && opts.max_genus_a >= 2) {
    if (genus_simple_poles(1, 1) != -2)
      res = CheckResult{res.name, false, res.cases, "pinned (1,1) != -2"};
    else if (genus_simple_poles(2, 2) != 16)
      res = CheckResult{res.name, false, res.cases, "pinned (2,2) != 16"};
    else if (num_components(validate({2, 2}, std::vector<int>(6, 1))) != 2)
      res = CheckResult{res.name, false, res.cases, "pinned (2,2) component count != 2"};
  }
  return res;
}

std::string check_one_pinned_profile(int which) {
  switch (which) {
    case 0: {  // fiber of H(1,1,-2,-1,-1) lies in H(2,2,-2,-2,-1,-1), genus 0
      FiberProfile prof = profile(parse_mu("1,1,-2,-1,-1"));
      std::vector<ExpectedEntry> expected{
          {SingKind::Zero, 2, 2, {0, 0, 0}},
          {SingKind::Pole, 1, 1, {0, 1, 1}},  // +l1 up to the all-ones shift
          {SingKind::Pole, 1, 1, {1, 0, 0}},  // -l1
          {SingKind::Pole, 2, 1, {1, 0, 2}},  // l3-l2
          {SingKind::Pole, 2, 1, {1, 2, 0}},  // l2-l3
      };
      std::string err = compare_profile(prof, expected);
      if (!err.empty()) return err;
      if (prof.num_components != 1 || prof.genus_per_component != 0)
        return "H(1,1,-2,-1,-1): wrong component count or genus";
      return "";
    }
    case 1: {  // fiber of H(1,1,(-1)^4) lies in H(2,2,(-1)^6), genus 0
      FiberProfile prof = profile(parse_mu("1,1,-1,-1,-1,-1"));
      BigInt zero_mult = 0, simple_mult = 0;
      for (const auto& e : prof.entries) {
        if (e.kind == SingKind::Zero) {
          if (e.order != 2) return "H(1,1,(-1)^4): zero of order != 2";
          zero_mult += e.multiplicity;
        } else {
          if (e.order != 1) return "H(1,1,(-1)^4): pole of order != 1";
          simple_mult += e.multiplicity;
        }
      }
      if (zero_mult != 2 || simple_mult != 6) return "H(1,1,(-1)^4): wrong counts";
      if (prof.num_components != 1 || prof.genus_per_component != 0)
        return "H(1,1,(-1)^4): wrong component count or genus";
      return "";
    }
    case 2: {  // fiber of H(3,3,-1,-7) lies in H(6,-4,-4), genus 0
      FiberProfile prof = profile(parse_mu("3,3,-1,-7"));
      std::vector<ExpectedEntry> expected{
          {SingKind::Zero, 6, 1, {0, 0}},
          {SingKind::Pole, 4, 1, {0, 1}},  // -l1
          {SingKind::Pole, 4, 1, {1, 0}},  // +l1
      };
      std::string err = compare_profile(prof, expected);
      if (!err.empty()) return err;
      if (prof.num_components != 1 || prof.genus_per_component != 0)
        return "H(3,3,-1,-7): wrong component count or genus";
      return "";
    }
    case 3: {  // fiber of H(2,2,-2,-2,-2): 4 zeros of order 4, 8 double poles, genus 1
      FiberProfile prof = profile(parse_mu("2,2,-2,-2,-2"));
      BigInt zeros = 0, doubles = 0, residueless = 0;
      for (const auto& e : prof.entries) {
        if (e.kind == SingKind::Zero) {
          if (e.order != 4) return "H(2,2,-2,-2,-2): zero order != 4";
          zeros += e.multiplicity;
        } else {
          if (e.order != 2) return "H(2,2,-2,-2,-2): pole order != 2";
          doubles += e.multiplicity;
          if (e.residue.is_zero_canonical()) residueless += e.multiplicity;
        }
      }
      if (zeros != 4 || doubles != 8 || residueless != 2)
        return "H(2,2,-2,-2,-2): wrong counts";
      if (prof.num_components != 1 || prof.genus_per_component != 1)
        return "H(2,2,-2,-2,-2): wrong component count or genus";
      return "";
    }
    default: {  // H(k,k,-2k,-1,-1), k = 2..6: k genus-0 components, chi = 2k,
                // each component in H(2k,2k,-k,-k,-(k+1),-(k+1)) for k <= 5
      const int k = which - 4 + 2;
      Stratum s = validate({k, k}, {2 * k, 1, 1});
      FiberProfile prof = profile(s);
      if (prof.num_components != k) return format_mu(s) + ": component count != k";
      if (prof.genus_per_component != 0) return format_mu(s) + ": genus != 0";
      if (euler_characteristic(prof) != 2 * k) return format_mu(s) + ": chi != 2k";
      // per component, the fiber lies in H(2k,2k,-k,-k,-(k+1),-(k+1))
      BigInt order_k = 0, order_k1 = 0;
      for (const auto& e : prof.entries) {
        if (e.kind == SingKind::Zero) {
          if (e.order != 2 * k || e.multiplicity != 2 * k)
            return format_mu(s) + ": zero entry mismatch";
        } else if (e.order == k) {
          order_k += e.multiplicity;
        } else if (e.order == k + 1) {
          order_k1 += e.multiplicity;
        } else {
          return format_mu(s) + ": unexpected pole order " + std::to_string(e.order);
        }
        if (e.multiplicity % k != 0)
          return format_mu(s) + ": multiplicity not divisible by the component count";
      }
      if (order_k != 2 * k || order_k1 != 2 * k) return format_mu(s) + ": pole counts wrong";
      return "";
    }
  }
}

CheckResult check_pinned_profiles(const VerifyOptions& opts) {
  return run_indexed("criterion-06-pinned-profiles", 9, opts.jobs, [&](long long i) {
    return check_one_pinned_profile(static_cast<int>(i));
  });
}

CheckResult check_symbolic_example(const VerifyOptions&) {
  CheckResult res;
  res.name = "criterion-07-symbolic-example";
  res.cases = 1;
  FiberProfile prof = profile(parse_mu("4,4,-6,-2,-2"));
  std::vector<ExpectedEntry> expected{
      {SingKind::Zero, 8, 8, {0, 0, 0}},
      {SingKind::Pole, 2, 2, {0, 0, 0}},  // residueless double poles
      {SingKind::Pole, 2, 4, {0, 1, 1}},  // l2+l3
      {SingKind::Pole, 2, 4, {1, 0, 0}},  // -(l2+l3) = l1
      {SingKind::Pole, 4, 1, {0, 0, 1}},  // l3
      {SingKind::Pole, 4, 1, {0, 1, 0}},  // l2
      {SingKind::Pole, 4, 3, {1, 0, 2}},  // l3-l2
      {SingKind::Pole, 4, 1, {1, 0, 1}},  // -l2
      {SingKind::Pole, 4, 1, {1, 1, 0}},  // -l3
      {SingKind::Pole, 4, 3, {1, 2, 0}},  // l2-l3
  };
  std::sort(expected.begin(), expected.end(), [](const ExpectedEntry& x, const ExpectedEntry& y) {
    if (x.kind != y.kind) return x.kind == SingKind::Zero;
    if (x.order != y.order) return x.order < y.order;
    return x.residue < y.residue;
  });
  std::string err = compare_profile(prof, expected);
  if (err.empty() && prof.degree != 4) err = "degree != 4";
  if (err.empty() && prof.genus_per_component != 3) err = "genus != 3";
  res.pass = err.empty();
  res.detail = err;
  return res;
}

CheckResult check_components_oracle(const VerifyOptions& opts) {
  struct Case {
    const char* mu;
    int expected;
  };
  const std::vector<Case> cases{
      {"1,1,-1,-1,-1,-1", 1}, {"2,2,-1,-1,-1,-1,-1,-1", 2}, {"2,2,-4,-1,-1", 2},
      {"3,3,-6,-1,-1", 3},    {"1,2,-1,-1,-1,-1,-1", 1},    {"1,1,-2,-1,-1", 1},
  };
  return run_indexed(
      "criterion-08-components-graph-oracle", cases.size(), opts.jobs,
      [&](long long i) -> std::string {
        const Stratum s = parse_mu(cases[i].mu);
        const GraphLimits limits{4, 6, 7, false};
        const int from_graphs = adjacency_components(s, 1, limits);
        const int from_pattern = num_components(s);
        if (from_graphs == cases[i].expected && from_pattern == cases[i].expected) return "";
        return std::string(cases[i].mu) + ": graphs=" + std::to_string(from_graphs) +
               " pattern=" + std::to_string(from_pattern) +
               " expected=" + std::to_string(cases[i].expected);
      });
}

CheckResult check_main3(const std::vector<Stratum>& strata,
                        const std::vector<FiberProfile>& profiles, int jobs,
                        bool with_counterexample) {
  CheckResult res = run_indexed(
      "criterion-09-main3-predicates", strata.size(), jobs, [&](long long i) -> std::string {
        const Stratum& s = strata[i];
        if (s.num_poles() < 3) return "";
        const FiberProfile& prof = profiles[i];
        if (mu_all_poles_simple(s) != profile_all_poles_simple(prof))
          return format_mu(s) + ": simple-pole predicate mismatch";
        if (mu_all_even(s) != profile_all_even(prof))
          return format_mu(s) + ": even-order predicate mismatch";
        return "";
      });
  if (res.pass && with_counterexample) {
    // p = 2 counterexample: the fiber profile is all-even while mu is odd
    const Stratum s = parse_mu("3,3,-1,-7");
    const FiberProfile prof = profile(s);
    if (!profile_all_even(prof) || mu_all_even(s) || all_even_predicate(s) != true)
      res = CheckResult{res.name, false, res.cases,
                        "H(3,3,-1,-7) does not exhibit the p=2 counterexample"};
  }
  return res;
}

CheckResult check_divisibility(const std::vector<Stratum>& strata,
                               const std::vector<FiberProfile>& profiles, int jobs) {
  return run_indexed("criterion-10-divisibility-factor", strata.size(), jobs,
                     [&](long long i) -> std::string {
                       if (strata[i].num_poles() < 3) return "";
                       long long k = divisibility_factor(profiles[i]);
                       if (k == 1 || k == 2) return "";
                       return format_mu(strata[i]) +
                              ": divisibility factor " + std::to_string(k);
                     });
}

CheckResult check_one_chamber(const VerifyOptions& opts) {
  struct Family {
    const char* mu;
    std::vector<int> direction;
    int depth;
  };
  // strictly inside x1 > 3, x1 < y_j - 2 for p = 3 at every sample
  const std::vector<Family> families{
      {"3,16,-7,-7,-7", {0, 3, 1, 1, 1}, 5},
      {"3,16,-7,-7,-7", {1, 2, 1, 1, 1}, 5},
      {"3,19,-7,-8,-9", {0, 3, 1, 1, 1}, 5},
      {"4,18,-8,-8,-8", {2, 4, 2, 2, 2}, 4},
  };
  return run_indexed(
      "criterion-11-one-chamber-homogeneity", families.size(), opts.jobs,
      [&](long long i) -> std::string {
        const auto& fam = families[i];
        const Stratum base = parse_mu(fam.mu);
        const HomogeneityReport rep =
            verify_homogeneity(base, fam.direction, fam.depth, ChamberLimits{5, true});
        if (!rep.in_one_chamber_chamber)
          return std::string(fam.mu) + ": family left the gcd-free chamber";
        if (!rep.pth_diff_checked || !rep.pth_diff_zero)
          return std::string(fam.mu) + ": third finite differences do not vanish";
        if (!rep.leading_checked || !rep.leading_matches)
          return std::string(fam.mu) + ": quadratic part does not match the leading form";
        return "";
      });
}

CheckResult check_determinism(const VerifyOptions&) {
  CheckResult res;
  res.name = "criterion-12-determinism";
  res.cases = 2;
  const std::string a = scan_csv(6, 1);
  const std::string b = scan_csv(6, 4);
  if (a != b) {
    res.pass = false;
    res.detail = "scan output differs across worker counts";
    return res;
  }
  const std::string p1 = render_profile(profile(parse_mu("2,3,-1,-2,-4")));
  const std::string p2 = render_profile(profile(parse_mu("2,3,-1,-2,-4")));
  if (p1 != p2) {
    res.pass = false;
    res.detail = "profile rendering differs across runs";
    return res;
  }
  res.pass = true;
  return res;
}

} // namespace

std::vector<CheckResult> run_verification(const VerifyOptions& opts) {
  std::vector<CheckResult> results;
  results.push_back(check_xi_cross_oracle(opts));
  results.push_back(check_xi_recursion(opts));
  if (opts.with_graphs && opts.with_fixed) results.push_back(check_zero_graph_counts(opts));

  const std::vector<Stratum> strata = two_zero_strata(opts.max_sum_b);
  std::vector<FiberProfile> profiles(strata.size());
  parallel_for(static_cast<long long>(strata.size()), opts.jobs,
               [&](long long i) { profiles[i] = profile(strata[i]); });
  results.push_back(check_residue_theorem(strata, profiles, opts.jobs));

  results.push_back(check_genus_simple(opts));
  if (opts.with_fixed) {
    results.push_back(check_pinned_profiles(opts));
    results.push_back(check_symbolic_example(opts));
    if (opts.with_graphs) results.push_back(check_components_oracle(opts));
  }
  results.push_back(check_main3(strata, profiles, opts.jobs, opts.with_fixed));
  results.push_back(check_divisibility(strata, profiles, opts.jobs));
  if (opts.with_fixed) results.push_back(check_one_chamber(opts));
  if (opts.with_determinism) results.push_back(check_determinism(opts));
  return results;
}

bool all_passed(const std::vector<CheckResult>& results) {
  return std::all_of(results.begin(), results.end(),
                     [](const CheckResult& r) { return r.pass; });
}

} // namespace isores
