#include "suites.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <future>
#include <map>

#include "extraction.hpp"
#include "slicefrac/closed_forms.hpp"
#include "slicefrac/contfrac.hpp"
#include "slicefrac/errors.hpp"
#include "slicefrac/heaps.hpp"
#include "slicefrac/maps.hpp"
#include "slicefrac/slices.hpp"

namespace sfcli {

namespace {

using sf::BiPoly;

struct Check {
  std::string name;
  std::function<std::string()> run;  // summary on success; throws on failure
};

void require(bool ok, const std::string& what) {
  if (!ok) throw sf::VerificationError(what);
}

std::string summary(const sf::Report& r) { return std::to_string(r.items.size()) + " items"; }

std::string s(int v) { return std::to_string(v); }

bool equal_to_degree(const BiPoly& a, const BiPoly& b, int deg) {
  for (int d = 0; d <= deg; ++d)
    for (int x = 0; x <= d; ++x)
      if (a.coeff(x, d - x) != b.coeff(x, d - x)) return false;
  return true;
}

std::vector<Check> equality(const SuiteParams& p) {
  const int n = p.n.value_or(3), cap = p.cap.value_or(6), f_max = p.f_max.value_or(3);
  std::vector<Check> out;
  out.push_back({"f_n = j_n for n <= " + s(n) + " at cap " + s(cap), [=] {
                   const sf::SliceFamily bw = sf::solve_bw(cap), pq = sf::solve_pq(cap);
                   for (int m = 0; m <= n; ++m) require(sf::f_n(m, bw) == sf::j_n(m, pq), "differs at n = " + s(m));
                   return s(n + 1) + " series";
                 }});
  // Enumeration is bounded by the dart guard: 2m + 4f darts.
  for (int m = 1; m <= n; ++m) {
    const int f = std::min(f_max, (sf::max_darts() - 2 * m) / 4);
    if (f < 0) continue;
    out.push_back({"enumerated F = J weights, n = " + s(m) + ", f <= " + s(f), [=] {
                     require(sf::bf_F(m, f) == sf::bf_J(m, f), "weights differ");
                     return std::string("equal");
                   }});
    out.push_back({"enumerated F matches f_n, n = " + s(m) + ", degree <= " + s(m + f), [=] {
                     require(equal_to_degree(sf::bf_F(m, f), sf::f_n(m, m + f), m + f), "coefficients differ");
                     return std::string("equal");
                   }});
  }
  return out;
}

Check extraction_check(const std::string& name, std::function<Extraction()> run) {
  return {name, [run] {
            const Extraction e = run();
            for (size_t k = 0; k < e.names.size(); ++k)
              require(e.extracted[k] == e.solver[k], e.names[k] + " differs from the solver");
            return s(int(e.names.size())) + " coefficients equal" +
                   (e.work_cap > 0 ? " (work cap " + s(e.work_cap) + ")" : std::string());
          }};
}

std::vector<Check> stieltjes(const SuiteParams& p) {
  const int i = p.i.value_or(2), cap = p.cap.value_or(6);
  return {extraction_check("W_1..B_" + s(2 * i) + " from F_n at cap " + s(cap),
                           [=] { return extract_stieltjes(1, i, cap, std::nullopt); })};
}

std::vector<Check> newtype(const SuiteParams& p) {
  const int i = p.i.value_or(4), cap = p.cap.value_or(6);
  return {extraction_check("Y_1..Y_" + s(2 * i) + " from J_n and the conjectured J-tilde at cap " + s(cap),
                           [=] { return extract_newtype(1, i, cap, std::nullopt); })};
}

std::vector<Check> closedforms(const SuiteParams& p) {
  const int i = p.i.value_or(6), order = p.order.value_or(8), cap = p.cap.value_or(6);
  std::vector<Check> out;
  const std::pair<sf::SliceKind, const char*> kinds[] = {
      {sf::SliceKind::BW, "B/W"}, {sf::SliceKind::PQ, "P/Q"}, {sf::SliceKind::Y, "Y"}};
  for (auto [kind, label] : kinds)
    out.push_back({std::string(label) + " closed forms satisfy the recursion, i <= " + s(i) + ", order " + s(order),
                   [=] { return summary(sf::verify_recursion(kind, 1, i, order)); }});
  out.push_back({"both parametrizations agree, order " + s(cap), [=] { return summary(sf::param_equivalence(cap)); }});
  out.push_back({"closed forms match the series solvers, cap " + s(cap), [=] { return summary(sf::series_match(cap)); }});
  out.push_back({"parametrization identities", [] { return summary(sf::parametrization_identities()); }});
  return out;
}

std::vector<Check> conserved(const SuiteParams& p) {
  const int n = p.n.value_or(3), cap = p.cap.value_or(6), i = p.i.value_or(5);
  std::vector<Check> out;
  out.push_back({"conserved quantities equal F_n, n <= " + s(n) + ", d <= 4, cap " + s(cap), [=] {
                   const sf::SliceFamily bw = sf::solve_bw(cap + 1), pq = sf::solve_pq(cap + 1);
                   const sf::SliceFamily bw0 = sf::solve_bw(cap);
                   for (int m = 1; m <= n; ++m) {
                     const BiPoly target = sf::f_n(m, bw0);
                     for (int d = 0; d <= 4; ++d) {
                       require(sf::conserved_f(m, d, bw) == target, "F-side differs at n = " + s(m) + ", d = " + s(d));
                       require(sf::conserved_j(m, d, pq) == target, "J-side differs at n = " + s(m) + ", d = " + s(d));
                     }
                   }
                   return s(10 * n) + " quantities";
                 }});
  out.push_back({"conserved quantities symbolically, i <= " + s(i), [=] {
                   const std::string err = sf::conserved_symbolic_check(i);
                   require(err.empty(), err);
                   return std::string("identities hold");
                 }});
  out.push_back({"Y_1 by both routes, cap " + s(cap), [=] {
                   const auto [a, b] = sf::y1_two_routes(cap);
                   require(a == b, "routes differ");
                   require(a == sf::solve_y(cap).first[1], "differs from solve_y");
                   return std::string("equal");
                 }});
  return out;
}

std::vector<Check> bijection(const SuiteParams& p) {
  const int n = p.n.value_or(3), f_max = p.f_max.value_or(3);
  return {{"bijections on n <= " + s(n) + ", f <= " + s(f_max),
           [=] {
             const sf::Report r = sf::bijection_suite(n, f_max);
             std::string out;
             for (const auto& [k, v] : r.items) out += (out.empty() ? "" : "; ") + k + " " + v;
             return out;
           }}};
}

std::vector<Check> heaps(const SuiteParams& p) {
  const int alpha = p.alpha.value_or(4), i = p.i.value_or(4);
  const std::uint64_t seed = p.seed;
  std::vector<Check> out;
  for (int a = 1; a <= alpha; ++a) {
    out.push_back({"heap generating functions, alpha = " + s(a), [=] { return summary(sf::heap_gf_check(a, seed)); }});
    out.push_back({"complementation, alpha = " + s(a), [=] { return summary(sf::complementation_check(a, seed)); }});
    out.push_back({"linear relation, alpha = " + s(a), [=] { return summary(sf::linear_relation_check(a, seed)); }});
  }
  for (int k = 1; k <= i; ++k) {
    out.push_back({"constant-weight relations on G, i = " + s(k), [=] {
                     return summary(sf::linear_relation_ab_check(k, seed)) + ", symbolic " +
                            summary(sf::linear_relation_ab_check(k));
                   }});
    out.push_back({"constant-weight relations on G', i = " + s(k), [=] {
                     return summary(sf::linear_relation_gprime_check(k, seed)) + ", symbolic " +
                            summary(sf::linear_relation_gprime_check(k));
                   }});
  }
  out.push_back({"H system and L ladder, i <= " + s(i + 2), [=] { return summary(sf::h_ladder(i + 2, seed)); }});
  out.push_back({"Hankel-type closed forms, i <= " + s(i), [=] { return summary(sf::hh_closed_check(i, seed)); }});
  return out;
}

std::vector<Check> reflection(const SuiteParams& p) {
  const int alpha = p.alpha.value_or(4), i = p.i.value_or(4);
  const std::uint64_t seed = p.seed;
  std::vector<Check> out;
  for (int a = 1; a <= alpha; ++a)
    out.push_back({"finite reflection, alpha = " + s(a) + ", 20 seeds", [=] {
                     for (std::uint64_t k = 0; k < 20; ++k) sf::finite_reflection_check(a, seed + k);
                     return std::string("20 fractions");
                   }});
  out.push_back({"J alone does not determine the weights", [=] {
                   const auto w = sf::underdetermination_witness(seed);
                   require(w.y_true != w.y_other, "weights coincide");
                   require(w.J_true.coeffs() == w.J_other.coeffs(), "J differs");
                   return std::string("two weight sets, one J");
                 }});
  out.push_back({"Hankel determinants in closed form, i <= " + s(i), [=] {
                   const std::string err = sf::hankel_closed_check(seed, i);
                   require(err.empty(), err);
                   return std::string("closed forms hold");
                 }});
  return out;
}

using SuiteFn = std::vector<Check> (*)(const SuiteParams&);

const std::map<std::string, SuiteFn>& registry() {
  static const std::map<std::string, SuiteFn> r = {
      {"equality", equality}, {"stieltjes", stieltjes}, {"newtype", newtype},       {"closedforms", closedforms},
      {"conserved", conserved}, {"bijection", bijection}, {"heaps", heaps}, {"reflection", reflection}};
  return r;
}

std::vector<CheckResult> run_one(const std::string& suite, const SuiteParams& p) {
  std::vector<CheckResult> out;
  std::vector<Check> checks;
  try {
    checks = registry().at(suite)(p);
  } catch (const std::exception& e) {
    out.push_back({suite, "setup", false, e.what(), 0});
    return out;
  }
  for (const Check& c : checks) {
    CheckResult r{suite, c.name, false, {}, 0};
    const auto t0 = std::chrono::steady_clock::now();
    try {
      r.detail = c.run();
      r.pass = true;
    } catch (const std::exception& e) {
      r.detail = e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"equality",  "stieltjes", "newtype", "closedforms",
                                                 "conserved", "bijection", "heaps",   "reflection"};
  return names;
}

bool is_suite(const std::string& name) {
  return name == "all" || std::find(suite_names().begin(), suite_names().end(), name) != suite_names().end();
}

std::vector<CheckResult> run_suite(const std::string& name, const SuiteParams& p) {
  if (name != "all") return run_one(name, p);
  std::vector<std::future<std::vector<CheckResult>>> jobs;
  for (const std::string& s : suite_names()) jobs.push_back(std::async(std::launch::async, run_one, s, p));
  std::vector<CheckResult> out;
  for (auto& j : jobs) {
    auto part = j.get();
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

}  // namespace sfcli
