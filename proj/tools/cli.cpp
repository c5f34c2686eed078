#include "cli.hpp"

#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "extraction.hpp"
#include "json.hpp"
#include "slicefrac/errors.hpp"
#include "slicefrac/slices.hpp"
#include "suites.hpp"
#include "table_io.hpp"

namespace sfcli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Range {
  int lo = 0, hi = -1;
};

// "a..b" or "a"; b < a is an empty range.
Range parse_range(const std::string& text, int min_value, const char* flag) {
  Range r;
  const auto dots = text.find("..");
  try {
    size_t used = 0;
    if (dots == std::string::npos) {
      r.lo = r.hi = std::stoi(text, &used);
      if (used != text.size()) throw std::invalid_argument(text);
    } else {
      const std::string a = text.substr(0, dots), b = text.substr(dots + 2);
      r.lo = std::stoi(a, &used);
      if (used != a.size()) throw std::invalid_argument(text);
      r.hi = std::stoi(b, &used);
      if (used != b.size()) throw std::invalid_argument(text);
    }
  } catch (const std::logic_error&) {
    throw UsageError(std::string(flag) + ": expected a..b, got '" + text + "'");
  }
  if (r.hi < r.lo) throw UsageError(std::string(flag) + ": empty range " + text);
  if (r.lo < min_value) throw UsageError(std::string(flag) + ": indices start at " + std::to_string(min_value));
  return r;
}

Format parse_format(const std::string& f) {
  if (f == "csv") return Format::Csv;
  if (f == "text") return Format::Text;
  return Format::Json;
}

void emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(path);
  if (!f) throw UsageError("cannot open " + path + " for writing");
  f << text;
  f.close();
  if (!f) throw UsageError("write to " + path + " failed");
}

struct TableArgs {
  std::string what, n_range, i_range, format = "json", output;
  int cap = 6;
};

Table make_table(const TableArgs& a) {
  Table t;
  t.what = a.what;
  t.cap = a.cap;
  if (a.what == "fn" || a.what == "jn") {
    if (a.n_range.empty() || !a.i_range.empty()) throw UsageError("--what " + a.what + " takes --n");
    const Range r = parse_range(a.n_range, 0, "--n");
    const bool f = a.what == "fn";
    const sf::SliceFamily fam = f ? sf::solve_bw(a.cap) : sf::solve_pq(a.cap);
    for (int n = r.lo; n <= r.hi; ++n)
      t.entries.push_back({std::to_string(n), monomials(f ? sf::f_n(n, fam) : sf::j_n(n, fam)), {}, {}});
    return t;
  }
  if (a.i_range.empty() || !a.n_range.empty()) throw UsageError("--what " + a.what + " takes --i");
  const Range r = parse_range(a.i_range, 0, "--i");
  const char w = a.what[0];
  const sf::SliceFamily fam = w == 'y' ? sf::solve_y(a.cap) : (w == 'b' || w == 'w') ? sf::solve_bw(a.cap) : sf::solve_pq(a.cap);
  const std::vector<sf::BiPoly>& v = (w == 'w' || w == 'q') ? fam.second : fam.first;
  const int top = int(v.size()) - 1;
  for (int i = r.lo; i <= r.hi; ++i) {
    // Beyond the solved range the values are stable (Y: stable per parity).
    int k = i;
    if (w == 'y')
      while (k > top) k -= 2;
    else
      k = std::min(k, top);
    t.entries.push_back({std::to_string(i), monomials(v[size_t(k)]), {}, {}});
  }
  return t;
}

struct VerifyArgs {
  std::string suite, format = "text";
  SuiteParams p;
};

int report_verify(const VerifyArgs& a, const std::vector<CheckResult>& results, std::ostream& out) {
  int failed = 0;
  for (const CheckResult& r : results) failed += r.pass ? 0 : 1;
  if (a.format == "json") {
    nlohmann::json j;
    j["suite"] = a.suite;
    j["seed"] = a.p.seed;
    j["checks"] = nlohmann::json::array();
    for (const CheckResult& r : results)
      j["checks"].push_back(
          {{"suite", r.suite}, {"check", r.check}, {"pass", r.pass}, {"detail", r.detail}, {"seconds", r.seconds}});
    j["passed"] = failed == 0;
    out << j.dump(2) << '\n';
  } else {
    for (const CheckResult& r : results) {
      out << (r.pass ? "PASS " : "FAIL ") << r.suite << ": " << r.check;
      out << "  (" << r.detail << "; " << std::fixed << std::setprecision(2) << r.seconds << " s)\n";
    }
    out << results.size() - size_t(failed) << "/" << results.size() << " checks passed\n";
  }
  return failed ? kFail : kPass;
}

struct ExtractArgs {
  std::string type, i_range, format = "text", output;
  int cap = 6;
  std::optional<int> work_cap;
};

int do_extract(const ExtractArgs& a, std::ostream& out, std::ostream& err) {
  const Range r = parse_range(a.i_range, 1, "--i");
  Extraction e;
  try {
    e = a.type == "stieltjes" ? extract_stieltjes(r.lo, r.hi, a.cap, a.work_cap) : extract_newtype(r.lo, r.hi, a.cap, a.work_cap);
  } catch (const sf::DivisionError& ex) {
    err << "extraction failed: non-exact division: " << ex.what() << '\n';
    return kFail;
  } catch (const sf::VerificationError& ex) {
    err << "extraction failed: " << ex.what() << '\n';
    return kFail;
  }
  Table t;
  t.what = "extract-" + a.type;
  t.cap = a.cap;
  for (size_t k = 0; k < e.names.size(); ++k)
    t.entries.push_back({e.names[k], monomials(e.extracted[k]), monomials(e.solver[k]), e.extracted[k] == e.solver[k]});
  emit(render(t, parse_format(a.format)), a.output, out);
  const bool ok = e.all_equal();
  err << (ok ? "all " : "NOT all ") << e.names.size() << " extracted coefficients equal the solver values";
  if (e.work_cap > 0) err << " (work cap " << e.work_cap << ")";
  err << '\n';
  return ok ? kPass : kFail;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact slice generating functions, continued fractions and map bijections"};
  app.name("slicefrac");
  app.require_subcommand(1);
  const auto formats = CLI::IsMember({"json", "csv", "text"});
  const auto caps = CLI::Range(1, 1000);

  TableArgs ta;
  CLI::App* table = app.add_subcommand("table", "Coefficient tables of the slice generating functions");
  table->add_option("--what", ta.what, "fn, jn, b, w, p, q or y")
      ->required()
      ->check(CLI::IsMember({"fn", "jn", "b", "w", "p", "q", "y"}));
  table->add_option("--n", ta.n_range, "n range a..b (fn, jn)");
  table->add_option("--i", ta.i_range, "i range a..b (b, w, p, q, y)");
  table->add_option("--cap", ta.cap, "total degree cap")->check(caps)->capture_default_str();
  table->add_option("--format", ta.format, "json, csv or text")->check(formats)->capture_default_str();
  table->add_option("--output", ta.output, "output file (default stdout)");

  VerifyArgs va;
  std::optional<int> v_n, v_i, v_cap, v_order, v_alpha, v_fmax;
  CLI::App* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("suite", va.suite, "equality, stieltjes, newtype, closedforms, conserved, bijection, heaps, reflection or all")
      ->required();
  verify->add_option("--n", v_n, "largest n")->check(CLI::Range(0, 1000));
  verify->add_option("--i", v_i, "largest i")->check(CLI::Range(1, 1000));
  verify->add_option("--cap", v_cap, "total degree cap")->check(caps);
  verify->add_option("--order", v_order, "series order of the parametrized closed forms")->check(caps);
  verify->add_option("--alpha", v_alpha, "largest alpha")->check(CLI::Range(1, 1000));
  verify->add_option("--f-max", v_fmax, "largest number of inner faces")->check(CLI::Range(0, 1000));
  verify->add_option("--seed", va.p.seed, "seed of the randomized checks")->capture_default_str();
  verify->add_option("--format", va.format, "text or json")->check(CLI::IsMember({"text", "json"}))->capture_default_str();

  ExtractArgs ea;
  CLI::App* extract = app.add_subcommand("extract", "Extract continued-fraction coefficients and compare with the solvers");
  extract->add_option("--type", ea.type, "stieltjes or newtype")->required()->check(CLI::IsMember({"stieltjes", "newtype"}));
  extract->add_option("--i", ea.i_range, "i range a..b")->required();
  extract->add_option("--cap", ea.cap, "output cap")->check(caps)->capture_default_str();
  extract->add_option("--work-cap", ea.work_cap, "solver cap for the input series (default: searched)")->check(caps);
  extract->add_option("--format", ea.format, "json, csv or text")->check(formats)->capture_default_str();
  extract->add_option("--output", ea.output, "output file (default stdout)");

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kPass : kUsage;
  }

  try {
    if (*table) {
      emit(render(make_table(ta), parse_format(ta.format)), ta.output, out);
      return kPass;
    }
    if (*verify) {
      if (!is_suite(va.suite)) {
        err << "unknown suite '" << va.suite << "'\n";
        return kUsage;
      }
      va.p.n = v_n;
      va.p.i = v_i;
      va.p.cap = v_cap;
      va.p.order = v_order;
      va.p.alpha = v_alpha;
      va.p.f_max = v_fmax;
      return report_verify(va, run_suite(va.suite, va.p), out);
    }
    return do_extract(ea, out, err);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const sf::ResourceError& e) {
    err << "resource limit: " << e.what() << '\n';
    return kUsage;
  } catch (const sf::Error& e) {
    err << "failed: " << e.what() << '\n';
    return kFail;
  }
}

}  // namespace sfcli
