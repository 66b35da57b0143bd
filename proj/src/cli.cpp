#include "fibgen/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "fibgen/bounds.hpp"
#include "fibgen/render.hpp"
#include "fibgen/sweep.hpp"

namespace fibgen::cli {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Temp file in the target directory, then rename, so readers never observe a
// partial file.
void write_file_atomic(const std::string& path, const std::string& content) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  const fs::path tmp = target.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open " + tmp.string() + " for writing");
    out << content;
    if (!out.flush()) throw IoError("failed writing " + tmp.string());
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) {
    fs::remove(tmp, ec);
    throw IoError("cannot rename temporary file onto " + path);
  }
}

void emit(const std::string& content, const std::string& out_path) {
  if (out_path.empty())
    std::cout << content;
  else
    write_file_atomic(out_path, content);
}

int cmd_bound(std::int64_t n, std::int64_t d, const std::string& format) {
  const Report rep = combined_bound(Hypersurface(n, d));
  if (format == "json")
    std::cout << render::report_json(rep).dump() << "\n";
  else
    std::cout << render::report_human(rep);
  return kExitOk;
}

int cmd_table(const std::string& format) {
  const auto rows = sweep::intro_table();
  if (format == "json")
    std::cout << render::table_json(rows).dump() << "\n";
  else if (format == "csv")
    std::cout << render::table_csv(rows);
  else
    std::cout << render::table_human(rows);
  return kExitOk;
}

int cmd_grid(const sweep::GridRect& rect, const std::string& format,
             const std::string& out_path) {
  const auto cells = sweep::grid(rect);
  std::string content;
  if (format == "svg")
    content = render::grid_svg(rect, cells);
  else if (format == "json")
    content = render::grid_json(rect, cells).dump() + "\n";
  else
    content = render::grid_csv(cells);
  emit(content, out_path);
  return kExitOk;
}

int cmd_threshold(std::int64_t n, std::int64_t g, const std::string& format) {
  if (g < 1) {
    std::ostringstream os;
    os << "threshold: requires g >= 1; genus-0 (conic bundle) structures are "
          "ruled out from degree "
       << (n >= 3 ? std::to_string(conic_bundle_threshold(n))
                  : std::string("3*ceil((n+3)/4)"))
       << " on";
    throw std::invalid_argument(os.str());
  }
  const auto [d_min, p] = min_degree_for_genus(n, g);
  const bool holds = genus_threshold_holds(n, d_min, g, p);
  const bool fails_below =
      d_min >= 1 && !genus_threshold_holds(n, d_min - 1, g, p);
  if (format == "json") {
    render::json j;
    j["n"] = n;
    j["g"] = g;
    j["d_min"] = d_min;
    j["p"] = p;
    j["holds_at_d_min"] = holds;
    j["fails_below_d_min"] = fails_below;
    std::cout << j.dump() << "\n";
  } else {
    std::cout << "n=" << n << " g=" << g << ": fib.gen >= " << g + 1
              << " from degree d_min=" << d_min << " with prime p=" << p
              << "\n"
              << "  threshold holds at d=" << d_min << ": "
              << (holds ? "yes" : "NO") << "\n"
              << "  threshold fails at d=" << d_min - 1 << ": "
              << (fails_below ? "yes" : "NO") << "\n";
  }
  return (holds && fails_below) ? kExitOk : 1;
}

struct Suite {
  std::string name;
  bool passed = false;
  std::string detail;
};

Suite suite_oracle(std::int64_t n_max, std::int64_t d_max) {
  const auto diffs = sweep::oracle_check(n_max, d_max);
  std::ostringstream os;
  os << "exhaustive enumeration vs optimized search on 3<=n<=" << n_max
     << ", 1<=d<=" << d_max << ": " << diffs.size() << " discrepancies";
  if (!diffs.empty())
    os << " (first at n=" << diffs.front().n << " d=" << diffs.front().d
       << ": " << diffs.front().message << ")";
  return {"oracle", diffs.empty(), os.str()};
}

Suite suite_identity() {
  std::int64_t checked = 0, failed = 0;
  const PrimeTable table(100);
  for (std::int64_t n = 3; n <= 100; ++n)
    for (std::int64_t g = 1; g <= 20; ++g)
      for (const std::int64_t p : table.primes()) {
        ++checked;
        if (!statement_proof_e_identity(n, g, p)) ++failed;
      }
  std::ostringstream os;
  os << "threshold statement/proof identity on " << checked << " triples: "
     << failed << " failures";
  return {"identity", failed == 0, os.str()};
}

Suite suite_dominance() {
  std::int64_t failed = 0;
  for (std::int64_t n = 3; n <= 200; ++n)
    for (std::int64_t d = 1; d <= 400; ++d) {
      const Hypersurface h(n, d);
      const double cf = closed_form_bound(h).value_as_double();
      if (jensen_bound(h).value_as_double() > cf + kClosedFormTolerance)
        ++failed;
      if (const auto tb = theorem_b_bound(h))
        if (tb->value_as_double() > cf + kClosedFormTolerance) ++failed;
    }
  std::ostringstream os;
  os << "Jensen and TheoremB never exceed ClosedForm on 3<=n<=200, "
        "1<=d<=400: "
     << failed << " violations";
  return {"dominance", failed == 0, os.str()};
}

Suite suite_tate() {
  std::int64_t failed = 0;
  const std::int64_t g_max = 10000;
  // 2(2g+3) keeps a prime >= 2g+3 in range for every g (Bertrand)
  const PrimeTable table(4 * g_max + 10);
  const auto ps = table.primes();
  for (std::int64_t g = 1; g <= g_max; ++g) {
    if (table.contains(2 * g + 2)) ++failed;  // 2g+2 is even and > 2
    // the guarantee flips exactly at 2g+3 over the prime table
    const auto at = std::lower_bound(ps.begin(), ps.end(), 2 * g + 3);
    if (at != ps.begin() && tate_smooth_guarantee(g, *(at - 1))) ++failed;
    if (at == ps.end() || !tate_smooth_guarantee(g, *at)) ++failed;
    if (table.contains(2 * g + 1) &&
        sharpness_example_genus(SharpnessKind::Rosenlicht, 2 * g + 1) != g)
      ++failed;
  }
  std::ostringstream os;
  os << "2g+2 composite, smoothness flip at 2g+3, Rosenlicht genus for "
        "g <= "
     << g_max << ": " << failed << " failures";
  return {"tate", failed == 0, os.str()};
}

int cmd_check(std::int64_t n_max, std::int64_t d_max) {
  const Suite suites[] = {suite_oracle(n_max, d_max), suite_identity(),
                          suite_dominance(), suite_tate()};
  bool all = true;
  for (const auto& s : suites) {
    std::cout << (s.passed ? "PASS" : "FAIL") << "  " << s.name << ": "
              << s.detail << "\n";
    all = all && s.passed;
  }
  std::cout << (all ? "all suites passed" : "some suites FAILED") << "\n";
  return all ? kExitOk : 1;
}

std::optional<std::int64_t> read_sieve_limit_env(std::string& err) {
  const char* raw = std::getenv("FIBGEN_SIEVE_LIMIT");
  if (!raw) return std::nullopt;
  char* end = nullptr;
  const long long v = std::strtoll(raw, &end, 10);
  if (end == raw || *end != '\0' || v <= 0) {
    err = "FIBGEN_SIEVE_LIMIT must be a positive integer, got \"" +
          std::string(raw) + "\"";
    return std::nullopt;
  }
  return v;
}

}  // namespace

int run(int argc, const char* const* argv) {
  CLI::App app{
      "fibgen: certified lower and upper bounds on the fibering genus of "
      "very general hypersurfaces X_(n,d) in P^(n+1)"};
  app.require_subcommand(1);

  std::string err;
  const auto env_limit = read_sieve_limit_env(err);
  if (!err.empty()) {
    std::cerr << "error: " << err << "\n";
    return kExitUsage;
  }
  if (env_limit) set_sieve_limit_override(*env_limit);

  std::int64_t n = 0, d = 0, g = 0;
  std::string format;
  std::string out_path;
  sweep::GridRect rect;
  std::int64_t n_max = 120, d_max = 240;

  auto* bound = app.add_subcommand("bound", "all certificates for one (n, d)");
  bound->add_option("--n", n, "dimension (>= 3)")->required();
  bound->add_option("--d", d, "degree (>= 1)")->required();
  bound->add_option("--format", format, "human|json")
      ->default_val("human")
      ->check(CLI::IsMember({"human", "json"}));

  auto* table =
      app.add_subcommand("table", "guaranteed-bound table per prime");
  table->add_option("--format", format, "human|csv|json")
      ->default_val("human")
      ->check(CLI::IsMember({"human", "csv", "json"}));

  auto* grid = app.add_subcommand("grid", "sweep a rectangle of (n, d)");
  grid->add_option("--n-min", rect.n_min, "smallest n (>= 3)")->required();
  grid->add_option("--n-max", rect.n_max, "largest n")->required();
  grid->add_option("--d-min", rect.d_min, "smallest d (>= 1)")->required();
  grid->add_option("--d-max", rect.d_max, "largest d")->required();
  grid->add_option("--format", format, "csv|json|svg")
      ->default_val("csv")
      ->check(CLI::IsMember({"csv", "json", "svg"}));
  grid->add_option("--out", out_path, "output file (stdout when omitted)");

  auto* threshold = app.add_subcommand(
      "threshold", "minimal degree guaranteeing fib.gen >= g+1");
  threshold->add_option("--n", n, "dimension (>= 3)")->required();
  threshold->add_option("--g", g, "genus (>= 1)")->required();
  threshold->add_option("--format", format, "human|json")
      ->default_val("human")
      ->check(CLI::IsMember({"human", "json"}));

  auto* check = app.add_subcommand("check", "run the property suites");
  check->add_option("--n-max", n_max, "oracle grid n limit")->default_val(120);
  check->add_option("--d-max", d_max, "oracle grid d limit")->default_val(240);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);  // prints the message
    return kExitUsage;
  }

  try {
    if (bound->parsed()) return cmd_bound(n, d, format);
    if (table->parsed()) return cmd_table(format);
    if (grid->parsed()) return cmd_grid(rect, format, out_path);
    if (threshold->parsed()) return cmd_threshold(n, g, format);
    if (check->parsed()) return cmd_check(n_max, d_max);
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const std::filesystem::filesystem_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

int run(const std::vector<std::string>& args) {
  std::vector<const char*> argv;
  argv.push_back("fibgen");
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data());
}

}  // namespace fibgen::cli
