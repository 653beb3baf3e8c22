// twistgrp: verification suites, coset digraph export and number-theory
// tables from the command line.
//
// Exit codes: 0 every check passed, 1 some check failed, 2 usage error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "twistgrp/digraph.hpp"
#include "twistgrp/numth.hpp"
#include "twistgrp/suites.hpp"
#include "twistgrp/suzuki.hpp"

namespace {

using namespace twistgrp;

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct VerifyOptions {
  std::string suite;
  std::optional<std::uint64_t> q;
  std::uint64_t m = 1;
  std::size_t cap = kDefaultClosureCap;
  unsigned jobs = 1;
  std::string report_path;
  bool timings = false;
};

void add_verify_flags(CLI::App* cmd, VerifyOptions& o) {
  cmd->add_option("--q", o.q, "field order q");
  cmd->add_option("--m", o.m, "order of the outer field automorphism (tables)")->check(CLI::PositiveNumber);
  cmd->add_option("--cap", o.cap, "enumeration cap on group orders")->check(CLI::PositiveNumber);
  cmd->add_option("--jobs", o.jobs, "worker threads for maximality tests")->check(CLI::PositiveNumber);
  cmd->add_option("--report", o.report_path, "write the JSON report to PATH ('-' for stdout)");
  cmd->add_flag("--timings", o.timings, "include wall times in the JSON report");
}

void write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  out << text;
  if (!out) throw std::runtime_error("write to " + path + " failed");
}

int run_verify(const VerifyOptions& o) {
  const Report report = run_suite(o.suite, {o.q, o.m, o.cap, o.jobs});
  std::cout << report.summary();
  std::cout << report.count(Status::Pass) << " passed, " << report.count(Status::Fail) << " failed, "
            << report.count(Status::Skipped) << " skipped\n";
  if (!o.report_path.empty()) write_text(o.report_path, report.to_json(o.timings).dump(2) + "\n");
  return report.passed() ? EXIT_SUCCESS : kExitFail;
}

struct EmitOptions {
  std::string group = "suzuki";
  std::uint64_t q = 8;
  std::string format = "edges";
  std::string output;
  std::size_t cap = kDefaultClosureCap;
};

void add_emit_flags(CLI::App* cmd, EmitOptions& o, const std::string& format_flag) {
  cmd->add_option("--group", o.group, "group family")->check(CLI::IsMember({"suzuki"}));
  cmd->add_option("--q", o.q, "field order q");
  cmd->add_option(format_flag, o.format, "dot, edges or json")->check(CLI::IsMember({"dot", "edges", "json"}));
  cmd->add_option("-o,--output", o.output, "output file (stdout if omitted)");
  cmd->add_option("--cap", o.cap, "enumeration cap on group orders")->check(CLI::PositiveNumber);
}

int run_emit(const EmitOptions& o) {
  const ExportFormat format = parse_export_format(o.format);
  try {
    twisted_exponent(o.q, 2);
  } catch (const NumthError& e) {
    throw UsageError(std::string("invalid --q: ") + e.what());
  }
  if (suzuki_order(o.q) > o.cap)
    throw UsageError("Sz(" + std::to_string(o.q) + ") has " + std::to_string(suzuki_order(o.q)) +
                     " elements, above the enumeration cap of " + std::to_string(o.cap) +
                     "; the coset digraph needs the enumerated group, so use --q 8 or raise --cap");
  const SuzukiContext ctx = SuzukiContext::build(o.q, o.cap);
  auto ingredients = suzuki_digraph_ingredients(ctx);
  const CosetDigraph d =
      build_coset_digraph(ctx.group_ptr(), std::make_shared<const EnumeratedGroup>(std::move(ingredients.h)), ingredients.g);
  write_text(o.output, export_digraph(d, format));
  const auto deg = d.out_degree();
  std::ostream& log = o.output.empty() ? std::cerr : std::cout;
  log << "Cos(Sz(" << o.q << "), N_G(K), rho): " << d.vertex_count() << " vertices, out-degree "
      << (deg ? std::to_string(*deg) : std::string("irregular")) << ", " << d.arc_count() << " arcs\n";
  return EXIT_SUCCESS;
}

int run_ppd(std::uint64_t a, unsigned m) {
  const auto primes = primitive_prime_divisors(a, m);
  nlohmann::json j;
  j["a"] = a;
  j["m"] = m;
  j["primitive_prime_divisors"] = primes;
  j["zsigmondy_exception"] = is_zsigmondy_exception(a, m);
  std::cout << j.dump() << '\n';
  return EXIT_SUCCESS;
}

int run_table(const std::string& family, std::uint64_t q, std::uint64_t m) {
  std::cout << max_subgroup_table(parse_family(family), q, m).to_json().dump(2) << '\n';
  return EXIT_SUCCESS;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Verification toolkit for the Suzuki and small Ree groups"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "twistgrp 0.1.0");

  VerifyOptions verify;
  auto* verify_cmd = app.add_subcommand("verify", "run a named verification suite");
  verify_cmd->add_option("--suite", verify.suite, "numth, grp-factorization, suzuki-lemmas, suzuki-digraph, ree-certificate or all")
      ->required();
  add_verify_flags(verify_cmd, verify);

  EmitOptions emit;
  auto* emit_cmd = app.add_subcommand("emit", "export the coset digraph Cos(Sz(q), N_G(K), rho)");
  add_emit_flags(emit_cmd, emit, "--format");

  auto* digraph_cmd = app.add_subcommand("digraph", "coset digraphs");
  digraph_cmd->require_subcommand(1);
  EmitOptions build;
  build.format = "dot";
  auto* build_cmd = digraph_cmd->add_subcommand("build", "build and export Cos(Sz(q), N_G(K), rho)");
  add_emit_flags(build_cmd, build, "--emit");

  auto* numth_cmd = app.add_subcommand("numth", "number theory");
  numth_cmd->require_subcommand(1);
  std::uint64_t ppd_a = 2;
  unsigned ppd_m = 1;
  auto* ppd_cmd = numth_cmd->add_subcommand("ppd", "primitive prime divisors of a^m - 1");
  ppd_cmd->add_option("--a", ppd_a, "base a >= 2")->required();
  ppd_cmd->add_option("--m", ppd_m, "exponent m >= 1")->required();
  std::string table_family;
  std::uint64_t table_q = 0;
  std::uint64_t table_m = 1;
  auto* table_cmd = numth_cmd->add_subcommand("table", "maximal subgroup orders of Sz(q):m or 2G2(q):m");
  table_cmd->add_option("--family", table_family, "suzuki or ree")->required();
  table_cmd->add_option("--q", table_q, "field order q")->required();
  table_cmd->add_option("--m", table_m, "outer automorphism order, dividing 2n+1");

  VerifyOptions suzuki;
  std::string suzuki_suite = "lemmas";
  auto* suzuki_cmd = app.add_subcommand("suzuki", "Suzuki group checks");
  suzuki_cmd->require_subcommand(1);
  auto* suzuki_verify = suzuki_cmd->add_subcommand("verify", "run the Suzuki suites");
  suzuki_verify->add_option("--suite", suzuki_suite, "lemmas or digraph")->check(CLI::IsMember({"lemmas", "digraph"}));
  add_verify_flags(suzuki_verify, suzuki);

  VerifyOptions ree;
  std::string ree_suite = "all";
  auto* ree_cmd = app.add_subcommand("ree", "Ree group checks");
  ree_cmd->require_subcommand(1);
  auto* ree_verify = ree_cmd->add_subcommand("verify", "run the Ree certificate");
  ree_verify->add_option("--suite", ree_suite, "all")->check(CLI::IsMember({"all"}));
  add_verify_flags(ree_verify, ree);

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*verify_cmd) return run_verify(verify);
    if (*emit_cmd) return run_emit(emit);
    if (*build_cmd) return run_emit(build);
    if (*ppd_cmd) return run_ppd(ppd_a, ppd_m);
    if (*table_cmd) return run_table(table_family, table_q, table_m);
    if (*suzuki_verify) {
      suzuki.suite = "suzuki-" + suzuki_suite;
      return run_verify(suzuki);
    }
    if (*ree_verify) {
      ree.suite = "ree-certificate";
      return run_verify(ree);
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const NumthError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ClosureCapExceeded& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFail;
  }
  return kExitUsage;
}
