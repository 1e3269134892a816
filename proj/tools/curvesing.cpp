#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>

#include <CLI11.hpp>

#include "curvesing/report.hpp"

using namespace curvesing;

namespace {

std::string read_all(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  std::ifstream in(path);
  require(static_cast<bool>(in), ErrorKind::Input, "cli", "cannot open '" + path + "'");
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

int exit_code(ErrorKind k) { return k == ErrorKind::Invariant ? 3 : 2; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Singular factors and singularity analysis of rational plane curves"};
  std::string input = "-", mode, checks, format = "json";
  std::optional<std::uint64_t> seed;
  bool approx = false, dump = false;
  std::size_t max_enum = 8;
  app.add_option("--input", input, "input file (JSON or key = expr lines), - for stdin");
  app.add_option("--mode", mode, "projective or rational-pair (default: from the input)")->check(CLI::IsMember({"projective", "rational-pair"}));
  app.add_option("--checks", checks, "comma-separated checks, 'all' or 'none' (default all)");
  app.add_option("--seed", seed, "seed for the random changes of coordinates (default CURVESING_SEED or 0)");
  app.add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}));
  app.add_flag("--approx-roots", approx, "include approximate roots of the singular factors");
  app.add_option("--max-enum", max_enum, "largest Bezout matrix whose full divisor chain is enumerated")->check(CLI::Range(2, 16));
  app.add_flag("--dump-matrices", dump, "include the resultant matrices in the JSON report");
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    std::optional<InputMode> forced;
    if (!mode.empty()) forced = parse_mode(mode);
    const InputSpec spec = parse_input(read_all(input), forced);

    PipelineOptions opt;
    opt.approx_roots = approx;
    opt.max_enum = max_enum;
    opt.dump_matrices = dump;
    if (seed) {
      opt.seed = *seed;
    } else if (spec.seed) {
      opt.seed = *spec.seed;
    } else if (const char* env = std::getenv("CURVESING_SEED"); env && *env) {
      try {
        opt.seed = std::stoull(env);
      } catch (const std::exception&) {
        fail(ErrorKind::Input, "cli", "CURVESING_SEED must be a nonnegative integer");
      }
    }
    if (!checks.empty()) {
      std::set<std::string> c;
      std::stringstream ss(checks);
      for (std::string item; std::getline(ss, item, ',');)
        if (!item.empty()) c.insert(item);
      opt.checks = c;
    } else {
      opt.checks = spec.checks;
    }

    const ReportDocument doc = run_pipeline(spec, opt);
    std::cout << (format == "json" ? emit_json(doc) : emit_text(doc));
    return doc.passed() ? 0 : 1;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
}
