// moc: command line front end for the markedorder library.
//
// Verbs read one JSON document from a file (or stdin with "-") and print the
// result on stdout; diagnostics go to stderr. Exit codes: 0 success,
// 1 verification failure, 2 input error, 3 size limit.

#include <CLI11.hpp>

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "markedorder.h"

namespace {

int exit_code_of(int status) {
  switch (status) {
    case MOC_OK:
      return 0;
    case MOC_ERR_VERIFY:
      return 1;
    case MOC_ERR_SIZE_LIMIT:
      return 3;
    default:
      return 2;
  }
}

int report_failure(int status) {
  std::cerr << "error: " << moc_last_error() << "\n";
  return exit_code_of(status);
}

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream buffer;
    buffer << std::cin.rdbuf();
    return buffer.str();
  }
  std::ifstream in(path);
  if (!in) {
    std::cerr << "error: cannot open " << path << "\n";
    std::exit(2);
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

uint64_t node_budget_from_env() {
  const char* env = std::getenv("MARKED_ORDER_NODE_BUDGET");
  if (!env || !*env) return MOC_DEFAULT_NODE_BUDGET;
  return std::strtoull(env, nullptr, 10);
}

// Print-a-string verbs share this shape: parse handle, call, print.
template <typename Handle, typename Parse, typename Free, typename Call>
int with_handle(const std::string& input, Parse parse, Free release, Call call) {
  Handle* handle = nullptr;
  if (int status = parse(input.c_str(), &handle); status != MOC_OK) return report_failure(status);
  char* text = nullptr;
  int status = call(handle, &text);
  if (status == MOC_OK) {
    std::string out(text);
    std::cout << out;
    if (!out.empty() && out.back() != '\n') std::cout << "\n";
  }
  moc_string_free(text);
  release(handle);
  return status == MOC_OK ? 0 : report_failure(status);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact lattice point counts and counting polynomials for marked posets"};
  app.set_version_flag("--version", std::string(moc_version()));
  app.require_subcommand(1);

  std::string input;
  auto* order_poly = app.add_subcommand("order-poly", "print the order polynomial of a poset");
  order_poly->add_option("input", input, "poset or skew shape JSON, - for stdin")->required();

  auto* marked_poly =
      app.add_subcommand("marked-poly", "print the labeling, region, and counting polynomial");
  marked_poly->add_option("input", input, "marked poset or family spec JSON, - for stdin")
      ->required();

  auto* ehrhart = app.add_subcommand("ehrhart", "print the Ehrhart polynomial");
  ehrhart->add_option("input", input, "marked poset or family spec JSON, - for stdin")->required();

  auto* count = app.add_subcommand("count", "print the exact lattice point count");
  count->add_option("input", input, "marked poset or family spec JSON, - for stdin")->required();

  auto* positivity =
      app.add_subcommand("check-positivity", "exit 0 iff all coefficients are nonnegative");
  positivity->add_option("input", input, "marked poset or family spec JSON, - for stdin")
      ->required();

  std::uint32_t trials = 100;
  std::uint64_t seed = 1;
  auto* oracle = app.add_subcommand("oracle-check", "formula vs brute-force oracle equality");
  oracle->add_option("input", input, "document path, - for stdin, or 'random'")->required();
  oracle->add_option("--trials", trials, "number of random instances");
  oracle->add_option("--seed", seed, "random seed");

  auto* gen = app.add_subcommand("gen", "emit the JSON for a family instance");
  gen->require_subcommand(1);
  int k = 1, m = 1;
  std::vector<long long> y, z, lambda, mu;
  auto* gen_ps = gen->add_subcommand("ps", "Pitman-Stanley family");
  gen_ps->add_option("--k", k)->required();
  gen_ps->add_option("--m", m)->required();
  gen_ps->add_option("--y", y, "comma separated")->required()->delimiter(',');
  gen_ps->add_option("--z", z, "comma separated")->required()->delimiter(',');
  auto* gen_gt = gen->add_subcommand("gt", "Gelfand-Tsetlin family");
  gen_gt->add_option("--k", k)->required();
  gen_gt->add_option("--m", m)->required();
  gen_gt->add_option("--y", y, "comma separated")->required()->delimiter(',');
  gen_gt->add_option("--z", z, "comma separated")->required()->delimiter(',');
  auto* gen_skew = gen->add_subcommand("skew", "skew shape");
  gen_skew->add_option("--lambda", lambda, "comma separated")->required()->delimiter(',');
  gen_skew->add_option("--mu", mu, "comma separated")->delimiter(',');

  CLI11_PARSE(app, argc, argv);
  const uint64_t budget = node_budget_from_env();

  if (*order_poly)
    return with_handle<moc_poset>(read_input(input), moc_poset_parse, moc_poset_free,
                                  moc_order_polynomial);
  if (*marked_poly)
    return with_handle<moc_marked>(read_input(input), moc_marked_parse, moc_marked_free,
                                   moc_marked_report);
  if (*ehrhart)
    return with_handle<moc_marked>(read_input(input), moc_marked_parse, moc_marked_free,
                                   moc_ehrhart_polynomial);
  if (*count)
    return with_handle<moc_marked>(read_input(input), moc_marked_parse, moc_marked_free,
                                   [budget](const moc_marked* h, char** out) {
                                     return moc_count(h, budget, out);
                                   });

  if (*positivity) {
    moc_marked* handle = nullptr;
    if (int status = moc_marked_parse(read_input(input).c_str(), &handle); status != MOC_OK)
      return report_failure(status);
    int nonnegative = 0;
    char* offenders = nullptr;
    int status = moc_positivity(handle, &nonnegative, &offenders);
    moc_marked_free(handle);
    if (status != MOC_OK) {
      moc_string_free(offenders);
      return report_failure(status);
    }
    if (nonnegative) {
      std::cout << "all coefficients nonnegative\n";
    } else {
      std::cout << "negative coefficients found:\n" << offenders;
    }
    moc_string_free(offenders);
    return nonnegative ? 0 : 1;
  }

  if (*oracle) {
    char* report = nullptr;
    int status;
    if (input == "random") {
      uint32_t failures = 0;
      status = moc_oracle_check_random(trials, seed, budget, &failures, &report);
    } else {
      status = moc_oracle_check_doc(read_input(input).c_str(), budget, &report);
    }
    if (report) {
      std::cout << report;
      moc_string_free(report);
    }
    if (status != MOC_OK && status != MOC_ERR_VERIFY) return report_failure(status);
    return exit_code_of(status);
  }

  if (*gen) {
    if ((*gen_ps || *gen_gt) &&
        (y.size() != static_cast<std::size_t>(k) || z.size() != static_cast<std::size_t>(k))) {
      std::cerr << "error: --y and --z must have length k\n";
      return 2;
    }
    char* json = nullptr;
    int status;
    if (*gen_ps)
      status = moc_gen_ps(k, m, y.data(), z.data(), &json);
    else if (*gen_gt)
      status = moc_gen_gt(k, m, y.data(), z.data(), &json);
    else
      status = moc_gen_skew(lambda.data(), lambda.size(), mu.data(), mu.size(), &json);
    if (status != MOC_OK) return report_failure(status);
    std::cout << json << "\n";
    moc_string_free(json);
    return 0;
  }

  return 2;
}
