// capdiag: cap diagrams, tallies and matching sets of weight functions.
//
// Exit codes: 0 verified, 1 violation found, 2 usage error, 3 resource abort.

#include <iostream>
#include <stdexcept>
#include <string>

#include <CLI11.hpp>

#include "capdiag/catalan.hpp"
#include "capdiag/io.hpp"
#include "capdiag/moves.hpp"
#include "capdiag/render.hpp"
#include "capdiag/sweep.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kViolation = 1;
constexpr int kUsage = 2;
constexpr int kResource = 3;

int cmd_flat(const std::string& spec, const std::string& format) {
  const auto f = capdiag::parse_weight_function(spec);
  const auto d = capdiag::flat_recursive(f);
  if (format == "json") {
    std::cout << capdiag::flat_report_json(d).dump(2) << '\n';
  } else {
    std::cout << capdiag::flat_report_text(d);
  }
  return kOk;
}

int cmd_render(const std::string& spec, const std::string& what, const std::string& style) {
  const auto f = capdiag::parse_weight_function(spec);
  capdiag::RenderRequest req{f, std::nullopt, std::nullopt, std::nullopt};
  if (what == "cap" || what == "all") req.caps = capdiag::build_cap_diagram(f);
  if (what == "tally" || what == "all") {
    if (f.empty()) throw std::invalid_argument("the empty weight function has no tally");
    req.tally = capdiag::tally(f);
  }
  std::cout << capdiag::render(req, style == "svg" ? capdiag::RenderStyle::Svg
                                                   : capdiag::RenderStyle::Ascii);
  return kOk;
}

int cmd_verify(const capdiag::SweepOptions& opts) {
  const auto rep = capdiag::run_sweep(opts);
  std::cout << capdiag::to_json(rep).dump(2) << '\n';
  if (!rep.violations.empty()) return kViolation;
  return rep.complete ? kOk : kResource;
}

int cmd_catalan(int n) {
  std::string line;
  bool ok = true;
  for (int k = 0; k <= n; ++k) {
    if (k) line += ", ";
    line += std::to_string(capdiag::catalan(k));
    if (k >= 1 && capdiag::catalan_recurrence_rhs(k - 1) != capdiag::catalan(k)) ok = false;
  }
  std::cout << line << '\n';
  if (!ok) {
    std::cerr << "fundamental recurrence failed\n";
    return kViolation;
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cap diagrams, tallies and matching sets of weight functions"};
  app.require_subcommand(1);

  std::string spec;
  std::string format = "text";
  auto* flat = app.add_subcommand("flat", "enumerate the matching set of f with its decomposition");
  flat->add_option("--f", spec, "comma separated increasing entries, e.g. 2,4")->required();
  flat->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  std::string what = "all";
  std::string style = "ascii";
  auto* render = app.add_subcommand("render", "draw the weight diagram, caps and tally");
  render->add_option("--f", spec, "comma separated increasing entries")->required();
  render->add_option("--what", what)->check(CLI::IsMember({"wt", "cap", "tally", "all"}));
  render->add_option("--style", style)->check(CLI::IsMember({"ascii", "svg"}));

  capdiag::SweepOptions opts;
  double budget = 0.0;
  auto* verify = app.add_subcommand("verify", "exhaustive sweep of the bounds at one rank");
  verify->add_option("--rank", opts.rank)->required();
  verify->add_option("--window", opts.window)->required();
  verify->add_option("--jobs", opts.jobs)->check(CLI::PositiveNumber);
  verify->add_option("--max-rank", opts.max_rank);
  verify->add_option("--oracle-rank", opts.oracle_full_max_rank,
                     "run the brute force oracle on every function up to this rank");
  verify->add_option("--oracle-samples", opts.oracle_samples,
                     "oracle sample size above --oracle-rank");
  verify->add_option("--seed", opts.seed);
  verify->add_option("--time-budget", budget, "seconds; 0 means unlimited");

  int n = 0;
  auto* cat = app.add_subcommand("catalan", "print C_0..C_n and check the recurrence");
  cat->add_option("n", n)->required()->check(CLI::NonNegativeNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    if (*flat) return cmd_flat(spec, format);
    if (*render) return cmd_render(spec, what, style);
    if (*verify) {
      if (budget > 0.0) opts.time_budget_seconds = budget;
      return cmd_verify(opts);
    }
    if (*cat) return cmd_catalan(n);
  } catch (const std::overflow_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kResource;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
