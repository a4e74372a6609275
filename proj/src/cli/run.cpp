#include <algorithm>
#include <map>

#include <CLI11.hpp>

#include "commands.hpp"
#include "stfib/cli.hpp"
#include "stfib/error.hpp"

namespace stfib::cli {

namespace {

const std::map<std::string, Format> kFormats{{"human", Format::Human}, {"json", Format::Json}, {"csv", Format::Csv}};

void add_params(CLI::App* sub, CliConfig& cfg) {
  sub->add_option("--s", cfg.s, "parameter s as a rational string")->capture_default_str();
  sub->add_option("--t", cfg.t, "parameter t as a rational string")->capture_default_str();
  sub->add_option("--output", cfg.output, "output format")->transform(CLI::CheckedTransformer(kFormats));
}

void add_digits(CLI::App* sub, CliConfig& cfg) {
  sub->add_option("--digits", cfg.digits, "fractional digits in decimal renderings")
      ->capture_default_str()
      ->check(CLI::Range(1, 100000));
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CliConfig cfg;
  CLI::App app{"Exact (s,t)-Fibonacci calculus and certified deformed Euler numbers", "stfib"};
  app.require_subcommand(1, 1);
  app.set_version_flag("--version", std::string(kSchema));

  auto* seq = app.add_subcommand("seq", "{n}_{s,t}");
  add_params(seq, cfg);
  seq->add_option("--n", cfg.n, "index")->required();
  seq->add_flag("--all", cfg.all, "print {0}..{n}");
  seq->add_option("--kernel", cfg.kernel, "recurrence, fast-doubling, binet or closed-form")
      ->check(CLI::IsMember({"recurrence", "fast-doubling", "binet", "closed-form"}))
      ->capture_default_str();

  auto* fact = app.add_subcommand("fact", "fibotorial {n}! (cached under $STFIB_CACHE_DIR when set)");
  add_params(fact, cfg);
  fact->add_option("--n", cfg.n, "index")->required();

  auto* binom = app.add_subcommand("binom", "fibonomial coefficient");
  add_params(binom, cfg);
  binom->add_option("--n", cfg.n)->required();
  binom->add_option("--k", cfg.k)->required();

  auto* deform = app.add_subcommand("deform", "parameter deformation (s,t) -> (as, a^2 t)");
  add_params(deform, cfg);
  deform->add_option("--a", cfg.a, "deformation factor")->required();
  deform->add_option("--n", cfg.n, "index for the scaling check")->default_val(10);
  deform->add_option("--u", cfg.u, "also check the Euler-number scaling identity at base u");

  auto* lemma = app.add_subcommand("lemma", "growth thresholds of {n}_{|s|,t} (Δ > 0)");
  add_params(lemma, cfg);
  lemma->add_option("--horizon", cfg.horizon)->capture_default_str();

  auto* classify = app.add_subcommand("classify", "convergence of the deformed exponential");
  add_params(classify, cfg);
  add_digits(classify, cfg);
  classify->add_option("--u", cfg.u, "deformation base u > 0")->required();

  auto* series = app.add_subcommand("series-check", "functional equation D exp(z,u) = exp(uz,u)");
  add_params(series, cfg);
  series->add_option("--u", cfg.u)->required();
  series->add_option("--order", cfg.order, "truncation order N >= 2")->capture_default_str();

  auto* euler = app.add_subcommand("euler", "certified enclosure of the deformed Euler number");
  add_params(euler, cfg);
  add_digits(euler, cfg);
  euler->add_option("--u", cfg.u, "series base u > 0")->default_val("1");
  euler->add_option("--sign", cfg.sign)->check(CLI::IsMember({"plus", "alternating"}))->capture_default_str();
  euler->add_option("--width", cfg.width, "target width (1e-12, 0.001 or p/q)")->capture_default_str();

  auto* estimate = app.add_subcommand(
      "estimate",
      "order-6 estimate 2 + 1/s + Σ_{k=3..6} 1/{k}!, upper + 1/({7}!({8}-1)); lower/upper use directed "
      "rounding, lower_truncated/upper_truncated truncate toward zero like the classical printed tables");
  add_params(estimate, cfg);
  add_digits(estimate, cfg);

  auto* phi = app.add_subcommand("phi-euler", "Euler sum with base φ or φ′ in Q(√Δ)");
  add_params(phi, cfg);
  add_digits(phi, cfg);
  phi->add_option("--root", cfg.root)->check(CLI::IsMember({"phi", "phi-prime"}))->capture_default_str();
  phi->add_option("--sign", cfg.sign)->check(CLI::IsMember({"plus", "alternating"}))->capture_default_str();
  phi->add_option("--n", cfg.n, "partial-sum order")->default_val(40);

  auto* witness = app.add_subcommand("witness", "irrationality witness certificates");
  add_params(witness, cfg);
  add_digits(witness, cfg);
  witness->add_option("--u", cfg.u, "U >= 1; the series base is 1/U")->required();
  witness->add_option("--mode", cfg.mode)
      ->check(CLI::IsMember({"scan", "direct", "inverse", "divisibility"}))
      ->capture_default_str();
  witness->add_option("--q", cfg.q, "candidate denominator");
  witness->add_option("--q-min", cfg.q_min)->capture_default_str();
  witness->add_option("--q-max", cfg.q_max)->capture_default_str();
  witness->add_option("--m", cfg.m, "index m for the inverse witness")->capture_default_str();
  witness->add_option("--depth", cfg.depth, "partial-sum depth (default q+30)");
  witness->add_option("--threads", cfg.threads, "scan workers (0 = hardware)")->capture_default_str();
  witness->add_flag("--strict", cfg.strict, "exit 2 unless every verdict is Certified");

  auto* bench = app.add_subcommand("bench", "timing harness for the sequence kernels");
  add_params(bench, cfg);
  bench->add_option("--kind", cfg.kind)
      ->check(CLI::IsMember({"recurrence", "fast-doubling", "fibotorial"}))
      ->capture_default_str();
  bench->add_option("--n", cfg.n)->required()->check(CLI::PositiveNumber);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }
  cfg.subcommand = app.get_subcommands().front()->get_name();

  try {
    return run_command(cfg, out, err);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return e.code() == Errc::ParseError ? kUsage : kDomainError;
  }
}

}  // namespace stfib::cli
