#include "commands.hpp"

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <regex>

#include <json.hpp>

#include "stfib/cli.hpp"
#include "stfib/degenerate.hpp"
#include "stfib/enclosure.hpp"
#include "stfib/error.hpp"
#include "stfib/euler.hpp"
#include "stfib/sequences.hpp"
#include "stfib/series.hpp"
#include "stfib/witness.hpp"

namespace stfib::cli {

namespace {

using Json = nlohmann::ordered_json;
using Clock = std::chrono::steady_clock;

[[noreturn]] void usage(const std::string& what) { throw Error(Errc::ParseError, what); }

std::string format_double(double x, const char* fmt = "%.17g") {
  char buf[64];
  std::snprintf(buf, sizeof buf, fmt, x);
  return buf;
}

double elapsed_ms(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

Json header(const CliConfig& cfg, const STParams& p) {
  Json j;
  j["schema"] = kSchema;
  j["command"] = cfg.subcommand;
  j["s"] = p.s().str();
  j["t"] = p.t().str();
  return j;
}

// Interval fields with directed rounding plus the exact endpoints.
void put_interval(Json& j, const Enclosure& e, int digits, bool certified) {
  const DecimalPair d = enclose_decimal(e, digits);
  j["lower"] = d.lo;
  j["upper"] = d.hi;
  j["lower_exact"] = e.lo().str();
  j["upper_exact"] = e.hi().str();
  j["certified"] = certified;
}

std::string scalar_text(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_null()) return "none";
  if (v.is_array()) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + scalar_text(v[i]);
    return out;
  }
  return v.dump();
}

void render_human(std::ostream& out, const Json& j, const std::string& prefix = "") {
  for (const auto& [key, value] : j.items()) {
    if (prefix.empty() && (key == "schema" || key == "command")) continue;
    if (value.is_object()) {
      render_human(out, value, prefix + key + ".");
    } else {
      out << prefix << key << ": " << scalar_text(value) << "\n";
    }
  }
}

void emit(std::ostream& out, const Json& j, Format format) {
  if (format == Format::Json) {
    out << j.dump(2) << "\n";
  } else if (format == Format::Human) {
    render_human(out, j);
  } else {
    usage("csv output is only available for seq and witness");
  }
}

std::string csv_field(const std::string& text) {
  if (text.find_first_of(",\"\n") == std::string::npos) return text;
  std::string out = "\"";
  for (char c : text) out += c == '"' ? std::string("\"\"") : std::string(1, c);
  return out + "\"";
}

Format format_or(const CliConfig& cfg, Format fallback) { return cfg.output.value_or(fallback); }

RootBranch branch_for(const STParams& p) { return p.s().sign() > 0 ? RootBranch::Minus : RootBranch::Plus; }

// ---- seq ----------------------------------------------------------------

struct SeqValue {
  std::string text;
  std::optional<double> error_bound;
};

SeqValue seq_value(const CliConfig& cfg, const STParams& p, SeqCache& cache, std::size_t i) {
  if (cfg.kernel == "recurrence") return {cache.fib(i).str(), {}};
  if (cfg.kernel == "fast-doubling") return {fib_fast(p, i).str(), {}};
  if (cfg.kernel == "binet") return {fib_binet(p, i).str(), {}};
  switch (p.regime()) {
    case Regime::PositiveDisc: return {fib_binet(p, i).str(), {}};
    case Regime::ZeroDisc: return {fib_zero_disc(p.t(), branch_for(p), i).value().str(), {}};
    case Regime::NegativeDisc: {
      const NegDiscValue v = fib_neg_disc(p, i);
      return {format_double(v.value), v.error_bound};
    }
  }
  throw Error(Errc::Internal, "unreachable regime");
}

int cmd_seq(const CliConfig& cfg, const STParams& p, std::ostream& out) {
  SeqCache cache(p);
  std::vector<std::size_t> indices;
  for (std::size_t i = cfg.all ? 0 : cfg.n; i <= cfg.n; ++i) indices.push_back(i);
  std::vector<SeqValue> values;
  for (std::size_t i : indices) values.push_back(seq_value(cfg, p, cache, i));

  const Format format = format_or(cfg, Format::Human);
  if (format == Format::Human) {
    for (std::size_t i = 0; i < values.size(); ++i) {
      out << (i ? "," : "") << values[i].text;
      if (values[i].error_bound) out << " (+-" << format_double(*values[i].error_bound, "%.3g") << ")";
    }
    out << "\n";
    return kOk;
  }
  if (format == Format::Csv) {
    out << "n,value,error_bound\n";
    for (std::size_t i = 0; i < values.size(); ++i) {
      out << indices[i] << "," << values[i].text << ","
          << (values[i].error_bound ? format_double(*values[i].error_bound) : "0") << "\n";
    }
    return kOk;
  }
  Json j = header(cfg, p);
  j["kernel"] = cfg.kernel;
  j["regime"] = regime_name(p.regime());
  j["n"] = cfg.n;
  Json arr = Json::array();
  for (std::size_t i = 0; i < values.size(); ++i) {
    Json row;
    row["n"] = indices[i];
    row["value"] = values[i].text;
    row["exact"] = !values[i].error_bound.has_value();
    if (values[i].error_bound) row["error_bound"] = format_double(*values[i].error_bound);
    arr.push_back(row);
  }
  j["values"] = arr;
  emit(out, j, format);
  return kOk;
}

// ---- fact / binom ---------------------------------------------------------

BigRational cached_fibotorial(const STParams& p, std::size_t n, std::ostream& err) {
  const char* dir = std::getenv("STFIB_CACHE_DIR");
  if (dir == nullptr || *dir == '\0') return fibotorial(p, n);
  const FibotorialCache cache(dir, p);
  auto entries = cache.load(err);
  if (const auto it = entries.find(n); it != entries.end()) return it->second;
  BigRational value = fibotorial(p, n);
  entries.emplace(n, value);
  cache.store(entries);
  return value;
}

int cmd_value(const CliConfig& cfg, const STParams& p, const BigRational& value, std::ostream& out) {
  const Format format = format_or(cfg, Format::Human);
  if (format == Format::Human) {
    out << value.str() << "\n";
    return kOk;
  }
  Json j = header(cfg, p);
  j["n"] = cfg.n;
  if (cfg.subcommand == "binom") j["k"] = cfg.k;
  j["value"] = value.str();
  emit(out, j, format);
  return kOk;
}

// ---- deform / lemma -------------------------------------------------------

int cmd_deform(const CliConfig& cfg, const STParams& p, std::ostream& out) {
  const BigRational a = BigRational::parse(cfg.a);
  std::optional<BigRational> u;
  if (!cfg.u.empty()) u = BigRational::parse(cfg.u);
  const STParams d = deform_params(p, a);
  Json j = header(cfg, p);
  j["a"] = a.str();
  j["deformed_s"] = d.s().str();
  j["deformed_t"] = d.t().str();
  j["n"] = cfg.n;
  const BigRational lhs = fib(d, cfg.n);
  const BigRational rhs = cfg.n == 0 ? BigRational(0) : a.pow(static_cast<std::int64_t>(cfg.n) - 1) * fib(p, cfg.n);
  j["deformed_value"] = lhs.str();
  j["scaled_value"] = rhs.str();
  j["sequence_scaling_holds"] = lhs == rhs;
  if (u) {
    j["u"] = u->str();
    j["euler_scaling_holds"] = scaling_identity_check(p, a, *u, cfg.n);
  }
  emit(out, j, format_or(cfg, Format::Human));
  return kOk;
}

Json optional_index(const std::optional<std::size_t>& v) { return v ? Json(*v) : Json(nullptr); }

int cmd_lemma(const CliConfig& cfg, const STParams& p, std::ostream& out) {
  Json j = header(cfg, p);
  j["horizon"] = cfg.horizon;
  j["gap_start"] = optional_index(lemma_gap_start(p, cfg.horizon));
  j["n_le_fib_start"] = optional_index(lemma_n_le_fib_start(p, cfg.horizon));
  j["abs_identity_holds"] = abs_identity_check(p, cfg.horizon);
  emit(out, j, format_or(cfg, Format::Human));
  return kOk;
}

// ---- classify / series-check ----------------------------------------------

int cmd_classify(const CliConfig& cfg, const STParams& p, std::ostream& out) {
  const BigRational u = BigRational::parse(cfg.u);
  Json j = header(cfg, p);
  j["u"] = u.str();
  j["regime"] = regime_name(p.regime());
  ConvergenceClass cls;
  switch (p.regime()) {
    case Regime::PositiveDisc: cls = classify_convergence(p, u, pow10_inverse(cfg.digits + 10)); break;
    case Regime::ZeroDisc: cls = classify_zero_disc(p.t(), u); break;
    case Regime::NegativeDisc:
      throw Error(Errc::WrongRegime, "classification is defined for Δ >= 0, got Δ=" + p.delta().str());
  }
  j["tag"] = tag_name(cls.tag);
  if (cls.radius) {
    Json r;
    put_interval(r, *cls.radius, cfg.digits, true);
    j["radius"] = r;
  } else {
    j["radius"] = nullptr;
  }
  j["witness_set"] = cls.witness_set ? Json(set_name(*cls.witness_set)) : Json(nullptr);
  j["converges_at_one"] = cls.converges_at_one;
  if (p.regime() == Regime::PositiveDisc) j["star_set"] = star_set_name(star_membership(p, u));
  emit(out, j, format_or(cfg, Format::Json));
  return kOk;
}

int cmd_series_check(const CliConfig& cfg, const STParams& p, std::ostream& out) {
  const BigRational u = BigRational::parse(cfg.u);
  Json j = header(cfg, p);
  j["u"] = u.str();
  j["order"] = cfg.order;
  j["functional_equation_holds"] = verify_functional_eq(p, u, cfg.order);
  emit(out, j, format_or(cfg, Format::Json));
  return kOk;
}

// ---- euler / estimate / phi-euler -------------------------------------------

SeriesSign parse_sign(const std::string& text) {
  return text == "alternating" ? SeriesSign::Alternating : SeriesSign::Plus;
}

int cmd_euler(const CliConfig& cfg, const STParams& p, std::ostream& out) {
  const BigRational u = BigRational::parse(cfg.u);
  const BigRational width = parse_precision(cfg.width);
  const Enclosure e = enclosure(EulerSpec(p, u, parse_sign(cfg.sign)), width);
  Json j = header(cfg, p);
  j["u"] = u.str();
  j["sign"] = cfg.sign;
  j["target_width"] = width.str();
  put_interval(j, e, cfg.digits, true);
  emit(out, j, format_or(cfg, Format::Json));
  return kOk;
}

int cmd_estimate(const CliConfig& cfg, const STParams& p, std::ostream& out) {
  const EstimateBounds b = order6_estimate_bounds(p);
  const Enclosure est(b.lower, b.upper);
  Json j = header(cfg, p);
  put_interval(j, est, cfg.digits, false);
  j["lower_truncated"] = render_decimal(b.lower, cfg.digits, DecimalRounding::Truncate);
  j["upper_truncated"] = render_decimal(b.upper, cfg.digits, DecimalRounding::Truncate);

  Json cmp;
  try {
    const Enclosure rigorous = enclosure(EulerSpec(p, 1, SeriesSign::Plus), pow10_inverse(cfg.digits + 10));
    Json r;
    put_interval(r, rigorous, cfg.digits + 4, true);
    cmp["rigorous"] = r;
    cmp["rigorous_inside_estimate"] = est.contains(rigorous);
    const auto sums = partial_sums(p, 1, SeriesSign::Plus, 7);
    cmp["s6"] = sums[6].str();
    cmp["s6_inside_estimate"] = est.contains(sums[6]);
    cmp["s7"] = sums[7].str();
    cmp["s7_inside_estimate"] = est.contains(sums[7]);
  } catch (const Error& e) {
    cmp["unavailable"] = e.what();
  }
  j["comparison"] = cmp;
  emit(out, j, format_or(cfg, Format::Json));
  return kOk;
}

int cmd_phi_euler(const CliConfig& cfg, const STParams& p, std::ostream& out) {
  const PhiEulerSpec spec{p, cfg.root == "phi" ? RootChoice::Phi : RootChoice::PhiPrime, parse_sign(cfg.sign)};
  const PhiEulerResult r = phi_euler_enclosure(spec, cfg.n, pow10_inverse(cfg.digits + 10));
  Json j = header(cfg, p);
  j["root"] = cfg.root;
  j["sign"] = cfg.sign;
  j["n"] = cfg.n;
  j["star_set"] = star_set_name(r.star_set);
  j["partial_sum"] = r.partial_sum.str();
  put_interval(j, r.value, cfg.digits, true);
  emit(out, j, format_or(cfg, Format::Json));
  return kOk;
}

// ---- witness ------------------------------------------------------------------

std::string join_notes(const std::vector<std::string>& notes) {
  std::string out;
  for (std::size_t i = 0; i < notes.size(); ++i) out += (i ? "; " : "") + notes[i];
  return out;
}

int emit_reports(const CliConfig& cfg, const STParams& p, const BigRational& big_u,
                 const std::vector<WitnessReport>& reports, std::ostream& out) {
  const Format format = format_or(cfg, Format::Csv);
  if (format == Format::Csv) {
    out << "q,depth,verdict,quantity_lo,quantity_hi,threshold,notes\n";
    for (const auto& r : reports) {
      const DecimalPair d = enclose_decimal(r.quantity, cfg.digits);
      out << r.q << "," << r.depth << "," << verdict_name(r.verdict) << "," << d.lo << "," << d.hi << ","
          << r.threshold.str() << "," << csv_field(join_notes(r.hypothesis_notes)) << "\n";
    }
  } else if (format == Format::Human) {
    for (const auto& r : reports) {
      const DecimalPair d = enclose_decimal(r.quantity, cfg.digits);
      out << "q=" << r.q << " depth=" << r.depth << " " << verdict_name(r.verdict) << " quantity=[" << d.lo << ", "
          << d.hi << "] threshold=" << r.threshold.str();
      if (!r.hypothesis_notes.empty()) out << " notes: " << join_notes(r.hypothesis_notes);
      out << "\n";
    }
  } else {
    Json j = header(cfg, p);
    j["U"] = big_u.str();
    j["mode"] = cfg.mode;
    Json arr = Json::array();
    for (const auto& r : reports) {
      Json row;
      row["q"] = r.q;
      row["depth"] = r.depth;
      row["verdict"] = verdict_name(r.verdict);
      Json quantity;
      put_interval(quantity, r.quantity, cfg.digits, true);
      row["quantity"] = quantity;
      row["threshold"] = r.threshold.str();
      row["hypothesis_notes"] = r.hypothesis_notes;
      arr.push_back(row);
    }
    j["reports"] = arr;
    const ScanSummary sum = summarize(reports);
    j["summary"] = {{"Certified", sum.certified},
                    {"ThresholdNotBelowOne", sum.threshold_not_below_one},
                    {"Inconclusive", sum.inconclusive}};
    out << j.dump(2) << "\n";
  }
  const bool all_certified = std::all_of(reports.begin(), reports.end(),
                                         [](const WitnessReport& r) { return r.verdict == Verdict::Certified; });
  return cfg.strict && !all_certified ? kNotCertified : kOk;
}

int cmd_divisibility(const CliConfig& cfg, const STParams& p, const BigRational& big_u, std::ostream& out) {
  if (!cfg.q) usage("--mode divisibility needs --q");
  const DivisibilityReport r = fractional_u_divisibility(p, big_u, *cfg.q);
  const Format format = format_or(cfg, Format::Csv);
  if (format == Format::Csv) {
    out << "q,U,m,m_power,product,product_is_integer,reduced_denominator\n";
    out << r.q << "," << r.big_u.str() << "," << r.denominator.get_str() << "," << r.denominator_power.get_str()
        << "," << r.product.str() << "," << (r.product_is_integer ? "true" : "false") << ","
        << r.reduced_denominator.get_str() << "\n";
    return kOk;
  }
  Json j = header(cfg, p);
  j["q"] = r.q;
  j["U"] = r.big_u.str();
  j["m"] = r.denominator.get_str();
  j["m_power"] = r.denominator_power.get_str();
  j["product"] = r.product.str();
  j["product_is_integer"] = r.product_is_integer;
  j["reduced_denominator"] = r.reduced_denominator.get_str();
  emit(out, j, format);
  return kOk;
}

int cmd_witness(const CliConfig& cfg, const STParams& p, std::ostream& out) {
  const BigRational big_u = BigRational::parse(cfg.u);
  if (cfg.mode == "divisibility") return cmd_divisibility(cfg, p, big_u, out);
  std::vector<WitnessReport> reports;
  if (cfg.mode == "scan") {
    reports = witness_scan(p, big_u, cfg.q_min, cfg.q_max, cfg.depth, 30, cfg.threads);
  } else if (cfg.mode == "direct") {
    if (!cfg.q) usage("--mode direct needs --q");
    reports.push_back(witness_direct(p, big_u, *cfg.q, cfg.depth.value_or(*cfg.q + 30)));
  } else {
    if (cfg.m == 0) usage("--m must be >= 1");
    reports.push_back(witness_inverse(p, big_u, cfg.m, cfg.depth.value_or(2 * cfg.m - 1 + 30), cfg.q));
  }
  return emit_reports(cfg, p, big_u, reports, out);
}

// ---- bench ------------------------------------------------------------------

std::size_t bit_length(const BigRational& x) {
  return x.is_zero() ? 0 : mpz_sizeinbase(x.num().get_mpz_t(), 2);
}

int cmd_bench(const CliConfig& cfg, const STParams& p, std::ostream& out) {
  if (!p.is_integral()) throw Error(Errc::InvalidParameters, "bench needs integer s and t, got " + p.str());
  const mpz_class s = p.s().num();
  const mpz_class t = p.t().num();
  Json j = header(cfg, p);
  j["kind"] = cfg.kind;
  j["n"] = cfg.n;
  BigRational result;
  bool check = false;
  if (cfg.kind == "recurrence") {
    auto start = Clock::now();
    result = fib(p, cfg.n);
    j["recurrence_ms"] = format_double(elapsed_ms(start), "%.3f");
    start = Clock::now();
    const BigRational fast = fib_fast(p, cfg.n);
    j["fast_doubling_ms"] = format_double(elapsed_ms(start), "%.3f");
    check = fast == result;
  } else if (cfg.kind == "fast-doubling") {
    const auto start = Clock::now();
    const auto [value, next] = fib_fast_pair(s, t, cfg.n);
    j["elapsed_ms"] = format_double(elapsed_ms(start), "%.3f");
    result = BigRational(value);
    // Rebuild {n} from ({k}, {k+1}), k = n/2, with one doubling step.
    const std::uint64_t k = cfg.n / 2;
    const auto [uk, uk1] = fib_fast_pair(s, t, k);
    const mpz_class rebuilt = cfg.n % 2 == 0 ? mpz_class(uk * (2 * uk1 - s * uk)) : mpz_class(uk1 * uk1 + t * uk * uk);
    check = rebuilt == value;
  } else {
    const auto start = Clock::now();
    result = fibotorial(p, cfg.n);
    j["elapsed_ms"] = format_double(elapsed_ms(start), "%.3f");
    BigRational product(1);
    for (std::size_t k = 1; k <= cfg.n; ++k) product *= fib_fast(p, k);
    check = product == result;
  }
  if (!check) throw Error(Errc::Internal, "bench self-check failed for " + cfg.kind);
  j["bit_length"] = bit_length(result);
  j["self_check"] = check;
  emit(out, j, format_or(cfg, Format::Json));
  return kOk;
}

}  // namespace

BigRational parse_precision(const std::string& text) {
  static const std::regex scientific(R"(^\s*([0-9]+)[eE]-([0-9]+)\s*$)");
  std::smatch m;
  if (std::regex_match(text, m, scientific)) {
    const BigRational mantissa = BigRational::parse(m[1].str());
    return mantissa * pow10_inverse(std::stoi(m[2].str()));
  }
  if (text.find('.') != std::string::npos) return BigRational::parse_decimal(text);
  return BigRational::parse(text);
}

int run_command(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
  const STParams p = STParams::parse(cfg.s, cfg.t);
  static const std::map<std::string, std::function<int(const CliConfig&, const STParams&, std::ostream&)>> table{
      {"seq", cmd_seq},
      {"binom", [](const CliConfig& c, const STParams& q, std::ostream& o) {
         return cmd_value(c, q, fibonomial(q, c.n, c.k), o);
       }},
      {"deform", cmd_deform},
      {"lemma", cmd_lemma},
      {"classify", cmd_classify},
      {"series-check", cmd_series_check},
      {"euler", cmd_euler},
      {"estimate", cmd_estimate},
      {"phi-euler", cmd_phi_euler},
      {"witness", cmd_witness},
      {"bench", cmd_bench},
  };
  if (cfg.subcommand == "fact") return cmd_value(cfg, p, cached_fibotorial(p, cfg.n, err), out);
  const auto it = table.find(cfg.subcommand);
  if (it == table.end()) usage("unknown subcommand " + cfg.subcommand);
  return it->second(cfg, p, out);
}

}  // namespace stfib::cli
