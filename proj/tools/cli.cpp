#include "deltaop/cli.hpp"

#include <algorithm>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "deltaop/delta_calc.hpp"
#include "deltaop/io.hpp"
#include "deltaop/numtheory.hpp"
#include "deltaop/padic.hpp"
#include "deltaop/repr.hpp"
#include "deltaop/roots.hpp"

namespace deltaop::cli {

namespace {

struct CommandConfig {
  unsigned prime = 3;
  int level = 1;  // m
  int precision = 16;
  int truncation = 6;  // K / degree cap
  std::string at;
  int iterations = 1;
  int disc_level = 1;  // n for expansions
  int order = 1;       // k for expansions
  std::optional<int> terms;
  std::optional<int> roundtrip_precision;
  std::string in_path;
  std::string out_path;
  std::string series_path;
  std::vector<unsigned> primes{2, 3, 5};
  int max_n = 4;
  int max_k = 3;
  int samples = 25;
  std::uint64_t seed = 1;
  int verbosity = 0;
};

const auto kPrimeCheck = CLI::Validator(
    [](std::string& s) -> std::string {
      try {
        long v = std::stol(s);
        if (v >= 2 && v <= 1000003 && is_prime(static_cast<Prime>(v))) return {};
      } catch (const std::exception&) {
      }
      return "not a prime: " + s;
    },
    "PRIME");

mpz_class parse_integer(const std::string& text) {
  mpz_class z;
  if (text.empty() || z.set_str(text, 10) != 0) {
    throw FormatError("expected a decimal integer, got \"" + text + "\"");
  }
  return z;
}

void maybe_write(const CommandConfig& cfg, const Json& j) {
  if (!cfg.out_path.empty()) write_json_file(cfg.out_path, j);
}

const char* status_name(BoundStatus s) {
  switch (s) {
    case BoundStatus::pass: return "pass";
    case BoundStatus::violated: return "VIOLATED";
    case BoundStatus::undecidable: return "undecidable";
  }
  return "?";
}

int cmd_delta(const CommandConfig& cfg, std::ostream& out) {
  const PadicInt x = PadicInt::from_integer(cfg.prime, cfg.precision, parse_integer(cfg.at));
  const PadicInt r = delta_iter(x, cfg.iterations);
  out << r << '\n';
  maybe_write(cfg, to_json(r));
  return kSuccess;
}

int cmd_expansion(const CommandConfig& cfg, std::ostream& out) {
  const PadicInt a = PadicInt::from_integer(cfg.prime, cfg.precision, parse_integer(cfg.at));
  const DeltaExpansion e =
      delta_expansion(a, cfg.disc_level, cfg.order, static_cast<std::size_t>(cfg.truncation));
  const BoundsReport report = check_le1_bounds(e);
  out << "delta^" << e.order << "(" << a.value().get_str() << " + " << cfg.prime << "^" << e.level
      << " u), degree cap " << e.cap << '\n';
  for (const auto& c : report.checks) {
    out << "  u^" << c.degree << ": " << e.poly[c.degree] << "  v_p " << c.observed
        << (c.claim == BoundClaim::linear_exact ? "  required = " : "  required >= ") << c.required
        << "  " << status_name(c.status) << '\n';
  }
  if (e.tail_valuation_bound) out << "  dropped tail: v_p >= " << *e.tail_valuation_bound << '\n';
  Json j{{"center", to_json(a)},       {"n", e.level},
         {"k", e.order},               {"cap", e.cap},
         {"poly", to_json(e.poly)},    {"bounds", to_json(report)}};
  if (e.tail_valuation_bound) j["tail_valuation_bound"] = *e.tail_valuation_bound;
  maybe_write(cfg, j);
  if (report.any_violated()) return kFail;
  if (report.any_undecidable()) return kPrecision;
  return kSuccess;
}

int cmd_cm(const CommandConfig& cfg, std::ostream& out) {
  const RootSystem rs = compute_Cm(cfg.prime, cfg.level, cfg.precision);
  out << "C_" << rs.m << " for p=" << rs.p << " to " << rs.precision << " digits (" << rs.size()
      << " roots)\n";
  for (std::size_t alpha = 0; alpha < rs.size(); ++alpha) {
    out << "  a_" << alpha << " = " << rs.roots[alpha].value().get_str() << '\n';
  }
  maybe_write(cfg, to_json(rs));
  return kSuccess;
}

int cmd_wmatrix(const CommandConfig& cfg, std::ostream& out) {
  const RootSystem rs = compute_Cm(cfg.prime, cfg.level, cfg.precision);
  const WMatrix w = build_W(rs, IndexOrder(rs.p, rs.m));
  const DetCertificate cert = det_unit_certificate(w);
  out << "W for p=" << w.p << ", m=" << w.m << ": " << w.dim << "x" << w.dim
      << ", entries to " << w.precision << " digits\n";
  if (w.dim <= 9) {
    for (std::size_t alpha = 0; alpha < w.dim; ++alpha) {
      out << "  [";
      for (std::size_t beta = 0; beta < w.dim; ++beta) {
        out << (beta ? ", " : "") << w.at(alpha, beta).signed_value().get_str();
      }
      out << "]\n";
    }
  }
  out << "det W mod p = " << cert.det_mod_p << (cert.unit ? " (unit)" : " (NOT a unit)") << '\n';
  maybe_write(cfg, to_json(w, cert));
  return cert.unit ? kSuccess : kFail;
}

int cmd_represent(const CommandConfig& cfg, std::ostream& out) {
  const LocalFunctionData local = local_from_json(read_json_file(cfg.in_path));
  const CanonicalSeries f = represent(local);
  out << "canonical series: p=" << f.prime() << ", m=" << f.m() << ", K=" << f.K()
      << ", coefficients to " << f.min_precision() << " digits\n";
  maybe_write(cfg, to_json(f));
  return kSuccess;
}

int cmd_expand(const CommandConfig& cfg, std::ostream& out) {
  const CanonicalSeries f = canonical_from_json(read_json_file(cfg.in_path));
  const LocalFunctionData local = expand(f, cfg.precision);
  out << "local data: p=" << local.p << ", m=" << local.m << ", K=" << local.K << ", "
      << local.series.size() << " discs to " << local.precision << " digits\n";
  maybe_write(cfg, to_json(local));
  return kSuccess;
}

int cmd_eval(const CommandConfig& cfg, std::ostream& out) {
  const CanonicalSeries f = canonical_from_json(read_json_file(cfg.series_path));
  const PadicInt x = parse_point(cfg.at, f.prime());
  const PointValue v = evaluate_canonical(f, x);
  out << v.value << '\n';
  if (cfg.verbosity > 0) out << "tail valuation >= " << v.tail_valuation_bound << '\n';
  maybe_write(cfg, Json{{"point", to_json(x)},
                        {"value", to_json(v.value)},
                        {"tail_valuation_bound", v.tail_valuation_bound}});
  return kSuccess;
}

int cmd_roundtrip(const CommandConfig& cfg, std::ostream& out) {
  const CanonicalSeries f = canonical_from_json(read_json_file(cfg.in_path));
  const int n = cfg.roundtrip_precision.value_or(f.min_precision());
  const RoundtripReport r = roundtrip_report(f, n);
  out << "roundtrip at N=" << n << ": worst deviation v_p " << r.worst_deviation << ", need >= "
      << r.modulus_digits << "  " << (r.pass ? "PASS" : "FAIL") << '\n';
  maybe_write(cfg, Json{{"N", n},
                        {"modulus_digits", r.modulus_digits},
                        {"worst_deviation", r.worst_deviation.value},
                        {"pass", r.pass}});
  return r.pass ? kSuccess : kFail;
}

int cmd_legendre(const CommandConfig& cfg, std::ostream& out) {
  const mpz_class a = parse_integer(cfg.at);
  LegendreSeriesParams params{cfg.prime, cfg.precision, cfg.terms.value_or(cfg.precision)};
  const PadicInt x = PadicInt::from_integer(cfg.prime, cfg.precision + 2, a);
  const PadicInt series = legendre_series_eval(x, params);
  const int oracle = legendre_oracle(a, cfg.prime);
  const PadicInt expected = PadicInt::from_integer(cfg.prime, cfg.precision, oracle);
  const bool pass = series == expected;
  out << "series: " << series.value().get_str() << " (= " << series.signed_value().get_str()
      << ")\noracle: " << oracle << '\n'
      << (pass ? "PASS" : "FAIL") << '\n';
  maybe_write(cfg, Json{{"series", to_json(series)}, {"oracle", oracle}, {"pass", pass}});
  return pass ? kSuccess : kFail;
}

int cmd_estimates(const CommandConfig& cfg, std::ostream& out) {
  gmp_randclass rng(gmp_randinit_mt);
  rng.seed(static_cast<unsigned long>(cfg.seed));
  long checked = 0;
  long violated = 0;
  long undecidable = 0;
  for (unsigned p : cfg.primes) {
    if (!is_prime(p)) throw DomainError("estimates: " + std::to_string(p) + " is not prime");
    for (int n = 0; n <= cfg.max_n; ++n) {
      for (int k = 0; k <= std::min(n, cfg.max_k); ++k) {
        for (int s = 0; s < cfg.samples; ++s) {
          const mpz_class z = rng.get_z_range(prime_power(p, cfg.precision));
          const PadicInt a = PadicInt::from_integer(p, cfg.precision, z);
          const auto e = delta_expansion(a, n, k, static_cast<std::size_t>(cfg.truncation));
          for (const auto& c : check_le1_bounds(e).checks) {
            ++checked;
            if (c.status == BoundStatus::violated) {
              ++violated;
              if (cfg.verbosity > 0) {
                out << "  violation: p=" << p << " n=" << n << " k=" << k << " a=" << a
                    << " j=" << c.degree << '\n';
              }
            }
            if (c.status == BoundStatus::undecidable) ++undecidable;
          }
        }
      }
    }
  }
  const bool pass = violated == 0 && undecidable == 0;
  out << "estimates: " << checked << " coefficient checks, " << violated << " violated, "
      << undecidable << " undecidable  " << (pass ? "PASS" : "FAIL") << '\n';
  maybe_write(cfg, Json{{"seed", cfg.seed},
                        {"checked", checked},
                        {"violated", violated},
                        {"undecidable", undecidable},
                        {"pass", pass}});
  if (violated) return kFail;
  return undecidable ? kPrecision : kSuccess;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CommandConfig cfg;
  CLI::App app{"Fermat-quotient calculus on Z_p: delta-expansions, the roots of delta^m, and "
               "canonical arithmetic differential operators",
               "deltaop"};
  app.require_subcommand(1);
  app.add_flag("-v,--verbose", cfg.verbosity, "More output");

  auto add_prime = [&](CLI::App* sub) {
    sub->add_option("-p,--prime", cfg.prime, "The prime p")->required()->check(kPrimeCheck);
  };
  auto add_precision = [&](CLI::App* sub, bool required) {
    auto* o = sub->add_option("-N,--precision", cfg.precision, "Number of p-adic digits")
                  ->check(CLI::Range(1, 4096));
    if (required) o->required();
  };
  auto add_out = [&](CLI::App* sub) {
    sub->add_option("-o,--out", cfg.out_path, "Write the JSON record here");
  };

  auto* delta_cmd = app.add_subcommand("delta", "Iterated Fermat quotient of an integer");
  add_prime(delta_cmd);
  add_precision(delta_cmd, true);
  delta_cmd->add_option("--at", cfg.at, "The integer a")->required();
  delta_cmd->add_option("-k,--iterations", cfg.iterations, "Number of iterates")
      ->check(CLI::NonNegativeNumber);
  add_out(delta_cmd);

  auto* expansion_cmd =
      app.add_subcommand("expansion", "delta^k(a + p^n u) as a polynomial in u, with bound report");
  add_prime(expansion_cmd);
  add_precision(expansion_cmd, true);
  expansion_cmd->add_option("--at", cfg.at, "The disc center a")->required();
  expansion_cmd->add_option("-n,--disc-level", cfg.disc_level, "Disc level n")
      ->check(CLI::NonNegativeNumber);
  expansion_cmd->add_option("-k,--order", cfg.order, "Iterate order k")
      ->check(CLI::NonNegativeNumber);
  expansion_cmd->add_option("-D,--cap", cfg.truncation, "Degree cap")->check(CLI::Range(0, 4096));
  add_out(expansion_cmd);

  auto* cm_cmd = app.add_subcommand("cm", "The roots of delta^m");
  add_prime(cm_cmd);
  cm_cmd->add_option("-m,--level", cfg.level, "Level m")->required()->check(CLI::Range(0, 12));
  add_precision(cm_cmd, true);
  add_out(cm_cmd);

  auto* w_cmd = app.add_subcommand("wmatrix", "The matrix W and its determinant certificate");
  add_prime(w_cmd);
  w_cmd->add_option("-m,--level", cfg.level, "Level m")->required()->check(CLI::Range(0, 12));
  add_precision(w_cmd, true);
  add_out(w_cmd);

  auto* rep_cmd = app.add_subcommand("represent", "Local data -> canonical series");
  rep_cmd->add_option("-i,--in", cfg.in_path, "Local function data (JSON)")->required();
  add_out(rep_cmd);

  auto* exp_cmd = app.add_subcommand("expand", "Canonical series -> local data");
  exp_cmd->add_option("-i,--in", cfg.in_path, "Canonical series (JSON)")->required();
  add_precision(exp_cmd, true);
  add_out(exp_cmd);

  auto* eval_cmd = app.add_subcommand("eval", "Evaluate a canonical series at a point");
  eval_cmd->add_option("-s,--series", cfg.series_path, "Canonical series (JSON)")->required();
  eval_cmd->add_option("--at", cfg.at, "The point, written v/N")->required();
  add_out(eval_cmd);

  auto* rt_cmd = app.add_subcommand("roundtrip", "represent(expand(F)) == F check");
  rt_cmd->add_option("-i,--in", cfg.in_path, "Canonical series (JSON)")->required();
  rt_cmd->add_option("-N,--precision", cfg.roundtrip_precision,
                     "Expansion precision (default: smallest coefficient precision)");
  add_out(rt_cmd);

  auto* leg_cmd = app.add_subcommand("legendre", "Legendre symbol via its delta-series");
  add_prime(leg_cmd);
  leg_cmd->add_option("--at", cfg.at, "A unit a")->required();
  add_precision(leg_cmd, false);
  leg_cmd->add_option("-T,--terms", cfg.terms, "Series terms (default N)")
      ->check(CLI::NonNegativeNumber);
  add_out(leg_cmd);

  auto* est_cmd = app.add_subcommand("estimates", "Randomized sweep of the delta-expansion bounds");
  est_cmd->add_option("-p,--prime", cfg.primes, "Primes to sweep")->check(kPrimeCheck);
  add_precision(est_cmd, false);
  est_cmd->add_option("--max-n", cfg.max_n, "Largest disc level")->check(CLI::Range(0, 16));
  est_cmd->add_option("--max-k", cfg.max_k, "Largest iterate order")->check(CLI::Range(0, 8));
  est_cmd->add_option("-D,--cap", cfg.truncation, "Degree cap")->check(CLI::Range(0, 256));
  est_cmd->add_option("--samples", cfg.samples, "Random centers per (p, n, k)")
      ->check(CLI::Range(1, 100000));
  est_cmd->add_option("--seed", cfg.seed, "RNG seed");
  add_out(est_cmd);

  leg_cmd->callback([&] {
    if (leg_cmd->count("--precision") == 0) cfg.precision = 8;
  });
  est_cmd->callback([&] {
    if (est_cmd->count("--precision") == 0) cfg.precision = 72;
    if (est_cmd->count("--cap") == 0) cfg.truncation = 12;
  });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(std::move(reversed));
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  }

  try {
    auto* sub = app.get_subcommands().front();
    const std::string name = sub->get_name();
    if (name == "delta") return cmd_delta(cfg, out);
    if (name == "expansion") return cmd_expansion(cfg, out);
    if (name == "cm") return cmd_cm(cfg, out);
    if (name == "wmatrix") return cmd_wmatrix(cfg, out);
    if (name == "represent") return cmd_represent(cfg, out);
    if (name == "expand") return cmd_expand(cfg, out);
    if (name == "eval") return cmd_eval(cfg, out);
    if (name == "roundtrip") return cmd_roundtrip(cfg, out);
    if (name == "legendre") return cmd_legendre(cfg, out);
    if (name == "estimates") return cmd_estimates(cfg, out);
    err << "unknown subcommand " << name << '\n';
    return kUsage;
  } catch (const PrecisionError& e) {
    err << "precision error: " << e.what() << '\n';
    return kPrecision;
  } catch (const FormatError& e) {
    err << "malformed input: " << e.what() << '\n';
    return kUsage;
  } catch (const DomainError& e) {
    err << "invalid argument: " << e.what() << '\n';
    return kUsage;
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << '\n';
    return kFail;
  }
}

int run(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run(args, std::cout, std::cerr);
}

}  // namespace deltaop::cli
