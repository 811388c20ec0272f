#include <cstdio>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "substrime/arith.hpp"
#include "substrime/digits.hpp"
#include "substrime/pigeonhole.hpp"
#include "substrime/search.hpp"
#include "substrime/value.hpp"

namespace {

using namespace substrime;

// exit codes: 0 ok, 2 bad flags/hypothesis, 3 overflow or factorization
// failure, 4 inconclusive search (max_digits hit)
constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitArith = 3;
constexpr int kExitInconclusive = 4;

enum class Format { kPlain, kJson, kBfile, kCount };

Format parse_format(const std::string& s) {
  if (s == "plain") return Format::kPlain;
  if (s == "json") return Format::kJson;
  if (s == "bfile") return Format::kBfile;
  if (s == "count") return Format::kCount;
  throw CLI::ValidationError("--format must be plain|json|bfile|count");
}

std::string json_omega(const OmegaBound& w) {
  return w.is_infinite() ? std::string("\"inf\"") : w.str();
}

void print_members(const SearchReport& report, unsigned base, Format format) {
  if (format == Format::kCount) {
    std::printf("%llu\n", static_cast<unsigned long long>(report.count));
    return;
  }
  std::size_t line = 0;
  for (Value v : report.members) {
    const DigitString ds = to_digits(v, base);
    const std::string dec = to_string(v);
    const std::string rendered = render(ds);
    const OmegaBound w = max_subword_omega(v, base);
    switch (format) {
      case Format::kPlain:
        std::printf("%s\t%s\tomega_max=%s\tdigits=%zu\n", dec.c_str(),
                    rendered.c_str(), w.str().c_str(), ds.size());
        break;
      case Format::kJson:
        std::printf(
            "{\"value\":%s,\"rendered\":\"%s\",\"omega_max\":%s,\"digit_count\":%zu}\n",
            dec.c_str(), rendered.c_str(), json_omega(w).c_str(), ds.size());
        break;
      case Format::kBfile:
        std::printf("%zu %s\n", ++line, dec.c_str());
        break;
      case Format::kCount:
        break;
    }
  }
  const std::string largest =
      report.largest ? to_string(*report.largest) : std::string("none");
  const char* exhausted = report.exhausted ? "true" : "false";
  if (format == Format::kJson)
    std::printf("{\"count\":%llu,\"largest\":%s,\"exhausted\":%s}\n",
                static_cast<unsigned long long>(report.count),
                report.largest ? largest.c_str() : "null", exhausted);
  else
    std::printf("# count=%llu largest=%s exhausted=%s\n",
                static_cast<unsigned long long>(report.count), largest.c_str(),
                exhausted);
}

int run_enumerate(unsigned base, unsigned max_omega, unsigned max_digits,
                  bool parallel, Format format) {
  SearchConfig cfg;
  cfg.base = base;
  cfg.mode = SearchMode::kOmegaBounded;
  cfg.max_omega = OmegaBound::finite(max_omega);
  cfg.max_digits = max_digits;
  cfg.parallel = parallel;
  cfg.collect_members = format != Format::kCount;
  const SearchReport report = enumerate_bounded(cfg);
  print_members(report, base, format);
  return report.exhausted ? kExitOk : kExitInconclusive;
}

int run_substrimes(unsigned base, unsigned max_digits, bool parallel,
                   Format format) {
  SearchConfig cfg;
  cfg.base = base;
  cfg.mode = SearchMode::kStrictPrime;
  cfg.max_digits = max_digits;  // 0 auto-sets the 2p digit cap
  cfg.parallel = parallel;
  cfg.collect_members = format != Format::kCount;
  const SearchReport report = enumerate_substrimes(cfg);
  print_members(report, base, format);
  return report.exhausted ? kExitOk : kExitInconclusive;
}

int run_table(const std::vector<unsigned>& bases, bool parallel) {
  std::printf("%-6s %-24s %-34s %s\n", "base", "largest substrime", "rendered",
              "count");
  for (unsigned base : bases) {
    SearchConfig cfg;
    cfg.base = base;
    cfg.mode = SearchMode::kStrictPrime;
    cfg.parallel = parallel;
    const SearchReport report = enumerate_substrimes(cfg);
    const std::string largest =
        report.largest ? to_string(*report.largest) : std::string("-");
    const std::string rendered =
        report.largest ? render(to_digits(*report.largest, base)) : std::string("-");
    std::printf("%-6u %-24s %-34s %llu\n", base, largest.c_str(),
                rendered.c_str(), static_cast<unsigned long long>(report.count));
  }
  return kExitOk;
}

int run_witness(const std::string& n_str, unsigned base, const std::string& d_str) {
  const Value n = parse_value(n_str);
  const Value d = parse_value(d_str);
  const Witness w = divisible_subword_witness(n, base, d);
  std::printf("{\"i\":%zu,\"j\":%zu,\"value\":%s,\"divisor\":%s}\n", w.i, w.j,
              to_string(w.value).c_str(), to_string(w.divisor).c_str());
  return kExitOk;
}

int run_inspect(const std::string& n_str, unsigned base) {
  const Value n = parse_value(n_str);
  if (n == 0) throw std::invalid_argument("n must be >= 1");
  const DigitString ds = to_digits(n, base);
  std::printf("n=%s  %s  digits=%zu\n", to_string(n).c_str(),
              render(ds).c_str(), ds.size());
  for (const SubwordRef& w : all_subwords(ds)) {
    const OmegaBound ww = omega(w.value);
    const bool prime = w.value <= kU64Max && is_prime(w.value);
    std::printf("W(%zu,%zu) = %s  omega=%s  prime=%s\n", w.i, w.j,
                to_string(w.value).c_str(), ww.str().c_str(),
                prime ? "yes" : "no");
  }
  std::printf("max_subword_omega=%s\n", max_subword_omega(n, base).str().c_str());
  std::printf("substrime=%s\n", is_substrime(n, base) ? "true" : "false");
  return kExitOk;
}

int run_bound(unsigned base, unsigned k, Format format) {
  const FinitenessBound bound = finiteness_bound(base, k);
  std::string primes;
  for (uint64_t p : bound.primes) {
    if (!primes.empty()) primes += ",";
    primes += std::to_string(p);
  }
  if (format == Format::kJson) {
    std::printf("{\"base\":%u,\"k\":%u,\"primes\":[%s],\"exponent\":%s}\n", base,
                k, primes.c_str(), to_string(bound.exponent).c_str());
  } else {
    std::printf("base=%u k=%u primes=[%s] bound=%u^%s\n", base, k,
                primes.c_str(), base, to_string(bound.exponent).c_str());
    if (bound.exponent <= 4000)
      std::printf("decimal=%s\n", bound.decimal().c_str());
  }
  return kExitOk;
}

int run_factor(const std::string& n_str) {
  const Value n = parse_value(n_str);
  const Factorization f = factorize(n);
  std::string rhs;
  for (const PrimePower& pp : f.factors) {
    if (!rhs.empty()) rhs += " * ";
    rhs += to_string(pp.prime);
    if (pp.exponent > 1) rhs += "^" + std::to_string(pp.exponent);
  }
  if (rhs.empty()) rhs = "1";
  std::printf("%s = %s  omega=%s\n", to_string(n).c_str(), rhs.c_str(),
              omega(n).str().c_str());
  return kExitOk;
}

std::vector<unsigned> parse_base_list(const std::string& spec) {
  std::vector<unsigned> bases;
  std::size_t pos = 0;
  while (pos < spec.size()) {
    auto comma = spec.find(',', pos);
    if (comma == std::string::npos) comma = spec.size();
    const std::string item = spec.substr(pos, comma - pos);
    const auto dash = item.find('-');
    if (dash == std::string::npos) {
      bases.push_back(static_cast<unsigned>(std::stoul(item)));
    } else {
      unsigned lo = static_cast<unsigned>(std::stoul(item.substr(0, dash)));
      unsigned hi = static_cast<unsigned>(std::stoul(item.substr(dash + 1)));
      if (lo > hi) throw std::invalid_argument("descending base range");
      for (unsigned b = lo; b <= hi; ++b) bases.push_back(b);
    }
    pos = comma + 1;
  }
  if (bases.empty()) throw std::invalid_argument("empty base list");
  for (unsigned b : bases)
    if (b < 2) throw std::invalid_argument("base must be >= 2");
  return bases;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"subword prime-divisibility enumerator"};
  app.require_subcommand(1);

  std::string format_str = "plain";
  unsigned base = 10;
  unsigned max_omega = 1;
  unsigned max_digits = 0;
  bool parallel = false;
  unsigned seed = 0;  // reserved; all internals are deterministic
  std::string n_str, d_str, bases_str;
  unsigned bound_k = 1;

  auto add_common = [&](CLI::App* cmd, bool with_base = true) {
    if (with_base) cmd->add_option("--base,-b", base, "number base (>= 2)");
    cmd->add_option("--format,-f", format_str, "plain|json|bfile|count");
    cmd->add_option("--max-digits", max_digits, "digit cap (0 = default)");
    cmd->add_flag("--parallel", parallel, "fan out over root subtrees");
    cmd->add_option("--seed", seed, "rng seed (output is seed-independent)");
  };

  auto* enumerate = app.add_subcommand(
      "enumerate", "integers whose subwords have omega <= k");
  add_common(enumerate);
  enumerate->add_option("--max-omega,-k", max_omega, "omega threshold k")
      ->required();

  auto* substrimes =
      app.add_subcommand("substrimes", "integers with all subwords prime");
  add_common(substrimes);

  auto* table =
      app.add_subcommand("table", "largest substrime and count per base");
  add_common(table, false);
  table->add_option("--bases", bases_str, "comma list with ranges, e.g. 3-12,24,30")
      ->required();

  auto* witness = app.add_subcommand(
      "witness", "find a subword of n divisible by d (requires n >= base^d)");
  add_common(witness);
  witness->add_option("--n,-n", n_str, "the integer to scan")->required();
  witness->add_option("--d,-d", d_str, "target divisor, coprime to base")
      ->required();

  auto* inspect = app.add_subcommand("inspect", "list all subwords of n");
  add_common(inspect);
  inspect->add_option("--n,-n", n_str, "the integer to inspect")->required();

  auto* bound = app.add_subcommand(
      "bound", "finiteness bound for subwords with omega <= k");
  add_common(bound);
  bound->add_option("--k,-k", bound_k, "omega threshold k")->required();

  auto* factor = app.add_subcommand("factor", "factorize n");
  factor->add_option("--n,-n", n_str, "the integer to factor")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    const Format format = parse_format(format_str);
    if (enumerate->parsed())
      return run_enumerate(base, max_omega, max_digits, parallel, format);
    if (substrimes->parsed())
      return run_substrimes(base, max_digits, parallel, format);
    if (table->parsed()) return run_table(parse_base_list(bases_str), parallel);
    if (witness->parsed()) return run_witness(n_str, base, d_str);
    if (inspect->parsed()) return run_inspect(n_str, base);
    if (bound->parsed()) return run_bound(base, bound_k, format);
    if (factor->parsed()) return run_factor(n_str);
  } catch (const OverflowError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitArith;
  } catch (const FactorRangeError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitArith;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitUsage;
  }
  return kExitUsage;
}
