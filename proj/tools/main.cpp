// Command-line front end. Subcommands:
//   construct  build the reflective semigroup for (genus, multiplicity)
//   check      analyze a semigroup given by generators
//   count      exact reflective counts by genus or Frobenius number
//   plotdata   (F, exact count, asymptotic estimate) rows for plotting
//   verify     run the oracle-vs-formula cross-validation suite
//
// Exit codes: 0 success, 1 usage error, 2 domain error or resource cap,
// 3 verification mismatch. Data goes to stdout, diagnostics to stderr.
// The environment variable NSG_ORACLE_GENUS_LIMIT overrides the default
// cap on exhaustive enumeration depth.

#include <cstdlib>
#include <cstring>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "nsg/counting.hpp"
#include "nsg/oracle.hpp"
#include "nsg/report.hpp"
#include "nsg/verify.hpp"

namespace {

using nsg::Int;

// Caps that keep single invocations within sane memory and time budgets;
// each is far beyond anything the closed forms need and is documented in
// the README.
constexpr Int kMaxConstructGenus = 5'000'000;
constexpr Int kMaxCheckGenerator = 10'000'000;
constexpr Int kMaxPlotFrobenius = 20'000;
constexpr Int kMaxCountRows = 1'000'000;
constexpr Int kMaxGenusCountParam = 1'000'000'000;
constexpr Int kMaxFrobeniusCountParam = 1'000'000;

// Only for malformed values of things CLI11 cannot validate itself
// (comma-separated lists, A..B ranges); maps to exit 1.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Int parse_int(const std::string& text, const std::string& what) {
  std::size_t used = 0;
  Int value = 0;
  try {
    value = std::stoll(text, &used);
  } catch (const std::exception&) {
    throw UsageError("unreadable " + what + ": '" + text + "'");
  }
  if (used != text.size()) {
    throw UsageError("unreadable " + what + ": '" + text + "'");
  }
  return value;
}

std::vector<Int> parse_generator_list(const std::string& text) {
  std::vector<Int> out;
  std::size_t start = 0;
  if (text.empty()) {
    throw UsageError("empty generator list");
  }
  while (start <= text.size()) {
    const std::size_t comma = text.find(',', start);
    const std::size_t end = comma == std::string::npos ? text.size() : comma;
    out.push_back(parse_int(text.substr(start, end - start), "generator"));
    if (comma == std::string::npos) {
      break;
    }
    start = comma + 1;
    if (start == text.size()) {
      throw UsageError("trailing comma in generator list");
    }
  }
  return out;
}

std::pair<Int, Int> parse_range(const std::string& text) {
  const std::size_t sep = text.find("..");
  if (sep == std::string::npos) {
    throw UsageError("range must look like LO..HI, got '" + text + "'");
  }
  const Int lo = parse_int(text.substr(0, sep), "range bound");
  const Int hi = parse_int(text.substr(sep + 2), "range bound");
  if (lo < 1 || hi < lo) {
    throw UsageError("range bounds must satisfy 1 <= LO <= HI, got '" + text +
                     "'");
  }
  return {lo, hi};
}

Int oracle_genus_limit() {
  const char* raw = std::getenv("NSG_ORACLE_GENUS_LIMIT");
  if (raw == nullptr) {
    return nsg::kDefaultOracleGenusLimit;
  }
  std::size_t used = 0;
  long long value = 0;
  bool ok = true;
  try {
    value = std::stoll(raw, &used);
  } catch (const std::exception&) {
    ok = false;
  }
  if (!ok || used != std::strlen(raw) || value < 0) {
    std::cerr << "warning: ignoring NSG_ORACLE_GENUS_LIMIT='" << raw
              << "' (want a nonnegative integer); using "
              << nsg::kDefaultOracleGenusLimit << "\n";
    return nsg::kDefaultOracleGenusLimit;
  }
  return value;
}

int run_construct(Int genus, Int multiplicity, nsg::OutputFormat format) {
  if (genus > kMaxConstructGenus) {
    throw std::domain_error("genus " + std::to_string(genus) +
                            " exceeds the explicit-construction cap " +
                            std::to_string(kMaxConstructGenus));
  }
  const nsg::NumericalSemigroup s = nsg::construct_reflective(genus,
                                                              multiplicity);
  nsg::render_report(nsg::build_report(s), format, std::cout);
  return 0;
}

int run_check(const std::string& generators_text, nsg::OutputFormat format) {
  const std::vector<Int> gens = parse_generator_list(generators_text);
  for (Int g : gens) {
    if (g > kMaxCheckGenerator) {
      throw std::domain_error("generator " + std::to_string(g) +
                              " exceeds the cap " +
                              std::to_string(kMaxCheckGenerator));
    }
  }
  const nsg::NumericalSemigroup s = nsg::NumericalSemigroup::from_generators(gens);
  nsg::render_report(nsg::build_report(s), format, std::cout);
  return 0;
}

int run_count(const std::string& mode, const std::string& range_text,
              bool with_oracle, nsg::OutputFormat format) {
  const auto [lo, hi] = parse_range(range_text);
  if (hi - lo + 1 > kMaxCountRows) {
    throw std::domain_error("range spans more than " +
                            std::to_string(kMaxCountRows) + " rows");
  }
  const Int param_cap =
      mode == "genus" ? kMaxGenusCountParam : kMaxFrobeniusCountParam;
  if (hi > param_cap) {
    throw std::domain_error("range end " + std::to_string(hi) +
                            " exceeds the cap " + std::to_string(param_cap) +
                            " for mode " + mode);
  }
  const Int limit = oracle_genus_limit();
  std::vector<nsg::CountRecord> records;
  records.reserve(static_cast<std::size_t>(hi - lo + 1));
  for (Int p = lo; p <= hi; ++p) {
    nsg::CountRecord rec;
    rec.parameter = p;
    if (mode == "genus") {
      rec.exact = nsg::count_reflective_by_genus(p);
      if (with_oracle) {
        rec.oracle = static_cast<Int>(
            nsg::brute_force_reflective_by_genus(p, limit).size());
      }
    } else {
      rec.exact = nsg::count_reflective_by_frobenius(p);
      if (with_oracle) {
        rec.oracle = static_cast<Int>(
            nsg::brute_force_reflective_by_frobenius(p, limit).size());
      }
    }
    records.push_back(rec);
  }
  nsg::render_count_table(records, format, std::cout);
  return 0;
}

int run_plotdata(Int max_frobenius, nsg::OutputFormat format) {
  if (max_frobenius > kMaxPlotFrobenius) {
    throw std::domain_error("max Frobenius number " +
                            std::to_string(max_frobenius) +
                            " exceeds the cap " +
                            std::to_string(kMaxPlotFrobenius));
  }
  std::vector<nsg::CountRecord> records;
  records.reserve(static_cast<std::size_t>(max_frobenius));
  for (Int F = 1; F <= max_frobenius; ++F) {
    nsg::CountRecord rec;
    rec.parameter = F;
    rec.exact = nsg::count_reflective_by_frobenius(F);
    rec.estimate = nsg::asymptotic_estimate(F);
    records.push_back(rec);
  }
  nsg::render_count_table(records, format, std::cout);
  return 0;
}

int run_verify(Int max_genus, Int max_frobenius) {
  nsg::VerifyRequest request;
  request.max_genus = max_genus;
  request.max_frobenius = max_frobenius;
  request.genus_limit = oracle_genus_limit();
  return nsg::run_verification(request, std::cout);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"reflective numerical semigroup toolkit"};
  app.require_subcommand(1);

  const auto format_check = CLI::IsMember({"json", "csv", "text"});

  Int construct_genus = 0;
  Int construct_multiplicity = 0;
  std::string construct_format = "text";
  CLI::App* construct = app.add_subcommand(
      "construct",
      "build the unique reflective semigroup with a genus and multiplicity");
  construct->add_option("--genus", construct_genus, "genus (at least 1)")
      ->required();
  construct
      ->add_option("--multiplicity", construct_multiplicity,
                   "multiplicity (in [2, genus+1], not dividing the genus)")
      ->required();
  construct->add_option("--format", construct_format, "output format")
      ->check(format_check);

  std::string check_generators;
  std::string check_format = "text";
  CLI::App* check = app.add_subcommand(
      "check", "full report for the semigroup generated by the given values");
  check
      ->add_option("generators", check_generators,
                   "comma-separated positive integers with gcd 1, e.g. 3,13")
      ->required();
  check->add_option("--format", check_format, "output format")
      ->check(format_check);

  std::string count_mode;
  std::string count_range;
  bool count_with_oracle = false;
  std::string count_format = "text";
  CLI::App* count = app.add_subcommand(
      "count", "exact number of reflective semigroups per parameter value");
  count->add_option("--mode", count_mode, "count by genus or frobenius")
      ->required()
      ->check(CLI::IsMember({"genus", "frobenius"}));
  count->add_option("--range", count_range, "parameter range LO..HI")
      ->required();
  count->add_flag("--with-oracle", count_with_oracle,
                  "add a brute-force oracle column");
  count->add_option("--format", count_format, "output format")
      ->check(format_check);

  Int plot_max = 0;
  std::string plot_format = "text";
  CLI::App* plotdata = app.add_subcommand(
      "plotdata",
      "exact count and asymptotic estimate for each F from 1 to a maximum");
  plotdata
      ->add_option("--max-frobenius", plot_max,
                   "largest Frobenius number to tabulate")
      ->required()
      ->check(CLI::PositiveNumber);
  plotdata->add_option("--format", plot_format, "output format")
      ->check(format_check);

  Int verify_max_genus = 12;
  Int verify_max_frobenius = -1;
  CLI::App* verify = app.add_subcommand(
      "verify", "cross-validate formulas against the brute-force oracle");
  verify->add_option("--max-genus", verify_max_genus,
                     "verify genus-indexed results up to this genus");
  verify->add_option(
      "--max-frobenius", verify_max_frobenius,
      "verify Frobenius-indexed results up to this value (default derives "
      "from --max-genus)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    if (*construct) {
      return run_construct(construct_genus, construct_multiplicity,
                           nsg::parse_format(construct_format));
    }
    if (*check) {
      return run_check(check_generators, nsg::parse_format(check_format));
    }
    if (*count) {
      return run_count(count_mode, count_range, count_with_oracle,
                       nsg::parse_format(count_format));
    }
    if (*plotdata) {
      return run_plotdata(plot_max, nsg::parse_format(plot_format));
    }
    if (*verify) {
      return run_verify(verify_max_genus, verify_max_frobenius);
    }
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
