#include "nsg/report.hpp"

#include <cmath>
#include <cstdio>
#include <iomanip>
#include <ostream>
#include <stdexcept>

#include "json.hpp"
#include "nsg/reflective.hpp"

namespace nsg {

namespace {

using njson = nlohmann::json;

std::string join_with(const std::vector<Int>& values, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) {
      out += sep;
    }
    out += std::to_string(values[i]);
  }
  return out;
}

std::string params_cell(const GenArithParams& p) {
  return "a=" + std::to_string(p.a) + " h=" + std::to_string(p.h) +
         " d=" + std::to_string(p.d) + " k=" + std::to_string(p.k);
}

njson params_json(const GenArithParams& p) {
  return njson{{"a", p.a}, {"h", p.h}, {"d", p.d}, {"k", p.k}};
}

const char* bool_cell(bool b) { return b ? "true" : "false"; }

double round6(double x) { return std::round(x * 1e6) / 1e6; }

// The report as ordered (key, cell) rows shared by the CSV and text
// renderers; lists are joined with list_sep, absent values become empty.
std::vector<std::pair<std::string, std::string>> report_rows(
    const SemigroupReport& r, const char* list_sep) {
  std::vector<std::pair<std::string, std::string>> rows;
  rows.emplace_back("generators", join_with(r.generators, list_sep));
  rows.emplace_back("gaps", join_with(r.gaps, list_sep));
  rows.emplace_back("genus", std::to_string(r.genus));
  rows.emplace_back("frobenius", std::to_string(r.frobenius));
  rows.emplace_back("multiplicity", std::to_string(r.multiplicity));
  rows.emplace_back("embedding_dimension",
                    std::to_string(r.embedding_dimension));
  rows.emplace_back("pseudo_frobenius",
                    join_with(r.pseudo_frobenius, list_sep));
  rows.emplace_back("type", std::to_string(r.type));
  rows.emplace_back("reflective", bool_cell(r.reflective));
  rows.emplace_back("symmetric", bool_cell(r.symmetric));
  rows.emplace_back("pseudo_symmetric", bool_cell(r.pseudo_symmetric));
  rows.emplace_back("irreducible", bool_cell(r.irreducible));
  rows.emplace_back("wilf", bool_cell(r.wilf));
  rows.emplace_back("free", bool_cell(r.free_semigroup));
  rows.emplace_back("embdim2", bool_cell(r.families.embdim2));
  rows.emplace_back("arithmetic", r.families.arithmetic
                                      ? params_cell(*r.families.arithmetic)
                                      : "");
  rows.emplace_back("generalized_arithmetic",
                    r.families.generalized_arithmetic
                        ? params_cell(*r.families.generalized_arithmetic)
                        : "");
  rows.emplace_back("genarith_family",
                    r.genarith_family ? to_string(*r.genarith_family) : "");
  rows.emplace_back("free_ordering",
                    r.families.free_ordering
                        ? join_with(*r.families.free_ordering, list_sep)
                        : "");
  rows.emplace_back("free_family",
                    r.free_family ? to_string(*r.free_family) : "");
  return rows;
}

void render_report_json(const SemigroupReport& r, std::ostream& out) {
  njson families;
  families["embdim2"] = r.families.embdim2;
  families["arithmetic"] = r.families.arithmetic
                               ? params_json(*r.families.arithmetic)
                               : njson(nullptr);
  families["generalized_arithmetic"] =
      r.families.generalized_arithmetic
          ? params_json(*r.families.generalized_arithmetic)
          : njson(nullptr);
  families["free_ordering"] = r.families.free_ordering
                                  ? njson(*r.families.free_ordering)
                                  : njson(nullptr);
  families["genarith_family"] = r.genarith_family
                                    ? njson(to_string(*r.genarith_family))
                                    : njson(nullptr);
  families["free_family"] =
      r.free_family ? njson(to_string(*r.free_family)) : njson(nullptr);

  njson j;
  j["generators"] = r.generators;
  j["gaps"] = r.gaps;
  j["genus"] = r.genus;
  j["frobenius"] = r.frobenius;
  j["multiplicity"] = r.multiplicity;
  j["embedding_dimension"] = r.embedding_dimension;
  j["pseudo_frobenius"] = r.pseudo_frobenius;
  j["type"] = r.type;
  j["reflective"] = r.reflective;
  j["symmetric"] = r.symmetric;
  j["pseudo_symmetric"] = r.pseudo_symmetric;
  j["irreducible"] = r.irreducible;
  j["wilf"] = r.wilf;
  j["free"] = r.free_semigroup;
  j["families"] = families;
  out << j.dump(2) << "\n";
}

void render_report_csv(const SemigroupReport& r, std::ostream& out) {
  const auto rows = report_rows(r, ";");
  for (std::size_t i = 0; i < rows.size(); ++i) {
    out << (i == 0 ? "" : ",") << rows[i].first;
  }
  out << "\n";
  for (std::size_t i = 0; i < rows.size(); ++i) {
    out << (i == 0 ? "" : ",") << rows[i].second;
  }
  out << "\n";
}

void render_report_text(const SemigroupReport& r, std::ostream& out) {
  for (const auto& [key, cell] : report_rows(r, ", ")) {
    out << key << ": " << (cell.empty() ? "-" : cell) << "\n";
  }
}

void render_table_json(const std::vector<CountRecord>& records,
                       std::ostream& out) {
  njson rows = njson::array();
  for (const CountRecord& rec : records) {
    njson row;
    row["param"] = rec.parameter;
    row["exact"] = rec.exact;
    if (rec.oracle) {
      row["oracle"] = *rec.oracle;
    }
    if (rec.estimate) {
      row["estimate"] = round6(*rec.estimate);
    }
    rows.push_back(std::move(row));
  }
  out << rows.dump(2) << "\n";
}

void render_table_csv(const std::vector<CountRecord>& records,
                      bool with_oracle, bool with_estimate,
                      std::ostream& out) {
  out << "param,exact";
  if (with_oracle) {
    out << ",oracle";
  }
  if (with_estimate) {
    out << ",estimate";
  }
  out << "\n";
  for (const CountRecord& rec : records) {
    out << rec.parameter << "," << rec.exact;
    if (with_oracle) {
      out << ",";
      if (rec.oracle) {
        out << *rec.oracle;
      }
    }
    if (with_estimate) {
      out << ",";
      if (rec.estimate) {
        out << format_fixed6(*rec.estimate);
      }
    }
    out << "\n";
  }
}

void render_table_text(const std::vector<CountRecord>& records,
                       bool with_oracle, bool with_estimate,
                       std::ostream& out) {
  std::vector<std::string> headers = {"param", "exact"};
  if (with_oracle) {
    headers.push_back("oracle");
  }
  if (with_estimate) {
    headers.push_back("estimate");
  }
  std::vector<std::vector<std::string>> cells;
  for (const CountRecord& rec : records) {
    std::vector<std::string> row = {std::to_string(rec.parameter),
                                    std::to_string(rec.exact)};
    if (with_oracle) {
      row.push_back(rec.oracle ? std::to_string(*rec.oracle) : "-");
    }
    if (with_estimate) {
      row.push_back(rec.estimate ? format_fixed6(*rec.estimate) : "-");
    }
    cells.push_back(std::move(row));
  }
  std::vector<std::size_t> widths;
  for (std::size_t c = 0; c < headers.size(); ++c) {
    std::size_t w = headers[c].size();
    for (const auto& row : cells) {
      w = std::max(w, row[c].size());
    }
    widths.push_back(w);
  }
  for (std::size_t c = 0; c < headers.size(); ++c) {
    out << (c == 0 ? "" : "  ") << std::setw(static_cast<int>(widths[c]))
        << headers[c];
  }
  out << "\n";
  for (const auto& row : cells) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      out << (c == 0 ? "" : "  ") << std::setw(static_cast<int>(widths[c]))
          << row[c];
    }
    out << "\n";
  }
}

}  // namespace

OutputFormat parse_format(const std::string& name) {
  if (name == "json") {
    return OutputFormat::Json;
  }
  if (name == "csv") {
    return OutputFormat::Csv;
  }
  if (name == "text") {
    return OutputFormat::Text;
  }
  throw std::invalid_argument("unknown output format: " + name);
}

std::string format_fixed6(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", x);
  return buf;
}

SemigroupReport build_report(const NumericalSemigroup& s) {
  SemigroupReport r;
  r.generators = s.minimal_generators();
  r.gaps = s.gaps().values();
  r.genus = s.genus();
  r.frobenius = s.frobenius();
  r.multiplicity = s.multiplicity();
  r.embedding_dimension = s.embedding_dimension();
  if (r.genus > 0) {
    r.pseudo_frobenius = pseudo_frobenius(s);
    r.type = static_cast<Int>(r.pseudo_frobenius.size());
    r.symmetric = is_symmetric(s);
    r.pseudo_symmetric = is_pseudo_symmetric(s);
    r.irreducible = is_irreducible(s);
    r.wilf = wilf_holds(s);
  } else {
    // The predicates above are undefined at genus 0; the report keeps them
    // false and records the Wilf inequality as the trivial 0 >= 0 truth.
    r.wilf = true;
  }
  r.reflective = is_reflective(s);
  r.families = analyze_families(s);
  r.free_semigroup = r.families.free_ordering.has_value();
  if (r.reflective) {
    r.genarith_family = classify_reflective_genarith(r.genus, r.multiplicity);
    for (const auto& [a, family] : classify_reflective_free(r.genus)) {
      if (a == r.multiplicity) {
        r.free_family = family;
      }
    }
  }
  return r;
}

void render_report(const SemigroupReport& report, OutputFormat format,
                   std::ostream& out) {
  switch (format) {
    case OutputFormat::Json:
      render_report_json(report, out);
      return;
    case OutputFormat::Csv:
      render_report_csv(report, out);
      return;
    case OutputFormat::Text:
      render_report_text(report, out);
      return;
  }
}

void render_count_table(const std::vector<CountRecord>& records,
                        OutputFormat format, std::ostream& out) {
  bool with_oracle = false;
  bool with_estimate = false;
  for (const CountRecord& rec : records) {
    with_oracle = with_oracle || rec.oracle.has_value();
    with_estimate = with_estimate || rec.estimate.has_value();
  }
  switch (format) {
    case OutputFormat::Json:
      render_table_json(records, out);
      return;
    case OutputFormat::Csv:
      render_table_csv(records, with_oracle, with_estimate, out);
      return;
    case OutputFormat::Text:
      render_table_text(records, with_oracle, with_estimate, out);
      return;
  }
}

}  // namespace nsg
