// Presentation layer shared by the CLI subcommands: a full per-semigroup
// report and count tables, each rendered as JSON, CSV, or aligned text.
//
// Rendering is deterministic: JSON keys are emitted in sorted order, CSV
// columns are fixed, and floating point values are rounded to 6 decimal
// places before they reach any sink.

#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "nsg/counting.hpp"
#include "nsg/families.hpp"

namespace nsg {

enum class OutputFormat { Json, Csv, Text };

// Accepts "json", "csv", "text"; throws std::invalid_argument otherwise.
OutputFormat parse_format(const std::string& name);

// Everything the construct and check subcommands report about one
// semigroup. Genus 0 uses the conventions: no pseudo-Frobenius elements,
// type 0, and the symmetric / pseudo-symmetric / irreducible flags false.
struct SemigroupReport {
  std::vector<Int> generators;
  std::vector<Int> gaps;
  Int genus = 0;
  Int frobenius = -1;
  Int multiplicity = 1;
  Int embedding_dimension = 1;
  std::vector<Int> pseudo_frobenius;
  Int type = 0;
  bool reflective = false;
  bool symmetric = false;
  bool pseudo_symmetric = false;
  bool irreducible = false;
  bool wilf = false;
  // Mirrors families.free_ordering.has_value() for flat output formats.
  bool free_semigroup = false;
  FamilyReport families;
  // Family tags; populated only for reflective semigroups.
  std::optional<GenArithFamily> genarith_family;
  std::optional<FreeFamily> free_family;
};

SemigroupReport build_report(const NumericalSemigroup& s);

void render_report(const SemigroupReport& report, OutputFormat format,
                   std::ostream& out);

// Renders count rows. The oracle and estimate columns appear when any row
// carries the value; rows without it leave the cell empty.
void render_count_table(const std::vector<CountRecord>& records,
                        OutputFormat format, std::ostream& out);

// Fixed notation with 6 decimal places.
std::string format_fixed6(double x);

}  // namespace nsg
