#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hibi/fiber.hpp"
#include "hibi/frobenius.hpp"
#include "hibi/poset.hpp"
#include "hibi/sequences.hpp"

namespace hibi {

struct ReportOptions {
  std::int64_t n_max = 2;             // generator tables for n = +-1 .. +-n_max
  std::vector<std::int64_t> primes;   // empty: no c_e tables
  int e_max = 0;
  Budget budget;
};

struct GeneratorTable {
  std::int64_t n;
  std::vector<Labeling> gens;
  DegreeRange range;
};

struct SequenceRow {
  int eps;
  CondNSeq seq;
  ElementSet f;
  std::size_t dim_formula;
  std::size_t dim_oracle;
};

/// Everything `analyze` prints. Each number comes straight from the library call
/// of the same name; nothing is derived here.
struct InvariantReport {
  InvariantReport(std::string n, Poset p) : name(std::move(n)), poset(std::move(p)) {}

  std::string name;
  Poset poset;
  bool pure = false;
  bool gorenstein = false;
  bool level = false;
  bool anticanonical_level = false;
  std::vector<GeneratorTable> generators;
  std::vector<SequenceRow> sequences;
  std::size_t spread_canonical = 0;
  std::size_t spread_anticanonical = 0;
  std::vector<TComplexityTable> frobenius;
  std::vector<std::string> skipped;  // budget notes, one per skipped prime
};

InvariantReport build_report(const std::string& name, const Poset& p, const ReportOptions& opt = {});

std::string render_table(const InvariantReport& r);
std::string render_json(const InvariantReport& r);

std::string render_tcx_table(const std::vector<TComplexityTable>& tables, const std::vector<std::string>& skipped);
std::string render_tcx_json(const std::vector<TComplexityTable>& tables, const std::vector<std::string>& skipped);

/// Fixed-precision rendering so reports are byte-stable; "-inf" and "nan" spelled out.
std::string format_real(double x);

}  // namespace hibi
