#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "multgen/catalog.hpp"
#include "multgen/liealgebra.hpp"
#include "multgen/multgen.hpp"
#include "multgen/structure.hpp"

namespace multgen {

struct DeclaredBlocks {
  std::vector<Vec> nil;
  std::vector<Vec> levi;
  std::vector<Vec> torus;
};

// Parsed input file: ambient size, basis matrices with "p/q" entries, and an
// optional declared decomposition that the pipeline verifies instead of
// computing.
struct InputDocument {
  std::string name;
  int ambient_size = 0;
  std::vector<QMatrix> basis;
  std::optional<DeclaredBlocks> declared;
};

InputDocument parse_input(const std::string& json_text);
InputDocument input_from_json(const nlohmann::json& j);
nlohmann::json input_to_json(const InputDocument& doc);
InputDocument input_from_builtin(const CatalogEntry& entry);

struct ReportDocument {
  InputDocument input;

  int dim_g = 0;
  std::vector<Vec> rad_basis, nil_basis, levi_basis, torus_basis, reductive_basis;

  std::vector<Vec> n1_basis, s_basis, m_basis, g_add_basis, center_basis;
  bool is_mult_generated = false;
  bool is_add_generated = false;
  int char_rank = 0;
  std::array<bool, 5> prop_conditions{};
  bool oracle_agrees = false;

  // Generators at the Lie level: the reductive basis as matrices and the
  // exponentials of an s-basis (one-parameter unipotent directions).
  std::vector<QMatrix> reductive_generators;
  std::vector<QMatrix> unipotent_generators;

  std::int64_t timing_us = 0;
};

// Runs the full pipeline on a parsed input. Throws InputNotAlgebraic or
// TheoremViolation; JSON/shape problems surface earlier as ParseError.
ReportDocument analyze_input(const InputDocument& doc);

nlohmann::json report_to_json(const ReportDocument& rep);
ReportDocument report_from_json(const nlohmann::json& j);

// Human-readable rendering with bases shown as ambient matrices.
std::string render_pretty(const ReportDocument& rep);

}  // namespace multgen
