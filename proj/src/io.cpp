#include "multgen/io.hpp"

#include <chrono>
#include <sstream>

#include "multgen/chevalley.hpp"
#include "multgen/errors.hpp"

namespace multgen {

namespace {

using nlohmann::json;

std::pair<int, int> offset_to_line_col(const std::string& text, std::size_t byte) {
  int line = 1, col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

Rat rat_from_json(const json& j) {
  if (j.is_string()) {
    try {
      return Rat::parse(j.get<std::string>());
    } catch (const std::invalid_argument& e) {
      throw ParseError(e.what());
    }
  }
  if (j.is_number_integer()) return Rat(j.get<long>());
  throw ParseError("rational entries must be strings like \"p/q\" or integers, got: " + j.dump());
}

json rat_to_json(const Rat& r) { return r.str(); }

Vec vec_from_json(const json& j, int expected_len, const char* what) {
  if (!j.is_array() || static_cast<int>(j.size()) != expected_len)
    throw ParseError(std::string(what) + ": expected an array of length " +
                     std::to_string(expected_len));
  Vec v;
  v.reserve(j.size());
  for (const auto& e : j) v.push_back(rat_from_json(e));
  return v;
}

json vec_to_json(const Vec& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(rat_to_json(x));
  return a;
}

QMatrix matrix_from_json(const json& j, int n, const char* what) {
  if (!j.is_array() || static_cast<int>(j.size()) != n)
    throw ParseError(std::string(what) + ": expected " + std::to_string(n) + " rows");
  QMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.set_row(i, vec_from_json(j[i], n, what));
  return m;
}

json matrix_to_json(const QMatrix& m) {
  json rows = json::array();
  for (int i = 0; i < m.rows(); ++i) rows.push_back(vec_to_json(m.row(i)));
  return rows;
}

std::vector<Vec> vec_list_from_json(const json& j, int len, const char* what) {
  if (!j.is_array()) throw ParseError(std::string(what) + ": expected an array of vectors");
  std::vector<Vec> out;
  for (const auto& e : j) out.push_back(vec_from_json(e, len, what));
  return out;
}

json vec_list_to_json(const std::vector<Vec>& vs) {
  json a = json::array();
  for (const auto& v : vs) a.push_back(vec_to_json(v));
  return a;
}

json matrix_list_to_json(const std::vector<QMatrix>& ms) {
  json a = json::array();
  for (const auto& m : ms) a.push_back(matrix_to_json(m));
  return a;
}

std::vector<QMatrix> matrix_list_from_json(const json& j, int n, const char* what) {
  if (!j.is_array()) throw ParseError(std::string(what) + ": expected an array of matrices");
  std::vector<QMatrix> out;
  for (const auto& e : j) out.push_back(matrix_from_json(e, n, what));
  return out;
}

std::vector<Vec> subspace_rows(const Subspace& s) { return s.basis_vectors(); }

}  // namespace

InputDocument parse_input(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    const auto [line, col] = offset_to_line_col(json_text, e.byte > 0 ? e.byte - 1 : 0);
    throw ParseError(e.what(), line, col);
  }
  return input_from_json(j);
}

InputDocument input_from_json(const json& j) {
  if (!j.is_object()) throw ParseError("input document must be a JSON object");
  InputDocument doc;
  if (j.contains("name")) {
    if (!j["name"].is_string()) throw ParseError("name must be a string");
    doc.name = j["name"].get<std::string>();
  }
  if (!j.contains("ambient_size") || !j["ambient_size"].is_number_integer())
    throw ParseError("missing integer field 'ambient_size'");
  doc.ambient_size = j["ambient_size"].get<int>();
  if (doc.ambient_size < 1 || doc.ambient_size > 64)
    throw ParseError("ambient_size must be between 1 and 64");
  if (!j.contains("basis")) throw ParseError("missing field 'basis'");
  doc.basis = matrix_list_from_json(j["basis"], doc.ambient_size, "basis");
  if (doc.basis.empty()) throw ParseError("basis must contain at least one matrix");
  if (j.contains("declared")) {
    const json& d = j["declared"];
    if (!d.is_object()) throw ParseError("declared must be an object");
    DeclaredBlocks blocks;
    const int dim = static_cast<int>(doc.basis.size());
    if (d.contains("nil")) blocks.nil = vec_list_from_json(d["nil"], dim, "declared.nil");
    if (d.contains("levi")) blocks.levi = vec_list_from_json(d["levi"], dim, "declared.levi");
    if (d.contains("torus")) blocks.torus = vec_list_from_json(d["torus"], dim, "declared.torus");
    doc.declared = std::move(blocks);
  }
  return doc;
}

json input_to_json(const InputDocument& doc) {
  json j;
  if (!doc.name.empty()) j["name"] = doc.name;
  j["ambient_size"] = doc.ambient_size;
  j["basis"] = matrix_list_to_json(doc.basis);
  if (doc.declared) {
    json d;
    d["nil"] = vec_list_to_json(doc.declared->nil);
    d["levi"] = vec_list_to_json(doc.declared->levi);
    d["torus"] = vec_list_to_json(doc.declared->torus);
    j["declared"] = d;
  }
  return j;
}

InputDocument input_from_builtin(const CatalogEntry& entry) {
  InputDocument doc;
  doc.name = entry.name;
  doc.ambient_size = entry.g.ambient_size();
  doc.basis = entry.g.basis();
  return doc;
}

ReportDocument analyze_input(const InputDocument& doc) {
  const auto t0 = std::chrono::steady_clock::now();
  LieAlgebra g(doc.ambient_size, doc.basis);
  StructureReport srep = [&] {
    if (doc.declared) {
      const int d = g.dim();
      return verify_declared(g, Subspace::span(d, doc.declared->nil),
                             Subspace::span(d, doc.declared->levi),
                             Subspace::span(d, doc.declared->torus));
    }
    return decompose(g);
  }();
  MultGenReport mrep = mult_subalgebra(g, srep);

  ReportDocument rep;
  rep.input = doc;
  rep.dim_g = g.dim();
  rep.rad_basis = subspace_rows(srep.rad);
  rep.nil_basis = subspace_rows(srep.nil);
  rep.levi_basis = subspace_rows(srep.levi);
  rep.torus_basis = subspace_rows(srep.torus);
  rep.reductive_basis = subspace_rows(srep.reductive);
  rep.n1_basis = subspace_rows(mrep.n1);
  rep.s_basis = subspace_rows(mrep.s);
  rep.m_basis = subspace_rows(mrep.m);
  rep.g_add_basis = subspace_rows(mrep.g_add);
  rep.center_basis = subspace_rows(mrep.center_of_m);
  rep.is_mult_generated = mrep.is_mult_generated;
  rep.is_add_generated = mrep.is_add_generated;
  rep.char_rank = mrep.char_rank;
  rep.prop_conditions = mrep.prop_conditions;
  rep.oracle_agrees = mrep.m == mrep.oracle;
  for (int i = 0; i < srep.reductive.dim(); ++i)
    rep.reductive_generators.push_back(g.matrix_of(srep.reductive.basis_vector(i)));
  for (int i = 0; i < mrep.s.dim(); ++i)
    rep.unipotent_generators.push_back(exp_nilpotent(g.matrix_of(mrep.s.basis_vector(i))));
  rep.timing_us = std::chrono::duration_cast<std::chrono::microseconds>(
                      std::chrono::steady_clock::now() - t0)
                      .count();
  return rep;
}

json report_to_json(const ReportDocument& rep) {
  json j;
  j["input"] = input_to_json(rep.input);
  json st;
  st["dims"] = {{"g", rep.dim_g},
                {"radical", static_cast<int>(rep.rad_basis.size())},
                {"nil_radical", static_cast<int>(rep.nil_basis.size())},
                {"levi", static_cast<int>(rep.levi_basis.size())},
                {"torus", static_cast<int>(rep.torus_basis.size())},
                {"reductive", static_cast<int>(rep.reductive_basis.size())}};
  st["bases"] = {{"radical", vec_list_to_json(rep.rad_basis)},
                 {"nil_radical", vec_list_to_json(rep.nil_basis)},
                 {"levi", vec_list_to_json(rep.levi_basis)},
                 {"torus", vec_list_to_json(rep.torus_basis)},
                 {"reductive", vec_list_to_json(rep.reductive_basis)}};
  j["structure"] = st;
  json mg;
  mg["dims"] = {{"n1", static_cast<int>(rep.n1_basis.size())},
                {"s", static_cast<int>(rep.s_basis.size())},
                {"m", static_cast<int>(rep.m_basis.size())},
                {"g_add", static_cast<int>(rep.g_add_basis.size())},
                {"center_of_m", static_cast<int>(rep.center_basis.size())}};
  mg["bases"] = {{"n1", vec_list_to_json(rep.n1_basis)},
                 {"s", vec_list_to_json(rep.s_basis)},
                 {"m", vec_list_to_json(rep.m_basis)},
                 {"g_add", vec_list_to_json(rep.g_add_basis)},
                 {"center_of_m", vec_list_to_json(rep.center_basis)}};
  mg["is_mult_generated"] = rep.is_mult_generated;
  mg["is_add_generated"] = rep.is_add_generated;
  mg["char_rank"] = rep.char_rank;
  mg["proposition_conditions"] = rep.prop_conditions;
  mg["oracle_agrees"] = rep.oracle_agrees;
  mg["generators"] = {{"reductive", matrix_list_to_json(rep.reductive_generators)},
                      {"unipotent", matrix_list_to_json(rep.unipotent_generators)}};
  j["multgen"] = mg;
  j["timing_us"] = rep.timing_us;
  return j;
}

ReportDocument report_from_json(const json& j) {
  if (!j.is_object() || !j.contains("input") || !j.contains("structure") || !j.contains("multgen"))
    throw ParseError("report document missing input/structure/multgen sections");
  ReportDocument rep;
  rep.input = input_from_json(j["input"]);
  const int dim = static_cast<int>(rep.input.basis.size());
  rep.dim_g = j["structure"]["dims"]["g"].get<int>();
  if (rep.dim_g != dim) throw ParseError("report dim mismatch with input basis");
  const json& sb = j["structure"]["bases"];
  rep.rad_basis = vec_list_from_json(sb["radical"], dim, "radical basis");
  rep.nil_basis = vec_list_from_json(sb["nil_radical"], dim, "nil basis");
  rep.levi_basis = vec_list_from_json(sb["levi"], dim, "levi basis");
  rep.torus_basis = vec_list_from_json(sb["torus"], dim, "torus basis");
  rep.reductive_basis = vec_list_from_json(sb["reductive"], dim, "reductive basis");
  const json& mb = j["multgen"]["bases"];
  rep.n1_basis = vec_list_from_json(mb["n1"], dim, "n1 basis");
  rep.s_basis = vec_list_from_json(mb["s"], dim, "s basis");
  rep.m_basis = vec_list_from_json(mb["m"], dim, "m basis");
  rep.g_add_basis = vec_list_from_json(mb["g_add"], dim, "g_add basis");
  rep.center_basis = vec_list_from_json(mb["center_of_m"], dim, "center basis");
  rep.is_mult_generated = j["multgen"]["is_mult_generated"].get<bool>();
  rep.is_add_generated = j["multgen"]["is_add_generated"].get<bool>();
  rep.char_rank = j["multgen"]["char_rank"].get<int>();
  {
    const json& pc = j["multgen"]["proposition_conditions"];
    if (!pc.is_array() || pc.size() != 5) throw ParseError("proposition_conditions must have 5 entries");
    for (int i = 0; i < 5; ++i) rep.prop_conditions[i] = pc[i].get<bool>();
  }
  rep.oracle_agrees = j["multgen"]["oracle_agrees"].get<bool>();
  rep.reductive_generators = matrix_list_from_json(j["multgen"]["generators"]["reductive"],
                                                   rep.input.ambient_size, "reductive generators");
  rep.unipotent_generators = matrix_list_from_json(j["multgen"]["generators"]["unipotent"],
                                                   rep.input.ambient_size, "unipotent generators");
  rep.timing_us = j["timing_us"].get<std::int64_t>();
  return rep;
}

namespace {

// One matrix whose entries are linear forms in parameters c1..ck, one
// parameter per basis vector: the general element of the subspace.
std::string render_general_element(const std::vector<Vec>& rows, const InputDocument& input) {
  const int n = input.ambient_size;
  std::vector<std::string> cells(static_cast<std::size_t>(n) * n);
  std::vector<std::size_t> width(n, 0);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) {
      std::string cell;
      for (std::size_t i = 0; i < rows.size(); ++i) {
        Rat coeff;
        for (std::size_t k = 0; k < rows[i].size(); ++k)
          if (!rows[i][k].is_zero()) coeff += rows[i][k] * input.basis[k].at(r, c);
        if (coeff.is_zero()) continue;
        const std::string var = "c" + std::to_string(i + 1);
        if (cell.empty()) {
          if (coeff == Rat(1)) cell = var;
          else if (coeff == Rat(-1)) cell = "-" + var;
          else cell = coeff.str() + "*" + var;
        } else {
          const Rat a = coeff.abs();
          cell += (coeff.sign() > 0 ? "+" : "-");
          cell += a.is_one() ? var : a.str() + "*" + var;
        }
      }
      if (cell.empty()) cell = "0";
      width[c] = std::max(width[c], cell.size());
      cells[static_cast<std::size_t>(r) * n + c] = std::move(cell);
    }
  std::ostringstream os;
  for (int r = 0; r < n; ++r) {
    os << "[ ";
    for (int c = 0; c < n; ++c) {
      const auto& s = cells[static_cast<std::size_t>(r) * n + c];
      os << std::string(width[c] - s.size(), ' ') << s << (c + 1 < n ? "  " : " ");
    }
    os << "]\n";
  }
  return os.str();
}

void render_basis_as_matrices(std::ostringstream& os, const std::string& label,
                              const std::vector<Vec>& rows, const InputDocument& input) {
  os << label << " (dim " << rows.size() << ")";
  if (rows.empty()) {
    os << ": 0\n";
    return;
  }
  os << ":\n";
  const int n = input.ambient_size;
  for (const auto& coords : rows) {
    QMatrix m(n, n);
    for (std::size_t k = 0; k < coords.size(); ++k) {
      if (coords[k].is_zero()) continue;
      m += input.basis[k] * coords[k];
    }
    os << m.str() << "\n";
  }
}

}  // namespace

std::string render_pretty(const ReportDocument& rep) {
  std::ostringstream os;
  os << "algebra";
  if (!rep.input.name.empty()) os << " '" << rep.input.name << "'";
  os << ": dim " << rep.dim_g << " in gl(" << rep.input.ambient_size << ")\n\n";
  os << "structure dims: radical " << rep.rad_basis.size() << ", nil radical "
     << rep.nil_basis.size() << ", levi " << rep.levi_basis.size() << ", torus "
     << rep.torus_basis.size() << ", reductive " << rep.reductive_basis.size() << "\n";
  os << "multgen dims:   n1 " << rep.n1_basis.size() << ", s " << rep.s_basis.size() << ", m "
     << rep.m_basis.size() << ", g_add " << rep.g_add_basis.size() << ", center of m "
     << rep.center_basis.size() << "\n\n";
  os << "is_mult_generated = " << (rep.is_mult_generated ? "true" : "false")
     << ", is_add_generated = " << (rep.is_add_generated ? "true" : "false")
     << ", char rank = " << rep.char_rank << "\n";
  os << "equivalent conditions (1..5): ";
  for (bool b : rep.prop_conditions) os << (b ? "T" : "F") << " ";
  os << "\noracle agreement: " << (rep.oracle_agrees ? "yes" : "NO") << "\n\n";
  if (!rep.m_basis.empty()) {
    os << "general element of Lie(G^mult) (parameters c1..c" << rep.m_basis.size() << "):\n"
       << render_general_element(rep.m_basis, rep.input) << "\n";
  }
  render_basis_as_matrices(os, "Lie(G^mult) basis", rep.m_basis, rep.input);
  os << "\n";
  render_basis_as_matrices(os, "center of Lie(G^mult)", rep.center_basis, rep.input);
  if (!rep.unipotent_generators.empty()) {
    os << "\nunipotent generators exp(s_i):\n";
    for (const auto& u : rep.unipotent_generators) os << u.str() << "\n";
  }
  os << "\nelapsed: " << rep.timing_us << " us\n";
  return os.str();
}

}  // namespace multgen
