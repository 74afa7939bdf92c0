#include "multgen/cli.hpp"

#include <atomic>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "multgen/errors.hpp"
#include "multgen/io.hpp"

namespace multgen {

namespace {

InputDocument load_input(const std::string& path, const std::string& builtin_name) {
  if (!builtin_name.empty()) return input_from_builtin(builtin(builtin_name));
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open input file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_input(buf.str());
}

int cmd_analyze(const std::string& path, const std::string& builtin_name, bool pretty,
                const std::string& out_path, std::ostream& out) {
  const InputDocument doc = load_input(path, builtin_name);
  const ReportDocument rep = analyze_input(doc);
  const std::string text = pretty ? render_pretty(rep) : report_to_json(rep).dump(2) + "\n";
  if (!out_path.empty()) {
    std::ofstream f(out_path);
    if (!f) throw ParseError("cannot open output file: " + out_path);
    f << text;
  } else {
    out << text;
  }
  return 0;
}

int cmd_catalog(std::ostream& out) {
  for (const auto& name : catalog_names()) {
    const CatalogEntry entry = builtin(name);
    out << std::left << std::setw(24) << name << " dim " << std::setw(3) << entry.g.dim()
        << " gl(" << entry.g.ambient_size() << ")";
    if (entry.expected) out << "  m-dim " << entry.expected->dim_m;
    out << "\n";
  }
  return 0;
}

struct CheckCounters {
  int attempted = 0;
  int passed = 0;
  void tally(bool ok) {
    ++attempted;
    passed += ok ? 1 : 0;
  }
  bool clean() const { return attempted == passed; }
};

std::ostream& operator<<(std::ostream& os, const CheckCounters& c) {
  return os << c.passed << "/" << c.attempted;
}

struct RandomOutcome {
  bool constructed = false;
  bool decomposed = false;
  bool theorem = false;
  bool coherence = false;
  bool n1_in_s = false;
  bool m_ideal = false;
  bool quotient = false;
  bool char_rank_ok = false;
  std::optional<bool> weights_in_s;  // unset when the input is not split
  std::string error;
  std::string replay;
  int error_class = 0;  // 0 none, 2 InputNotAlgebraic, 3 TheoremViolation
};

RandomOutcome evaluate_random(std::uint64_t seed) {
  RandomOutcome o;
  std::optional<LieAlgebra> g;
  try {
    g.emplace(random_algebraic(seed));
    o.constructed = true;
    InputDocument doc;
    doc.name = "random-" + std::to_string(seed);
    doc.ambient_size = g->ambient_size();
    doc.basis = g->basis();
    o.replay = input_to_json(doc).dump();

    const StructureReport srep = decompose(*g);
    o.decomposed = true;
    const MultGenReport mrep = mult_subalgebra(*g, srep);

    // Theorem re-derived from scratch rather than read off the report.
    const Subspace lhs =
        subspace_sum(srep.reductive, bracket_closure(*g, product_space(*g, srep.reductive, srep.nil)));
    o.theorem = lhs == ideal_closure(*g, srep.reductive) && lhs == mrep.m;

    bool coh = true;
    for (int i = 1; i < 5; ++i) coh = coh && mrep.prop_conditions[i] == mrep.prop_conditions[0];
    o.coherence = coh && mrep.prop_conditions[0] == mrep.is_mult_generated;

    o.n1_in_s =
        mrep.s.contains(mrep.n1) && mrep.s.contains(product_space(*g, srep.reductive, mrep.s));
    o.m_ideal = is_ideal(*g, mrep.m);
    o.quotient = (g->dim() - mrep.m.dim() == srep.nil.dim() - mrep.s.dim()) &&
                 quotient_is_nilpotent(*g, mrep.m);
    o.char_rank_ok = mrep.char_rank == g->dim() - mrep.g_add.dim() &&
                     (mrep.char_rank == 0) == mrep.is_add_generated;

    if (srep.torus.dim() > 0) {
      try {
        const auto weights = weight_decomposition(*g, srep, srep.torus.basis_vectors());
        bool ok = true;
        for (const auto& ws : weights) {
          bool nonzero = false;
          for (const auto& w : ws.weight) nonzero = nonzero || !w.is_zero();
          if (nonzero) ok = ok && mrep.s.contains(ws.space);
        }
        o.weights_in_s = ok;
      } catch (const NotSplit&) {
        o.weights_in_s.reset();
      }
    }
  } catch (const TheoremViolation& e) {
    o.error = e.what();
    o.error_class = 3;
  } catch (const InputNotAlgebraic& e) {
    o.error = std::string(e.what());
    o.error_class = 2;
  } catch (const std::exception& e) {
    o.error = e.what();
    o.error_class = 2;
  }
  return o;
}

int cmd_check(bool run_all, int random_n, std::uint64_t seed, std::ostream& out, std::ostream& err) {
  int worst = 0;
  if (run_all) {
    CheckCounters golden;
    for (const auto& name : catalog_names()) {
      const CatalogEntry entry = builtin(name);
      bool ok = true;
      std::string detail;
      try {
        const ReportDocument rep = analyze_input(input_from_builtin(entry));
        const ExpectedOutcome& e = *entry.expected;
        auto want = [&](const char* what, long got, long exp) {
          if (got != exp) {
            ok = false;
            detail += std::string(" ") + what + "=" + std::to_string(got) + " (expected " +
                      std::to_string(exp) + ")";
          }
        };
        want("dim", rep.dim_g, e.dim_g);
        want("rad", static_cast<long>(rep.rad_basis.size()), e.dim_rad);
        want("nil", static_cast<long>(rep.nil_basis.size()), e.dim_nil);
        want("levi", static_cast<long>(rep.levi_basis.size()), e.dim_levi);
        want("torus", static_cast<long>(rep.torus_basis.size()), e.dim_torus);
        want("reductive", static_cast<long>(rep.reductive_basis.size()), e.dim_reductive);
        want("n1", static_cast<long>(rep.n1_basis.size()), e.dim_n1);
        want("s", static_cast<long>(rep.s_basis.size()), e.dim_s);
        want("m", static_cast<long>(rep.m_basis.size()), e.dim_m);
        want("is_mult", rep.is_mult_generated, e.is_mult);
        want("is_add", rep.is_add_generated, e.is_add);
        want("char_rank", rep.char_rank, e.char_rank);
        if (e.dim_center_of_m)
          want("center", static_cast<long>(rep.center_basis.size()), *e.dim_center_of_m);
        if (!rep.oracle_agrees) {
          ok = false;
          detail += " oracle-disagreement";
        }
      } catch (const std::exception& ex) {
        ok = false;
        detail = std::string(" exception: ") + ex.what();
      }
      golden.tally(ok);
      if (!ok) {
        err << "golden mismatch for " << name << ":" << detail << "\n";
        worst = std::max(worst, 1);
      }
    }
    out << "golden catalog:      " << golden << "\n";

    CheckCounters regular;
    for (const auto& name : regular_case_names()) {
      bool ok = false;
      try {
        const RegularCase rc = regular_case(name);
        ok = corollary_check(rc.ambient, rc.subalgebra, rc.torus, rc.rank);
      } catch (const std::exception& ex) {
        err << "regular case " << name << " failed: " << ex.what() << "\n";
      }
      regular.tally(ok);
      if (!ok) worst = std::max(worst, 1);
    }
    out << "regular subgroups:   " << regular << "\n";
  }

  if (random_n > 0) {
    std::vector<std::uint64_t> seeds(static_cast<std::size_t>(random_n));
    Prng rs(seed);
    for (auto& s : seeds) s = rs.next();

    std::vector<RandomOutcome> results(seeds.size());
    const unsigned hw = std::max(1u, std::min(std::thread::hardware_concurrency(), 8u));
    std::atomic<std::size_t> cursor{0};
    auto worker = [&] {
      for (;;) {
        const std::size_t i = cursor.fetch_add(1);
        if (i >= seeds.size()) return;
        results[i] = evaluate_random(seeds[i]);
      }
    };
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < hw; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();

    CheckCounters constructed, decomposed, theorem, coherence, weights_in_s, n1_in_s, m_ideal,
        quotient, char_rank;
    for (std::size_t i = 0; i < results.size(); ++i) {
      const auto& o = results[i];
      constructed.tally(o.constructed);
      decomposed.tally(o.decomposed);
      theorem.tally(o.theorem);
      coherence.tally(o.coherence);
      n1_in_s.tally(o.n1_in_s);
      m_ideal.tally(o.m_ideal);
      quotient.tally(o.quotient);
      char_rank.tally(o.char_rank_ok);
      if (o.weights_in_s) weights_in_s.tally(*o.weights_in_s);
      if (!o.error.empty() || !o.theorem) {
        err << "violation on random input " << i << " (seed " << seeds[i] << ")";
        if (!o.error.empty()) err << ": " << o.error;
        err << "\nreplay input: " << (o.replay.empty() ? "<construction failed>" : o.replay) << "\n";
        worst = std::max(worst, o.error_class == 0 ? 1 : o.error_class);
      }
    }
    out << "random inputs:       " << random_n << " (seed " << seed << ")\n";
    out << "construction:        " << constructed << "\n";
    out << "decomposition:       " << decomposed << "\n";
    out << "theorem-vs-oracle:   " << theorem << "\n";
    out << "condition-coherence: " << coherence << "\n";
    out << "weight-spaces in s:  " << weights_in_s << " (split inputs only)\n";
    out << "n1 in s, [r,s] in s: " << n1_in_s << "\n";
    out << "m is an ideal:       " << m_ideal << "\n";
    out << "nilpotent quotient:  " << quotient << "\n";
    out << "character rank:      " << char_rank << "\n";
    const bool all_clean = constructed.clean() && decomposed.clean() && theorem.clean() &&
                           coherence.clean() && weights_in_s.clean() && n1_in_s.clean() &&
                           m_ideal.clean() && quotient.clean() && char_rank.clean();
    if (!all_clean) worst = std::max(worst, 1);
  }

  out << (worst == 0 ? "summary: PASS\n" : "summary: FAIL\n");
  return worst;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact-arithmetic analysis of the subgroup generated by semisimple elements"};
  app.name("multgen");
  app.require_subcommand(1);

  auto* analyze = app.add_subcommand("analyze", "run the pipeline on an input file or builtin");
  std::string path, builtin_name, out_path;
  bool pretty = false;
  analyze->add_option("file", path, "JSON input file");
  analyze->add_option("--builtin", builtin_name, "builtin catalog name")->envname("MULTGEN_BUILTIN");
  analyze->add_flag("--pretty", pretty, "human-readable report")->envname("MULTGEN_PRETTY");
  analyze->add_option("--out", out_path, "write the report to a file")->envname("MULTGEN_OUT");

  auto* check = app.add_subcommand("check", "golden tests and randomized invariant suites");
  bool run_all = false;
  int random_n = 0;
  std::uint64_t seed = 1;
  check->add_flag("--all", run_all, "run golden tests on every builtin")->envname("MULTGEN_ALL");
  check->add_option("--random", random_n, "number of random algebras")->envname("MULTGEN_RANDOM");
  check->add_option("--seed", seed, "seed for the random suite")->envname("MULTGEN_SEED");

  auto* cat = app.add_subcommand("catalog", "list builtin algebras");

  std::vector<const char*> argv;
  argv.push_back("multgen");
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  try {
    if (analyze->parsed()) {
      if (path.empty() == builtin_name.empty())
        throw ParseError("analyze needs exactly one of: input file, --builtin NAME");
      return cmd_analyze(path, builtin_name, pretty, out_path, out);
    }
    if (check->parsed()) {
      if (!run_all && check->count("--random") == 0) run_all = true;
      return cmd_check(run_all, random_n, seed, out, err);
    }
    if (cat->parsed()) return cmd_catalog(out);
  } catch (const ParseError& e) {
    err << "parse error";
    if (e.line() > 0) err << " at line " << e.line() << ", column " << e.column();
    err << ": " << e.what() << "\n";
    return 1;
  } catch (const InputNotAlgebraic& e) {
    err << "input not algebraic: " << e.what() << "\n";
    return 2;
  } catch (const TheoremViolation& e) {
    err << "theorem violation: " << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace multgen
