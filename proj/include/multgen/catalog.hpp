#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "multgen/liealgebra.hpp"

namespace multgen {

// Golden data for builtin entries: dimensions and flags the pipeline must
// reproduce exactly.
struct ExpectedOutcome {
  int dim_g = 0;
  int dim_rad = 0;
  int dim_nil = 0;
  int dim_levi = 0;
  int dim_torus = 0;
  int dim_reductive = 0;
  int dim_n1 = 0;
  int dim_s = 0;
  int dim_m = 0;
  bool is_mult = false;
  bool is_add = false;
  int char_rank = 0;
  std::optional<int> dim_center_of_m;
};

struct CatalogEntry {
  std::string name;
  LieAlgebra g;
  std::optional<ExpectedOutcome> expected;
};

// Builtin algebras by name. Accepted names:
//   paper-ex, sl<N> / sl(N), sl2-borel, parabolic-sl<N>-<blocks>,
//   parabolic-sp4, gm<N> / gm(N), ga<N> / ga(N),
//   heisenberg-torus(w1,w2), upper-triangular(N) / ut<N>.
// Throws std::invalid_argument for unknown names or bad parameters.
CatalogEntry builtin(const std::string& name);

// Canonical shipped entries, all carrying golden expected values.
std::vector<std::string> catalog_names();

// Regular subgroups of reductive groups, for the corollary check.
struct RegularCase {
  std::string name;
  LieAlgebra ambient;  // reductive
  Subspace subalgebra;
  Subspace torus;  // maximal toral subalgebra of ambient, inside subalgebra
  int rank;
};

RegularCase regular_case(const std::string& name);
std::vector<std::string> regular_case_names();

// Deterministic generator state (splitmix64); pure function of the seed.
class Prng {
public:
  explicit Prng(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next();
  std::uint64_t below(std::uint64_t n) { return n == 0 ? 0 : next() % n; }
  long range(long lo, long hi) { return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1))); }

private:
  std::uint64_t state_;
};

struct RandomParams {
  int max_dim = 8;  // bound on the algebra dimension
};

// Block-triangular semidirect product (reductive part) x| V. The reductive
// part is sl2 (block-diagonal irreducibles) and/or up to two diagonal torus
// generators; V is a sum of modules realized as column blocks against the
// last coordinate. One module may be duplicated as a dual row block with a
// central corner direction, giving a Heisenberg bracket inside V. The result
// is the tangent algebra of a linear algebraic group by construction.
struct SemidirectModule {
  int dim = 1;                  // sl2 irreducible dimension (1 = trivial)
  std::vector<long> weights;    // one integer weight per torus generator
};

struct SemidirectSpec {
  bool has_sl2 = false;
  int torus_count = 0;               // 0..2
  std::vector<long> torus_first;     // diagonal entry at coordinate 0, per generator
  std::vector<long> torus_last;      // diagonal entry at the last coordinate, per generator
  std::vector<SemidirectModule> modules;
  int heisenberg_module = -1;        // index into modules, or -1

  int algebra_dim() const;
};

LieAlgebra semidirect_algebra(const SemidirectSpec& spec);

// Random tangent algebra of a linear algebraic group: samples a
// SemidirectSpec (pure function of the seed) and builds it.
LieAlgebra random_algebraic(std::uint64_t seed, const RandomParams& params = {});

}  // namespace multgen
