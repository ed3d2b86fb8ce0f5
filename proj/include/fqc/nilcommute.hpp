#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fqc/matrix.hpp"
#include "fqc/partition.hpp"
#include "fqc/verdict.hpp"

namespace fqc::nil {

constexpr std::uint64_t kDefaultBudget = std::uint64_t{1} << 24;
constexpr std::uint64_t kDefaultSeed = 3405691582u;

enum class Oracle { Yes, No, NotCovered };

struct OracleResult {
  Oracle result = Oracle::NotCovered;
  // equal, universal, one-part, n-1-one, nn-criterion, two-part,
  // ar-refinement, conjugate.
  std::string theorem;
};

// Settles N(λ) vs N(μ) over F when one of the classification results
// applies.  Throws SizeMismatch.
OracleResult theorem_oracle(const Partition& l, const Partition& m, const Field& F);

// A commuting pair (X in N(λ), Y in N(μ)) built from the construction behind
// a Yes of theorem_oracle, or nullopt.
std::optional<std::pair<Matrix, Matrix>> theorem_witness(const Partition& l, const Partition& m,
                                                         const Field& F);

// p (p^{2r} - 1) / e with e = 1 for p = 2 and e = 2 otherwise.
std::uint64_t exponent_pgl2(int p, int r);

// (M, Y) with M = J(n+1, n-1), Y in N(n,n) and MY = YM.  Throws
// NoWitnessExists when the PGL_2 exponent of F divides n.
std::pair<Matrix, Matrix> nn_witness(int n, const Field& F);

struct Doubled {
  Matrix D, E;
  ClassType type_D, type_E;
};
// D = diag(X, X), E = (Y I; 0 Y).  Throws NotCommuting.
Doubled double_construction(const Matrix& X, const Matrix& Y);

struct DecideOptions {
  std::uint64_t budget = kDefaultBudget;
  std::uint64_t seed = kDefaultSeed;
  bool use_theorems = true;
  bool randomized = true;
  // Which side's Jordan matrix to fix in the search: 0 automatic, 1 λ, 2 μ.
  int fix = 0;
};

Verdict decide(const Partition& l, const Partition& m, const Field& F,
               const DecideOptions& opts = {});

// Search of the nilpotent part of Cent(J(fixed)) for an element of N(target).
// Certified Yes/No when the enumeration fits the budget, Unknown otherwise.
// The witness is (J(fixed), X).
Verdict exhaustive(const Partition& fixed, const Partition& target, const Field& F,
                   std::uint64_t budget);

// Number of nilpotent elements of Cent(J(λ)) the exhaustive search visits,
// saturating at UINT64_MAX.
std::uint64_t nilpotent_centralizer_count(const Partition& l, const Field& F);

// Sum of min(λ_i, λ_j): the dimension of Cent(J(λ)).
int centralizer_dim(const Partition& l);

struct UniversalReport {
  std::vector<Partition> universal;
  // Cells left Unknown; when nonempty the universal set is not certified.
  std::vector<std::pair<Partition, Partition>> unknown_cells;
};
UniversalReport universal_check(int n, const Field& F, const DecideOptions& opts = {});

struct FieldDependence {
  Partition lambda, mu;
  std::uint64_t n = 0;
  // The exponent divides n for a <= r and does not for r < a <= r + 3.
  bool verified = false;
};
FieldDependence field_dependence_pair(int p, int r);

}  // namespace fqc::nil
