#pragma once

#include <cstdint>
#include <vector>

#include "fqc/matrix.hpp"
#include "fqc/types.hpp"

namespace fqc::cent {

constexpr std::uint64_t kDefaultDetBudget = std::uint64_t{1} << 24;
constexpr std::uint64_t kCoverageCap = 10000000;

// hcf of all parts of all partitions of the class type.  Throws EmptyInput
// for a 0 x 0 matrix or an empty type.
int part_size_invariant_of(const Matrix& M);
int part_size_invariant_of(const CycleType& T);
int part_size_invariant_of(const ClassType& T);

enum class DetMode { Theorem, Bruteforce };

// {det Y : Y in Cent(M)}, sorted.  Theorem mode returns the k-th powers for
// the part-size invariant k; brute force enumerates the q^dim elements of
// Cent(M) and throws BudgetExceeded when q^dim > budget.
std::vector<Elem> det_set(const Matrix& M, DetMode mode, std::uint64_t budget = kDefaultDetBudget);

// hcf(q - 1, k): the index in GL_n(F_q) of the subgroup generated by SL_n
// and the invertible elements of the centralizer, for invertible M.
std::uint64_t centralizing_index(const Matrix& M);
std::uint64_t centralizing_index(const CycleType& T);

enum class CoverageMode { Fast, Exhaustive };

// Determinants of the matrices of type T over F, sorted.  Exhaustive mode
// runs through assignments of distinct irreducibles to the components and
// throws BudgetExceeded above kCoverageCap assignments.  Throws
// NotRepresentable.
std::vector<Elem> type_det_coverage(const ClassType& T, const Field& F, CoverageMode mode);

// Entries reduced mod m, sorted decreasing, padded with zeros to length m.
// Throws ShapeMismatch if pi has more than m entries.
std::vector<int> canonical_pi(int m, const std::vector<long long>& pi);

// {sum_i pi_i s(i) mod m : s a bijection onto Z_m}, sorted.
std::vector<int> pi_expressible_set(int m, const std::vector<int>& pi);

// The conjectured answer: whether every element of Z_m is pi-expressible.
bool pi_predicted_full(int m, const std::vector<int>& pi);

struct PiDisagreement {
  std::vector<int> pi;
  std::vector<int> expressible;
  bool predicted_full;
};
// Every canonical pi of length m whose expressible set disagrees with the
// prediction.
std::vector<PiDisagreement> pi_conjecture_check(int m);

}  // namespace fqc::cent
