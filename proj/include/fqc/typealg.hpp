#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "fqc/matrix.hpp"
#include "fqc/nilcommute.hpp"
#include "fqc/types.hpp"
#include "fqc/verdict.hpp"

namespace fqc::typealg {

// True iff for every degree d, T has at most as many components of degree d
// as there are monic irreducibles of degree d over F.
bool representable(const ClassType& T, const Field& F);

struct Separation {
  ClassType derived;
  // provenance[i]: index in T.components() of the component that
  // derived.components()[i] was split from.
  std::vector<int> provenance;
};
// Every type obtained by splitting component partitions into sub-multisets,
// T itself included, deduplicated.
std::vector<Separation> separations(const ClassType& T);

// Primary types c^λ and d^μ over F, decided through N((h/d)λ) and
// N((h/c)μ) over F_{q^l} with h = hcf(c, d), l = lcm(c, d).
Verdict primary_commute(const TypeComponent& S, const TypeComponent& T, const Field& F,
                        const nil::DecideOptions& opts = {});

// Searches separations of S and T whose components can be matched in
// commuting pairs of equal dimension.  Throws NotRepresentable, SizeMismatch.
Verdict types_commute(const ClassType& S, const ClassType& T, const Field& F,
                      const nil::DecideOptions& opts = {});

// Decides on class types and moves the witness into the exact cycle types
// with polynomial_map.  Throws SizeMismatch.
Verdict classes_commute(const CycleType& C, const CycleType& D, const nil::DecideOptions& opts = {});

// P with cycle_type(P(X)) = target.  Throws TypeMismatch unless X has the
// class type of target.
Poly polynomial_map(const Matrix& X, const CycleType& target);

// Both matrices, then "verified commute=yes typesmatch=yes".
void write_witness(std::ostream& out, const Matrix& X, const Matrix& Y);

}  // namespace fqc::typealg
