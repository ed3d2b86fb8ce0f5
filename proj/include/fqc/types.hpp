#pragma once

#include <string>
#include <utility>
#include <vector>

#include "fqc/gf.hpp"
#include "fqc/partition.hpp"
#include "fqc/poly.hpp"

namespace fqc {

// A component d^λ of a class type.
struct TypeComponent {
  int degree;
  Partition partition;
  int dim() const { return degree * partition.size(); }
  bool operator==(const TypeComponent& o) const {
    return degree == o.degree && partition == o.partition;
  }
};

// Multiset of components, kept sorted: degree ascending, then partition
// lexicographically decreasing.
class ClassType {
 public:
  ClassType() = default;
  explicit ClassType(std::vector<TypeComponent> comps);
  // "2^(7,5) 3^(2,2,1)".
  static ClassType parse(const std::string& text);

  const std::vector<TypeComponent>& components() const { return comps_; }
  int dim() const;
  bool primary() const { return comps_.size() == 1; }
  std::string str() const;
  bool operator==(const ClassType& o) const { return comps_ == o.comps_; }
  bool operator!=(const ClassType& o) const { return !(*this == o); }
  bool operator<(const ClassType& o) const;

 private:
  std::vector<TypeComponent> comps_;
};

// A component f^λ of a cycle type.
struct CycleComponent {
  Poly poly;
  Partition partition;
  bool operator==(const CycleComponent& o) const {
    return poly == o.poly && partition == o.partition;
  }
};

// Components with pairwise distinct monic irreducibles, sorted by
// (degree, encoding).
class CycleType {
 public:
  CycleType() = default;
  // Validates irreducibility and distinctness.
  CycleType(const Field& F, std::vector<CycleComponent> comps);
  // "x^2+x+1^(7,5) x^3+x+1^(2,2,1)".
  static CycleType parse(const Field& F, const std::string& text);

  const Field& field() const { return field_; }
  const std::vector<CycleComponent>& components() const { return comps_; }
  int dim() const;
  ClassType class_type() const;
  std::string str() const;
  bool operator==(const CycleType& o) const { return comps_ == o.comps_; }
  bool operator!=(const CycleType& o) const { return !(*this == o); }

 private:
  Field field_;
  std::vector<CycleComponent> comps_;
};

}  // namespace fqc
