#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fqc/error.hpp"

namespace fqc {

// Weakly decreasing sequence of positive integers.  The empty partition is
// the partition of 0.
class Partition {
 public:
  Partition() = default;
  // Parts must already be weakly decreasing and positive.
  explicit Partition(std::vector<int> parts);
  // Sorts the parts; zeros are dropped.
  static Partition from_parts(std::vector<int> parts);
  // "(7,5)"; the parentheses are optional, "()" is the empty partition.
  static Partition parse(const std::string& text);

  const std::vector<int>& parts() const { return parts_; }
  int size() const;
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }
  // λ(i), zero-based, 0 past the end.
  int operator[](int i) const { return i < length() ? parts_[i] : 0; }
  int largest() const { return empty() ? 0 : parts_.front(); }
  int smallest() const { return empty() ? 0 : parts_.back(); }
  // m_j: number of parts equal to j.
  int multiplicity(int j) const;
  std::string str() const;

  bool operator==(const Partition& o) const { return parts_ == o.parts_; }
  bool operator!=(const Partition& o) const { return parts_ != o.parts_; }
  bool operator<(const Partition& o) const { return parts_ < o.parts_; }

 private:
  std::vector<int> parts_;
};

// Multiset union of parts.
Partition operator+(const Partition& a, const Partition& b);

// tλ = λ + ... + λ (t copies).
Partition times(int t, const Partition& l);
// Whether l = tν for some ν.
bool divisible(const Partition& l, int t);
// ν with tν = l; throws NotDivisible.
Partition divide(const Partition& l, int t);

Partition conjugate(const Partition& l);

// Prefix sums of a are at least those of b; throws SizeMismatch.
bool dominates(const Partition& a, const Partition& b);

bool is_almost_rectangular(const Partition& l);

// One block of a common almost rectangular source: a part of ν together
// with the almost rectangular pieces of μ1 and μ2 that sum to it.
struct ArGroup {
  int size;
  Partition piece1;
  Partition piece2;
};

// Some ν having both inputs as almost rectangular refinements, as the list
// of its blocks (largest part first), or nullopt.  Throws SizeMismatch.
std::optional<std::vector<ArGroup>> common_ar_groups(const Partition& m1, const Partition& m2);
std::optional<Partition> common_ar_source(const Partition& m1, const Partition& m2);

// hcf of all parts; throws EmptyInput if there are none.
int part_size_invariant(const std::vector<Partition>& ls);

// All partitions of n, lexicographically decreasing.
std::vector<Partition> partitions_of(int n);

// The almost rectangular partition of n with k parts.
Partition almost_rectangular(int n, int k);

}  // namespace fqc
