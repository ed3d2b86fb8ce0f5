#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>

#include "fqc/matrix.hpp"

namespace fqc {

enum class Status { Yes, No, Unknown };

inline const char* to_string(Status s) {
  switch (s) {
    case Status::Yes:
      return "Yes";
    case Status::No:
      return "No";
    default:
      return "Unknown";
  }
}

// Outcome of a commuting decision.  A Yes always carries a verified witness
// pair (X, Y) with X in the left class and Y in the right one.
struct Verdict {
  Status status = Status::Unknown;
  // "theorem: <name>", "nn-construction", "exhaustive", "randomized",
  // "separation-exhaustion", "budget" and so on.
  std::string method;
  std::optional<std::pair<Matrix, Matrix>> witness;
  // Centralizer elements enumerated or sampled.
  std::uint64_t spent = 0;
};

}  // namespace fqc
