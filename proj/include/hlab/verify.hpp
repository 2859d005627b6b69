#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hlab/arrangement.hpp"

namespace hlab {

struct IdentityCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Runs every cross-module identity on `source` with `count` seeded random weight vectors.
std::vector<IdentityCheck> run_identity_suite(const Source& source, std::uint64_t seed, int count = 100);

}  // namespace hlab
