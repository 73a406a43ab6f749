#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "metlie/metric.hpp"

namespace metlie {

struct CheckResult {
  enum class Status { Pass, Fail, Skip };
  std::string name;
  Status status = Status::Skip;
  std::string detail;
};

std::string to_string(CheckResult::Status s);

/// Runs every structural, metric and reduction property that applies to the
/// instance. Checks whose hypotheses fail are reported as Skip with the
/// reason in `detail`. Deterministic given (samples, seed).
std::vector<CheckResult> verify_instance(const MetricLieAlgebra& m, std::size_t samples = 64,
                                         std::uint64_t seed = 0);

bool all_passed(const std::vector<CheckResult>& checks);

}  // namespace metlie
