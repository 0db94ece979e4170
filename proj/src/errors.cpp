// Copyright 2026 The gwbounds Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "gwb/errors.hpp"

#include <cstdlib>
#include <sstream>

namespace gwb {

const char* error_kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kDomain:
      return "domain";
    case ErrorKind::kApplicability:
      return "applicability";
    case ErrorKind::kConvergence:
      return "convergence";
    case ErrorKind::kInconsistency:
      return "inconsistency";
    case ErrorKind::kSize:
      return "size";
  }
  return "unknown";
}

namespace {

std::string describe(const std::string& condition, double lhs, double rhs) {
  std::ostringstream os;
  os.precision(10);
  os << "condition " << condition << " violated: lhs=" << lhs << " rhs=" << rhs;
  return os.str();
}

}  // namespace

ApplicabilityError::ApplicabilityError(const std::string& condition, double lhs,
                                       double rhs)
    : Error(ErrorKind::kApplicability, describe(condition, lhs, rhs)),
      condition_(condition),
      lhs_(lhs),
      rhs_(rhs) {}

int max_iter(int fallback) {
  const char* env = std::getenv("GWB_MAX_ITER");
  if (env == nullptr || *env == '\0') return fallback;
  char* end = nullptr;
  long v = std::strtol(env, &end, 10);
  if (end == env || *end != '\0' || v < 1) return fallback;
  if (v > 100000000L) v = 100000000L;
  return static_cast<int>(v);
}

}  // namespace gwb
