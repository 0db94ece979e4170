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

#ifndef GWB_ERRORS_HPP_
#define GWB_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace gwb {

enum class ErrorKind {
  kDomain,
  kApplicability,
  kConvergence,
  kInconsistency,
  kSize,
};

const char* error_kind_name(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

class DomainError : public Error {
 public:
  explicit DomainError(const std::string& what)
      : Error(ErrorKind::kDomain, what) {}
};

// Carries the violated inequality and both of its sides.
class ApplicabilityError : public Error {
 public:
  ApplicabilityError(const std::string& condition, double lhs, double rhs);
  const std::string& condition() const { return condition_; }
  double lhs() const { return lhs_; }
  double rhs() const { return rhs_; }

 private:
  std::string condition_;
  double lhs_;
  double rhs_;
};

class ConvergenceError : public Error {
 public:
  explicit ConvergenceError(const std::string& what)
      : Error(ErrorKind::kConvergence, what) {}
};

class InconsistencyError : public Error {
 public:
  explicit InconsistencyError(const std::string& what)
      : Error(ErrorKind::kInconsistency, what) {}
};

class SizeError : public Error {
 public:
  explicit SizeError(const std::string& what) : Error(ErrorKind::kSize, what) {}
};

// Iteration cap, overridable through the GWB_MAX_ITER environment variable.
int max_iter(int fallback);

}  // namespace gwb

#endif  // GWB_ERRORS_HPP_
