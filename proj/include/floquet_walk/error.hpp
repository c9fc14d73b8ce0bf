// Copyright 2026 The floquet-walk Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace floquet_walk {

enum class ErrorCode {
  kInvalidArgument = 1,
  kNonHermitianInput,
  kNonUnitaryInput,
  kBranchCut,
  kComplexSkeleton,
  kZeroCoupling,
  kCouplingOutOfRange,
  kInvalidPartition,
  kCenterOutOfRange,
  kSizeMismatch,
  kConvergenceCap,
  kConfigInvalid,
  kIoFailure,
};

const char* to_string(ErrorCode code) noexcept;

// Numerical failures (as opposed to bad input) map to exit status 3 in the CLI.
bool is_numerical(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace floquet_walk
