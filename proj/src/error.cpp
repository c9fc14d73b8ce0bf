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

#include "floquet_walk/error.hpp"

namespace floquet_walk {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kNonHermitianInput: return "NonHermitianInput";
    case ErrorCode::kNonUnitaryInput: return "NonUnitaryInput";
    case ErrorCode::kBranchCut: return "BranchCut";
    case ErrorCode::kComplexSkeleton: return "ComplexSkeleton";
    case ErrorCode::kZeroCoupling: return "ZeroCoupling";
    case ErrorCode::kCouplingOutOfRange: return "CouplingOutOfRange";
    case ErrorCode::kInvalidPartition: return "InvalidPartition";
    case ErrorCode::kCenterOutOfRange: return "CenterOutOfRange";
    case ErrorCode::kSizeMismatch: return "SizeMismatch";
    case ErrorCode::kConvergenceCap: return "ConvergenceCap";
    case ErrorCode::kConfigInvalid: return "ConfigInvalid";
    case ErrorCode::kIoFailure: return "IoFailure";
  }
  return "Unknown";
}

bool is_numerical(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::kNonHermitianInput:
    case ErrorCode::kNonUnitaryInput:
    case ErrorCode::kBranchCut:
    case ErrorCode::kConvergenceCap:
    case ErrorCode::kZeroCoupling:
    case ErrorCode::kCouplingOutOfRange:
      return true;
    default:
      return false;
  }
}

}  // namespace floquet_walk
