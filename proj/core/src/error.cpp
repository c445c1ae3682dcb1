// Copyright 2026 The pqcalc Authors
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

#include "pqc/error.hpp"

namespace pqc {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kDimensionMismatch: return "DimensionMismatch";
    case ErrorCode::kIndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::kNotHermitian: return "NotHermitian";
    case ErrorCode::kNotUnitary: return "NotUnitary";
    case ErrorCode::kNoConvergence: return "NoConvergence";
    case ErrorCode::kSingular: return "Singular";
    case ErrorCode::kImaginaryResidual: return "ImaginaryResidual";
    case ErrorCode::kNotCommensurable: return "NotCommensurable";
    case ErrorCode::kDuplicatePoints: return "DuplicatePoints";
    case ErrorCode::kPersistentIllConditioning: return "PersistentIllConditioning";
  }
  return "Unknown";
}

bool is_numerical(ErrorCode code) {
  switch (code) {
    case ErrorCode::kNoConvergence:
    case ErrorCode::kSingular:
    case ErrorCode::kNotCommensurable:
    case ErrorCode::kPersistentIllConditioning:
      return true;
    default:
      return false;
  }
}

}  // namespace pqc
