// Copyright 2026 The smx Authors.
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

#include "smx/error.h"

namespace smx {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kPrecondition:
      return "precondition violation";
    case ErrorCode::kCapacity:
      return "capacity error";
    case ErrorCode::kDomain:
      return "domain error";
    case ErrorCode::kNumeric:
      return "numeric error";
    case ErrorCode::kContract:
      return "contract violation";
    case ErrorCode::kValidation:
      return "validation error";
    case ErrorCode::kParse:
      return "parse error";
    case ErrorCode::kIo:
      return "I/O error";
    case ErrorCode::kUsage:
      return "usage error";
  }
  return "error";
}

}  // namespace smx
