// Copyright 2026 The gptlods Authors.
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

#include "error.h"

namespace gptlods {

const char *ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "invalid_argument";
    case ErrorCode::kNotFound: return "not_found";
    case ErrorCode::kParse: return "parse_error";
    case ErrorCode::kIo: return "io_error";
    case ErrorCode::kVersion: return "version_mismatch";
    case ErrorCode::kCorrupt: return "corrupt_snapshot";
    case ErrorCode::kDuplicate: return "duplicate";
    case ErrorCode::kConfig: return "configuration_error";
    case ErrorCode::kProvider: return "provider_error";
    case ErrorCode::kRecognizerUnavailable: return "recognizer_unavailable";
    case ErrorCode::kProtocol: return "protocol_error";
    case ErrorCode::kInvalidPair: return "invalid_pair";
    case ErrorCode::kBind: return "bind_error";
    case ErrorCode::kInternal: return "internal_error";
  }
  return "unknown";
}

}  // namespace gptlods
