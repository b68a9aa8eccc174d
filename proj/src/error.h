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

#ifndef GPTLODS_ERROR_H_
#define GPTLODS_ERROR_H_

#include <stdexcept>
#include <string>

namespace gptlods {

// Error categories raised by the core library. The numeric values are shared
// with the C API status codes.
enum class ErrorCode {
  kInvalidArgument = 1,
  kNotFound = 2,
  kParse = 3,
  kIo = 4,
  kVersion = 5,
  kCorrupt = 6,
  kDuplicate = 7,
  kConfig = 8,
  kProvider = 9,
  kRecognizerUnavailable = 10,
  kProtocol = 11,
  kInvalidPair = 12,
  kBind = 13,
  kInternal = 14,
};

const char *ErrorCodeName(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string &message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace gptlods

#endif  // GPTLODS_ERROR_H_
