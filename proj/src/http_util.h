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

#ifndef GPTLODS_HTTP_UTIL_H_
#define GPTLODS_HTTP_UTIL_H_

#include <chrono>
#include <map>
#include <string>

#include "error.h"

namespace gptlods {

struct Endpoint {
  std::string base;  // scheme://host[:port]
  std::string path;  // starts with '/'
};

// Splits an absolute http(s) URL. Throws kConfig otherwise.
Endpoint ParseEndpoint(const std::string &url);

struct HttpResponse {
  int status = 0;
  std::string body;
};

// POSTs a JSON body. The call returns within `timeout` even if the peer
// stalls; transport failures and the deadline both throw Error(failure).
HttpResponse PostJson(const Endpoint &endpoint, const std::string &body,
                      const std::map<std::string, std::string> &headers,
                      std::chrono::milliseconds timeout, ErrorCode failure);

}  // namespace gptlods

#endif  // GPTLODS_HTTP_UTIL_H_
