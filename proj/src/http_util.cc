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

#include "http_util.h"

#include <condition_variable>
#include <memory>
#include <mutex>
#include <optional>
#include <thread>

#include "httplib.h"

namespace gptlods {

Endpoint ParseEndpoint(const std::string &url) {
  size_t scheme_end = url.find("://");
  if (scheme_end == std::string::npos) {
    throw Error(ErrorCode::kConfig, "endpoint is not an absolute URL: " + url);
  }
  std::string scheme = url.substr(0, scheme_end);
  for (char &c : scheme) c = static_cast<char>(std::tolower(c));
  if (scheme != "http" && scheme != "https") {
    throw Error(ErrorCode::kConfig, "unsupported endpoint scheme: " + url);
  }
  size_t host_begin = scheme_end + 3;
  size_t path_begin = url.find('/', host_begin);
  Endpoint endpoint;
  if (path_begin == std::string::npos) {
    endpoint.base = url;
    endpoint.path = "/";
  } else {
    endpoint.base = url.substr(0, path_begin);
    endpoint.path = url.substr(path_begin);
  }
  if (endpoint.base.size() == host_begin) {
    throw Error(ErrorCode::kConfig, "endpoint has no host: " + url);
  }
  return endpoint;
}

namespace {

struct PendingCall {
  std::mutex mu;
  std::condition_variable cv;
  bool done = false;
  std::optional<HttpResponse> response;
  std::string failure;
};

}  // namespace

HttpResponse PostJson(const Endpoint &endpoint, const std::string &body,
                      const std::map<std::string, std::string> &headers,
                      std::chrono::milliseconds timeout, ErrorCode failure) {
  auto call = std::make_shared<PendingCall>();
  httplib::Headers request_headers(headers.begin(), headers.end());

  // The worker owns everything it touches so it can outlive a caller that
  // gave up at the deadline.
  std::thread([call, endpoint, body, request_headers, timeout] {
    std::optional<HttpResponse> response;
    std::string failure_reason;
    try {
      httplib::Client client(endpoint.base);
      auto secs = std::chrono::duration_cast<std::chrono::seconds>(timeout);
      auto usecs =
          std::chrono::duration_cast<std::chrono::microseconds>(timeout - secs);
      client.set_connection_timeout(secs.count(), usecs.count());
      client.set_read_timeout(secs.count(), usecs.count());
      client.set_write_timeout(secs.count(), usecs.count());
      auto result = client.Post(endpoint.path, request_headers, body,
                                "application/json");
      if (result) {
        response = HttpResponse{result->status, result->body};
      } else {
        failure_reason = httplib::to_string(result.error());
      }
    } catch (const std::exception &e) {
      failure_reason = e.what();
    }
    std::lock_guard<std::mutex> lock(call->mu);
    call->response = std::move(response);
    call->failure = std::move(failure_reason);
    call->done = true;
    call->cv.notify_all();
  }).detach();

  std::unique_lock<std::mutex> lock(call->mu);
  if (!call->cv.wait_for(lock, timeout, [&] { return call->done; })) {
    throw Error(failure, "request to " + endpoint.base + endpoint.path +
                             " timed out after " +
                             std::to_string(timeout.count()) + " ms");
  }
  if (!call->response) {
    throw Error(failure, "request to " + endpoint.base + endpoint.path +
                             " failed: " + call->failure);
  }
  return *call->response;
}

}  // namespace gptlods
