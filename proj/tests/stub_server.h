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


// In-process HTTP server for tests that need a remote peer.

#ifndef GPTLODS_TESTS_STUB_SERVER_H_
#define GPTLODS_TESTS_STUB_SERVER_H_

#include <atomic>
#include <functional>
#include <string>
#include <thread>

#include "httplib.h"

namespace gptlods::testing {

class StubServer {
 public:
  using Handler =
      std::function<void(const httplib::Request &, httplib::Response &)>;

  // Serves `handler` for POST requests on any path.
  explicit StubServer(Handler handler) {
    server_.Post(".*", [this, handler](const httplib::Request &req,
                                       httplib::Response &res) {
      ++requests_;
      last_body_ = req.body;
      last_authorization_ = req.get_header_value("Authorization");
      handler(req, res);
    });
    port_ = server_.bind_to_any_port("127.0.0.1");
    thread_ = std::thread([this] { server_.listen_after_bind(); });
    server_.wait_until_ready();
  }

  ~StubServer() {
    server_.stop();
    thread_.join();
  }

  std::string url(const std::string &path = "/annotate") const {
    return "http://127.0.0.1:" + std::to_string(port_) + path;
  }
  int requests() const { return requests_; }
  std::string last_body() const { return last_body_; }
  std::string last_authorization() const { return last_authorization_; }

  // Replies with a fixed body and status.
  static Handler Fixed(std::string body, int status = 200) {
    return [body, status](const httplib::Request &, httplib::Response &res) {
      res.status = status;
      res.set_content(body, "application/json");
    };
  }

 private:
  httplib::Server server_;
  int port_ = 0;
  std::thread thread_;
  std::atomic<int> requests_{0};
  std::string last_body_;
  std::string last_authorization_;
};

// A URL on which nothing listens.
std::string UnreachableUrl();

}  // namespace gptlods::testing

#endif  // GPTLODS_TESTS_STUB_SERVER_H_
