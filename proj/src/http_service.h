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

#ifndef GPTLODS_HTTP_SERVICE_H_
#define GPTLODS_HTTP_SERVICE_H_

#include <atomic>
#include <memory>
#include <string>

#include "pipeline.h"

namespace httplib {
class Server;
}

namespace gptlods {

struct ServerOptions {
  std::string host = "127.0.0.1";
  int port = 8080;  // 0 picks a free port
  std::string static_dir;  // served at "/" when set
};

// HTTP front end over a shared Pipeline. Handlers only read the index, so
// requests run concurrently on the server's worker pool.
class ApiServer {
 public:
  ApiServer(std::shared_ptr<const Pipeline> pipeline, ServerOptions options);
  ~ApiServer();

  ApiServer(const ApiServer &) = delete;
  ApiServer &operator=(const ApiServer &) = delete;

  // Throws kBind when the address is unavailable. Returns the bound port.
  int Bind();
  int port() const { return port_; }

  // Serves until Stop(). Bind() must have succeeded.
  void Run();
  // Blocks until Run() is accepting connections.
  void WaitUntilReady() const;
  // Safe from any thread, including before Run() starts.
  void Stop();

 private:
  void RegisterRoutes();

  std::shared_ptr<const Pipeline> pipeline_;
  ServerOptions options_;
  std::unique_ptr<httplib::Server> server_;
  int port_ = -1;
  std::atomic<bool> stop_requested_{false};
  std::atomic<bool> finished_{false};
};

// HTTP status for an error category.
int HttpStatusFor(ErrorCode code);

}  // namespace gptlods

#endif  // GPTLODS_HTTP_SERVICE_H_
