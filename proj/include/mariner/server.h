// Copyright 2026 The Mariner Authors.
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

#include <filesystem>
#include <memory>
#include <optional>
#include <string>

#include "mariner/facet.h"
#include "mariner/graph.h"

namespace mariner {

// HTTP/JSON front end of the facet service (docs/api.md). Handlers only read
// the shared snapshot, so requests are served concurrently without locks.
class FacetServer {
 public:
  FacetServer(Snapshot kb, const FacetRegistry& registry,
              std::optional<std::filesystem::path> static_dir = std::nullopt);
  ~FacetServer();

  FacetServer(const FacetServer&) = delete;
  FacetServer& operator=(const FacetServer&) = delete;

  // Port 0 picks a free port. Returns the bound port, or -1 on failure.
  int bind(const std::string& host, int port);
  // Serves until stop(); call after a successful bind.
  bool listen();
  void stop();
  // Blocks until the server accepts connections.
  void wait_until_ready() const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace mariner
