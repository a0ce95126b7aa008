#pragma once

#include <filesystem>
#include <memory>
#include <optional>
#include <string>

#include "nerkit/service.hpp"

namespace nerkit {

struct ServerOptions {
  std::string host = "127.0.0.1";
  int port = 8080;  // 0 picks a free port
  std::optional<std::filesystem::path> static_dir;
  std::string cors_origin = "*";
};

// HTTP/1.1 JSON API over a ModelRegistry:
//   GET /health, GET /models, POST /predict, and GET / (static bundle).
class PredictionServer {
 public:
  PredictionServer(const ModelRegistry& registry, ServerOptions options);
  ~PredictionServer();
  PredictionServer(const PredictionServer&) = delete;
  PredictionServer& operator=(const PredictionServer&) = delete;

  // Binds the socket; returns the bound port. Throws IoError.
  int bind();
  // Blocks until stop() is called. Calls bind() first if needed.
  void listen();
  void stop();
  bool running() const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace nerkit
