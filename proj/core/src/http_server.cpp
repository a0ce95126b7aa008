#include "nerkit/server.hpp"

#include <httplib.h>

#include "nerkit/error.hpp"

namespace nerkit {

namespace {

constexpr const char* kJson = "application/json";

void send(httplib::Response& res, int status, const nlohmann::json& body) {
  res.status = status;
  res.set_content(body.dump(-1, ' ', false, nlohmann::json::error_handler_t::replace), kJson);
}

}  // namespace

struct PredictionServer::Impl {
  Impl(const ModelRegistry& registry, ServerOptions options) : registry(registry), options(std::move(options)) {}

  const ModelRegistry& registry;
  ServerOptions options;
  httplib::Server server;
  int bound_port = -1;
};

PredictionServer::PredictionServer(const ModelRegistry& registry, ServerOptions options)
    : impl_(std::make_unique<Impl>(registry, std::move(options))) {
  if (registry.empty()) throw ConfigError("server needs at least one model");
  auto& svr = impl_->server;
  const auto origin = impl_->options.cors_origin;

  svr.set_post_routing_handler([origin](const httplib::Request&, httplib::Response& res) {
    if (!origin.empty()) res.set_header("Access-Control-Allow-Origin", origin);
  });
  svr.Options(R"(/.*)", [](const httplib::Request&, httplib::Response& res) {
    res.set_header("Access-Control-Allow-Methods", "GET, POST, OPTIONS");
    res.set_header("Access-Control-Allow-Headers", "Content-Type");
    res.status = 204;
  });

  svr.Get("/health", [](const httplib::Request&, httplib::Response& res) { send(res, 200, health_body()); });
  svr.Get("/models", [this](const httplib::Request&, httplib::Response& res) {
    send(res, 200, models_body(impl_->registry));
  });
  svr.Post("/predict", [this](const httplib::Request& req, httplib::Response& res) {
    const auto out = handle_predict_body(impl_->registry, req.body);
    send(res, out.status, out.body);
  });

  if (impl_->options.static_dir) {
    if (!svr.set_mount_point("/", impl_->options.static_dir->string()))
      throw IoError("static directory not found: " + impl_->options.static_dir->string());
  }

  svr.set_error_handler([](const httplib::Request&, httplib::Response& res) {
    if (res.body.empty()) {
      nlohmann::json body{{"error", res.status == 404 ? "not found" : "request failed"}};
      res.set_content(body.dump(), kJson);
    }
  });
  svr.set_exception_handler([](const httplib::Request&, httplib::Response& res, std::exception_ptr) {
    send(res, 500, nlohmann::json{{"error", "internal error"}});
  });
}

PredictionServer::~PredictionServer() { stop(); }

int PredictionServer::bind() {
  if (impl_->bound_port >= 0) return impl_->bound_port;
  auto& svr = impl_->server;
  const auto& opts = impl_->options;
  if (opts.port == 0) {
    impl_->bound_port = svr.bind_to_any_port(opts.host);
  } else if (svr.bind_to_port(opts.host, opts.port)) {
    impl_->bound_port = opts.port;
  }
  if (impl_->bound_port <= 0) {
    impl_->bound_port = -1;
    throw IoError("cannot bind " + opts.host + ":" + std::to_string(opts.port));
  }
  return impl_->bound_port;
}

void PredictionServer::listen() {
  bind();
  impl_->server.listen_after_bind();
}

void PredictionServer::stop() {
  if (impl_) impl_->server.stop();
}

bool PredictionServer::running() const { return impl_->server.is_running(); }

}  // namespace nerkit
