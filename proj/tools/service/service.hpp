#pragma once

#include <memory>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "azvd/catalog.hpp"
#include "azvd/error.hpp"

namespace azvd::service {

struct Response {
  int status = 200;
  std::string content_type = "application/json";
  std::string body;
};

/// HTTP status for a library error code.
int status_for(ErrorCode code);

/// `{ "code", "message", "location"? }`
nlohmann::json api_error(const Error& e);

/// Request handlers over an immutable workspace. Every method is const and
/// safe to call from several threads at once.
class Service {
 public:
  explicit Service(Workspace ws) : ws_(std::move(ws)) {}

  const Workspace& workspace() const { return ws_; }

  Response get_catalog() const;
  Response get_asset(std::string_view id) const;
  /// Diagram JSON -> SVG. Empty slots render as placeholders.
  Response post_render(std::string_view body) const;
  /// Diagram JSON -> `{ "azee": text }`.
  Response post_compile(std::string_view body) const;
  /// `{ "azee": text, "policy": { template: layout } }` -> diagram JSON.
  Response post_synthesize(std::string_view body) const;

  /// Routes by method and path; 404/405 for anything else.
  Response handle(std::string_view method, std::string_view path, std::string_view body) const;

 private:
  Workspace ws_;
};

/// The service bound to an HTTP socket. Requests run on a thread pool.
class HttpServer {
 public:
  explicit HttpServer(const Service& svc);
  ~HttpServer();
  HttpServer(const HttpServer&) = delete;
  HttpServer& operator=(const HttpServer&) = delete;

  /// Binds `host:port`; port 0 picks a free one. Returns the bound port or -1.
  int bind(const std::string& host, int port);
  /// Accepts requests until stop() is called.
  bool run();
  void stop();

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

/// Binds and blocks until the process is stopped. False if binding fails.
bool serve(const Service& svc, const std::string& host, int port);

}  // namespace azvd::service
