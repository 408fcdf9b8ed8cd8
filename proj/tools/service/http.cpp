#include <httplib.h>

#include "service.hpp"

namespace azvd::service {

struct HttpServer::Impl {
  httplib::Server server;
};

HttpServer::HttpServer(const Service& svc) : impl_(std::make_unique<Impl>()) {
  auto& server = impl_->server;
  auto reply = [](httplib::Response& res, const Response& r) {
    res.status = r.status;
    res.set_content(r.body, r.content_type);
  };
  server.Get("/catalog", [&svc, reply](const httplib::Request&, httplib::Response& res) {
    reply(res, svc.get_catalog());
  });
  server.Get(R"(/assets/([^/]+))", [&svc, reply](const httplib::Request& req, httplib::Response& res) {
    reply(res, svc.get_asset(req.matches[1].str()));
  });
  server.Post("/render", [&svc, reply](const httplib::Request& req, httplib::Response& res) {
    reply(res, svc.post_render(req.body));
  });
  server.Post("/compile", [&svc, reply](const httplib::Request& req, httplib::Response& res) {
    reply(res, svc.post_compile(req.body));
  });
  server.Post("/synthesize", [&svc, reply](const httplib::Request& req, httplib::Response& res) {
    reply(res, svc.post_synthesize(req.body));
  });
}

HttpServer::~HttpServer() = default;

int HttpServer::bind(const std::string& host, int port) {
  if (port == 0) return impl_->server.bind_to_any_port(host);
  return impl_->server.bind_to_port(host, port) ? port : -1;
}

bool HttpServer::run() { return impl_->server.listen_after_bind(); }

void HttpServer::stop() { impl_->server.stop(); }

bool serve(const Service& svc, const std::string& host, int port) {
  HttpServer server(svc);
  if (server.bind(host, port) < 0) return false;
  return server.run();
}

}  // namespace azvd::service
