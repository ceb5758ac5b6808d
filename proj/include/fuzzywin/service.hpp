#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <string>

namespace fuzzywin::service {

struct Request {
  std::string method;
  std::string path;
  std::multimap<std::string, std::string> query;
  std::string body;
};

struct Response {
  int status = 200;
  std::string body;
  std::string content_type = "application/json";
};

/// Routes a request to the /v1 handlers. Pure: no state survives between calls.
Response handle(const Request& request);

struct ServerConfig {
  std::string host = "127.0.0.1";
  std::uint16_t port = 8080;
};

/// Defaults overridden by FUZZYWIN_HOST / FUZZYWIN_PORT when set.
ServerConfig config_from_env();

/// HTTP/1.1 front end for handle(). Handlers run on the server's worker pool.
class HttpServer {
 public:
  HttpServer();
  ~HttpServer();
  HttpServer(const HttpServer&) = delete;
  HttpServer& operator=(const HttpServer&) = delete;

  /// Binds the socket; port 0 picks a free port. Returns the bound port, or -1.
  int bind(const std::string& host, int port);
  /// Blocks serving requests until stop() is called from another thread.
  bool listen();
  void stop();

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace fuzzywin::service
