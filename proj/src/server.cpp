#include "ordifind/server.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include <httplib.h>

namespace ordifind {

namespace {

constexpr const char* kFallbackIndex = R"(<!doctype html>
<html>
<head><meta charset="utf-8"><title>ordifind</title></head>
<body>
<h1>ordifind</h1>
<p>No UI bundle was configured for this server (start it with <code>--assets DIR</code>).</p>
<p>The factorization document is available at <a href="/factorization.json">/factorization.json</a>.</p>
</body>
</html>
)";

}  // namespace

std::unique_ptr<httplib::Server> make_server(std::string document_json,
                                             std::optional<std::string> assets_dir) {
  auto server = std::make_unique<httplib::Server>();
  auto doc = std::make_shared<const std::string>(std::move(document_json));

  server->Get("/factorization.json", [doc](const httplib::Request&, httplib::Response& res) {
    res.set_content(*doc, "application/json");
  });

  std::optional<std::string> index_html;
  if (assets_dir) {
    std::filesystem::path index = std::filesystem::path(*assets_dir) / "index.html";
    if (std::ifstream in{index}) {
      std::stringstream buf;
      buf << in.rdbuf();
      index_html = buf.str();
    }
  }
  auto index = std::make_shared<const std::string>(index_html.value_or(kFallbackIndex));
  server->Get("/", [index](const httplib::Request&, httplib::Response& res) {
    res.set_content(*index, "text/html; charset=utf-8");
  });

  if (assets_dir) server->set_mount_point("/", *assets_dir);
  return server;
}

}  // namespace ordifind
