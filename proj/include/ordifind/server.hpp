#pragma once

#include <memory>
#include <optional>
#include <string>

namespace httplib {
class Server;
}

namespace ordifind {

/// Read-only HTTP front for a factorization document:
///   GET /factorization.json   the document bytes
///   GET /                     index.html from assets_dir, or a built-in page
/// Other paths are served from assets_dir when given.
std::unique_ptr<httplib::Server> make_server(std::string document_json,
                                             std::optional<std::string> assets_dir = std::nullopt);

}  // namespace ordifind
