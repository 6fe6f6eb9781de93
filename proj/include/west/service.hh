#pragma once

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <string_view>

namespace httplib {
class Server;
}

namespace west {

struct ServiceConfig {
  std::string host = "127.0.0.1";
  int port = 8080;
  std::chrono::milliseconds time_budget{5000};
  std::uint64_t expansion_budget = std::uint64_t{1} << 24;
  std::size_t max_alternatives = std::size_t{1} << 20;
  std::string ui_dir; // empty: no static files

  /* Reads WEST_BIND (host:port), WEST_TIME_BUDGET_MS,
   * WEST_EXPANSION_BUDGET, WEST_MAX_ALTERNATIVES and WEST_UI_DIR; unset
   * variables keep their defaults. Throws std::invalid_argument on
   * malformed values. */
  static ServiceConfig
  from_env(const std::function<const char *(const char *)> &getenv);
  static ServiceConfig from_env();
};

/* A complete HTTP answer: status code and JSON body. Non-2xx bodies are
 * {"code", "message"[, "position": {"line", "column"}]}. */
struct ApiResponse {
  int status = 200;
  std::string body;
};

ApiResponse handle_regex(std::string_view body, const ServiceConfig &config);
ApiResponse handle_match(std::string_view body, const ServiceConfig &config);
ApiResponse handle_equiv(std::string_view body, const ServiceConfig &config);
ApiResponse handle_random(const std::multimap<std::string, std::string> &query,
                          const ServiceConfig &config);

/* Registers the /api routes, JSON error pages and, when configured, the
 * static UI mount. Throws std::invalid_argument if ui_dir is not a
 * directory. */
void install_routes(httplib::Server &server, const ServiceConfig &config);

} // namespace west
