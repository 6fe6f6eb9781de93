#include "west/service.hh"

#include "west/algorithm.hh"
#include "west/equivalence.hh"
#include "west/error.hh"
#include "west/formula_io.hh"
#include "west/limits.hh"

#include <httplib.h>
#include <json.hpp>

#include <charconv>
#include <cstdlib>
#include <optional>
#include <stdexcept>

namespace west {

namespace {

using Json = nlohmann::ordered_json;

struct ApiError {
  int status;
  std::string code;
  std::string message;
  std::size_t line = 0;
  std::size_t column = 0;
};

ApiResponse error_response(const ApiError &e) {
  Json body;
  body["code"] = e.code;
  body["message"] = e.message;
  if (e.line > 0) {
    body["position"] = {{"line", e.line}, {"column", e.column}};
  }
  return {e.status, body.dump()};
}

ApiResponse ok_response(const Json &body) { return {200, body.dump()}; }

ApiError bad_request(const std::string &message) {
  return {400, "parse_error", message};
}

Json parse_body(std::string_view text) {
  Json body;
  try {
    body = Json::parse(text);
  } catch (const Json::parse_error &e) {
    throw bad_request(std::string("request body is not JSON: ") + e.what());
  }
  if (!body.is_object()) {
    throw bad_request("request body must be a JSON object");
  }
  return body;
}

std::string string_field(const Json &body, const char *name) {
  const auto it = body.find(name);
  if (it == body.end() || !it->is_string()) {
    throw bad_request(std::string("field '") + name + "' must be a string");
  }
  return it->get<std::string>();
}

bool bool_field(const Json &body, const char *name) {
  const auto it = body.find(name);
  if (it == body.end() || it->is_null()) {
    return false;
  }
  if (!it->is_boolean()) {
    throw bad_request(std::string("field '") + name + "' must be a boolean");
  }
  return it->get<bool>();
}

std::optional<std::uint64_t> count_field(const Json &body, const char *name) {
  const auto it = body.find(name);
  if (it == body.end() || it->is_null()) {
    return std::nullopt;
  }
  if (!it->is_number_unsigned() || it->get<std::uint64_t>() == 0) {
    throw bad_request(std::string("field '") + name +
                      "' must be a positive integer");
  }
  return it->get<std::uint64_t>();
}

Formula formula_field(const Json &body, const char *name) {
  const std::string text = string_field(body, name);
  try {
    return parse_formula(text);
  } catch (const IntervalError &e) {
    throw ApiError{400, "interval_error",
                   std::string(name) + ": " + e.what(), e.line(), e.column()};
  } catch (const ParseError &e) {
    throw ApiError{400, "parse_error", std::string(name) + ": " + e.what(),
                   e.line(), e.column()};
  }
}

Limits request_limits(const ServiceConfig &config) {
  Limits limits = Limits::with_timeout(config.time_budget);
  limits.max_alternatives = config.max_alternatives;
  return limits;
}

/* Runs a handler body, mapping library exceptions onto ApiErrors. */
template <class Fn> ApiResponse guarded(Fn &&fn) {
  try {
    return fn();
  } catch (const ApiError &e) {
    return error_response(e);
  } catch (const IntervalError &e) {
    return error_response({400, "interval_error", e.what()});
  } catch (const ParseError &e) {
    return error_response({400, "parse_error", e.what(), e.line(), e.column()});
  } catch (const TimeoutError &e) {
    return error_response(
        {422, "budget_exceeded", std::string("time budget: ") + e.what()});
  } catch (const BudgetExceeded &e) {
    return error_response({422, "budget_exceeded", e.what()});
  } catch (const std::exception &e) {
    return error_response({500, "internal", e.what()});
  }
}

double elapsed_ms(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(
             std::chrono::steady_clock::now() - start)
      .count();
}

std::optional<std::uint64_t> parse_uint(std::string_view text) {
  std::uint64_t value = 0;
  const char *end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (text.empty() || ec != std::errc{} || ptr != end) {
    return std::nullopt;
  }
  return value;
}

std::uint64_t query_uint(const std::multimap<std::string, std::string> &query,
                         const std::string &name, std::uint64_t fallback,
                         std::uint64_t lo, std::uint64_t hi) {
  const auto it = query.find(name);
  if (it == query.end()) {
    return fallback;
  }
  const auto value = parse_uint(it->second);
  if (!value || *value < lo || *value > hi) {
    throw bad_request("query parameter '" + name + "' must be an integer in [" +
                      std::to_string(lo) + ", " + std::to_string(hi) + "]");
  }
  return *value;
}

} // namespace

ServiceConfig ServiceConfig::from_env(
    const std::function<const char *(const char *)> &getenv) {
  ServiceConfig config;
  auto number = [&](const char *name) -> std::optional<std::uint64_t> {
    const char *raw = getenv(name);
    if (raw == nullptr || *raw == '\0') {
      return std::nullopt;
    }
    const auto value = parse_uint(raw);
    if (!value || *value == 0) {
      throw std::invalid_argument(std::string(name) +
                                  " must be a positive integer");
    }
    return value;
  };

  if (const char *bind = getenv("WEST_BIND"); bind != nullptr && *bind) {
    const std::string text = bind;
    const auto colon = text.rfind(':');
    const auto port = colon == std::string::npos
                          ? std::nullopt
                          : parse_uint(std::string_view(text).substr(colon + 1));
    if (!port || *port > 65535 || colon == 0) {
      throw std::invalid_argument("WEST_BIND must look like host:port");
    }
    config.host = text.substr(0, colon);
    config.port = static_cast<int>(*port);
  }
  if (const auto ms = number("WEST_TIME_BUDGET_MS")) {
    config.time_budget = std::chrono::milliseconds(*ms);
  }
  if (const auto budget = number("WEST_EXPANSION_BUDGET")) {
    config.expansion_budget = *budget;
  }
  if (const auto alts = number("WEST_MAX_ALTERNATIVES")) {
    config.max_alternatives = static_cast<std::size_t>(*alts);
  }
  if (const char *dir = getenv("WEST_UI_DIR"); dir != nullptr) {
    config.ui_dir = dir;
  }
  return config;
}

ServiceConfig ServiceConfig::from_env() {
  return from_env([](const char *name) { return std::getenv(name); });
}

ApiResponse handle_regex(std::string_view text, const ServiceConfig &config) {
  return guarded([&] {
    const Json body = parse_body(text);
    const Formula f = formula_field(body, "formula");
    const bool pad = bool_field(body, "pad");

    LimitScope scope(request_limits(config));
    const auto start = std::chrono::steady_clock::now();
    const WestRegex L = pad ? simp_pad_west_reg(f) : west_reg(f);
    const double ms = elapsed_ms(start);

    Json out;
    out["regex"] = regex_to_text(L);
    out["nvars"] = num_vars(f);
    out["complen"] = complen(f);
    out["alternatives"] = L.size();
    out["ms"] = ms;
    return ok_response(out);
  });
}

ApiResponse handle_match(std::string_view text, const ServiceConfig &config) {
  return guarded([&] {
    const Json body = parse_body(text);
    const Formula f = formula_field(body, "formula");
    const std::string trace_text = string_field(body, "trace");
    const bool pad = bool_field(body, "pad");

    Trace trace;
    try {
      trace = parse_trace(trace_text, num_vars(f));
    } catch (const ParseError &e) {
      throw ApiError{400, "parse_error", std::string("trace: ") + e.what(),
                     e.line(), e.column()};
    }

    LimitScope scope(request_limits(config));
    const WestRegex L = pad ? simp_pad_west_reg(f) : west_reg(f);
    const bool matched = match(trace, L);
    const bool satisfies = semantics(trace, f);
    const std::size_t len = complen(f);
    if (trace.size() >= len && matched != satisfies) {
      throw ApiError{500, "internal",
                     "regex verdict disagrees with the semantics on a trace "
                     "of length " +
                         std::to_string(trace.size())};
    }

    Json out;
    out["match"] = matched;
    out["satisfies"] = satisfies;
    out["complen"] = len;
    return ok_response(out);
  });
}

ApiResponse handle_equiv(std::string_view text, const ServiceConfig &config) {
  return guarded([&] {
    const Json body = parse_body(text);
    const Formula f1 = formula_field(body, "formula1");
    const Formula f2 = formula_field(body, "formula2");
    const auto requested = count_field(body, "budget");
    // a caller budget below the server's is the caller's own cutoff and is
    // answered with a "limit" verdict; hitting the server cap is a 422
    const bool caller_limited =
        requested.has_value() && *requested < config.expansion_budget;
    const std::uint64_t budget =
        caller_limited ? *requested : config.expansion_budget;

    LimitScope scope(request_limits(config));
    const EquivVerdict v = formula_equivalence(f1, f2, budget);

    Json out;
    switch (v.outcome) {
    case EquivVerdict::Outcome::Equivalent:
      out["verdict"] = "equivalent";
      break;
    case EquivVerdict::Outcome::Inequivalent:
      out["verdict"] = "inequivalent";
      out["witness"] = trace_regex_to_text(v.witness);
      out["accepted_by"] = v.witness_in_first ? "formula1" : "formula2";
      break;
    case EquivVerdict::Outcome::LimitExceeded:
      if (!caller_limited) {
        throw ApiError{422, "budget_exceeded", v.limit};
      }
      out["verdict"] = "limit";
      out["limit"] = v.limit;
      break;
    }
    return ok_response(out);
  });
}

ApiResponse handle_random(const std::multimap<std::string, std::string> &query,
                          const ServiceConfig &) {
  return guarded([&] {
    FormulaGenParams params;
    params.n = query_uint(query, "nvars", 1, 1, 64);
    params.d = query_uint(query, "depth", 0, 0, 10);
    params.b = query_uint(query, "bound", 0, 0, 1000);
    params.seed = query_uint(query, "seed", 0, 0, UINT64_MAX);
    params.count = query_uint(query, "count", 1, 1, 1000);
    params.nested_until_release = query_uint(query, "nested_ur", 0, 0, 1) == 1;

    Json out;
    out["formulas"] = Json::array();
    for (const Formula &f : random_formulas(params)) {
      out["formulas"].push_back(pretty(f));
    }
    return ok_response(out);
  });
}

void install_routes(httplib::Server &server, const ServiceConfig &config) {
  auto reply = [](httplib::Response &res, const ApiResponse &api) {
    res.status = api.status;
    res.set_content(api.body, "application/json");
  };
  auto post = [&](const char *path, ApiResponse (*handler)(
                                        std::string_view,
                                        const ServiceConfig &)) {
    server.Post(path, [config, handler, reply](const httplib::Request &req,
                                               httplib::Response &res) {
      reply(res, handler(req.body, config));
    });
  };
  post("/api/regex", handle_regex);
  post("/api/match", handle_match);
  post("/api/equiv", handle_equiv);
  server.Get("/api/random", [config, reply](const httplib::Request &req,
                                            httplib::Response &res) {
    reply(res, handle_random(req.params, config));
  });

  server.set_exception_handler([reply](const httplib::Request &,
                                       httplib::Response &res,
                                       std::exception_ptr) {
    reply(res, error_response({500, "internal", "unhandled exception"}));
  });
  server.set_error_handler([reply](const httplib::Request &req,
                                   httplib::Response &res) {
    if (!res.body.empty()) {
      return httplib::Server::HandlerResponse::Unhandled;
    }
    reply(res, error_response({res.status, "parse_error",
                               "no endpoint for " + req.method + " " +
                                   req.path}));
    return httplib::Server::HandlerResponse::Handled;
  });

  if (!config.ui_dir.empty() &&
      !server.set_mount_point("/", config.ui_dir)) {
    throw std::invalid_argument("WEST_UI_DIR is not a directory: " +
                                config.ui_dir);
  }
}

} // namespace west
