#include "fuzzywin/service.hpp"

#include <charconv>
#include <cmath>
#include <cstdlib>
#include <optional>

#include <fmt/format.h>
#include <httplib.h>

#include "fuzzywin/io.hpp"
#include "fuzzywin/json.hpp"

namespace fuzzywin::service {
namespace {

using io::Json;

// Thrown by request validation; carries everything a problem document needs.
struct Problem {
  int status;
  std::string error_code;
  std::string message;
  std::string field;
};

Response json_response(int status, const Json& body) { return {status, body.dump() + "\n"}; }

Response problem_response(const Problem& p) {
  Json body;
  body["schema_version"] = io::kSchemaVersion;
  body["error_code"] = p.error_code;
  body["message"] = p.message;
  body["field"] = p.field;
  return json_response(p.status, body);
}

Problem from_error(const Error& e, int status = 400) {
  return {status, std::string(to_string(e.code())), e.what(), e.field()};
}

Json parse_body(const std::string& body) {
  Json doc = Json::parse(body, nullptr, false);
  if (doc.is_discarded()) throw Problem{400, "malformed_json", "request body is not valid JSON", ""};
  if (!doc.is_object()) throw Problem{400, "malformed_json", "request body must be a JSON object", ""};
  return doc;
}

double number_field(const Json& doc, const char* name) {
  const auto it = doc.find(name);
  if (it == doc.end() || it->is_null()) {
    throw Problem{400, "missing_field", fmt::format("field '{}' is required", name), name};
  }
  if (!it->is_number()) {
    throw Problem{400, "invalid_input", fmt::format("field '{}' must be a number", name), name};
  }
  const double v = it->get<double>();
  if (!std::isfinite(v)) {
    throw Problem{400, "invalid_input", fmt::format("field '{}' must be finite", name), name};
  }
  return v;
}

std::optional<double> optional_number(const Json& doc, const char* name) {
  const auto it = doc.find(name);
  if (it == doc.end() || it->is_null()) return std::nullopt;
  return number_field(doc, name);
}

std::string string_field(const Json& doc, const char* name) {
  const auto it = doc.find(name);
  if (it == doc.end() || !it->is_string()) {
    throw Problem{400, "missing_field", fmt::format("field '{}' must be a string", name), name};
  }
  return it->get<std::string>();
}

NegotiationFrame frame_from(double lower, double upper) {
  try {
    return NegotiationFrame(lower, upper);
  } catch (const Error& e) {
    throw Problem{400, "degenerate_frame", e.what(), "upper"};
  }
}

Json versioned(Json body) {
  Json out;
  out["schema_version"] = io::kSchemaVersion;
  for (auto& [key, value] : body.items()) out[key] = value;
  return out;
}

Response handle_evaluate(const Request& req) {
  const Json doc = parse_body(req.body);
  const double lower = number_field(doc, "lower");
  const double upper = number_field(doc, "upper");
  const double value = number_field(doc, "value");
  const auto frame = frame_from(lower, upper);
  Json body = io::to_json(evaluate(frame, value));
  body["lower"] = lower;
  body["upper"] = upper;
  return json_response(200, versioned(std::move(body)));
}

Response handle_inverse(const Request& req) {
  const Json doc = parse_body(req.body);
  const auto frame = frame_from(number_field(doc, "lower"), number_field(doc, "upper"));
  const std::string party = string_field(doc, "party");
  const double raw_target = number_field(doc, "target");
  if (!(raw_target >= 0.0 && raw_target <= 1.0)) {
    throw Problem{400, "target_out_of_range",
                  fmt::format("target must lie in [0, 1], got {}", raw_target), "target"};
  }
  const WinShare target(raw_target);
  double price = 0;
  if (party == "increasing") {
    price = price_for_increasing(frame, target);
  } else if (party == "decreasing") {
    price = price_for_decreasing(frame, target);
  } else {
    throw Problem{400, "invalid_input", "party must be 'increasing' or 'decreasing'", "party"};
  }
  Json body;
  body["party"] = party;
  body["target"] = raw_target;
  body["price"] = price;
  return json_response(200, versioned(std::move(body)));
}

DerivationRule rule_from(const Json& doc) {
  DerivationRule rule;
  const auto it = doc.find("rule");
  if (it == doc.end() || it->is_null()) return rule;
  if (!it->is_object()) throw Problem{400, "invalid_input", "rule must be an object", "rule"};
  if (auto cost = optional_number(*it, "cost")) rule.cost = Constant{*cost};
  if (auto offset = optional_number(*it, "offset")) rule.settled = OffsetFromReference{*offset};
  if (const auto flag = it->find("reference_is_upper"); flag != it->end()) {
    if (!flag->is_boolean()) {
      throw Problem{400, "invalid_input", "reference_is_upper must be a boolean", "rule"};
    }
    rule.reference_is_upper = flag->get<bool>();
  }
  return rule;
}

// Reads the records array; malformed entries become inline errors, not a failed request.
std::vector<DealRecord> records_from(const Json& doc, std::vector<RecordError>& errors) {
  std::vector<DealRecord> records;
  if (const auto csv = doc.find("csv"); csv != doc.end()) {
    if (!csv->is_string()) throw Problem{400, "invalid_input", "csv must be a string", "csv"};
    try {
      return io::parse_deal_csv(csv->get<std::string>()).records;
    } catch (const Error& e) {
      throw Problem{400, "parse_error", e.what(), "csv"};
    }
  }
  const auto it = doc.find("records");
  if (it == doc.end() || !it->is_array()) {
    throw Problem{400, "missing_field", "field 'records' must be an array", "records"};
  }
  std::size_t index = 0;
  for (const auto& entry : *it) {
    std::string label = fmt::format("#{}", index++);
    try {
      if (!entry.is_object()) throw Problem{400, "invalid_input", "record must be an object", "records"};
      if (const auto l = entry.find("label"); l != entry.end() && l->is_string()) label = l->get<std::string>();
      DealRecord record{label, optional_number(entry, "cost_price"), optional_number(entry, "reference_price"),
                        optional_number(entry, "settled_price")};
      records.push_back(std::move(record));
    } catch (const Problem& p) {
      errors.push_back({label, ErrorCode::record_error, p.message});
    }
  }
  return records;
}

Response handle_ledger(const Request& req) {
  const Json doc = parse_body(req.body);
  const DerivationRule rule = rule_from(doc);
  std::vector<RecordError> errors;
  const auto records = records_from(doc, errors);
  if (records.empty() && errors.empty()) {
    throw Problem{400, "empty_ledger", "ledger has no records", "records"};
  }

  LedgerRun run = run_ledger(rule, records);
  errors.insert(errors.end(), run.errors.begin(), run.errors.end());

  Json error_list = Json::array();
  for (const auto& e : errors) error_list.push_back(io::to_json(e));
  if (run.attributed.empty()) {
    Json body;
    body["schema_version"] = io::kSchemaVersion;
    body["error_code"] = "all_records_invalid";
    body["message"] = "no record could be evaluated";
    body["field"] = "records";
    body["errors"] = std::move(error_list);
    return json_response(422, body);
  }

  Json attributed = Json::array();
  for (const auto& r : run.attributed) attributed.push_back(io::to_json(r));
  Json body;
  body["attributed"] = std::move(attributed);
  body["errors"] = std::move(error_list);
  body["summary"] = io::to_json(summarize(run.attributed));
  return json_response(200, versioned(std::move(body)));
}

double query_number(const Request& req, const char* name, std::optional<double> fallback = std::nullopt) {
  const auto it = req.query.find(name);
  if (it == req.query.end() || it->second.empty()) {
    if (fallback) return *fallback;
    throw Problem{400, "missing_field", fmt::format("query parameter '{}' is required", name), name};
  }
  const std::string& s = it->second;
  double value = 0;
  const auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || end != s.data() + s.size() || !std::isfinite(value)) {
    throw Problem{400, "invalid_input", fmt::format("query parameter '{}' must be a finite number", name), name};
  }
  return value;
}

Response handle_curve(const Request& req) {
  const double lower = query_number(req, "lower");
  const double upper = query_number(req, "upper");
  const auto frame = frame_from(lower, upper);
  const double start = query_number(req, "start", lower);
  const double end = query_number(req, "end", upper);
  const double samples = query_number(req, "samples");
  if (samples != std::floor(samples) || samples < 2 || samples > 1e6) {
    throw Problem{400, "invalid_range", "samples must be an integer in [2, 1000000]", "samples"};
  }

  const auto points = sample_curves(frame, start, end, static_cast<std::size_t>(samples));
  Json list = Json::array();
  for (const auto& p : points) {
    Json j;
    j["p"] = p.value;
    j["swp_raw"] = p.increasing_share.value();
    j["bwp_raw"] = p.decreasing_share.value();
    j["swp_percent"] = p.increasing_share.percent();
    j["bwp_percent"] = p.decreasing_share.percent();
    list.push_back(std::move(j));
  }
  Json body;
  body["lower"] = lower;
  body["upper"] = upper;
  body["points"] = std::move(list);
  return json_response(200, versioned(std::move(body)));
}

}  // namespace

Response handle(const Request& req) {
  using Handler = Response (*)(const Request&);
  struct Route {
    const char* method;
    const char* path;
    Handler handler;
  };
  static constexpr Route routes[] = {
      {"GET", "/v1/health", [](const Request&) { return Response{200, "{\"status\":\"ok\"}\n"}; }},
      {"POST", "/v1/evaluate", handle_evaluate},
      {"POST", "/v1/inverse", handle_inverse},
      {"POST", "/v1/ledger", handle_ledger},
      {"GET", "/v1/curve", handle_curve},
  };

  bool path_known = false;
  for (const auto& route : routes) {
    if (req.path != route.path) continue;
    path_known = true;
    if (req.method != route.method) continue;
    try {
      return route.handler(req);
    } catch (const Problem& p) {
      return problem_response(p);
    } catch (const Error& e) {
      return problem_response(from_error(e));
    }
  }
  if (path_known) {
    return problem_response({405, "method_not_allowed", fmt::format("{} not allowed on {}", req.method, req.path), ""});
  }
  return problem_response({404, "not_found", fmt::format("no endpoint at {}", req.path), ""});
}

ServerConfig config_from_env() {
  ServerConfig config;
  if (const char* host = std::getenv("FUZZYWIN_HOST"); host && *host) config.host = host;
  if (const char* port = std::getenv("FUZZYWIN_PORT"); port && *port) {
    unsigned value = 0;
    const std::string_view s(port);
    const auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec == std::errc{} && end == s.data() + s.size() && value <= 65535) {
      config.port = static_cast<std::uint16_t>(value);
    }
  }
  return config;
}

struct HttpServer::Impl {
  httplib::Server server;
};

HttpServer::HttpServer() : impl_(std::make_unique<Impl>()) {
  auto bridge = [](const httplib::Request& in, httplib::Response& out) {
    Request req{in.method, in.path, {}, in.body};
    for (const auto& [key, value] : in.params) req.query.emplace(key, value);
    const Response res = handle(req);
    out.status = res.status;
    out.set_header("Access-Control-Allow-Origin", "*");
    out.set_content(res.body, res.content_type);
  };
  impl_->server.Get(".*", bridge);
  impl_->server.Post(".*", bridge);
  impl_->server.Put(".*", bridge);
  impl_->server.Delete(".*", bridge);
  impl_->server.Options(".*", [](const httplib::Request&, httplib::Response& out) {
    out.status = 204;
    out.set_header("Access-Control-Allow-Origin", "*");
    out.set_header("Access-Control-Allow-Methods", "GET, POST, OPTIONS");
    out.set_header("Access-Control-Allow-Headers", "Content-Type");
  });
}

HttpServer::~HttpServer() = default;

int HttpServer::bind(const std::string& host, int port) {
  if (port == 0) return impl_->server.bind_to_any_port(host);
  return impl_->server.bind_to_port(host, port) ? port : -1;
}

bool HttpServer::listen() { return impl_->server.listen_after_bind(); }

void HttpServer::stop() { impl_->server.stop(); }

}  // namespace fuzzywin::service
