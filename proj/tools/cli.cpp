#include "cli.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "fuzzywin/io.hpp"
#include "fuzzywin/json.hpp"
#include "fuzzywin/service.hpp"

namespace fuzzywin::cli {
namespace {

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct FrameOptions {
  std::optional<double> lower;
  std::optional<double> upper;
  std::string preset;
  std::string increasing_label;
  std::string decreasing_label;

  void attach(CLI::App& app) {
    app.add_option("--lower", lower, "Lower bound of the frame (cost price)");
    app.add_option("--upper", upper, "Upper bound of the frame (wanted price)");
    app.add_option("--preset", preset, "Named frame")->check(CLI::IsMember({"chess"}));
    app.add_option("--increasing-label", increasing_label, "Name of the party whose share grows");
    app.add_option("--decreasing-label", decreasing_label, "Name of the party whose share shrinks");
  }

  NegotiationFrame build() const {
    NegotiationFrame frame = [&] {
      if (preset == "chess") {
        const auto chess = chess_preset();
        return NegotiationFrame(lower.value_or(chess.lower()), upper.value_or(chess.upper()),
                                chess.increasing_party(), chess.decreasing_party(), chess.axis_label());
      }
      if (!lower) throw Error(ErrorCode::invalid_input, "--lower is required", "lower");
      if (!upper) throw Error(ErrorCode::invalid_input, "--upper is required", "upper");
      return NegotiationFrame(*lower, *upper);
    }();
    if (increasing_label.empty() && decreasing_label.empty()) return frame;
    return NegotiationFrame(frame.lower(), frame.upper(),
                            increasing_label.empty() ? frame.increasing_party() : increasing_label,
                            decreasing_label.empty() ? frame.decreasing_party() : decreasing_label,
                            frame.axis_label());
  }
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError(fmt::format("cannot open '{}'", path));
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) throw IoError(fmt::format("error reading '{}'", path));
  return buffer.str();
}

void print_evaluation(std::ostream& out, const NegotiationFrame& frame, const EvaluationResult& e,
                      io::Format format) {
  using io::format_number;
  switch (format) {
    case io::Format::json: {
      io::Json body;
      body["schema_version"] = io::kSchemaVersion;
      body["lower"] = frame.lower();
      body["upper"] = frame.upper();
      const io::Json fields = io::to_json(e);
      for (const auto& [k, v] : fields.items()) body[k] = v;
      out << body.dump() << '\n';
      return;
    }
    case io::Format::csv:
      out << "value,swp_raw,swp_percent,bwp_raw,bwp_percent,zone\n"
          << fmt::format("{},{},{},{},{},{}\n", format_number(e.settled_value),
                         format_number(e.increasing_share.value()), e.increasing_share.percent(),
                         format_number(e.decreasing_share.value()), e.decreasing_share.percent(),
                         to_string(e.zone));
      return;
    case io::Format::text: break;
  }
  const std::size_t w = std::max(frame.increasing_party().size(), frame.decreasing_party().size());
  out << fmt::format("frame [{}, {}]  value {}  zone {}\n", format_number(frame.lower()),
                     format_number(frame.upper()), format_number(e.settled_value), to_string(e.zone));
  out << fmt::format("{:<{}}  {:>4}  {}\n", frame.increasing_party(), w,
                     fmt::format("{}%", e.increasing_share.percent()),
                     format_number(e.increasing_share.value()));
  out << fmt::format("{:<{}}  {:>4}  {}\n", frame.decreasing_party(), w,
                     fmt::format("{}%", e.decreasing_share.percent()),
                     format_number(e.decreasing_share.value()));
}

}  // namespace

double parse_target(const std::string& text) {
  std::string_view s(text);
  const bool percent = !s.empty() && s.back() == '%';
  if (percent) s.remove_suffix(1);
  double value = 0;
  const auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (s.empty() || ec != std::errc{} || end != s.data() + s.size() || !std::isfinite(value)) {
    throw Error(ErrorCode::target_out_of_range, fmt::format("cannot parse target '{}'", text), "target");
  }
  if (percent) value /= 100.0;
  if (!(value >= 0.0 && value <= 1.0)) {
    throw Error(ErrorCode::target_out_of_range,
                fmt::format("target '{}' is outside [0, 1] (use a % suffix for percents)", text),
                "target");
  }
  return value;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Fuzzy win-win negotiation calculator", "fuzzywin"};
  app.require_subcommand(1);

  std::string format_name = "text";
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", format_name, "Output format")->check(CLI::IsMember({"text", "csv", "json"}));
  };

  FrameOptions frame_opts;
  std::optional<double> value;
  std::string party = "increasing";
  std::string target_text;
  std::optional<double> start, end;
  std::size_t samples = 11;
  std::string input;
  std::optional<double> cost, offset;
  service::ServerConfig server = service::config_from_env();

  auto* eval = app.add_subcommand("eval", "Winning shares of both parties at a settled value");
  frame_opts.attach(*eval);
  eval->add_option("--value", value, "Settled value")->required();
  add_format(eval);

  auto* inverse = app.add_subcommand("inverse", "Settled value that yields a target share");
  frame_opts.attach(*inverse);
  inverse->add_option("--party", party, "Party whose share is targeted")
      ->check(CLI::IsMember({"increasing", "decreasing"}));
  inverse->add_option("--target", target_text, "Target share, fraction (0.4) or percent (40%)")->required();
  add_format(inverse);

  auto* zone = app.add_subcommand("zone", "Classify a settled value into lose-win / fuzzy win-win / win-lose");
  frame_opts.attach(*zone);
  zone->add_option("--value", value, "Settled value")->required();
  add_format(zone);

  auto* curve = app.add_subcommand("curve", "Sample both membership curves as point data");
  frame_opts.attach(*curve);
  curve->add_option("--start", start, "First sample (defaults to lower)");
  curve->add_option("--end", end, "Last sample (defaults to upper)");
  curve->add_option("--samples", samples, "Number of evenly spaced samples");
  add_format(curve);

  auto* ledger = app.add_subcommand("ledger", "Evaluate and summarize a CSV of deal records");
  ledger->add_option("--input", input, "Deal CSV")->required();
  ledger->add_option("--cost", cost, "Constant cost price for every record (else cost_price column)");
  ledger->add_option("--offset", offset, "Settled = reference + offset (else settled_price column)");
  add_format(ledger);

  auto* serve = app.add_subcommand("serve", "Run the JSON HTTP service");
  serve->add_option("--host", server.host, "Bind address (env FUZZYWIN_HOST)");
  serve->add_option("--port", server.port, "Port (env FUZZYWIN_PORT)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitValidation;
  }

  try {
    const io::Format format = io::parse_format(format_name);
    if (*eval) {
      const auto frame = frame_opts.build();
      print_evaluation(out, frame, evaluate(frame, *value), format);
    } else if (*inverse) {
      const auto frame = frame_opts.build();
      const WinShare target(parse_target(target_text));
      const double price = party == "increasing" ? price_for_increasing(frame, target)
                                                 : price_for_decreasing(frame, target);
      if (format == io::Format::json) {
        io::Json body;
        body["schema_version"] = io::kSchemaVersion;
        body["party"] = party;
        body["target"] = target.value();
        body["price"] = price;
        out << body.dump() << '\n';
      } else if (format == io::Format::csv) {
        out << "party,target,price\n" << fmt::format("{},{},{}\n", party, io::format_number(target.value()), io::format_number(price));
      } else {
        const auto& name = party == "increasing" ? frame.increasing_party() : frame.decreasing_party();
        out << fmt::format("{} at {}% -> price {}\n", name, io::format_number(100.0 * target.value()),
                           io::format_number(price));
      }
    } else if (*zone) {
      const auto frame = frame_opts.build();
      const Zone z = classify_zone(frame, *value);
      if (format == io::Format::json) {
        io::Json body;
        body["schema_version"] = io::kSchemaVersion;
        body["value"] = *value;
        body["zone"] = to_string(z);
        out << body.dump() << '\n';
      } else {
        out << to_string(z) << '\n';
      }
    } else if (*curve) {
      const auto frame = frame_opts.build();
      const auto points = sample_curves(frame, start.value_or(frame.lower()), end.value_or(frame.upper()), samples);
      if (format == io::Format::json) {
        io::Json list = io::Json::array();
        for (const auto& p : points) {
          list.push_back({{"p", p.value}, {"swp_raw", p.increasing_share.value()}, {"bwp_raw", p.decreasing_share.value()}});
        }
        io::Json body;
        body["schema_version"] = io::kSchemaVersion;
        body["points"] = std::move(list);
        out << body.dump() << '\n';
      } else {
        const char sep = format == io::Format::csv ? ',' : '\t';
        out << "p" << sep << "swp_raw" << sep << "bwp_raw\n";
        for (const auto& p : points) {
          out << io::format_number(p.value) << sep << io::format_number(p.increasing_share.value()) << sep
              << io::format_number(p.decreasing_share.value()) << '\n';
        }
      }
    } else if (*ledger) {
      const auto parsed = io::parse_deal_csv(read_file(input));
      for (const auto& w : parsed.warnings) err << "warning: " << w << '\n';
      DerivationRule rule;
      if (cost) rule.cost = Constant{*cost};
      if (offset) rule.settled = OffsetFromReference{*offset};
      const auto run = run_ledger(rule, parsed.records);
      for (const auto& e : run.errors) err << "error: " << e.message << '\n';
      if (run.attributed.empty()) {
        err << "error: no record could be evaluated\n";
        return kExitValidation;
      }
      out << io::render_output(run.attributed, summarize(run.attributed), format);
    } else if (*serve) {
      service::HttpServer http;
      if (http.bind(server.host, server.port) < 0) {
        err << fmt::format("error: cannot bind {}:{}\n", server.host, server.port);
        return kExitIo;
      }
      err << fmt::format("listening on http://{}:{}\n", server.host, server.port);
      return http.listen() ? kExitOk : kExitIo;
    }
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitValidation;
  }
  return kExitOk;
}

}  // namespace fuzzywin::cli
