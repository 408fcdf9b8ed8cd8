#include "cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include <CLI11.hpp>

#include "azvd/compiler.hpp"
#include "azvd/layout.hpp"
#include "azvd/svg.hpp"
#include "service.hpp"

namespace azvd::cli {

std::filesystem::path catalog_dir(const std::string& flag, const std::filesystem::path& fallback) {
  if (!flag.empty()) return flag;
  if (const char* env = std::getenv("AZVD_CATALOG"); env && *env) return env;
  return fallback;
}

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, "cannot read '" + path + "'", path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Writes to `path`, or to `out` when the path is empty or "-".
void write_output(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f || !(f << text)) throw Error(ErrorCode::kIo, "cannot write '" + path + "'", path);
}

void report_error(const Error& e, std::ostream& err) {
  err << "error[" << to_string(e.code()) << "]";
  if (!e.location().empty()) err << " at " << e.location();
  err << ": " << e.what() << '\n';
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        const std::filesystem::path& default_catalog) {
  CLI::App app{"AZVD diagram compiler", "azvd"};
  app.require_subcommand(1);
  std::string catalog_flag;
  app.add_option("--catalog", catalog_flag,
                 "Directory holding registry.json, catalog.json and assets/ (env AZVD_CATALOG)");

  std::string input, output;
  std::vector<std::string> variant_specs;
  bool as_json = false;
  std::string host = "127.0.0.1";
  int port = 8080;

  auto* render = app.add_subcommand("render", "Render a diagram file to SVG");
  render->add_option("diagram", input, "Diagram JSON file")->required();
  render->add_option("-o,--output", output, "SVG file (default stdout)");

  auto* compile_cmd = app.add_subcommand("compile", "Print the AZee expression of a diagram");
  compile_cmd->add_option("diagram", input, "Diagram JSON file")->required();

  auto* synth = app.add_subcommand("synthesize", "Build a diagram from an AZee text file");
  synth->add_option("azee", input, "AZee text file")->required();
  synth->add_option("-o,--output", output, "Diagram JSON file (default stdout)");
  synth->add_option("--variant", variant_specs, "Layout choice as TEMPLATE=LAYOUT");

  auto* check = app.add_subcommand("check-catalog", "Validate the catalog against the registry");
  check->add_flag("--json", as_json, "Machine-readable report");

  auto* coverage = app.add_subcommand("coverage", "Round-trip every rule through the catalog");
  coverage->add_flag("--json", as_json, "Machine-readable report");

  auto* serve_cmd = app.add_subcommand("serve", "Run the HTTP API");
  serve_cmd->add_option("--host", host, "Address to bind");
  serve_cmd->add_option("--port", port, "Port to listen on")->check(CLI::Range(0, 65535));

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    if (app.get_subcommands().empty()) err << app.help();
    return kUsageError;
  }

  Workspace ws;
  try {
    ws = load_workspace(catalog_dir(catalog_flag, default_catalog));
  } catch (const Error& e) {
    report_error(e, err);
    return kUsageError;
  }

  try {
    if (render->parsed()) {
      const Diagram d = parse_diagram_text(read_file(input), ws.catalog);
      const Scene scene = build_scene(d, ws.catalog);
      for (const auto& w : scene.warnings) err << "warning: " << w << '\n';
      write_output(output, emit_svg(scene, ws.catalog), out);
      return kOk;
    }
    if (compile_cmd->parsed()) {
      const Diagram d = parse_diagram_text(read_file(input), ws.catalog);
      out << print_azee(compile(d, ws.catalog));
      return kOk;
    }
    if (synth->parsed()) {
      VariantPolicy policy;
      for (const auto& spec : variant_specs) {
        const auto eq = spec.find('=');
        if (eq == std::string::npos || eq == 0 || eq + 1 == spec.size()) {
          err << "error: --variant expects TEMPLATE=LAYOUT, got '" << spec << "'\n";
          return kUsageError;
        }
        policy.choices[spec.substr(0, eq)] = spec.substr(eq + 1);
      }
      const Expr e = parse_azee(read_file(input));
      write_output(output, dump_diagram(synthesize(e, ws.catalog, ws.registry, policy)), out);
      return kOk;
    }
    if (check->parsed()) {
      const ValidationReport report = validate_catalog(ws.catalog, ws.registry);
      out << (as_json ? to_json(report).dump(2) + "\n" : to_text(report));
      return report.ok() ? kOk : kValidationFailure;
    }
    if (coverage->parsed()) {
      const CoverageReport report = coverage_check(ws.registry, ws.catalog);
      out << (as_json ? report.to_json().dump(2) + "\n" : report.to_text());
      return report.ok() ? kOk : kValidationFailure;
    }
    if (serve_cmd->parsed()) {
      service::Service svc(std::move(ws));
      service::HttpServer server(svc);
      const int bound = server.bind(host, port);
      if (bound < 0) {
        err << "error: cannot bind " << host << ':' << port << '\n';
        return kUsageError;
      }
      err << "listening on http://" << host << ':' << bound << '\n';
      return server.run() ? kOk : kUsageError;
    }
  } catch (const Error& e) {
    report_error(e, err);
    return e.code() == ErrorCode::kIo ? kUsageError : kValidationFailure;
  }
  return kUsageError;
}

}  // namespace azvd::cli
