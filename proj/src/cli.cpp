#include "archslice/cli.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "archslice/aifg.hpp"
#include "archslice/flow.hpp"
#include "archslice/parser.hpp"
#include "archslice/spec_json.hpp"

namespace archslice::cli {

std::optional<std::string> RealFileSystem::read(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) return std::nullopt;
  return buf.str();
}

bool RealFileSystem::write(const std::filesystem::path& path, std::string_view data) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) return false;
  out.write(data.data(), static_cast<std::streamsize>(data.size()));
  return static_cast<bool>(out);
}

namespace {

std::string render_parse(const Specification& spec, Format format) {
  if (format == Format::Text) return render(spec);
  std::vector<Diagnostic> warnings;
  build_aifg(spec, &warnings);
  nlohmann::json doc;
  doc["specification"] = to_json_value(spec);
  doc["warnings"] = to_json_value(warnings);
  return doc.dump() + "\n";
}

std::string render_graph(const Specification& spec, Format format) {
  Aifg graph = build_aifg(spec);
  return format == Format::Dot ? to_dot(graph) : to_json(graph) + "\n";
}

std::string render_slice(const Specification& spec, const CliConfig& config) {
  SlicingCriterion criterion{config.instance, {}};
  criterion.elements.insert(config.elements.begin(), config.elements.end());
  if (criterion.elements.empty()) {
    if (const auto* t = spec.component_of(config.instance))
      for (const auto& p : t->ports) criterion.elements.insert(p.name);
    else if (const auto* t = spec.connector_of(config.instance))
      for (const auto& r : t->roles) criterion.elements.insert(r.name);
  }
  ReducedSpecification reduced = slice(spec, criterion, config.direction);
  if (config.format == Format::Text) return render(reduced.spec);
  auto doc = nlohmann::json::parse(removals_to_json(reduced));
  doc["specification"] = render(reduced.spec);
  return doc.dump() + "\n";
}

}  // namespace

int run(const CliConfig& config, FileSystem& fs, std::ostream& out,
        std::ostream& err) {
  const std::string file = config.input_path.string();
  auto text = fs.read(config.input_path);
  if (!text) {
    err << file << ": error: cannot read file\n";
    return kExitUsage;
  }

  std::string result;
  try {
    Specification spec = parse(*text);
    if (auto diags = validate(spec); !diags.empty()) {
      for (const auto& d : diags) err << file << ":" << d.to_string() << "\n";
      return kExitInputError;
    }
    switch (config.command) {
      case Command::Parse: result = render_parse(spec, config.format); break;
      case Command::Graph: result = render_graph(spec, config.format); break;
      case Command::Slice: result = render_slice(spec, config); break;
    }
  } catch (const ParseError& e) {
    err << file << ":" << e.span().line << ":" << e.span().column
        << ": error: expected " << e.expected() << ", found " << e.found() << "\n";
    return kExitInputError;
  } catch (const CriterionError& e) {
    err << file << ": error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const BuildError& e) {
    err << file << ": error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const AnalysisError& e) {
    err << file << ": error: " << e.what() << "\n";
    return kExitInputError;
  }

  if (config.output_path) {
    if (!fs.write(*config.output_path, result)) {
      err << config.output_path->string() << ": error: cannot write file\n";
      return kExitUsage;
    }
  } else {
    out << result;
  }
  return kExitOk;
}

int main(const std::vector<std::string>& args, FileSystem& fs, std::ostream& out,
         std::ostream& err) {
  CLI::App app{"Architectural slicer for WRIGHT-style specifications", "archslice"};
  app.require_subcommand(1);

  CliConfig config;
  std::string input;
  std::string output;
  std::string format;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("file", input, "Input .wrt file")->required();
    sub->add_option("-o,--output", output, "Write the result to this file");
  };

  auto* parse_cmd = app.add_subcommand("parse", "Validate and print canonical text or JSON");
  add_common(parse_cmd);
  parse_cmd->add_option("--format", format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));

  auto* graph_cmd = app.add_subcommand("graph", "Export the information flow graph");
  add_common(graph_cmd);
  graph_cmd->add_option("--format", format, "dot or json")
      ->check(CLI::IsMember({"dot", "json"}));

  auto* slice_cmd = app.add_subcommand("slice", "Compute an architectural slice");
  add_common(slice_cmd);
  slice_cmd->add_option("--format", format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));
  bool backward = false;
  bool forward = false;
  auto* bflag = slice_cmd->add_flag("--backward", backward, "Backward slice");
  auto* fflag = slice_cmd->add_flag("--forward", forward, "Forward slice");
  bflag->excludes(fflag);
  slice_cmd->add_option("--instance", config.instance, "Criterion instance")
      ->required();
  slice_cmd
      ->add_option("--elements", config.elements,
                   "Comma-separated ports or roles (default: all)")
      ->delimiter(',');

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
    if (slice_cmd->parsed() && !backward && !forward)
      throw CLI::RequiredError("--backward or --forward");
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  config.input_path = input;
  if (!output.empty()) config.output_path = output;
  if (parse_cmd->parsed()) {
    config.command = Command::Parse;
    config.format = format == "json" ? Format::Json : Format::Text;
  } else if (graph_cmd->parsed()) {
    config.command = Command::Graph;
    config.format = format == "json" ? Format::Json : Format::Dot;
  } else {
    config.command = Command::Slice;
    config.format = format == "json" ? Format::Json : Format::Text;
    config.direction = forward ? SliceDirection::Forward : SliceDirection::Backward;
  }
  return run(config, fs, out, err);
}

}  // namespace archslice::cli
