#include <iostream>
#include <map>

#include <CLI11.hpp>

#include "atlas/cli.hpp"

int main(int argc, char** argv) {
  using atlas::cli::Command;
  using atlas::cli::Format;

  CLI::App app{"Admissible sets, EKOR strata and Deligne-Lusztig data for GSp(2g)"};
  app.require_subcommand(1);

  const std::map<std::string, Format> formats{
      {"text", Format::text}, {"json", Format::json}, {"csv", Format::csv}, {"dot", Format::dot}};
  const std::vector<std::pair<std::string, std::string>> commands{
      {"adm", "enumerate the admissible set Adm(mu)"},
      {"classify", "EKOR strata at the given level, with basicness"},
      {"dl-data", "Deligne-Lusztig data of the basic strata"},
      {"compare", "closed-form comparison tables (gortz-yu and hoeve)"},
      {"check", "brute-force oracle suites (g <= 3)"}};

  atlas::cli::RunConfig config;
  std::string out_path;
  for (const auto& [name, help] : commands) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("--g", config.g, "genus")->required();
    sub->add_option("--level", config.level, "iwahori | hyperspecial | comma-separated nodes")
        ->capture_default_str();
    sub->add_option("--format", config.format, "text | json | csv | dot")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
    sub->add_option("--out", out_path, "write the payload to this file");
    sub->callback([&config, name = name] { config.command = *atlas::cli::parse_command(name); });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : atlas::cli::kExitInvalid;
  }
  if (!out_path.empty())
    config.out = out_path;
  return atlas::cli::run(config, std::cout, std::cerr);
}
