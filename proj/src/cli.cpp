#include "atlas/cli.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "atlas/oracles.hpp"
#include "atlas/serialize.hpp"
#include "atlas/siegel.hpp"

namespace atlas::cli {

std::optional<Command> parse_command(const std::string& name) {
  if (name == "adm")
    return Command::adm;
  if (name == "classify")
    return Command::classify;
  if (name == "dl-data")
    return Command::dl_data;
  if (name == "compare")
    return Command::compare;
  if (name == "check")
    return Command::check;
  return std::nullopt;
}

std::optional<Format> parse_format(const std::string& name) {
  if (name == "text")
    return Format::text;
  if (name == "json")
    return Format::json;
  if (name == "csv")
    return Format::csv;
  if (name == "dot")
    return Format::dot;
  return std::nullopt;
}

namespace {

struct ConfigError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// A command's payload plus its summary line and exit status.
struct Output {
  std::string payload;
  std::string summary;
  int status = kExitOk;
};

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

ParahoricLabel parse_level(const SiegelContext& ctx, const std::string& level) {
  if (level == "iwahori")
    return ctx.iwahori();
  if (level == "hyperspecial")
    return ctx.hyperspecial();
  NodeSet k;
  std::stringstream in(level);
  std::string item;
  while (std::getline(in, item, ',')) {
    std::size_t used = 0;
    int node = -1;
    try {
      node = std::stoi(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != item.size() || node < 0 || node > ctx.g())
      throw ConfigError("invalid --level entry '" + item + "'");
    k.insert(node);
  }
  try {
    return ParahoricLabel(ctx.group(), k);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
}

void require_format(Format format, std::initializer_list<Format> allowed, const char* command) {
  for (Format f : allowed)
    if (f == format)
      return;
  throw ConfigError(std::string("format not available for ") + command);
}

Output cmd_adm(const SiegelContext& ctx, Format format) {
  const AffineWeylGroup& group = ctx.group();
  const AdmissibleSet& adm = ctx.adm();
  Output o;
  switch (format) {
    case Format::json: o.payload = dump(admissible_json(group, adm)); break;
    case Format::csv: o.payload = admissible_csv(group, adm); break;
    case Format::dot: o.payload = admissible_dot(group, adm); break;
    case Format::text: o.payload = admissible_text(group, adm); break;
  }
  std::vector<int> by_length;
  for (const auto& x : adm.elements) {
    std::size_t len = static_cast<std::size_t>(group.length(x));
    if (by_length.size() <= len)
      by_length.resize(len + 1, 0);
    ++by_length[len];
  }
  o.summary = std::to_string(adm.size()) + " elements: ";
  for (std::size_t i = 0; i < by_length.size(); ++i)
    o.summary += (i ? "/" : "") + std::to_string(by_length[i]);
  o.summary += " by length 0.." + std::to_string(by_length.size() - 1);
  return o;
}

Output cmd_classify(const SiegelContext& ctx, const ParahoricLabel& k, Format format) {
  require_format(format, {Format::json, Format::csv, Format::text}, "classify");
  const AffineWeylGroup& group = ctx.group();
  auto records = stratum_report(group, ctx.adm(), k);
  Output o;
  if (format == Format::json)
    o.payload = dump(strata_json(group, records));
  else if (format == Format::csv)
    o.payload = strata_csv(group, records, ctx.tau());
  else
    o.payload = strata_text(group, records, ctx.tau());
  int basic = 0;
  for (const auto& r : records)
    basic += r.is_basic;
  o.summary = std::to_string(records.size()) + " strata, " + std::to_string(basic) + " basic";
  return o;
}

Output cmd_dl_data(const SiegelContext& ctx, const ParahoricLabel& k, Format format) {
  require_format(format, {Format::json, Format::csv, Format::text}, "dl-data");
  const AffineWeylGroup& group = ctx.group();
  std::vector<StratumRecord> basic;
  for (auto& r : stratum_report(group, ctx.adm(), k))
    if (r.dl)
      basic.push_back(std::move(r));
  Output o;
  if (format == Format::json) {
    Json arr = Json::array();
    for (const auto& r : basic)
      arr.push_back(Json{{"element", element_label(group, r.w, ctx.tau())},
                         {"word", r.word},
                         {"K", node_list(r.level)},
                         {"dl", dl_json(*r.dl)}});
    o.payload = dump(arr);
  } else if (format == Format::csv) {
    o.payload = strata_csv(group, basic, ctx.tau());
  } else {
    o.payload = strata_text(group, basic, ctx.tau());
  }
  o.summary = std::to_string(basic.size()) + " basic strata at K = " + k.nodes().to_string();
  return o;
}

Output cmd_compare(const SiegelContext& ctx, Format format) {
  require_format(format, {Format::json, Format::csv, Format::text}, "compare");
  const AffineWeylGroup& group = ctx.group();
  Output o;
  Json all = Json::object();
  for (CompareMode mode : {CompareMode::gortz_yu, CompareMode::hoeve}) {
    ComparisonTable table = compare_reports(ctx, mode);
    if (format == Format::json)
      all[to_string(mode)] = comparison_json(group, table);
    else if (format == Format::csv)
      o.payload += comparison_csv(group, table, ctx.tau());
    else
      o.payload += comparison_text(group, table, ctx.tau()) + "\n";
    if (!o.summary.empty())
      o.summary += "; ";
    o.summary += to_string(mode) + ": " + std::to_string(table.rows.size()) + " rows, " +
                 std::to_string(table.mismatches.size()) + " mismatches";
    if (!table.mismatches.empty())
      o.status = kExitFailure;
  }
  if (format == Format::json)
    o.payload = dump(all);
  return o;
}

Output cmd_check(const SiegelContext& ctx, Format format) {
  require_format(format, {Format::json, Format::text}, "check");
  const AffineWeylGroup& group = ctx.group();
  std::vector<oracle::Result> results{
      oracle::bfs_length(group, 6, {group.identity(), ctx.tau(), group.inverse(ctx.tau())}),
      oracle::subword_bruhat(group, ctx.adm()), oracle::subset_i_set(group, ctx.adm()),
      oracle::parabolic_finiteness(group)};
  Output o;
  Json all = Json::object();
  int passed = 0;
  for (const auto& r : results) {
    passed += r.passed();
    if (!r.passed())
      o.status = kExitFailure;
    if (format == Format::json) {
      all[r.name] = Json{{"passed", r.passed()}, {"checked", r.checked}, {"failures", r.failures}};
    } else {
      o.payload += r.name + ": " + (r.passed() ? "pass" : "FAIL") + " (" +
                   std::to_string(r.checked) + " checks)\n";
      for (const auto& f : r.failures)
        o.payload += "  " + f + "\n";
    }
  }
  if (format == Format::json)
    o.payload = dump(all);
  o.summary = std::to_string(passed) + "/" + std::to_string(results.size()) + " suites pass";
  return o;
}

Output dispatch(const RunConfig& config) {
  if (config.g < 1 || config.g > kMaxGenus)
    throw ConfigError("--g must be between 1 and " + std::to_string(kMaxGenus));
  if (config.command == Command::check && config.g > kMaxCheckGenus)
    throw ConfigError("check is limited to g <= " + std::to_string(kMaxCheckGenus));
  SiegelContext ctx(config.g);
  const ParahoricLabel k = parse_level(ctx, config.level);
  switch (config.command) {
    case Command::adm: return cmd_adm(ctx, config.format);
    case Command::classify: return cmd_classify(ctx, k, config.format);
    case Command::dl_data: return cmd_dl_data(ctx, k, config.format);
    case Command::compare: return cmd_compare(ctx, config.format);
    case Command::check: return cmd_check(ctx, config.format);
  }
  throw std::logic_error("unknown command");
}

}  // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& log) {
  Output o;
  try {
    o = dispatch(config);
  } catch (const ConfigError& e) {
    log << "error: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const std::exception& e) {
    log << "assertion failure: " << e.what() << '\n';
    return kExitFailure;
  }
  if (config.out) {
    std::ofstream file(*config.out, std::ios::binary);
    if (!file) {
      log << "error: cannot write " << *config.out << '\n';
      return kExitInvalid;
    }
    file << o.payload;
    out << o.summary << '\n';
  } else {
    out << o.payload;
    (config.format == Format::text ? out : log) << o.summary << '\n';
  }
  return o.status;
}

}  // namespace atlas::cli
