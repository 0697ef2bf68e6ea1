#pragma once

#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "verlinde/cache.hpp"
#include "verlinde/closed_forms.hpp"
#include "verlinde/identities.hpp"
#include "verlinde/lie_heights.hpp"
#include "verlinde/output.hpp"
#include "verlinde/prym_theta.hpp"
#include "verlinde/verlinde.hpp"

namespace verlinde::cli {

enum ExitCode : int { kOk = 0, kFailure = 1, kUsage = 2, kResource = 3 };

inline constexpr const char* kGroupHelp =
    "group spec: sl:<r> for SL_r (r >= 2), spin:<m> for Spin_m (m >= 3). "
    "SL_{n+1} is sl:<n+1>, Spin_{2n} is spin:<2n>, Spin_{2n+1} is spin:<2n+1>; spin:3 is evaluated as sl:2.";

namespace detail {

inline std::pair<int, int> parse_pair(const std::string& s) {
  const auto comma = s.find(',');
  if (comma == std::string::npos) throw InvalidArgument("pair must look like l,m: '" + s + "'");
  try {
    std::size_t p1 = 0, p2 = 0;
    const std::string a = s.substr(0, comma), b = s.substr(comma + 1);
    const int l = std::stoi(a, &p1), m = std::stoi(b, &p2);
    if (p1 != a.size() || p2 != b.size()) throw InvalidArgument("bad pair '" + s + "'");
    return {l, m};
  } catch (const std::logic_error&) {
    throw InvalidArgument("bad pair '" + s + "'");
  }
}

inline void emit_notice(const GroupId& g, std::ostream& err) {
  if (auto note = low_rank_notice(g)) err << *note << "\n";
}

}  // namespace detail

/// Runs the command line; argv[0] is the program name. Output goes to `out`,
/// diagnostics to `err`, and the return value is the process exit status.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact Verlinde numbers, heights, theta dimensions and identity checks"};
  app.footer(kGroupHelp);
  app.require_subcommand(1);

  std::string group_spec, format = "text", parity = "even", rep, cache_path;
  int level = 1, genus = 2, power = 1, closed_n = 0;
  bool no_cache = false;
  std::size_t max_weights = kDefaultMaxWeights;
  std::string closed_name;

  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", format, "text, json or csv")->check(CLI::IsMember({"text", "json", "csv"}));
  };
  auto add_query = [&](CLI::App* sub) {
    sub->add_option("--group", group_spec, kGroupHelp)->required();
    sub->add_option("--level", level, "level l >= 1")->required();
    sub->add_option("--genus", genus, "genus g >= 1")->required();
    sub->add_option("--max-weights", max_weights, "refuse queries with more admissible weights (exit 3)");
    add_format(sub);
  };

  auto* compute = app.add_subcommand("compute", "exact Verlinde number N_l(G)");
  add_query(compute);
  compute->add_option("--cache", cache_path, "cache file (default: $VERLINDE_CACHE or ~/.cache/verlinde/results.jsonl)");
  compute->add_flag("--no-cache", no_cache, "neither read nor write the result cache");

  auto* split = app.add_subcommand("split", "N+ and N- for an odd spin group");
  add_query(split);

  auto* theta = app.add_subcommand("theta", "dimension of even/odd level-m theta functions on a ppav");
  auto* prym = app.add_subcommand("prym-sum", "theta dimensions summed over the Jacobian and all Pryms");
  for (auto* sub : {theta, prym}) {
    sub->add_option("--genus", genus, "genus / abelian variety dimension")->required();
    sub->add_option("--level", level, "level m >= 1")->required();
    sub->add_option("--parity", parity, "even, odd or total")->check(CLI::IsMember({"even", "odd", "total"}));
    add_format(sub);
  }

  auto* height_cmd = app.add_subcommand("height", "height m_V of a representation");
  height_cmd->add_option("--group", group_spec, kGroupHelp)->required();
  height_cmd->add_option("--rep", rep, "vector, ext2 or adjoint")->required()->check(
      CLI::IsMember({"vector", "ext2", "adjoint"}));
  height_cmd->add_option("--power", power, "also print N_{k m_V} at this power k (needs --genus)");
  height_cmd->add_option("--genus", genus, "genus used with --power");
  add_format(height_cmd);

  auto* closed = app.add_subcommand("closed-form", "evaluate a named closed form");
  closed->add_option("--name", closed_name, "formula name")->required();
  closed->add_option("--n", closed_n, "rank index n of Spin_{2n} / Spin_{2n+1}");
  closed->add_option("--genus", genus, "genus g")->required();
  add_format(closed);

  auto* moduli = app.add_subcommand("moduli-dim", "dimension (g-1) dim G of the moduli space");
  moduli->add_option("--group", group_spec, kGroupHelp)->required();
  moduli->add_option("--genus", genus, "genus g >= 2")->required();
  add_format(moduli);

  std::string suite = "all";
  int genus_min = 2, genus_max = 4, rank_max = 9, level_max = 7, samples = 200, clifford_max = 8;
  std::uint64_t seed = 20240601;
  std::vector<std::string> pairs;
  std::vector<int> spin3_levels;
  bool timings = false;
  auto* verify = app.add_subcommand("verify", "run identity checks");
  std::vector<std::string> suite_choices{"all"};
  suite_choices.insert(suite_choices.end(), suite_names().begin(), suite_names().end());
  verify->add_option("--suite", suite, "all or one suite")->check(CLI::IsMember(suite_choices));
  verify->add_option("--genus-min", genus_min, "smallest genus (>= 2)");
  verify->add_option("--genus-max", genus_max, "largest genus");
  verify->add_option("--rank-max", rank_max, "largest Lie rank n for spin families");
  verify->add_option("--level-max", level_max, "largest odd level for default reciprocity pairs");
  verify->add_option("--pairs", pairs, "reciprocity pair l,m (repeatable); replaces the defaults");
  verify->add_option("--spin3-levels", spin3_levels, "odd l for N-_{2l}(Spin_3) = N-_3(Spin_l)");
  verify->add_option("--samples", samples, "random samples per Clifford property");
  verify->add_option("--clifford-max-dim", clifford_max, "largest Clifford dimension m");
  verify->add_option("--seed", seed, "seed for Clifford samples");
  verify->add_flag("--timings", timings, "include elapsed times (output no longer byte-stable)");
  add_format(verify);

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  }

  try {
    const OutputFormat fmt = parse_format(format);
    if (*compute || *split) {
      const VerlindeQuery q{parse_group(group_spec), level, genus};
      q.validate();
      detail::emit_notice(q.group, err);
      if (*compute) {
        std::optional<ResultCache> cache;
        if (!no_cache) cache.emplace(cache_path.empty() ? default_cache_path() : std::filesystem::path(cache_path));
        BigInt value;
        if (auto hit = cache ? cache->lookup(q.group.tag(), level, genus) : std::nullopt) {
          value = *hit;
        } else {
          value = verlinde_number(q, max_weights);
          if (cache) cache->store({q.group.tag(), level, genus, value});
        }
        if (fmt == OutputFormat::json) out << value_json(q, value).dump() << "\n";
        else if (fmt == OutputFormat::csv) out << "group,level,genus,value\n" << q.group.tag() << "," << level << "," << genus << "," << value << "\n";
        else out << value << "\n";
      } else {
        const SplitValue s = verlinde_split(q, max_weights);
        if (fmt == OutputFormat::json) {
          nlohmann::ordered_json j;
          j["schema"] = kSchemaVersion;
          j["group"] = q.group.tag();
          j["level"] = level;
          j["genus"] = genus;
          j["plus"] = s.plus.get_str();
          j["minus"] = s.minus.get_str();
          out << j.dump() << "\n";
        } else if (fmt == OutputFormat::csv) {
          out << "group,level,genus,plus,minus\n" << q.group.tag() << "," << level << "," << genus << "," << s.plus << "," << s.minus << "\n";
        } else {
          out << s.plus << " " << s.minus << "\n";
        }
      }
      return kOk;
    }
    auto print_scalar = [&](const nlohmann::ordered_json& fields, const std::string& value) {
      if (fmt == OutputFormat::json) {
        nlohmann::ordered_json j;
        j["schema"] = kSchemaVersion;
        for (const auto& [k, v] : fields.items()) j[k] = v;
        j["value"] = value;
        out << j.dump() << "\n";
      } else if (fmt == OutputFormat::csv) {
        std::string header, row;
        for (const auto& [k, v] : fields.items()) {
          header += k + ",";
          row += (v.is_string() ? v.get<std::string>() : v.dump()) + ",";
        }
        out << header << "value\n" << row << value << "\n";
      } else {
        out << value << "\n";
      }
    };
    if (*theta || *prym) {
      const Parity p = parse_parity(parity);
      const BigInt v = *theta ? theta_dim(genus, level, p) : prym_sum(genus, level, p);
      print_scalar({{"genus", genus}, {"level", level}, {"parity", to_string(p)}}, v.get_str());
      return kOk;
    }
    if (*height_cmd) {
      const GroupId g = parse_group(group_spec);
      const RepId r = parse_rep(rep);
      const BigRational h = height(g, r);
      if (height_cmd->count("--power") > 0) {
        if (height_cmd->count("--genus") == 0) throw InvalidArgument("--power needs --genus");
        print_scalar({{"group", g.tag()}, {"rep", rep}, {"power", power}, {"genus", genus}},
                     level_dimension(g, r, power, genus).get_str());
      } else {
        print_scalar({{"group", g.tag()}, {"rep", rep}}, h.get_str());
      }
      return kOk;
    }
    if (*closed) {
      print_scalar({{"name", closed_name}, {"n", closed_n}, {"genus", genus}},
                   closed_form(closed_name, {closed_n, genus}).get_str());
      return kOk;
    }
    if (*moduli) {
      const GroupId g = parse_group(group_spec);
      print_scalar({{"group", g.tag()}, {"genus", genus}}, moduli_dimension(g, genus).get_str());
      return kOk;
    }
    if (*verify) {
      SuiteConfig cfg;
      if (suite != "all") cfg.suites = {suite};
      if (genus_min < 2) throw InvalidArgument("--genus-min must be >= 2");
      cfg.genus = {genus_min, genus_max};
      cfg.rank_max = rank_max;
      cfg.level_max = level_max;
      cfg.clifford_samples = samples;
      cfg.clifford_dims = {3, clifford_max};
      cfg.seed = seed;
      if (!pairs.empty() || !spin3_levels.empty()) {
        ReciprocitySpec spec;
        for (const auto& s : pairs) spec.pairs.push_back(detail::parse_pair(s));
        spec.spin3_levels = spin3_levels;
        cfg.reciprocity = spec;
      }
      const SuiteReport report = run_all(cfg);
      write_reports(out, report.reports, fmt, timings);
      return report.all_pass() ? kOk : kFailure;
    }
  } catch (const InvalidArgument& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const ResourceBound& e) {
    err << "resource bound: " << e.what() << "\n";
    return kResource;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kFailure;
  }
  return kUsage;
}

}  // namespace verlinde::cli
