// orbitkit command line: scenario-driven checks, reductions, reachability
// sampling, derivation classification, and orbit dimension reports.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "orbitkit/commands.hpp"
#include "orbitkit/errors.hpp"
#include "orbitkit/scenario.hpp"

namespace {

orbitkit::Scenario resolve_scenario(const std::string& arg) {
  namespace fs = std::filesystem;
  if (fs::exists(arg)) {
    std::ifstream is(arg);
    nlohmann::json j;
    try {
      is >> j;
    } catch (const nlohmann::json::exception& e) {
      throw orbitkit::InputError("cannot parse scenario file " + arg + ": " + e.what());
    }
    return orbitkit::Scenario::from_json(j);
  }
  for (const auto& name : orbitkit::Scenario::demo_names())
    if (name == arg) return orbitkit::Scenario::demo(name);
  throw orbitkit::InputError("no scenario file or demo named '" + arg + "'");
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"orbitkit: flows, symmetry reduction, and orbit analysis for "
               "control vector-field families"};
  app.require_subcommand(1);

  std::string scenario_arg, out_dir = "out", field, demo_name;
  std::uint64_t seed = 0;
  int words = 0, depth = 2;
  double radius = 0.0;
  bool seed_set = false, words_set = false, radius_set = false;

  auto add_common = [&](CLI::App* cmd, bool needs_scenario = true) {
    if (needs_scenario)
      cmd->add_option("--scenario", scenario_arg, "scenario file path or demo name")->required();
    cmd->add_option("--out", out_dir, "output directory (default: out)");
    cmd->add_option("--seed", seed, "override sampler seed")->each([&](const std::string&) {
      seed_set = true;
    });
    cmd->add_option("--words", words, "override sampler word count")->each([&](const std::string&) {
      words_set = true;
    });
    cmd->add_option("--radius", radius, "local PCA radius")->each([&](const std::string&) {
      radius_set = true;
    });
  };

  CLI::App* c_check = app.add_subcommand("check", "symmetry residuals of a scenario");
  add_common(c_check);
  CLI::App* c_reduce = app.add_subcommand("reduce", "push invariant fields to the orbit space");
  add_common(c_reduce);
  CLI::App* c_reach = app.add_subcommand("reach", "sample the accessible set");
  add_common(c_reach);
  CLI::App* c_classify = app.add_subcommand("classify", "derivation vs vector field per probe");
  add_common(c_classify);
  c_classify->add_option("--field", field, "restrict to one field label");
  CLI::App* c_orbit = app.add_subcommand("orbit-dim", "orbit dimension witness");
  add_common(c_orbit);
  c_orbit->add_option("--depth", depth, "bracket depth for the tangent span (default 2)");
  CLI::App* c_demo = app.add_subcommand("demo", "write a built-in demo scenario file");
  c_demo->add_option("name", demo_name, "demo scenario name")->required();
  c_demo->add_option("--out", out_dir, "output directory (default: out)");
  CLI::App* c_list = app.add_subcommand("list-demos", "list built-in demo scenarios");

  CLI11_PARSE(app, argc, argv);

  try {
    if (c_list->parsed()) {
      for (const auto& name : orbitkit::Scenario::demo_names()) std::cout << name << "\n";
      return 0;
    }
    if (c_demo->parsed()) {
      orbitkit::Scenario sc = orbitkit::Scenario::demo(demo_name);
      std::filesystem::create_directories(out_dir);
      const auto path = std::filesystem::path(out_dir) / (demo_name + ".json");
      std::ofstream os(path, std::ios::binary);
      os << sc.to_json().dump(2) << "\n";
      std::cout << path.string() << "\n";
      return 0;
    }

    const orbitkit::Scenario sc = resolve_scenario(scenario_arg);
    orbitkit::CommandOverrides ov;
    if (seed_set) ov.seed = seed;
    if (words_set) ov.words = words;
    if (radius_set) ov.radius = radius;
    ov.bracket_depth = depth;
    ov.field = field;

    nlohmann::ordered_json report;
    if (c_check->parsed())
      report = orbitkit::cmd_check(sc, out_dir);
    else if (c_reduce->parsed())
      report = orbitkit::cmd_reduce(sc, out_dir);
    else if (c_reach->parsed())
      report = orbitkit::cmd_reach(sc, out_dir, ov);
    else if (c_classify->parsed())
      report = orbitkit::cmd_classify(sc, out_dir, ov);
    else if (c_orbit->parsed())
      report = orbitkit::cmd_orbit_dim(sc, out_dir, ov);
    std::cout << report.dump(2) << "\n";
    return 0;
  } catch (const orbitkit::InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const orbitkit::NotInvariantError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const orbitkit::InsufficientSamplesError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
}
