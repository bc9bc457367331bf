#include "ramcut/cli/app.hpp"

#include "commands.hpp"
#include "ramcut/cli/manifest.hpp"
#include "ramcut/error.hpp"
#include "ramcut/graphlab/graph.hpp"
#include "ramcut/qcalc/rational.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <iterator>
#include <ostream>
#include <sstream>

#ifndef RAMCUT_VERSION
#define RAMCUT_VERSION "0.0.0"
#endif

namespace ramcut::cli {

namespace {

constexpr const char* kEnvironment[] = {"RAMCUT_DENSE_CAP", "RAMCUT_EXACT_BUDGET", "RAMCUT_STATE_CAP"};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ReplayMismatch : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::ios_base::failure("cannot open '" + path + "'");
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void write_file(const std::string& path, const std::string& bytes) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::ios_base::failure("cannot write '" + path + "'");
  out << bytes;
  if (!out) throw std::ios_base::failure("write to '" + path + "' failed");
}

/// Removes "--manifest PATH" / "--manifest=PATH" and returns PATH.
std::string strip_manifest(std::vector<std::string>& args) {
  std::string path;
  for (std::size_t i = 0; i < args.size();) {
    if (args[i] == "--manifest" && i + 1 < args.size()) {
      path = args[i + 1];
      args.erase(args.begin() + static_cast<std::ptrdiff_t>(i), args.begin() + static_cast<std::ptrdiff_t>(i + 2));
    } else if (args[i].rfind("--manifest=", 0) == 0) {
      path = args[i].substr(11);
      args.erase(args.begin() + static_cast<std::ptrdiff_t>(i));
    } else {
      ++i;
    }
  }
  return path;
}

struct Parsed {
  std::string subcommand;
  std::function<void(Invocation&)> action;
  std::string replay_manifest;
  bool replay_verify = false;
};

/// Parses args. Returns nullopt after printing help or version.
std::optional<Parsed> parse(const std::vector<std::string>& args, std::ostream& out) {
  CLI::App app{"Cutoff laboratory for random walks on buildings and Ramanujan graphs", "ramcut"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(RAMCUT_VERSION));

  auto constants = std::make_shared<ConstantsParams>();
  auto* c = app.add_subcommand("constants", "Drift and degree polynomials; exact constants at a given q");
  c->add_option("d", constants->d, "Rank parameter d");
  c->add_option("--q", constants->q, "Evaluate at this q (integer or p/r)");
  c->add_flag("--table", constants->table, "Print rows d = 2..7");
  c->add_option("--max-d", constants->max_d, "Largest accepted d")->capture_default_str();
  c->add_option("--format", constants->format, "csv or json")->capture_default_str();

  auto sim = std::make_shared<SectorSimParams>();
  auto* s = app.add_subcommand("sector-sim", "Monte Carlo of the projected sector walk");
  s->add_option("--d", sim->d)->capture_default_str();
  s->add_option("--q", sim->q)->capture_default_str();
  s->add_option("--horizon", sim->horizon)->required();
  s->add_option("--trajectories", sim->trajectories)->required();
  s->add_option("--seed", sim->seed)->capture_default_str();
  s->add_option("--threads", sim->threads, "0 = all cores; results do not depend on it");
  auto* n_opt = s->add_option("--n", sim->n, "Vertex count for the tail experiment (digits or b^e)");
  s->add_option("--s", sim->s, "Window slack for the tail experiment")->needs(n_opt);
  s->add_option("--samples", sim->samples, "Write per-trajectory CSV here");

  auto exact = std::make_shared<SectorExactParams>();
  auto* e = app.add_subcommand("sector-exact", "Exact distribution of the projected sector walk");
  e->add_option("--d", exact->d)->capture_default_str();
  e->add_option("--q", exact->q)->capture_default_str();
  e->add_option("--horizon", exact->horizon)->required();
  e->add_option("--r-max", exact->r_max, "Absorb mass once the R-norm exceeds this");
  e->add_option("--start", exact->start, "Start point in difference coordinates")->expected(1, 64);
  e->add_flag("--float", exact->use_float, "Double precision instead of rationals");
  e->add_option("--points", exact->points, "Write the per-point distribution here");

  auto analyze = std::make_shared<AnalyzeParams>();
  auto* a = app.add_subcommand("analyze", "TV mixing profile, cutoff ratios and spectral certification");
  a->add_option("graphs", analyze->graphs, "Edge-list files")->required();
  a->add_option("--coloring", analyze->coloring, "Vertex coloring file (single graph)");
  auto* start_opt = a->add_option("--start", analyze->start, "Start vertex")->capture_default_str();
  a->add_flag("--worst", analyze->worst, "Worst case over all start vertices")->excludes(start_opt);
  a->add_option("--horizon", analyze->horizon)->capture_default_str();
  a->add_option("--eps", analyze->eps, "Thresholds for t_mix")->expected(1, 64);
  a->add_flag("--lazy", analyze->lazy, "Hold with probability 1/2 each step");
  a->add_option("--mode", analyze->mode, "auto, exact or float")->capture_default_str();
  a->add_option("--profile", analyze->profile, "Write the profile CSV here (suffix .i per graph when several)");
  a->add_option("--report", analyze->report, "Write the JSON report here instead of stdout");
  a->add_flag("--no-spectral", analyze->no_spectral);
  a->add_option("--cutoff-eps", analyze->cutoff_eps, "eps for cutoff ratios across several graphs")
      ->capture_default_str();
  a->add_option("--expect-second", analyze->expect_second, "Fail unless the second eigenvalue matches");
  a->add_option("--expect-tolerance", analyze->expect_tolerance)->capture_default_str();
  a->add_option("--collision", analyze->collision, "Collision-free check horizon for digraphs");

  auto cay = std::make_shared<CayleyParams>();
  auto* y = app.add_subcommand("cayley", "Cayley graph of a projective matrix group");
  y->add_option("generators", cay->generators, "Generator file")->required();
  y->add_option("--cap", cay->cap, "Maximum group order to enumerate")->capture_default_str();
  y->add_option("--emit", cay->emit, "Write the graph in edge-list format here");
  y->add_flag("--symmetrize", cay->symmetrize, "Add missing inverses");

  auto predict = std::make_shared<PredictParams>();
  auto* p = app.add_subcommand("predict", "Cutoff schedule for a quotient with n vertices");
  p->add_option("--d", predict->d)->required();
  p->add_option("--q", predict->q)->required();
  p->add_option("--n", predict->n, "Digits or b^e")->required();
  p->add_option("--s", predict->s)->capture_default_str();

  Parsed parsed;
  auto* r = app.add_subcommand("replay", "Re-run a manifest");
  r->add_option("manifest", parsed.replay_manifest)->required();
  r->add_flag("--verify", parsed.replay_verify, "Fail unless outputs are byte-identical");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return std::nullopt;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return std::nullopt;
  } catch (const CLI::CallForVersion&) {
    out << RAMCUT_VERSION << '\n';
    return std::nullopt;
  } catch (const CLI::ParseError& err) {
    throw UsageError(err.what());
  }

  const auto* chosen = app.get_subcommands().front();
  parsed.subcommand = chosen->get_name();
  if (parsed.subcommand == "constants") parsed.action = [constants](Invocation& inv) { cmd_constants(*constants, inv); };
  else if (parsed.subcommand == "sector-sim") parsed.action = [sim](Invocation& inv) { cmd_sector_sim(*sim, inv); };
  else if (parsed.subcommand == "sector-exact") parsed.action = [exact](Invocation& inv) { cmd_sector_exact(*exact, inv); };
  else if (parsed.subcommand == "analyze") parsed.action = [analyze](Invocation& inv) { cmd_analyze(*analyze, inv); };
  else if (parsed.subcommand == "cayley") parsed.action = [cay](Invocation& inv) { cmd_cayley(*cay, inv); };
  else if (parsed.subcommand == "predict") parsed.action = [predict](Invocation& inv) { cmd_predict(*predict, inv); };
  return parsed;
}

std::map<std::string, std::string> current_environment() {
  std::map<std::string, std::string> env;
  for (const char* name : kEnvironment) {
    if (const char* value = std::getenv(name)) env[name] = value;
  }
  return env;
}

void apply_environment(const std::map<std::string, std::string>& env) {
  for (const char* name : kEnvironment) {
    const auto it = env.find(name);
    if (it == env.end()) unsetenv(name);
    else setenv(name, it->second.c_str(), 1);
  }
}

/// Runs a parsed subcommand, writes its outputs, and returns its manifest.
RunManifest execute(const Parsed& parsed, const std::vector<std::string>& args, std::ostream& out) {
  Invocation inv;
  parsed.action(inv);
  RunManifest manifest;
  manifest.tool_version = RAMCUT_VERSION;
  manifest.subcommand = parsed.subcommand;
  manifest.arguments = args;
  manifest.seed = inv.seed;
  manifest.environment = current_environment();
  const std::string text = inv.out.str();
  manifest.stdout_digest = digest(text);
  for (const auto& [path, bytes] : inv.files) {
    write_file(path, bytes);
    manifest.outputs[path] = digest(bytes);
  }
  out << text;
  return manifest;
}

int replay(const Parsed& parsed, std::ostream& out, std::ostream& err) {
  const auto recorded = manifest_from_json(read_file(parsed.replay_manifest));
  if (recorded.tool_version != RAMCUT_VERSION) {
    err << "ramcut: warning: manifest written by version " << recorded.tool_version << ", replaying with "
        << RAMCUT_VERSION << '\n';
  }
  const auto saved_env = current_environment();
  apply_environment(recorded.environment);
  auto inner = parse(recorded.arguments, out);
  if (!inner || inner->subcommand == "replay") {
    apply_environment(saved_env);
    throw UsageError("manifest does not name a runnable subcommand");
  }
  std::ostringstream captured;
  RunManifest fresh;
  try {
    fresh = execute(*inner, recorded.arguments, captured);
  } catch (...) {
    apply_environment(saved_env);
    throw;
  }
  apply_environment(saved_env);
  out << captured.str();
  if (!parsed.replay_verify) return 0;

  auto same = [](const OutputDigest& a, const OutputDigest& b) { return a.fnv1a64 == b.fnv1a64 && a.bytes == b.bytes; };
  if (!same(recorded.stdout_digest, fresh.stdout_digest)) throw ReplayMismatch("stdout differs from the manifest");
  for (const auto& [path, d] : recorded.outputs) {
    const auto it = fresh.outputs.find(path);
    if (it == fresh.outputs.end() || !same(d, it->second)) throw ReplayMismatch("output '" + path + "' differs");
  }
  return 0;
}

int report(std::ostream& err, const char* kind, const std::string& message) {
  err << "ramcut: error[" << kind << "]: " << message << '\n';
  return 1;
}

}  // namespace

std::string version() { return RAMCUT_VERSION; }

int run(const std::vector<std::string>& input, std::ostream& out, std::ostream& err) {
  try {
    std::vector<std::string> args = input;
    const std::string manifest_path = strip_manifest(args);
    const auto parsed = parse(args, out);
    if (!parsed) return 0;
    if (parsed->subcommand == "replay") return replay(*parsed, out, err);
    const auto manifest = execute(*parsed, args, out);
    if (!manifest_path.empty()) write_file(manifest_path, to_json(manifest));
    return 0;
  } catch (const UsageError& e) {
    return report(err, "usage", e.what());
  } catch (const ParseError& e) {
    return report(err, "parse", e.what());
  } catch (const graphlab::NotRegularError& e) {
    return report(err, "not-regular", e.what());
  } catch (const DomainError& e) {
    return report(err, "domain", e.what());
  } catch (const CapExceeded& e) {
    return report(err, "cap", e.what());
  } catch (const ConvergenceError& e) {
    return report(err, "convergence", std::string(e.what()) + " (residual " + decimal(e.residual()) + ")");
  } catch (const AssertionFailure& e) {
    return report(err, "assertion", e.what());
  } catch (const ReplayMismatch& e) {
    return report(err, "replay", e.what());
  } catch (const std::ios_base::failure& e) {
    return report(err, "io", e.what());
  } catch (const std::invalid_argument& e) {
    return report(err, "invalid", e.what());
  } catch (const std::exception& e) {
    return report(err, "internal", e.what());
  }
}

}  // namespace ramcut::cli
