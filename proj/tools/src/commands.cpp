#include "commands.hpp"

#include "ramcut/cayley/cayley_graph.hpp"
#include "ramcut/error.hpp"
#include "ramcut/graphlab/collision.hpp"
#include "ramcut/graphlab/graph_io.hpp"
#include "ramcut/graphlab/mixing.hpp"
#include "ramcut/graphlab/spectral.hpp"
#include "ramcut/qcalc/constants.hpp"
#include "ramcut/qcalc/schedule.hpp"
#include "ramcut/sector/evolve.hpp"
#include "ramcut/sector/simulate.hpp"

#include <json.hpp>

#include <cmath>
#include <cstdlib>
#include <limits>

namespace ramcut::cli {

using nlohmann::ordered_json;

namespace {

ordered_json number(double value) {
  if (std::isnan(value)) return nullptr;
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  return std::stod(decimal(value));
}

ordered_json exact(const Rational& value) {
  return {{"exact", to_string(value)}, {"decimal", number(to_double(value))}};
}

std::uint64_t env_u64(const char* name, std::uint64_t fallback) {
  const char* raw = std::getenv(name);
  if (raw == nullptr) return fallback;
  char* end = nullptr;
  const unsigned long long value = std::strtoull(raw, &end, 10);
  if (end == raw || *end != '\0') throw DomainError(std::string(name) + " must be a non-negative integer");
  return value;
}

/// Accepts "1048576" or "2^20".
BigInt parse_count(const std::string& text) {
  const auto caret = text.find('^');
  auto digits = [&](const std::string& part) {
    if (part.empty() || part.find_first_not_of("0123456789") != std::string::npos) {
      throw DomainError("expected a non-negative integer or b^e, got '" + text + "'");
    }
    return BigInt(part);
  };
  if (caret == std::string::npos) return digits(text);
  const BigInt base = digits(text.substr(0, caret));
  const BigInt exponent = digits(text.substr(caret + 1));
  if (exponent > 100000) throw DomainError("exponent too large in '" + text + "'");
  return pow(base, exponent.convert_to<unsigned>());
}

void csv_row(std::ostream& out, const std::string& key, const std::string& value) {
  out << key << ',' << value << '\n';
}

ordered_json spectral_json(const graphlab::SpectralReport& report) {
  ordered_json j;
  j["method"] = report.method;
  j["partial"] = report.partial;
  j["n"] = report.n;
  j["k"] = report.k;
  j["trivial_count"] = report.trivial_count;
  j["coloring_used"] = report.coloring_used;
  j["lambda_nontrivial"] = number(report.lambda_nontrivial);
  if (!report.directed) j["second_eigenvalue"] = number(report.second_eigenvalue);
  j["ramanujan_bound"] = number(report.ramanujan_bound);
  j["tolerance"] = number(report.tolerance);
  j["top_eigenvalue"] = number(report.top_eigenvalue);
  j["top_matches_degree"] = report.top_matches_degree;
  j["is_ramanujan"] = report.is_ramanujan;
  if (report.method == "lanczos") j["residual"] = number(report.residual);
  ordered_json values = ordered_json::array();
  if (report.directed) {
    for (const auto& z : report.complex_eigenvalues) values.push_back({number(z.real()), number(z.imag())});
  } else {
    for (const double x : report.eigenvalues) values.push_back(number(x));
  }
  j["eigenvalues"] = values;
  return j;
}

graphlab::EvolutionMode parse_mode(const std::string& mode) {
  if (mode == "auto") return graphlab::EvolutionMode::automatic;
  if (mode == "exact") return graphlab::EvolutionMode::exact;
  if (mode == "float") return graphlab::EvolutionMode::floating;
  throw DomainError("mode must be auto, exact or float");
}

std::string eps_key(double eps) { return decimal(eps); }

}  // namespace

void cmd_constants(const ConstantsParams& params, Invocation& inv) {
  auto& out = inv.out;
  const bool json_out = params.format == "json";
  if (params.format != "csv" && !json_out) throw DomainError("format must be csv or json");
  if (params.table) {
    ordered_json rows = ordered_json::array();
    if (!json_out) out << "d,drift_times_degree,degree\n";
    for (unsigned d = 2; d <= 7; ++d) {
      const auto drift = qcalc::drift_polynomial(d).to_string();
      const auto degree = qcalc::vertex_degree(d).to_string();
      if (json_out) rows.push_back({{"d", d}, {"drift_times_degree", drift}, {"degree", degree}});
      else out << d << ',' << drift << ',' << degree << '\n';
    }
    if (json_out) out << rows.dump(2) << '\n';
    return;
  }
  if (!params.d) throw DomainError("constants needs a rank d or --table");
  const unsigned d = *params.d;
  if (d < 2 || d > params.max_d) {
    throw DomainError("d = " + std::to_string(d) + " outside 2.." + std::to_string(params.max_d));
  }
  const auto drift_poly = qcalc::drift_polynomial(d);
  const auto degree_poly = qcalc::vertex_degree(d);

  ordered_json j;
  j["d"] = d;
  j["drift_polynomial"] = drift_poly.to_string();
  j["degree_polynomial"] = degree_poly.to_string();
  if (!json_out) {
    out << drift_poly.to_string() << " | " << degree_poly.to_string() << '\n';
    out << "key,exact,decimal\n";
  }
  if (!params.q.empty()) {
    const auto c = qcalc::drift_constants(d, parse_rational(params.q));
    j["q"] = to_string(c.q);
    j["q_not_prime_power"] = c.q_not_prime_power;
    j["degree"] = exact(c.degree);
    j["drift"] = exact(c.drift);
    j["variance"] = exact(c.variance);
    j["sigma"] = number(c.sigma);
    j["cutoff_constant"] = exact(c.cutoff_constant);
    j["c_constant"] = number(c.c_constant);
    if (!json_out) {
      auto row = [&](const std::string& key, const Rational& value) {
        out << key << ',' << to_string(value) << ',' << decimal(to_double(value)) << '\n';
      };
      out << "q," << to_string(c.q) << ',' << decimal(to_double(c.q)) << '\n';
      out << "q_not_prime_power," << (c.q_not_prime_power ? "true" : "false") << ",\n";
      row("degree", c.degree);
      row("drift", c.drift);
      row("variance", c.variance);
      out << "sigma,," << decimal(c.sigma) << '\n';
      row("cutoff_constant", c.cutoff_constant);
      out << "c_constant,," << decimal(c.c_constant) << '\n';
    }
  }
  if (json_out) out << j.dump(2) << '\n';
}

void cmd_sector_sim(const SectorSimParams& params, Invocation& inv) {
  sector::SimulationConfig config;
  config.d = params.d;
  config.q = parse_rational(params.q);
  config.horizon = params.horizon;
  config.trajectories = params.trajectories;
  config.seed = params.seed;
  config.threads = params.threads;
  inv.seed = params.seed;
  const auto constants = qcalc::drift_constants(params.d, config.q);
  const auto stats = sector::simulate(config);
  const auto interior = sector::summarize_interior(stats);

  auto& out = inv.out;
  out << "key,value\n";
  csv_row(out, "d", std::to_string(stats.d));
  csv_row(out, "q", to_string(stats.q));
  csv_row(out, "horizon", std::to_string(stats.horizon));
  csv_row(out, "trajectories", std::to_string(stats.trajectory_count));
  csv_row(out, "seed", std::to_string(stats.seed));
  csv_row(out, "drift_exact", to_string(constants.drift));
  csv_row(out, "drift_exact_decimal", decimal(to_double(constants.drift)));
  csv_row(out, "interior_steps", std::to_string(interior.count));
  if (interior.count > 0) {
    csv_row(out, "interior_drift", decimal(interior.mean));
    csv_row(out, "interior_variance", decimal(interior.variance));
    csv_row(out, "interior_drift_stderr", decimal(interior.standard_error));
    csv_row(out, "variance_exact", to_string(constants.variance));
    csv_row(out, "variance_exact_decimal", decimal(to_double(constants.variance)));
  }
  double rho_sum = 0.0;
  for (const long r : stats.rho_samples) rho_sum += static_cast<double>(r);
  csv_row(out, "rho_mean", decimal(rho_sum / static_cast<double>(stats.trajectory_count)));
  if (stats.horizon > 0) {
    const auto xi = sector::normalized_xi(stats, constants);
    csv_row(out, "xi_mean", decimal(xi.mean));
    csv_row(out, "xi_variance", decimal(xi.variance));
    std::uint64_t clean = 0;
    for (const auto last : stats.last_boundary_step) {
      if (2 * last < stats.horizon) ++clean;
    }
    csv_row(out, "boundary_free_second_half",
            decimal(static_cast<double>(clean) / static_cast<double>(stats.trajectory_count)));
  }
  for (const auto& [increment, count] : stats.interior_increment_histogram) {
    csv_row(out, "increment_count[" + std::to_string(increment) + "]", std::to_string(count));
  }

  if (!params.n.empty()) {
    const auto tail = sector::tail_experiment(params.d, config.q, parse_count(params.n), params.s,
                                              params.trajectories, params.seed, params.threads);
    csv_row(out, "tail_n", to_string(tail.schedule.n));
    csv_row(out, "tail_s", decimal(tail.schedule.s));
    csv_row(out, "tail_t0_step", std::to_string(tail.t0_step));
    csv_row(out, "tail_t1_step", std::to_string(tail.t1_step));
    csv_row(out, "tail_r0", decimal(tail.schedule.r_0));
    csv_row(out, "tail_r1", decimal(tail.schedule.r_1));
    csv_row(out, "tail_p_exceed_r0_at_t0", decimal(tail.p_exceed_r0_at_t0));
    csv_row(out, "tail_p_below_r1_at_t1", decimal(tail.p_below_r1_at_t1));
    csv_row(out, "tail_normal_reference", decimal(tail.normal_tail_reference));
    csv_row(out, "tail_flagged", tail.flagged ? "true" : "false");
  }

  if (!params.samples.empty()) {
    std::ostringstream samples;
    samples << "trajectory,rho,boundary_visits,last_boundary_step\n";
    for (std::size_t i = 0; i < stats.rho_samples.size(); ++i) {
      samples << i << ',' << stats.rho_samples[i] << ',' << stats.boundary_visits[i] << ','
              << stats.last_boundary_step[i] << '\n';
    }
    inv.files[params.samples] = samples.str();
  }
}

void cmd_sector_exact(const SectorExactParams& params, Invocation& inv) {
  const Rational q = parse_rational(params.q);
  const auto start = params.start.empty() ? sector::SectorPoint::origin(params.d)
                                          : sector::SectorPoint::from_x(params.start);
  if (start.rank() != params.d) throw DomainError("start point must have d-1 coordinates");
  const long r_max = params.r_max.value_or(std::numeric_limits<long>::max());
  sector::EvolveOptions options;
  options.state_cap = env_u64("RAMCUT_STATE_CAP", options.state_cap);

  auto& out = inv.out;
  std::ostringstream points;
  points << "x,mass,decimal\n";
  if (params.use_float) {
    const auto result = sector::evolve_float(params.d, q, start, params.horizon, r_max, options);
    out << "r,mass,decimal\n";
    for (const auto& [r, mass] : result.r_histogram()) out << r << ",," << decimal(mass) << '\n';
    out << "truncated,," << decimal(result.truncated_mass) << '\n';
    for (const auto& [point, mass] : result.distribution) points << '"' << point.to_string() << "\",," << decimal(mass) << '\n';
  } else {
    const auto result = sector::evolve_exact(params.d, q, start, params.horizon, r_max, options);
    out << "r,mass,decimal\n";
    for (const auto& [r, mass] : result.r_histogram()) {
      out << r << ',' << to_string(mass) << ',' << decimal(to_double(mass)) << '\n';
    }
    out << "truncated," << to_string(result.truncated_mass) << ',' << decimal(to_double(result.truncated_mass)) << '\n';
    for (const auto& [point, mass] : result.distribution) {
      points << '"' << point.to_string() << "\"," << to_string(mass) << ',' << decimal(to_double(mass)) << '\n';
    }
  }
  if (!params.points.empty()) inv.files[params.points] = points.str();
}

void cmd_analyze(const AnalyzeParams& params, Invocation& inv) {
  if (params.graphs.empty()) throw DomainError("analyze needs at least one graph file");
  if (!params.coloring.empty() && params.graphs.size() != 1) {
    throw DomainError("--coloring applies to a single graph");
  }
  graphlab::ProfileOptions profile_options;
  profile_options.walk.lazy = params.lazy;
  profile_options.walk.mode = parse_mode(params.mode);
  profile_options.walk.exact_budget = env_u64("RAMCUT_EXACT_BUDGET", profile_options.walk.exact_budget);
  profile_options.worst_case = params.worst;
  profile_options.eps = params.eps;
  const auto spectral_options = graphlab::spectral_options_from_env();

  std::vector<graphlab::RegularGraph> undirected;
  std::vector<std::size_t> undirected_index;
  ordered_json report;
  report["graphs"] = ordered_json::array();

  for (std::size_t i = 0; i < params.graphs.size(); ++i) {
    const auto& path = params.graphs[i];
    auto loaded = graphlab::load_graph_file(path);
    ordered_json entry;
    entry["path"] = path;

    if (auto* dg = std::get_if<graphlab::RegularDigraph>(&loaded)) {
      entry["directed"] = true;
      entry["n"] = dg->vertex_count();
      entry["k"] = dg->degree();
      if (params.collision > 0) {
        const auto check = graphlab::collision_free_check(*dg, params.collision);
        ordered_json c;
        c["horizon"] = check.horizon;
        c["collision_free"] = check.collision_free;
        if (check.first_violation) c["first_violation"] = {check.first_violation->first, check.first_violation->second};
        entry["collision"] = c;
      }
      if (!params.no_spectral) entry["spectral"] = spectral_json(graphlab::spectral_report(*dg, spectral_options));
      report["graphs"].push_back(entry);
      continue;
    }

    auto& g = std::get<graphlab::RegularGraph>(loaded);
    if (!params.coloring.empty()) g.set_coloring(graphlab::load_coloring_file(params.coloring, g.vertex_count()));
    entry["directed"] = false;
    entry["n"] = g.vertex_count();
    entry["k"] = g.degree();
    entry["connected"] = g.is_connected();
    entry["bipartite"] = g.is_bipartite();
    if (g.coloring()) entry["colors"] = g.color_count();

    const auto profile = graphlab::tv_profile(g, params.start, params.horizon, profile_options);
    ordered_json p;
    p["mode"] = graphlab::to_string(profile.mode);
    p["lazy"] = profile.lazy;
    p["start"] = profile.start ? ordered_json(*profile.start) : ordered_json("worst");
    p["horizon"] = params.horizon;
    ordered_json t_mix = ordered_json::object();
    for (const auto& [eps, t] : profile.t_mix) t_mix[eps_key(eps)] = t ? ordered_json(*t) : ordered_json(nullptr);
    p["t_mix"] = t_mix;
    p["final_tv_total"] = number(profile.tv_total.back());
    if (!profile.tv_total_exact.empty()) p["final_tv_total_exact"] = to_string(profile.tv_total_exact.back());
    entry["profile"] = p;

    if (!params.profile.empty()) {
      std::ostringstream csv;
      graphlab::write_profile_csv(csv, profile);
      const auto target = params.graphs.size() == 1 ? params.profile : params.profile + "." + std::to_string(i);
      inv.files[target] = csv.str();
    }

    if (!params.no_spectral) {
      if (g.vertex_count() <= spectral_options.dense_cap || params.expect_second) {
        const auto spectral = graphlab::spectral_report(g, spectral_options);
        entry["spectral"] = spectral_json(spectral);
        if (params.expect_second) {
          const double gap = std::abs(spectral.second_eigenvalue - *params.expect_second);
          entry["second_eigenvalue_check"] = {{"expected", number(*params.expect_second)},
                                              {"observed", number(spectral.second_eigenvalue)},
                                              {"ok", gap <= params.expect_tolerance}};
          if (gap > params.expect_tolerance) {
            throw AssertionFailure(path + ": second eigenvalue " + decimal(spectral.second_eigenvalue) +
                                   " differs from expected " + decimal(*params.expect_second));
          }
        }
      } else {
        entry["spectral"] = "skipped: n above the dense cap";
      }
    }
    report["graphs"].push_back(entry);
    undirected.push_back(std::move(g));
    undirected_index.push_back(i);
  }

  if (undirected.size() > 1) {
    std::vector<graphlab::FamilyMember> family;
    for (const auto& g : undirected) family.push_back({&g, params.start});
    const auto ratios = graphlab::cutoff_ratio(family, params.cutoff_eps, params.horizon, profile_options.walk);
    ordered_json cutoff = ordered_json::array();
    for (std::size_t i = 0; i < ratios.size(); ++i) {
      const auto& r = ratios[i];
      ordered_json c;
      c["path"] = params.graphs[undirected_index[i]];
      c["n"] = r.vertex_count;
      c["mode"] = graphlab::to_string(r.mode);
      c["eps"] = number(params.cutoff_eps);
      c["t_mix_eps"] = r.t_mix_eps ? ordered_json(*r.t_mix_eps) : ordered_json(nullptr);
      c["t_mix_complement"] = r.t_mix_complement ? ordered_json(*r.t_mix_complement) : ordered_json(nullptr);
      c["ratio"] = number(r.ratio);
      c["infinite"] = r.infinite;
      c["unresolved"] = r.unresolved;
      cutoff.push_back(c);
    }
    report["cutoff"] = cutoff;
  }

  const std::string text = report.dump(2) + "\n";
  if (params.report.empty()) inv.out << text;
  else inv.files[params.report] = text;
}

void cmd_cayley(const CayleyParams& params, Invocation& inv) {
  const auto gens = cayley::load_generators_file(params.generators);
  cayley::CayleyOptions options;
  options.auto_symmetrize = params.symmetrize;
  const auto result = cayley::cayley_graph(gens, params.cap, options);

  const std::uint64_t q = gens.field.q();
  const auto pgl = cayley::pgl_order(gens.d, q);
  const auto psl = cayley::psl_order(gens.d, q);
  const BigInt order = static_cast<unsigned long long>(result.order());
  ordered_json j;
  j["d"] = gens.d;
  j["field"] = {{"p", gens.field.p()}, {"e", gens.field.e()}, {"q", q}};
  j["order"] = result.order();
  j["degree"] = result.graph.degree();
  j["input_symmetric"] = gens.symmetric;
  j["generators_used"] = result.generators.size();
  j["in_psl"] = result.in_psl;
  j["pgl_order"] = to_string(pgl);
  j["psl_order"] = to_string(psl);
  j["generates"] = order == pgl ? "PGL" : (order == psl ? "PSL" : "proper subgroup");
  if (gens.d >= 2) {
    const auto expected_degree = qcalc::vertex_degree(gens.d, Rational(q));
    j["building_degree"] = to_string(expected_degree);
    j["degree_matches_building"] = Rational(result.graph.degree()) == expected_degree;
  }
  inv.out << j.dump(2) << '\n';

  if (!params.emit.empty()) {
    std::ostringstream graph_text;
    graphlab::write_graph(graph_text, result.graph);
    inv.files[params.emit] = graph_text.str();
  }
}

void cmd_predict(const PredictParams& params, Invocation& inv) {
  const Rational q = parse_rational(params.q);
  const auto schedule = qcalc::mixing_schedule(params.d, q, parse_count(params.n), params.s);
  ordered_json j;
  j["d"] = params.d;
  j["q"] = to_string(q);
  j["n"] = to_string(schedule.n);
  j["s"] = number(params.s);
  j["cutoff_constant"] = exact(schedule.cutoff_constant);
  j["log_q_n"] = number(schedule.log_q_n);
  j["t_cutoff"] = number(schedule.t_cutoff);
  j["t_0"] = number(schedule.t_0);
  j["t_1"] = number(schedule.t_1);
  j["r_0"] = number(schedule.r_0);
  j["r_1"] = number(schedule.r_1);
  j["window"] = number(schedule.window);
  j["pre_asymptotic"] = schedule.pre_asymptotic;
  j["t0_negative"] = schedule.t0_negative;
  if (schedule.rank_three) {
    const auto& r3 = *schedule.rank_three;
    ordered_json r;
    r["log_q2_n"] = number(r3.log_q2_n);
    r["rate"] = exact(r3.rate);
    r["t_cutoff"] = number(r3.t_cutoff);
    r["t_0"] = number(r3.t_0);
    r["t_1"] = number(r3.t_1);
    r["r_0"] = number(r3.r_0);
    r["r_1"] = number(r3.r_1);
    r["window"] = number(r3.window);
    r["rate_equals_twice_cutoff_constant"] = r3.rate == 2 * schedule.cutoff_constant;
    r["identity_in_q"] = qcalc::rank_three_rate_identity();
    j["rank_three"] = r;
  }
  if (schedule.tree) {
    const auto& tree = *schedule.tree;
    ordered_json t;
    t["k"] = to_string(tree.k);
    t["rate"] = exact(tree.rate);
    t["log_k1_n"] = number(tree.log_k1_n);
    t["t_cutoff"] = number(tree.t_cutoff);
    t["rate_equals_cutoff_constant"] = tree.rate == schedule.cutoff_constant;
    t["identity_in_q"] = qcalc::tree_rate_identity();
    j["tree"] = t;
  }
  inv.out << j.dump(2) << '\n';
}

}  // namespace ramcut::cli
