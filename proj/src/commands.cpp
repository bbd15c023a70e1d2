#include "orbitkit/commands.hpp"

#include <fstream>

#include "orbitkit/classify.hpp"
#include "orbitkit/dimension.hpp"
#include "orbitkit/errors.hpp"
#include "orbitkit/reduction.hpp"

namespace orbitkit {

using nlohmann::ordered_json;

namespace {

ordered_json vec_to_json(const Vec& v) {
  ordered_json j = ordered_json::array();
  for (int i = 0; i < v.size(); ++i) j.push_back(v[i]);
  return j;
}

ordered_json poly_terms_json(const Polynomial& p) {
  ordered_json j = ordered_json::array();
  for (const auto& t : p.terms()) j.push_back(ordered_json{{"c", t.coeff}, {"e", t.exps}});
  return j;
}

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw std::runtime_error("cannot open " + path.string() + " for writing");
  os << text;
}

void write_report(const std::filesystem::path& out_dir, const ordered_json& report) {
  write_file(out_dir / "report.json", report.dump(2) + "\n");
}

std::filesystem::path prepare_out(const std::filesystem::path& out_dir) {
  std::filesystem::create_directories(out_dir);
  return out_dir;
}

std::vector<std::string> quotient_names(int k) {
  std::vector<std::string> names;
  for (int i = 0; i < k; ++i) names.push_back(k == 1 ? "s" : "s" + std::to_string(i + 1));
  return names;
}

} // namespace

ordered_json cmd_check(const Scenario& sc, const std::filesystem::path& out_dir) {
  prepare_out(out_dir);
  if (!sc.action) throw InputError("check: action required");

  ordered_json report;
  report["command"] = "check";
  report["scenario"] = sc.name;
  report["threshold"] = kCheckThreshold;

  const auto state_samples = sc.state_samples();
  const auto group_samples = sc.action->sample_elements();
  double worst = 0.0;

  if (sc.has_dynamics()) {
    const ControlSystem sys = sc.system();
    const double eq = equivariance_residual(sys, *sc.action, group_samples, state_samples,
                                            sys.control_model.sample_points());
    report["equivariance_residual"] = eq;
    worst = std::max(worst, eq);
  } else {
    report["equivariance_residual"] = nullptr;
  }

  ordered_json sections = ordered_json::array();
  for (const auto& sec : sc.sections) {
    const double r = section_invariance_residual(sec, *sc.action, state_samples);
    sections.push_back(ordered_json{{"label", sec.label}, {"residual", r}});
    worst = std::max(worst, r);
  }
  report["sections"] = std::move(sections);

  ordered_json fields = ordered_json::array();
  const FieldFamily family = sc.family();
  for (const auto& f : family.fields()) {
    const double r = field_invariance_residual(f, *sc.action, state_samples);
    fields.push_back(ordered_json{{"label", f.label}, {"residual", r}});
    worst = std::max(worst, r);
  }
  report["fields"] = std::move(fields);

  report["max_residual"] = worst;
  report["verdict"] = worst <= kCheckThreshold ? "pass" : "fail";
  write_report(out_dir, report);
  return report;
}

ordered_json cmd_reduce(const Scenario& sc, const std::filesystem::path& out_dir) {
  prepare_out(out_dir);
  if (!sc.action) throw InputError("reduce: action required");
  const auto inv = sc.invariant();
  if (!inv) throw InputError("reduce: invariant map required (catalog action or explicit)");

  const auto witnesses = sc.state_samples();
  const std::vector<double> t_grid{-1.0, -0.5, -0.25, 0.25, 0.5, 1.0};
  const auto names = quotient_names(inv->downstairs_dim());

  ordered_json report;
  report["command"] = "reduce";
  report["scenario"] = sc.name;
  report["quotient_dim"] = inv->downstairs_dim();
  ordered_json fields = ordered_json::array();

  Scenario reduced_sc;
  reduced_sc.name = sc.name + "-reduced";
  reduced_sc.state_model = inv->image().model;
  reduced_sc.base_point = inv->rho()(sc.base_point);
  for (const auto& p : sc.probes) reduced_sc.probes.push_back(inv->rho()(p));
  reduced_sc.sampler = sc.sampler;
  reduced_sc.integrator = sc.integrator;

  const FieldFamily family = sc.family();
  for (const auto& f : family.fields()) {
    ReducedVectorField red = reduce_field(f, *inv, witnesses);
    const CommutationResult comm =
        reduction_commutation_residual(f, *inv, red, sc.base_point, t_grid, sc.integrator);

    ordered_json fj;
    fj["label"] = f.label;
    fj["closed_form"] = red.closed_form;
    if (red.closed_form) {
      ordered_json comps = ordered_json::array();
      ordered_json pretty = ordered_json::array();
      for (const auto& p : red.field.map.outputs()) {
        comps.push_back(poly_terms_json(p));
        pretty.push_back(p.to_string(names));
      }
      fj["components"] = std::move(comps);
      fj["pretty"] = std::move(pretty);
      reduced_sc.explicit_fields.push_back(red.field);
    } else {
      fj["note"] = "numeric-only: tabulated over witness data, no closed form within degree bound";
    }
    fj["commutation_residual"] = comm.residual;
    fj["commutation_points_used"] = comm.points_used;
    fj["commutation_points_skipped"] = comm.points_skipped;
    fields.push_back(std::move(fj));
  }
  report["fields"] = std::move(fields);
  report["t_grid"] = t_grid;

  write_file(out_dir / "reduced_scenario.json", reduced_sc.to_json().dump(2) + "\n");
  report["reduced_scenario"] = "reduced_scenario.json";
  write_report(out_dir, report);
  return report;
}

ordered_json cmd_reach(const Scenario& sc, const std::filesystem::path& out_dir,
                       const CommandOverrides& ov) {
  prepare_out(out_dir);
  const FieldFamily family = sc.family();
  SamplerOptions opts = sc.sampler;
  if (ov.seed) opts.seed = *ov.seed;
  if (ov.words) opts.word_count = *ov.words;

  const OrbitSample cloud = accessible_sample(family, sc.base_point, opts, sc.integrator);

  {
    std::ofstream os(out_dir / "cloud.csv", std::ios::binary);
    cloud.write_cloud_csv(os);
  }
  {
    std::ofstream os(out_dir / "words.json", std::ios::binary);
    cloud.write_words_json(os);
  }

  ordered_json report;
  report["command"] = "reach";
  report["scenario"] = sc.name;
  report["seed"] = opts.seed;
  report["word_count"] = opts.word_count;
  report["surviving_points"] = cloud.size();
  report["dropped_words"] = cloud.dropped_words;
  report["replay_residual"] = cloud.replay_residual;
  report["base_point"] = vec_to_json(sc.base_point);
  write_report(out_dir, report);
  return report;
}

ordered_json cmd_classify(const Scenario& sc, const std::filesystem::path& out_dir,
                          const CommandOverrides& ov) {
  prepare_out(out_dir);
  if (sc.probes.empty()) throw InputError("classify: scenario has no probes");
  const FieldFamily family = sc.family();

  std::vector<const VectorField*> targets;
  if (!ov.field.empty()) {
    targets.push_back(&family.by_label(ov.field)); // throws on unknown label
  } else {
    for (const auto& f : family.fields()) targets.push_back(&f);
  }

  ordered_json report;
  report["command"] = "classify";
  report["scenario"] = sc.name;
  ordered_json fields = ordered_json::array();
  for (const VectorField* X : targets) {
    const ClassificationReport cls = classify_derivation(*X, sc.probes, sc.integrator);
    ordered_json fj;
    fj["label"] = X->label;
    fj["verdict"] = to_string(cls.verdict);
    ordered_json probes = ordered_json::array();
    for (std::size_t i = 0; i < cls.evidence.size(); ++i) {
      const auto& ev = cls.evidence[i];
      probes.push_back(ordered_json{{"probe", vec_to_json(ev.probe)},
                                    {"t_minus", ev.t_minus},
                                    {"t_plus", ev.t_plus},
                                    {"termination_minus", to_string(ev.termination_minus)},
                                    {"termination_plus", to_string(ev.termination_plus)},
                                    {"open_minus", ev.open_minus},
                                    {"open_plus", ev.open_plus},
                                    {"borderline", ev.borderline}});
      const IntegralCurve curve = maximal_curve(*X, ev.probe, sc.integrator);
      std::ofstream os(out_dir / ("curve_" + X->label + "_p" + std::to_string(i) + ".csv"),
                       std::ios::binary);
      curve.write_csv(os);
    }
    fj["probes"] = std::move(probes);
    fields.push_back(std::move(fj));
  }
  report["fields"] = std::move(fields);
  write_report(out_dir, report);
  return report;
}

ordered_json cmd_orbit_dim(const Scenario& sc, const std::filesystem::path& out_dir,
                           const CommandOverrides& ov) {
  prepare_out(out_dir);
  const FieldFamily family = sc.family();
  SamplerOptions opts = sc.sampler;
  if (ov.seed) opts.seed = *ov.seed;
  if (ov.words) opts.word_count = *ov.words;
  const double radius = ov.radius.value_or(kDefaultDimRadius);

  const OrbitSample cloud = accessible_sample(family, sc.base_point, opts, sc.integrator);
  {
    std::ofstream os(out_dir / "cloud.csv", std::ios::binary);
    cloud.write_cloud_csv(os);
  }

  DimensionReport dims;
  try {
    dims = verify_orbit_manifold(cloud, radius, kDefaultSvCutoff);
  } catch (const InsufficientSamplesError& e) {
    throw InsufficientSamplesError(std::string(e.what()) +
                                   "; consider raising the sampler word_count");
  }

  bool polynomial_family = true;
  for (const auto& f : family.fields())
    if (!f.map.is_polynomial()) polynomial_family = false;
  const int depth = ov.bracket_depth;
  const int rank =
      tangent_span_rank(family, sc.base_point, polynomial_family ? depth : 1);

  ordered_json report;
  report["command"] = "orbit-dim";
  report["scenario"] = sc.name;
  report["seed"] = opts.seed;
  report["word_count"] = opts.word_count;
  report["radius"] = dims.radius;
  report["sv_cutoff"] = dims.sv_cutoff;
  if (dims.global_dim)
    report["global_dim"] = *dims.global_dim;
  else
    report["global_dim"] = "inconsistent";
  report["tangent_span_rank"] = rank;
  report["bracket_depth"] = polynomial_family ? depth : 1;
  report["max_membership_residual"] = dims.max_membership_residual;
  report["cloud_points"] = cloud.size();
  report["dropped_words"] = cloud.dropped_words;
  ordered_json per_point = ordered_json::array();
  for (const auto& loc : dims.per_point) {
    per_point.push_back(ordered_json{{"point", vec_to_json(loc.point)},
                                     {"local_dim", loc.local_dim},
                                     {"singular_values", loc.singular_values}});
  }
  report["per_point"] = std::move(per_point);
  if (!dims.inconsistent_points.empty()) report["inconsistent_points"] = dims.inconsistent_points;
  write_report(out_dir, report);
  return report;
}

} // namespace orbitkit
