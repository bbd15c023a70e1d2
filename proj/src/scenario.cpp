#include "orbitkit/scenario.hpp"

#include <set>

#include "orbitkit/catalog.hpp"
#include "orbitkit/errors.hpp"

namespace orbitkit {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

// ---- JSON -> domain types -------------------------------------------------

Vec vec_from_json(const json& j) {
  Vec v(j.size());
  for (std::size_t i = 0; i < j.size(); ++i) v[static_cast<int>(i)] = j[i].get<double>();
  return v;
}

Mat mat_from_json(const json& j) {
  const int rows = static_cast<int>(j.size());
  if (rows == 0) throw InputError("scenario: empty matrix");
  const int cols = static_cast<int>(j[0].size());
  Mat m(rows, cols);
  for (int r = 0; r < rows; ++r) {
    if (static_cast<int>(j[r].size()) != cols) throw InputError("scenario: ragged matrix");
    for (int c = 0; c < cols; ++c) m(r, c) = j[r][c].get<double>();
  }
  return m;
}

// Scalar polynomial as a term list: [{"c": coeff, "e": [exponents]}].
Polynomial poly_from_json(const json& j, int nvars) {
  std::vector<Term> terms;
  for (const auto& tj : j) {
    Term t;
    t.coeff = tj.at("c").get<double>();
    for (const auto& e : tj.at("e")) t.exps.push_back(e.get<int>());
    if (static_cast<int>(t.exps.size()) != nvars)
      throw InputError("scenario: term exponent list has wrong arity");
    terms.push_back(std::move(t));
  }
  return Polynomial(nvars, std::move(terms));
}

SmoothMap map_from_json(const json& j) {
  const int inputs = j.at("inputs").get<int>();
  std::vector<Polynomial> outs;
  for (const auto& oj : j.at("outputs")) outs.push_back(poly_from_json(oj, inputs));
  return SmoothMap::polynomial(std::move(outs));
}

SubsetModel model_from_json(const json& j) {
  const int dim = j.at("dim").get<int>();
  std::vector<SmoothMap> eqs, ineqs;
  if (j.contains("equalities"))
    for (const auto& p : j["equalities"]) eqs.push_back(SmoothMap::scalar(poly_from_json(p, dim)));
  if (j.contains("inequalities"))
    for (const auto& p : j["inequalities"])
      ineqs.push_back(SmoothMap::scalar(poly_from_json(p, dim)));
  const double tol = j.value("membership_tol", SubsetModel::kDefaultMembershipTol);
  return SubsetModel(dim, std::move(eqs), std::move(ineqs), tol);
}

ControlModel control_from_json(const json& j) {
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "box") return ControlModel::box(vec_from_json(j.at("lower")), vec_from_json(j.at("upper")));
  if (kind == "finite") {
    std::vector<Vec> pts;
    for (const auto& p : j.at("points")) pts.push_back(vec_from_json(p));
    return ControlModel::finite_set(std::move(pts));
  }
  throw InputError("scenario: unknown control model kind '" + kind + "'");
}

// ---- domain types -> JSON -------------------------------------------------

ordered_json vec_to_json(const Vec& v) {
  ordered_json j = ordered_json::array();
  for (int i = 0; i < v.size(); ++i) j.push_back(v[i]);
  return j;
}

ordered_json mat_to_json(const Mat& m) {
  ordered_json j = ordered_json::array();
  for (int r = 0; r < m.rows(); ++r) {
    ordered_json row = ordered_json::array();
    for (int c = 0; c < m.cols(); ++c) row.push_back(m(r, c));
    j.push_back(std::move(row));
  }
  return j;
}

ordered_json poly_to_json(const Polynomial& p) {
  ordered_json j = ordered_json::array();
  for (const auto& t : p.terms()) {
    ordered_json tj;
    tj["c"] = t.coeff;
    tj["e"] = t.exps;
    j.push_back(std::move(tj));
  }
  return j;
}

ordered_json map_to_json(const SmoothMap& m) {
  ordered_json j;
  j["inputs"] = m.domain_dim();
  ordered_json outs = ordered_json::array();
  for (const auto& p : m.outputs()) outs.push_back(poly_to_json(p));
  j["outputs"] = std::move(outs);
  return j;
}

ordered_json model_to_json(const SubsetModel& m) {
  ordered_json j;
  j["dim"] = m.ambient_dim();
  ordered_json eqs = ordered_json::array();
  for (const auto& f : m.equalities()) eqs.push_back(poly_to_json(f.outputs()[0]));
  j["equalities"] = std::move(eqs);
  ordered_json ineqs = ordered_json::array();
  for (const auto& f : m.inequalities()) ineqs.push_back(poly_to_json(f.outputs()[0]));
  j["inequalities"] = std::move(ineqs);
  j["membership_tol"] = m.membership_tol();
  return j;
}

ordered_json control_to_json(const ControlModel& c) {
  ordered_json j;
  if (c.kind() == ControlModel::Kind::Box) {
    j["kind"] = "box";
    j["lower"] = vec_to_json(c.lower());
    j["upper"] = vec_to_json(c.upper());
  } else {
    j["kind"] = "finite";
    ordered_json pts = ordered_json::array();
    for (const auto& p : c.points()) pts.push_back(vec_to_json(p));
    j["points"] = std::move(pts);
  }
  return j;
}

// ---- demo construction helpers ---------------------------------------------

Polynomial term1(int nvars, double c, std::vector<int> e) {
  return Polynomial(nvars, {Term{c, std::move(e)}});
}

SmoothMap const_section(int n, int m, double value) {
  std::vector<Polynomial> outs;
  for (int j = 0; j < m; ++j) outs.push_back(Polynomial::constant(n, value));
  return SmoothMap::polynomial(std::move(outs));
}

} // namespace

ControlSystem Scenario::system() const {
  if (!has_dynamics()) throw InputError("scenario '" + name + "': no dynamics/control model");
  return ControlSystem(state_model, *control_model, *dynamics);
}

FieldFamily Scenario::family() const {
  std::vector<VectorField> fields;
  if (has_dynamics() && !sections.empty()) {
    const ControlSystem sys = system();
    for (const auto& sec : sections) fields.push_back(closed_loop_field(sys, sec, state_samples()));
  }
  for (const auto& f : explicit_fields) fields.push_back(f);
  if (fields.empty()) throw InputError("scenario '" + name + "': no fields (sections or explicit)");
  return FieldFamily(std::move(fields));
}

std::optional<InvariantMap> Scenario::invariant() const {
  if (invariant_map_explicit) return invariant_map_explicit;
  if (catalog_name) return catalog_action(*catalog_name).second;
  return std::nullopt;
}

std::vector<Vec> Scenario::state_samples() const {
  std::vector<Vec> pts = probes;
  if (base_point.size() > 0) pts.push_back(base_point);
  return pts;
}

Scenario Scenario::from_json(const json& j) {
  try {
    if (j.value("schema", 0) != 1) throw InputError("scenario: missing or unsupported schema (want 1)");
    Scenario sc;
    sc.name = j.at("name").get<std::string>();
    sc.state_model = model_from_json(j.at("state_model"));
    const int n = sc.state_model.ambient_dim();

    if (j.contains("control_model")) sc.control_model = control_from_json(j["control_model"]);
    if (j.contains("dynamics")) {
      sc.dynamics = map_from_json(j["dynamics"]);
      if (!sc.control_model) throw InputError("scenario: dynamics without control_model");
      if (sc.dynamics->domain_dim() != n + sc.control_model->dim() ||
          sc.dynamics->codomain_dim() != n)
        throw InputError("scenario: dynamics dimensions inconsistent with state/control models");
    }
    if (j.contains("sections")) {
      for (const auto& sj : j["sections"]) {
        const std::string label = sj.at("label").get<std::string>();
        SmoothMap map = map_from_json(sj);
        SubsetModel dom = sj.contains("domain") ? model_from_json(sj["domain"])
                                                : SubsetModel::full_space(n);
        sc.sections.emplace_back(std::move(map), std::move(dom), label);
      }
      if (!sc.sections.empty() && !sc.has_dynamics())
        throw InputError("scenario: sections require dynamics and a control model");
    }
    if (j.contains("fields")) {
      for (const auto& fj : j["fields"]) {
        SmoothMap map = map_from_json(fj);
        sc.explicit_fields.emplace_back(std::move(map), sc.state_model,
                                        fj.at("label").get<std::string>());
      }
    }
    if (j.contains("action")) {
      const auto& aj = j["action"];
      if (aj.contains("catalog")) {
        sc.catalog_name = aj["catalog"].get<std::string>();
        sc.action = catalog_action(*sc.catalog_name).first;
      } else {
        const std::string kind = aj.at("kind").get<std::string>();
        if (kind == "finite") {
          std::vector<Mat> elems;
          for (const auto& mj : aj.at("matrices")) elems.push_back(mat_from_json(mj));
          sc.action = GroupAction::finite(std::move(elems));
        } else if (kind == "one-parameter") {
          std::vector<double> params;
          if (aj.contains("sample_params"))
            for (const auto& p : aj["sample_params"]) params.push_back(p.get<double>());
          sc.action = GroupAction::one_parameter(mat_from_json(aj.at("generator")), params);
        } else {
          throw InputError("scenario: unknown action kind '" + kind + "'");
        }
      }
      if (sc.action->dim() != n) throw InputError("scenario: action dimension mismatch");
    }
    if (j.contains("invariant_map")) {
      if (!sc.action) throw InputError("scenario: invariant_map without action");
      const auto& ij = j["invariant_map"];
      SmoothMap rho = map_from_json(ij.at("rho"));
      QuotientModel quot{model_from_json(ij.at("quotient"))};
      sc.invariant_map_explicit = InvariantMap(std::move(rho), *sc.action, std::move(quot));
    }
    if (j.contains("base_point")) sc.base_point = vec_from_json(j["base_point"]);
    if (sc.base_point.size() != n) throw InputError("scenario: base_point dimension mismatch");
    if (j.contains("probes"))
      for (const auto& p : j["probes"]) {
        Vec v = vec_from_json(p);
        if (v.size() != n) throw InputError("scenario: probe dimension mismatch");
        sc.probes.push_back(std::move(v));
      }
    if (j.contains("sampler")) {
      const auto& s = j["sampler"];
      sc.sampler.word_count = s.value("word_count", sc.sampler.word_count);
      sc.sampler.max_letters = s.value("max_letters", sc.sampler.max_letters);
      sc.sampler.time_scale = s.value("time_scale", sc.sampler.time_scale);
    }
    sc.sampler.seed = j.value("seed", std::uint64_t{0});
    if (j.contains("integrator")) {
      const auto& ij = j["integrator"];
      const std::string method = ij.value("method", std::string("rk45"));
      if (method == "rk45")
        sc.integrator.method = IntegratorConfig::Method::Rk45Adaptive;
      else if (method == "rk4")
        sc.integrator.method = IntegratorConfig::Method::Rk4Fixed;
      else
        throw InputError("scenario: unknown integrator method '" + method + "'");
      sc.integrator.step = ij.value("step", sc.integrator.step);
      sc.integrator.rel_tol = ij.value("rel_tol", sc.integrator.rel_tol);
      sc.integrator.abs_tol = ij.value("abs_tol", sc.integrator.abs_tol);
      sc.integrator.max_step = ij.value("max_step", sc.integrator.max_step);
      sc.integrator.max_time = ij.value("max_time", sc.integrator.max_time);
      sc.integrator.escape_tol = ij.value("escape_tol", sc.integrator.escape_tol);
    }
    sc.integrator.validate();

    // All section/field labels must be distinct; family() enforces it.
    std::set<std::string> labels;
    for (const auto& s : sc.sections)
      if (!labels.insert(s.label).second) throw InputError("scenario: duplicate label " + s.label);
    for (const auto& f : sc.explicit_fields)
      if (!labels.insert(f.label).second) throw InputError("scenario: duplicate label " + f.label);
    return sc;
  } catch (const json::exception& e) {
    throw InputError(std::string("scenario: malformed JSON: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw InputError(std::string("scenario: ") + e.what());
  }
}

ordered_json Scenario::to_json() const {
  ordered_json j;
  j["schema"] = 1;
  j["name"] = name;
  j["state_model"] = model_to_json(state_model);
  if (control_model) j["control_model"] = control_to_json(*control_model);
  if (dynamics) j["dynamics"] = map_to_json(*dynamics);
  if (!sections.empty()) {
    ordered_json arr = ordered_json::array();
    for (const auto& s : sections) {
      ordered_json sj = map_to_json(s.map);
      sj["label"] = s.label;
      if (!s.domain.unconstrained()) sj["domain"] = model_to_json(s.domain);
      arr.push_back(std::move(sj));
    }
    j["sections"] = std::move(arr);
  }
  if (!explicit_fields.empty()) {
    ordered_json arr = ordered_json::array();
    for (const auto& f : explicit_fields) {
      ordered_json fj = map_to_json(f.map);
      fj["label"] = f.label;
      arr.push_back(std::move(fj));
    }
    j["fields"] = std::move(arr);
  }
  if (catalog_name) {
    j["action"] = ordered_json{{"catalog", *catalog_name}};
  } else if (action) {
    ordered_json aj;
    if (action->kind() == GroupAction::Kind::Finite) {
      aj["kind"] = "finite";
      ordered_json ms = ordered_json::array();
      for (const auto& m : action->elements()) ms.push_back(mat_to_json(m));
      aj["matrices"] = std::move(ms);
    } else {
      aj["kind"] = "one-parameter";
      aj["generator"] = mat_to_json(action->generator());
      aj["sample_params"] = action->sample_params();
    }
    j["action"] = std::move(aj);
  }
  if (invariant_map_explicit) {
    ordered_json ij;
    ij["rho"] = map_to_json(invariant_map_explicit->rho());
    ij["quotient"] = model_to_json(invariant_map_explicit->image().model);
    j["invariant_map"] = std::move(ij);
  }
  j["base_point"] = vec_to_json(base_point);
  ordered_json pr = ordered_json::array();
  for (const auto& p : probes) pr.push_back(vec_to_json(p));
  j["probes"] = std::move(pr);
  j["sampler"] = ordered_json{{"word_count", sampler.word_count},
                              {"max_letters", sampler.max_letters},
                              {"time_scale", sampler.time_scale}};
  j["integrator"] =
      ordered_json{{"method", integrator.method == IntegratorConfig::Method::Rk45Adaptive
                                  ? "rk45"
                                  : "rk4"},
                   {"step", integrator.step},
                   {"rel_tol", integrator.rel_tol},
                   {"abs_tol", integrator.abs_tol},
                   {"max_step", integrator.max_step},
                   {"max_time", integrator.max_time},
                   {"escape_tol", integrator.escape_tol}};
  j["seed"] = sampler.seed;
  return j;
}

Scenario Scenario::demo(const std::string& name) {
  Scenario sc;
  sc.name = name;

  auto vec1 = [](double a) {
    Vec v(1);
    v << a;
    return v;
  };
  auto vec2 = [](double a, double b) {
    Vec v(2);
    v << a, b;
    return v;
  };

  if (name == "z2-line-scale") {
    // phi(x, u) = u x with unit feedback: the scaling field x d/dx on R.
    sc.state_model = SubsetModel::full_space(1);
    sc.control_model = ControlModel::box(vec1(-2), vec1(2));
    sc.dynamics = SmoothMap::scalar(term1(2, 1.0, {1, 1}));
    sc.sections.emplace_back(const_section(1, 1, 1.0), "unit");
    sc.catalog_name = "z2-line";
    sc.action = catalog_action("z2-line").first;
    sc.base_point = vec1(1);
    sc.probes = {vec1(-2), vec1(-1), vec1(0.5), vec1(1), vec1(2)};
    return sc;
  }
  if (name == "so2-radial" || name == "so2-rotation-only" || name == "so2-broken") {
    sc.state_model = SubsetModel::full_space(2);
    sc.control_model = ControlModel::box(vec1(-2), vec1(2));
    if (name == "so2-radial") {
      // phi((x,y), u) = u (x, y)
      sc.dynamics = SmoothMap::polynomial({term1(3, 1.0, {1, 0, 1}), term1(3, 1.0, {0, 1, 1})});
    } else if (name == "so2-rotation-only") {
      // phi((x,y), u) = u (-y, x)
      sc.dynamics = SmoothMap::polynomial({term1(3, -1.0, {0, 1, 1}), term1(3, 1.0, {1, 0, 1})});
    } else {
      // constant drift (u, 0): breaks the rotational symmetry
      sc.dynamics = SmoothMap::polynomial({term1(3, 1.0, {0, 0, 1}), Polynomial(3)});
    }
    sc.sections.emplace_back(const_section(2, 1, 1.0), "unit");
    sc.catalog_name = "so2-plane";
    sc.action = catalog_action("so2-plane").first;
    sc.base_point = vec2(1, 0);
    sc.probes = {vec2(1, 0),  vec2(0, 1),          vec2(-1, 0),
                 vec2(0, -1), vec2(0.5, -0.75), vec2(1, 1)};
    return sc;
  }
  if (name == "z2-plane-cone") {
    // Radial field on the plane, reduced through the cone invariants.
    sc.state_model = SubsetModel::full_space(2);
    sc.control_model = ControlModel::box(vec1(-2), vec1(2));
    sc.dynamics = SmoothMap::polynomial({term1(3, 1.0, {1, 0, 1}), term1(3, 1.0, {0, 1, 1})});
    sc.sections.emplace_back(const_section(2, 1, 1.0), "unit");
    sc.catalog_name = "z2-plane";
    sc.action = catalog_action("z2-plane").first;
    sc.base_point = vec2(1, 2);
    sc.probes = {vec2(1, 2), vec2(-1, -2), vec2(0.5, -0.5), vec2(-0.5, 0.5), vec2(1, 0), vec2(0, 1)};
    return sc;
  }
  if (name == "brockett-pair") {
    // phi((x,y),(u1,u2)) = (u1, u2 x); the bracket of the two closed-loop
    // fields opens the second direction at the origin.
    sc.state_model = SubsetModel::full_space(2);
    sc.control_model = ControlModel::box(vec2(-1, -1), vec2(1, 1));
    sc.dynamics = SmoothMap::polynomial({term1(4, 1.0, {0, 0, 1, 0}), term1(4, 1.0, {1, 0, 0, 1})});
    sc.sections.emplace_back(
        SmoothMap::polynomial({Polynomial::constant(2, 1.0), Polynomial(2)}), "u1");
    sc.sections.emplace_back(
        SmoothMap::polynomial({Polynomial(2), Polynomial::constant(2, 1.0)}), "u2");
    sc.base_point = vec2(0, 0);
    sc.probes = {vec2(0, 0)};
    sc.sampler.time_scale = 0.6;
    sc.sampler.max_letters = 6;
    return sc;
  }
  if (name == "circle-orbit") {
    // Rotation family through (1, 0); x^2 + y^2 is conserved.
    sc.state_model = SubsetModel::full_space(2);
    sc.control_model = ControlModel::box(vec1(-2), vec1(2));
    sc.dynamics = SmoothMap::polynomial({term1(3, -1.0, {0, 1, 1}), term1(3, 1.0, {1, 0, 1})});
    sc.sections.emplace_back(const_section(2, 1, 1.0), "unit");
    sc.base_point = vec2(1, 0);
    sc.probes = {vec2(1, 0)};
    sc.sampler.time_scale = 1.5;
    return sc;
  }
  if (name == "halfline" || name == "fullline") {
    sc.state_model =
        name == "halfline"
            ? SubsetModel(1, {}, {SmoothMap::scalar(Polynomial::variable(1, 0))})
            : SubsetModel::full_space(1);
    sc.explicit_fields.emplace_back(SmoothMap::scalar(term1(1, 1.0, {1})), sc.state_model, "scale");
    sc.explicit_fields.emplace_back(SmoothMap::scalar(term1(1, 1.0, {0})), sc.state_model, "right");
    sc.explicit_fields.emplace_back(SmoothMap::scalar(term1(1, -1.0, {0})), sc.state_model, "left");
    sc.base_point = vec1(1);
    sc.probes = {vec1(0), vec1(1)};
    return sc;
  }
  throw InputError("demo: unknown scenario '" + name + "'");
}

std::vector<std::string> Scenario::demo_names() {
  return {"z2-line-scale", "so2-radial",   "so2-rotation-only", "so2-broken", "z2-plane-cone",
          "brockett-pair", "circle-orbit", "halfline",          "fullline"};
}

} // namespace orbitkit
