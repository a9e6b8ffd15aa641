#include "sjgeo/checks.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <thread>

#include "sjgeo/json_io.hpp"
#include "sjgeo/operators.hpp"
#include "sjgeo/oracles.hpp"

namespace sjgeo {

double relative_residual(double a, double b) {
  return std::abs(a - b) / (1.0 + std::max(std::abs(a), std::abs(b)));
}

double relative_residual(const CMatrix& a, const CMatrix& b) {
  return max_abs_diff(a, b) / (1.0 + std::max(max_abs(a), max_abs(b)));
}

namespace {

constexpr std::size_t kMaxRetries = 10;
constexpr double kInf = std::numeric_limits<double>::infinity();

struct Component {
  std::string label;
  double abs;
  double rel;
};

struct Sample {
  std::vector<Component> parts;
  json detail = json::object();
  std::optional<std::pair<double, double>> pair;  // (operator, LB)

  void scalar(const std::string& label, double a, double b) {
    parts.push_back({label, std::abs(a - b), relative_residual(a, b)});
  }
  void mats(const std::string& label, const std::vector<std::pair<CMatrix, CMatrix>>& ms) {
    Component c{label, 0.0, 0.0};
    for (const auto& [a, b] : ms) {
      c.abs = std::max(c.abs, max_abs_diff(a, b));
      c.rel = std::max(c.rel, relative_residual(a, b));
    }
    parts.push_back(c);
  }
  // residual of size `abs` on quantities of magnitude `scale`
  void scaled(const std::string& label, double abs, double scale) {
    parts.push_back({label, abs, abs / (1.0 + scale)});
  }
  void flag(const std::string& label, bool ok) { parts.push_back({label, ok ? 0.0 : 1.0, ok ? 0.0 : 1.0}); }
};

using Pairs = std::vector<std::pair<CMatrix, CMatrix>>;

Pairs parts(const HeisenbergElement& x, const HeisenbergElement& y) {
  return {{complexify(x.lambda), complexify(y.lambda)},
          {complexify(x.mu), complexify(y.mu)},
          {complexify(x.kappa), complexify(y.kappa)}};
}

Pairs parts(const JacobiElement& x, const JacobiElement& y) {
  Pairs p = parts(x.h, y.h);
  p.push_back({complexify(x.sp.matrix()), complexify(y.sp.matrix())});
  return p;
}

Pairs parts(const JacobiStarElement& x, const JacobiStarElement& y) {
  return {{x.g.p, y.g.p}, {x.g.q, y.g.q}, {x.xi, y.xi}, {complexify(x.kappa), complexify(y.kappa)}};
}

Pairs parts(const UpperPoint& x, const UpperPoint& y) { return {{x.omega, y.omega}, {x.z, y.z}}; }
Pairs parts(const DiskPoint& x, const DiskPoint& y) { return {{x.w, y.w}, {x.eta, y.eta}}; }
Pairs parts(const Tangent& x, const Tangent& y) { return {{x.dmat, y.dmat}, {x.dvec, y.dvec}}; }

double size_of(const JacobiElement& g) {
  return std::max({max_abs(g.sp.matrix()), max_abs(g.h.lambda), max_abs(g.h.mu), max_abs(g.h.kappa)});
}

double size_of(const JacobiStarElement& g) {
  return std::max({max_abs(g.g.p), max_abs(g.g.q), max_abs(g.xi), max_abs(g.kappa)});
}

Tangent random_tangent(Model model, std::size_t n, std::size_t m, Rng& rng) {
  return {model, rng.complex_symmetric(n, -1.0, 1.0), rng.complex_matrix(m, n, -1.0, 1.0)};
}

// Fields used wherever a check needs "5 test fields".
const std::vector<std::string>& five_fields() {
  static const std::vector<std::string> ids{"lin", "quad", "gauss", "prod", "logdet"};
  return ids;
}

ScalarField field_at(std::size_t index, Model model, const ChartLayout& layout, Rng& rng, const RVector& center) {
  const std::string& id = five_fields()[index % five_fields().size()];
  return make_field(id, model, layout, rng.next(), id == "gauss" ? std::optional<RVector>(center) : std::nullopt);
}

using SampleFn = std::function<Sample(std::size_t index, Rng& rng)>;

struct Definition {
  double tol;
  std::map<std::string, double> subtol;  // components with their own tolerance
  bool force_n1m1 = false;
  std::function<SampleFn(const CheckConfig&)> make;
};

// --- group-laws ---------------------------------------------------------

SampleFn group_laws(const CheckConfig& c) {
  return [c](std::size_t, Rng& rng) {
    Sample s;
    const JacobiElement g1 = random_jacobi(c.n, c.m, rng), g2 = random_jacobi(c.n, c.m, rng),
                        g3 = random_jacobi(c.n, c.m, rng);
    const double size = size_of(g1) * size_of(g2) * size_of(g3);

    const auto &h1 = g1.h, &h2 = g2.h, &h3 = g3.h;
    const HeisenbergElement he = heisenberg_identity(c.n, c.m);
    const HeisenbergElement h123 = heisenberg_mul(heisenberg_mul(h1, h2), h3);
    s.mats("heisenberg-assoc", parts(h123, heisenberg_mul(h1, heisenberg_mul(h2, h3))));
    Pairs id = parts(heisenberg_mul(h1, he), h1);
    for (auto& p : parts(heisenberg_mul(he, h1), h1)) id.push_back(p);
    s.mats("heisenberg-identity", id);
    Pairs inv = parts(heisenberg_mul(h1, heisenberg_inverse(h1)), he);
    for (auto& p : parts(heisenberg_mul(heisenberg_inverse(h1), h1), he)) inv.push_back(p);
    s.mats("heisenberg-inverse", inv);
    s.scaled("heisenberg-closure", heisenberg_defect(h123), size);

    const JacobiElement je = jacobi_identity(c.n, c.m);
    const JacobiElement j123 = jacobi_mul(jacobi_mul(g1, g2), g3);
    s.mats("jacobi-assoc", parts(j123, jacobi_mul(g1, jacobi_mul(g2, g3))));
    id = parts(jacobi_mul(g1, je), g1);
    for (auto& p : parts(jacobi_mul(je, g1), g1)) id.push_back(p);
    s.mats("jacobi-identity", id);
    inv = parts(jacobi_mul(g1, jacobi_inverse(g1)), je);
    for (auto& p : parts(jacobi_mul(jacobi_inverse(g1), g1), je)) inv.push_back(p);
    s.mats("jacobi-inverse", inv);
    s.scaled("jacobi-closure", jacobi_defect(j123), size * size);

    const JacobiStarElement s1 = theta_map(g1), s2 = theta_map(g2), s3 = theta_map(g3);
    const JacobiStarElement se = jacobistar_identity(c.n, c.m);
    const JacobiStarElement s123 = jacobistar_mul(jacobistar_mul(s1, s2), s3);
    s.mats("jacobistar-assoc", parts(s123, jacobistar_mul(s1, jacobistar_mul(s2, s3))));
    id = parts(jacobistar_mul(s1, se), s1);
    for (auto& p : parts(jacobistar_mul(se, s1), s1)) id.push_back(p);
    s.mats("jacobistar-identity", id);
    inv = parts(jacobistar_mul(s1, jacobistar_inverse(s1)), se);
    for (auto& p : parts(jacobistar_mul(jacobistar_inverse(s1), s1), se)) inv.push_back(p);
    s.mats("jacobistar-inverse", inv);
    const double ssize = size_of(s1) * size_of(s2) * size_of(s3);
    s.scaled("jacobistar-closure", jacobistar_defect(s123), ssize * ssize);

    s.detail = {{"g1", to_json(g1)}, {"g2", to_json(g2)}, {"g3", to_json(g3)}};
    return s;
  };
}

// --- theta-hom ------------------------------------------------------------

SampleFn theta_hom(const CheckConfig& c) {
  return [c](std::size_t, Rng& rng) {
    Sample s;
    const JacobiElement g1 = random_jacobi(c.n, c.m, rng), g2 = random_jacobi(c.n, c.m, rng);
    const JacobiStarElement t1 = theta_map(g1);
    s.mats("homomorphism", parts(theta_map(jacobi_mul(g1, g2)), jacobistar_mul(t1, theta_map(g2))));
    s.mats("tstar-conjugation", {{star_block_form(t1), tstar_conjugate(embed_sp(g1))}});
    const RMatrix e1 = embed_sp(g1);
    s.mats("embed-homomorphism", {{complexify(embed_sp(jacobi_mul(g1, g2))), complexify(e1 * embed_sp(g2))}});
    const RMatrix jk = j_matrix(e1.rows() / 2);
    const double esize = max_abs(e1);
    s.scaled("embed-symplectic", max_abs_diff(transpose(e1) * jk * e1, jk), esize * esize);
    s.mats("theta-identity", parts(theta_map(jacobi_identity(c.n, c.m)), jacobistar_identity(c.n, c.m)));
    const double tsize = size_of(t1);
    s.scaled("theta-membership", jacobistar_defect(t1), tsize * tsize);
    s.detail = {{"g1", to_json(g1)}, {"g2", to_json(g2)}};
    return s;
  };
}

// --- action-axioms --------------------------------------------------------

SampleFn action_axioms(const CheckConfig& c) {
  return [c](std::size_t, Rng& rng) {
    Sample s;
    const JacobiElement g1 = random_jacobi(c.n, c.m, rng), g2 = random_jacobi(c.n, c.m, rng);
    const UpperPoint p = random_upper_point(c.n, c.m, rng);
    const DiskPoint d = random_disk_point(c.n, c.m, rng);

    const CMatrix om12 = act_siegel(sp_mul(g1.sp, g2.sp), p.omega);
    s.mats("siegel-compat", {{om12, act_siegel(g1.sp, act_siegel(g2.sp, p.omega))}});
    const UpperPoint p12 = act_upper(jacobi_mul(g1, g2), p);
    s.mats("upper-compat", parts(p12, act_upper(g1, act_upper(g2, p))));

    const JacobiStarElement s1 = theta_map(g1), s2 = theta_map(g2);
    const JacobiStarElement s12 = jacobistar_mul(s1, s2);
    const CMatrix w12 = act_gstar(s12.g, d.w);
    s.mats("gstar-compat", {{w12, act_gstar(s1.g, act_gstar(s2.g, d.w))}});
    const DiskPoint d12 = act_disk(s12, d);
    s.mats("disk-compat", parts(d12, act_disk(s1, act_disk(s2, d))));

    Pairs id = parts(act_upper(jacobi_identity(c.n, c.m), p), p);
    for (auto& q : parts(act_disk(jacobistar_identity(c.n, c.m), d), d)) id.push_back(q);
    s.mats("identity", id);

    const std::string bad_upper = upper_violation(p12), bad_disk = disk_violation(d12);
    s.flag("in-domain", bad_upper.empty() && bad_disk.empty() && upper_margin(om12) > kMembershipMargin &&
                            disk_margin(w12) > kMembershipMargin);

    Pairs hc = parts(hc_pplus_component(s1, d), act_disk(s1, d));
    for (auto& q : parts(hc_pplus_component(s12, d), d12)) hc.push_back(q);
    s.mats("hc-pplus", hc);

    s.detail = {{"g1", to_json(g1)}, {"g2", to_json(g2)}, {"upper_point", to_json(p)}, {"disk_point", to_json(d)}};
    if (!bad_upper.empty()) s.detail["upper_violation"] = bad_upper;
    if (!bad_disk.empty()) s.detail["disk_violation"] = bad_disk;
    return s;
  };
}

// --- Cayley ---------------------------------------------------------------

SampleFn cayley_roundtrip(const CheckConfig& c) {
  return [c](std::size_t, Rng& rng) {
    Sample s;
    const DiskPoint d = random_disk_point(c.n, c.m, rng);
    s.mats("disk-roundtrip", parts(cayley_inv(cayley(d)), d));
    const JacobiElement g = random_jacobi(c.n, c.m, rng);
    const UpperPoint p = act_upper(g, random_upper_point(c.n, c.m, rng));
    s.mats("upper-roundtrip", parts(cayley(cayley_inv(p)), p));
    s.detail = {{"disk_point", to_json(d)}, {"upper_point", to_json(p)}};
    return s;
  };
}

SampleFn cayley_compat(const CheckConfig& c) {
  return [c](std::size_t, Rng& rng) {
    Sample s;
    const JacobiElement g = random_jacobi(c.n, c.m, rng);
    const DiskPoint d = random_disk_point(c.n, c.m, rng);
    s.mats("compat", parts(act_upper(g, cayley(d)), cayley(act_disk(theta_map(g), d))));
    s.detail = {{"g", to_json(g)}, {"disk_point", to_json(d)}, {"residual", check_cayley_compat(g, d)}};
    return s;
  };
}

// --- metrics --------------------------------------------------------------

SampleFn metric_invariance_upper(const CheckConfig& c) {
  return [c](std::size_t, Rng& rng) {
    Sample s;
    const JacobiElement g = random_jacobi(c.n, c.m, rng);
    const UpperPoint p = random_upper_point(c.n, c.m, rng);
    const Tangent t = random_tangent(Model::upper, c.n, c.m, rng);
    const Tangent pt = pushforward(g, p, t);
    const double q0 = q_upper(p, t, c.params);
    s.scalar("upper", q_upper(act_upper(g, p), pt, c.params), q0);
    s.scalar("siegel", q_siegel(act_siegel(g.sp, p.omega), pushforward_siegel(g.sp, p.omega, t.dmat)),
             q_siegel(p.omega, t.dmat));
    const Tangent t2{t.model, 2.0 * t.dmat, 2.0 * t.dvec};
    const Tangent pt2 = pushforward(g, p, t2);
    s.mats("pushforward-linearity", parts(pt2, Tangent{pt.model, 2.0 * pt.dmat, 2.0 * pt.dvec}));
    s.flag("positivity", q0 > 0.0);
    s.detail = {{"g", to_json(g)}, {"point", to_json(p)}, {"tangent", to_json(t)}};
    return s;
  };
}

SampleFn metric_invariance_disk(const CheckConfig& c) {
  return [c](std::size_t, Rng& rng) {
    Sample s;
    const JacobiStarElement g = theta_map(random_jacobi(c.n, c.m, rng));
    const DiskPoint d = random_disk_point(c.n, c.m, rng);
    const Tangent t = random_tangent(Model::disk, c.n, c.m, rng);
    const Tangent pt = pushforward(g, d, t);
    const double q0 = q_disk(d, t, c.params);
    s.scalar("disk", q_disk(act_disk(g, d), pt, c.params), q0);
    s.scalar("disk_n", q_disk_n(act_gstar(g.g, d.w), pushforward_gstar(g.g, d.w, t.dmat)), q_disk_n(d.w, t.dmat));
    const Tangent t2{t.model, 2.0 * t.dmat, 2.0 * t.dvec};
    s.mats("pushforward-linearity", parts(pushforward(g, d, t2), Tangent{pt.model, 2.0 * pt.dmat, 2.0 * pt.dvec}));
    s.flag("positivity", q0 > 0.0);
    s.detail = {{"g", to_json(g)}, {"point", to_json(d)}, {"tangent", to_json(t)}};
    return s;
  };
}

SampleFn cayley_isometry(const CheckConfig& c) {
  return [c](std::size_t, Rng& rng) {
    Sample s;
    const DiskPoint d = random_disk_point(c.n, c.m, rng);
    const Tangent t = random_tangent(Model::disk, c.n, c.m, rng);
    const Tangent ct = cayley_pushforward(d, t);
    const UpperPoint p = cayley(d);
    const double qd = q_disk(d, t, c.params);
    s.scalar("isometry", q_upper(p, ct, c.params), qd);
    s.scalar("isometry-matrix", q_siegel(p.omega, ct.dmat), q_disk_n(d.w, t.dmat));
    s.scalar("frame-form", q_disk_frame(d, t, c.params), qd);
    s.detail = {{"point", to_json(d)}, {"tangent", to_json(t)}};
    return s;
  };
}

void tensor_components(Sample& s, const std::string& prefix, const RMatrix& g,
                       const std::function<double(const RVector&)>& q, Rng& rng) {
  const double size = max_abs(g);
  s.scaled(prefix + "-symmetry", symmetry_defect(g), size);
  const std::vector<double> ev = symmetric_eigenvalues(g);
  s.flag(prefix + "-pd", !ev.empty() && ev.front() > 0.0);
  s.detail[prefix + "_min_eigenvalue"] = ev.empty() ? 0.0 : ev.front();
  RVector v(g.rows());
  for (double& x : v) x = rng.uniform(-1.0, 1.0);
  double vgv = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j) vgv += v[i] * g(i, j) * v[j];
  s.scalar(prefix + "-quadratic", vgv, q(v));
}

SampleFn tensor_pd(const CheckConfig& c) {
  return [c](std::size_t, Rng& rng) {
    Sample s;
    const ChartLayout layout{c.n, c.m};
    const UpperPoint p = random_upper_point(c.n, c.m, rng);
    tensor_components(s, "upper", metric_tensor(p, c.params).g,
                      [&](const RVector& v) { return q_upper(p, tangent_from_chart(Model::upper, layout, v), c.params); },
                      rng);
    const DiskPoint d = random_disk_point(c.n, c.m, rng);
    tensor_components(s, "disk", metric_tensor(d, c.params).g,
                      [&](const RVector& v) { return q_disk(d, tangent_from_chart(Model::disk, layout, v), c.params); },
                      rng);
    s.detail["upper_point"] = to_json(p);
    s.detail["disk_point"] = to_json(d);
    return s;
  };
}

// --- Laplacians -----------------------------------------------------------

RVector random_chart_point(Model model, const ChartLayout& layout, Rng& rng) {
  if (model == Model::upper) {
    const UpperPoint p = random_upper_point(layout.n, layout.m, rng);
    return to_chart(p.omega, p.z);
  }
  const DiskPoint d = random_disk_point(layout.n, layout.m, rng);
  return to_chart(d.w, d.eta);
}

json chart_point_json(Model model, const ChartLayout& layout, const RVector& x) {
  CMatrix mat, vec;
  from_chart(layout, x, mat, vec);
  return model == Model::upper ? to_json(UpperPoint{mat, vec}) : to_json(DiskPoint{mat, vec});
}

SampleFn lb_equivalence(OperatorKind op, MetricKind metric, const CheckConfig& c) {
  return [op, metric, c](std::size_t index, Rng& rng) {
    Sample s;
    const Model model = operator_model(op);
    const ChartLayout layout = operator_layout(op, c.n, c.m);
    const RVector x = random_chart_point(model, layout, rng);
    const ScalarField f = field_at(index, model, layout, rng, x);
    const double value = apply_operator(op, f, x, c.params);
    const TensorField g = [&](std::span<const double> y) { return metric_tensor(metric, layout, y, c.params).g; };
    const double lb = laplace_beltrami(f, x, g, second_step(x));
    s.scalar("operator-vs-lb", value, lb);
    s.pair = {value, lb};
    s.detail = {{"field", f.id}, {"point", chart_point_json(model, layout, x)}, {"operator", value}, {"lb", lb}};
    return s;
  };
}

// Op(f∘φ_g)(p) against (Op f)(g·p); f is centred at g·p when it is a bump.
double invariance_residual(Sample& s, OperatorKind op, std::size_t index, const JacobiElement& g,
                           const CheckConfig& c, Rng& rng) {
  const Model model = operator_model(op);
  const ChartLayout layout = operator_layout(op, c.n, c.m);
  const RVector x = random_chart_point(model, layout, rng);
  CMatrix mat, vec;
  from_chart(layout, x, mat, vec);
  RVector gx;
  ScalarField composed;
  const JacobiStarElement gs = theta_map(g);
  if (model == Model::upper) {
    if (layout.m == 0) {
      gx = to_chart(act_siegel(g.sp, mat), vec);
    } else {
      const UpperPoint q = act_upper(g, {mat, vec});
      gx = to_chart(q.omega, q.z);
    }
  } else {
    if (layout.m == 0) {
      gx = to_chart(act_gstar(gs.g, mat), vec);
    } else {
      const DiskPoint q = act_disk(gs, {mat, vec});
      gx = to_chart(q.w, q.eta);
    }
  }
  const ScalarField f = field_at(index, model, layout, rng, gx);
  composed = model == Model::upper ? compose(f, g) : compose(f, gs);
  const double lhs = apply_operator(op, composed, x, c.params);
  const double rhs = apply_operator(op, f, gx, c.params);
  s.scalar(to_string(op), lhs, rhs);
  s.detail[to_string(op)] = {{"field", f.id}, {"point", chart_point_json(model, layout, x)}, {"lhs", lhs}, {"rhs", rhs}};
  return lhs;
}

SampleFn laplacian_invariance(const CheckConfig& c) {
  return [c](std::size_t index, Rng& rng) {
    Sample s;
    const JacobiElement g = random_jacobi(c.n, c.m, rng);
    for (OperatorKind op : {OperatorKind::upper, OperatorKind::disk, OperatorKind::siegel, OperatorKind::disk_n})
      invariance_residual(s, op, index, g, c, rng);
    s.detail["g"] = to_json(g);
    return s;
  };
}

SampleFn remark41_invariance(const CheckConfig& c) {
  return [c](std::size_t index, Rng& rng) {
    Sample s;
    const JacobiElement g = random_jacobi(c.n, c.m, rng);
    for (OperatorKind op : {OperatorKind::D, OperatorKind::L, OperatorKind::Dtilde, OperatorKind::Ltilde})
      invariance_residual(s, op, index, g, c, rng);

    // The defining relations, evaluated on one field per model.
    const ChartLayout layout{c.n, c.m};
    const MetricParams unit{1.0, 1.0};
    const RVector xu = random_chart_point(Model::upper, layout, rng);
    const ScalarField fu = field_at(index, Model::upper, layout, rng, xu);
    const double quarter = 0.25 * apply_operator(OperatorKind::upper, fu, xu, unit);
    s.scalar("identity-L", quarter - apply_operator(OperatorKind::D, fu, xu),
             apply_operator(OperatorKind::L, fu, xu));
    const RVector xd = random_chart_point(Model::disk, layout, rng);
    const ScalarField fd = field_at(index, Model::disk, layout, rng, xd);
    s.scalar("identity-Ltilde",
             apply_operator(OperatorKind::Ltilde, fd, xd) + apply_operator(OperatorKind::Dtilde, fd, xd),
             apply_operator(OperatorKind::disk, fd, xd, unit));
    s.detail["g"] = to_json(g);
    return s;
  };
}

SampleFn reduce_n1m1(const CheckConfig&) {
  return [](std::size_t index, Rng& rng) {
    Sample s;
    const ChartLayout layout{1, 1};
    const MetricParams unit{1.0, 1.0};
    const DiskPoint d = random_disk_point(1, 1, rng);
    const Tangent t = random_tangent(Model::disk, 1, 1, rng);
    s.scalar("metric", q_disk(d, t, unit), q_disk_n1_display(d.w(0, 0), d.eta(0, 0), t.dmat(0, 0), t.dvec(0, 0)));

    const RVector x = to_chart(d.w, d.eta);
    const ScalarField f = field_at(index, Model::disk, layout, rng, x);
    const double display = lap_disk_n1_display(f, x, second_step(x));
    s.scalar("laplacian", apply_operator(OperatorKind::disk, f, x, unit), display);
    s.scalar("laplacian-printed", apply_operator(OperatorKind::disk, f, x, unit, Transcription::printed), display);
    s.detail = {{"point", to_json(d)}, {"tangent", to_json(t)}, {"field", f.id}};
    return s;
  };
}

SampleFn pushforward_identities(const CheckConfig& c) {
  return [c](std::size_t index, Rng& rng) {
    Sample s;
    const DiskPoint d = random_disk_point(c.n, c.m, rng);
    const Tangent t = random_tangent(Model::disk, c.n, c.m, rng);
    const Tangent ct = cayley_pushforward(d, t);
    s.mats("d-omega", {{ct.dmat, cayley_d_omega(d, t.dmat)}});
    s.mats("d-z", {{ct.dvec, cayley_d_z(d, t.dmat, t.dvec)}});

    const UpperPoint p = cayley(d);
    s.mats("y-identity", {{complexify(p.y()), complexify(y_from_disk(d))}});
    s.mats("v-identity", {{complexify(p.v()), complexify(v_from_disk(d))}});

    const Tangent tu = random_tangent(Model::upper, c.n, c.m, rng);
    s.mats("identity-element", parts(pushforward(jacobi_identity(c.n, c.m), p, tu), tu));
    JacobiElement tr = jacobi_identity(c.n, c.m);
    tr.h = random_heisenberg(c.n, c.m, rng);
    s.mats("translation", parts(pushforward(tr, p, tu), Tangent{Model::upper, tu.dmat,
                                                                tu.dvec + complexify(tr.h.lambda) * tu.dmat}));

    // Chain rule through Φ⁻¹: derivatives of F = f∘Φ⁻¹ at Φ(p) from those of f at p.
    const ChartLayout layout{c.n, c.m};
    const RVector xd = to_chart(d.w, d.eta);
    const ScalarField f = field_at(index, Model::disk, layout, rng, xd);
    ScalarField big_f{f.id, Model::upper, layout, [f](const CMatrix& om, const CMatrix& z) {
                        const DiskPoint q = cayley_inv({om, z});
                        return f.at(q.w, q.eta);
                      }};
    const RVector xu = to_chart(p.omega, p.z);
    const DerivativeBundle bd = wirtinger_bundle(f, xd, first_step(xd), true);
    const DerivativeBundle bu = wirtinger_bundle(big_f, xu, first_step(xu), true);
    const CMatrix iw = CMatrix::identity(c.n) - d.w;
    const cdouble half_over_i(0.0, -0.5);
    const CMatrix d_omega = half_over_i * (iw * bd.d_mat * iw - symmetrize(iw * bd.d_vec * d.eta));
    const CMatrix d_z = half_over_i * (iw * bd.d_vec);
    s.mats("chain-rule", {{bu.d_mat, d_omega}, {bu.d_vec, d_z}});

    s.detail = {{"point", to_json(d)}, {"tangent", to_json(t)}, {"field", f.id}};
    return s;
  };
}

const std::map<std::string, Definition>& registry() {
  static const std::map<std::string, Definition> r = [] {
    std::map<std::string, Definition> m;
    m["group-laws"] = {1e-10, {}, false, group_laws};
    m["theta-hom"] = {1e-10, {}, false, theta_hom};
    m["action-axioms"] = {1e-9, {}, false, action_axioms};
    m["cayley-roundtrip"] = {1e-10, {}, false, cayley_roundtrip};
    m["cayley-compat"] = {1e-9, {}, false, cayley_compat};
    m["metric-invariance-upper"] = {1e-5, {{"pushforward-linearity", 1e-6}}, false, metric_invariance_upper};
    m["metric-invariance-disk"] = {1e-5, {{"pushforward-linearity", 1e-6}}, false, metric_invariance_disk};
    m["cayley-isometry"] = {1e-5, {{"frame-form", 1e-10}}, false, cayley_isometry};
    m["tensor-pd"] = {1e-9, {}, false, tensor_pd};
    auto lb = [](OperatorKind op, MetricKind metric) {
      return [op, metric](const CheckConfig& c) { return lb_equivalence(op, metric, c); };
    };
    m["lb-equivalence-upper"] = {1e-3, {}, false, lb(OperatorKind::upper, MetricKind::upper)};
    m["lb-equivalence-disk"] = {1e-3, {}, false, lb(OperatorKind::disk, MetricKind::disk)};
    m["lb-equivalence-siegel"] = {1e-3, {}, false, lb(OperatorKind::siegel, MetricKind::siegel)};
    m["lb-equivalence-diskn"] = {1e-3, {}, false, lb(OperatorKind::disk_n, MetricKind::disk_n)};
    m["laplacian-invariance"] = {1e-3, {}, false, laplacian_invariance};
    m["remark41-invariance"] = {1e-3, {{"identity-L", 1e-8}, {"identity-Ltilde", 1e-8}}, false, remark41_invariance};
    m["reduce-n1m1"] = {1e-6, {{"metric", 1e-12}}, true, reduce_n1m1};
    m["pushforward-identities"] = {1e-6,
                                   {{"y-identity", 1e-10}, {"v-identity", 1e-10}, {"identity-element", 1e-10},
                                    {"chain-rule", 1e-4}},
                                   false,
                                   pushforward_identities};
    return m;
  }();
  return r;
}

struct Outcome {
  bool ok = false;
  Sample sample;
  std::string error;
  std::size_t retries = 0;
};

Outcome run_sample(const SampleFn& fn, std::size_t index, std::uint64_t seed) {
  Outcome out;
  std::string last;
  for (std::size_t attempt = 0; attempt <= kMaxRetries; ++attempt) {
    Rng rng(attempt == 0 ? seed : derive_seed(seed, attempt));
    try {
      out.sample = fn(index, rng);
      out.ok = true;
      out.retries = attempt;
      return out;
    } catch (const DomainMargin& e) {
      last = e.what();
    } catch (const std::exception& e) {
      out.error = e.what();
      out.retries = attempt;
      return out;
    }
  }
  out.retries = kMaxRetries;
  out.error = "retries exhausted: " + last;
  return out;
}

}  // namespace

const std::vector<std::string>& check_names() {
  static const std::vector<std::string> names{
      "group-laws",           "theta-hom",           "action-axioms",        "cayley-roundtrip",
      "cayley-compat",        "metric-invariance-upper", "metric-invariance-disk", "cayley-isometry",
      "tensor-pd",            "lb-equivalence-upper", "lb-equivalence-disk",  "lb-equivalence-siegel",
      "lb-equivalence-diskn", "laplacian-invariance", "remark41-invariance",  "reduce-n1m1",
      "pushforward-identities"};
  return names;
}

bool is_check(const std::string& name) { return registry().count(name) > 0; }

double default_tolerance(const std::string& check) {
  const auto it = registry().find(check);
  if (it == registry().end()) throw UnknownCheck("unknown check '" + check + "'");
  return it->second.tol;
}

CheckReport run_check(const std::string& name, const CheckConfig& config) {
  const auto it = registry().find(name);
  if (it == registry().end()) throw UnknownCheck("unknown check '" + name + "'");
  const Definition& def = it->second;
  if (config.n < 1 || config.m < 1) throw InvalidInput("n and m must be at least 1");
  if (config.samples < 1) throw InvalidInput("samples must be at least 1");
  require_valid(config.params);
  if (config.tol && !(*config.tol > 0.0)) throw InvalidInput("tol must be positive");

  CheckConfig cfg = config;
  if (def.force_n1m1) cfg.n = cfg.m = 1, cfg.params = {1.0, 1.0};

  const auto start = std::chrono::steady_clock::now();
  const SampleFn fn = def.make(cfg);
  std::vector<Outcome> outcomes(cfg.samples);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < cfg.samples; i = next++)
      outcomes[i] = run_sample(fn, i, derive_seed(cfg.seed, i));
  };
  const unsigned threads = std::max(1u, std::min<unsigned>(cfg.threads, static_cast<unsigned>(cfg.samples)));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  CheckReport r;
  r.check = name;
  r.n = cfg.n;
  r.m = cfg.m;
  r.a = cfg.params.a;
  r.b = cfg.params.b;
  r.samples = cfg.samples;
  r.seed = cfg.seed;
  r.tol = cfg.tol.value_or(def.tol);

  double best = -1.0, num = 0.0, den = 0.0;
  bool have_pairs = false;
  for (std::size_t i = 0; i < outcomes.size(); ++i) {
    const Outcome& o = outcomes[i];
    r.retries += o.retries;
    const std::uint64_t seed = derive_seed(cfg.seed, i);
    if (!o.ok) {
      ++r.failures;
      r.max_abs = kInf;
      if (best < kInf) {
        best = kInf;
        r.worst = {{"index", i}, {"seed", seed}, {"error", o.error}, {"retries", o.retries}};
      }
      continue;
    }
    if (o.sample.pair) {
      have_pairs = true;
      num += o.sample.pair->first * o.sample.pair->second;
      den += o.sample.pair->second * o.sample.pair->second;
    }
    for (const Component& c : o.sample.parts) {
      const auto sub = def.subtol.find(c.label);
      const double ctol = sub == def.subtol.end() ? def.tol : sub->second;
      const double score = std::isnan(c.rel) ? kInf : c.rel * (def.tol / ctol);
      ComponentSummary& cs = r.components[c.label];
      cs.tol = ctol;
      cs.max_abs = std::max(cs.max_abs, c.abs);
      cs.max_rel = std::max(cs.max_rel, std::isnan(c.rel) ? kInf : c.rel);
      r.max_abs = std::max(r.max_abs, c.abs);
      if (score > best) {
        best = score;
        r.worst = {{"index", i},      {"seed", seed},          {"component", c.label}, {"abs", c.abs},
                   {"rel", c.rel},    {"component_tol", ctol}, {"retries", o.retries}, {"detail", o.sample.detail}};
      }
    }
  }
  r.max_rel = std::max(best, 0.0);
  if (have_pairs && den > 0.0) r.constant = num / den;
  r.pass = r.failures == 0 && r.max_rel <= r.tol;
  r.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return r;
}

std::vector<CheckReport> run_all(const CheckConfig& config) {
  std::vector<CheckReport> out;
  for (const auto& name : check_names()) out.push_back(run_check(name, config));
  return out;
}

json to_json(const CheckReport& r, bool include_timing) {
  json j = {{"check", r.check},     {"n", r.n},         {"m", r.m},
            {"A", r.a},             {"B", r.b},         {"samples", r.samples},
            {"seed", r.seed},       {"max_abs", r.max_abs}, {"max_rel", r.max_rel},
            {"tol", r.tol},         {"pass", r.pass},   {"constant", nullptr},
            {"worst", r.worst},     {"retries", r.retries}, {"failures", r.failures}};
  if (r.constant) j["constant"] = *r.constant;
  json comps = json::object();
  for (const auto& [label, c] : r.components)
    comps[label] = {{"max_abs", c.max_abs}, {"max_rel", c.max_rel}, {"tol", c.tol}};
  j["components"] = std::move(comps);
  if (include_timing) j["ms"] = r.ms;
  return j;
}

namespace {

std::string num(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.15g", v);
  return buf;
}

}  // namespace

std::string csv_header() {
  return "check,n,m,A,B,samples,seed,max_abs,max_rel,tol,pass,constant,retries,failures,worst_index,worst_component,ms";
}

std::string to_csv_row(const CheckReport& r) {
  std::string row = r.check + "," + std::to_string(r.n) + "," + std::to_string(r.m) + "," + num(r.a) + "," +
                    num(r.b) + "," + std::to_string(r.samples) + "," + std::to_string(r.seed) + "," +
                    num(r.max_abs) + "," + num(r.max_rel) + "," + num(r.tol) + "," + (r.pass ? "true" : "false") +
                    "," + (r.constant ? num(*r.constant) : "") + "," + std::to_string(r.retries) + "," +
                    std::to_string(r.failures) + ",";
  if (r.worst.contains("index")) row += std::to_string(r.worst["index"].get<std::size_t>());
  row += ",";
  if (r.worst.contains("component")) row += r.worst["component"].get<std::string>();
  row += "," + num(r.ms);
  return row;
}

}  // namespace sjgeo
