#include "spintorus/certificates.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "spintorus/errors.hpp"
#include "spintorus/monodromy.hpp"
#include "spintorus/rmatrix.hpp"
#include "spintorus/sov_basis.hpp"

namespace spintorus {

namespace {

class PointSampler {
 public:
  explicit PointSampler(std::uint64_t seed) : rng_(seed) {}
  Complex operator()() {
    const double re = box_(rng_);
    const double im = box_(rng_);
    return {re, im};
  }

 private:
  std::mt19937_64 rng_;
  std::uniform_real_distribution<double> box_{-2.0, 2.0};
};

CheckResult finish(std::string name, double residual, double tolerance, std::string detail = {}) {
  CheckResult r;
  r.name = std::move(name);
  r.residual = residual;
  r.tolerance = tolerance;
  r.passed = std::isfinite(residual) && residual < tolerance;
  r.detail = std::move(detail);
  return r;
}

CheckResult skipped(std::string name, double tolerance, std::string why) {
  CheckResult r;
  r.name = std::move(name);
  r.tolerance = tolerance;
  r.passed = true;
  r.skipped = true;
  r.detail = std::move(why);
  return r;
}

// Embeds a two-site matrix on factors (i, j) of V⊗V⊗V.
Matrix on3(const Matrix& r, int i, int j, int n) { return embed_two_site_operator(r, i, j, {n, 3}); }

double rel(const Matrix& diff, double scale) { return max_abs(diff) / std::max(scale, 1.0); }

std::string rank_label(int n) { return "n=" + std::to_string(n); }

}  // namespace

Tolerances default_tolerances() {
  return {
      {"QYBE", 1e-12},
      {"initial-condition", 1e-13},
      {"unitarity", 1e-11},
      {"crossing", 1e-11},
      {"fusion-rank", 1e-11},
      {"twist-invariance", 1e-13},
      {"commuting-transfer", 1e-11},
      {"exchange-relations", 1e-11},
      {"vacuum-actions", 1e-11},
      {"orthogonality", 1e-9},
      {"off-diagonal", 1e-11},
      {"identity-resolution", 1e-9},
      {"decompositions", 1e-9},
      {"vanishing", 1e-11},
      {"product-identity", 1e-10},
      {"hamiltonian", 1e-8},
      {"spectrum", 1e-9},
      {"reconstruction", 1e-8},
      {"homogeneous-angle", 1e-4},
  };
}

double tolerance_for(const Tolerances& tolerances, const std::string& name) {
  if (const auto it = tolerances.find(name); it != tolerances.end()) return it->second;
  const auto defaults = default_tolerances();
  if (const auto it = defaults.find(name); it != defaults.end()) return it->second;
  throw SpecError("no tolerance known for check '" + name + "'");
}

CheckResult check_qybe(const RParams& p, const CheckOptions& options, double tolerance) {
  p.validate();
  const int n = p.rank;
  PointSampler sample(options.seed);
  double worst = 0.0;
  for (int s = 0; s < options.samples; ++s) {
    const Complex u1 = sample(), u2 = sample(), u3 = sample();
    const Matrix r12 = on3(r_matrix(u1 - u2, p), 1, 2, n);
    const Matrix r13 = on3(r_matrix(u1 - u3, p), 1, 3, n);
    const Matrix r23 = on3(r_matrix(u2 - u3, p), 2, 3, n);
    const Matrix lhs = r12 * r13 * r23;
    const Matrix rhs = r23 * r13 * r12;
    worst = std::max(worst, rel(lhs - rhs, max_abs(lhs)));
  }
  return finish("QYBE", worst, tolerance, rank_label(n));
}

CheckResult check_initial_condition(const RParams& p, double tolerance) {
  p.validate();
  const Matrix expected = std::sinh(p.eta) * permutation_matrix(p.rank);
  return finish("initial-condition", rel(r_matrix(0.0, p) - expected, max_abs(expected)), tolerance,
                rank_label(p.rank));
}

CheckResult check_unitarity(const RParams& p, const CheckOptions& options, double tolerance) {
  p.validate();
  const int n = p.rank;
  PointSampler sample(options.seed);
  double worst = 0.0;
  for (int s = 0; s < options.samples; ++s) {
    const Complex u = sample();
    const Matrix lhs = r_matrix(u, p) * swap_factors(r_matrix(-u, p), n);
    const Complex rho = -std::sinh(u + p.eta) * std::sinh(u - p.eta);
    worst = std::max(worst, rel(lhs - rho * Matrix::Identity(n * n, n * n), max_abs(lhs)));
  }
  return finish("unitarity", worst, tolerance, rank_label(n));
}

CheckResult check_crossing(const RParams& p, const CheckOptions& options, double tolerance) {
  p.validate();
  const int n = p.rank;
  PointSampler sample(options.seed);
  double worst = 0.0;
  for (int s = 0; s < options.samples; ++s) {
    const Complex u = sample();
    const Complex shifted = -u - static_cast<double>(n) * p.eta;
    const Matrix lhs = partial_transpose_first(r_matrix(u, p), n) *
                       partial_transpose_first(swap_factors(r_matrix(shifted, p), n), n);
    const Complex rho = -std::sinh(u) * std::sinh(u + static_cast<double>(n) * p.eta);
    worst = std::max(worst, rel(lhs - rho * Matrix::Identity(n * n, n * n), max_abs(lhs)));
  }
  return finish("crossing", worst, tolerance, rank_label(n));
}

CheckResult check_fusion_rank(const RParams& p, double tolerance) {
  p.validate();
  const int n = p.rank;
  const Matrix r = r_matrix(-p.eta, p);
  const Matrix projector = r / (-2.0 * std::sinh(p.eta));
  const int rank = numerical_rank(r);
  const int expected = n * (n - 1) / 2;
  auto result = finish("fusion-rank", rel(projector * projector - projector, max_abs(projector)), tolerance,
                       rank_label(n) + ", rank " + std::to_string(rank) + " (expected " + std::to_string(expected) +
                           ")");
  result.metrics["rank"] = rank;
  result.metrics["expected_rank"] = expected;
  result.passed = result.passed && rank == expected;
  return result;
}

CheckResult check_twist_invariance(const RParams& p, const CheckOptions& options, double tolerance) {
  p.validate();
  const int n = p.rank;
  const Matrix g = twist_matrix(n);
  const Matrix gg = kron(g, g);
  const Matrix gg_inv = gg.inverse();
  PointSampler sample(options.seed);
  double worst = 0.0;
  for (int s = 0; s < options.samples; ++s) {
    const Matrix r = r_matrix(sample(), p);
    worst = std::max(worst, rel(gg * r * gg_inv - r, max_abs(r)));
  }
  return finish("twist-invariance", worst, tolerance, rank_label(n));
}

CheckResult check_commuting_transfer(const ChainSpec& spec, const CheckOptions& options, double tolerance) {
  validate_shape(spec);
  PointSampler sample(options.seed);
  const Operator twist = twist_operator(spec);
  double worst = 0.0;
  double worst_twist = 0.0;
  for (int s = 0; s < std::max(options.operator_samples, 10); ++s) {
    const Operator tu = transfer(sample(), spec);
    const Operator tv = transfer(sample(), spec);
    const Operator uv = tu * tv;
    worst = std::max(worst, rel(uv - tv * tu, max_abs(uv)));
    const Operator ut = tu * twist;
    worst_twist = std::max(worst_twist, rel(ut - twist * tu, max_abs(ut)));
  }
  auto result = finish("commuting-transfer", std::max(worst, worst_twist), tolerance);
  result.metrics["transfer_transfer"] = worst;
  result.metrics["transfer_twist"] = worst_twist;
  return result;
}

CheckResult check_exchange_relations(const ChainSpec& spec, const CheckOptions& options, double tolerance) {
  validate_shape(spec);
  const int n = spec.rank;
  const RParams p = spec.r_params();
  const Complex eta = spec.eta;
  PointSampler sample(options.seed);

  std::map<std::string, double> worst;
  auto record = [&](const char* name, const Operator& lhs, const Operator& rhs, double term_scale) {
    const double scale = std::max({max_abs(lhs), term_scale, 1e-300});
    double& w = worst[name];
    w = std::max(w, max_abs(Operator(lhs - rhs)) / scale);
  };

  for (int s = 0; s < options.operator_samples; ++s) {
    const Complex u = sample();
    const Complex v = sample();
    const auto tu = Monodromy::evaluate(spec, u);
    const auto tv = Monodromy::evaluate(spec, v);
    auto R = [&](int a, int b, int c, int d, Complex x) { return r_element(a, b, c, d, x, p); };
    const Complex su = std::sinh(u - v);
    const Complex sue = std::sinh(u - v + eta);
    const long dim = spec.dimension();
    const Operator zero = Operator::Zero(dim, dim);

    for (int l = 2; l <= n; ++l) {
      for (int k = 2; k <= n; ++k) {
        for (int i = 2; i <= n; ++i) {
          const Operator lhs = tv.C(l) * tu.D(k, i);
          Operator rhs = zero;
          double ts = 0.0;
          for (int al = 2; al <= n; ++al) {
            for (int be = 2; be <= n; ++be) {
              const Operator t = R(k, l, al, be, u - v) / su * tu.D(al, i) * tv.C(be);
              ts += max_abs(t);
              rhs += t;
            }
          }
          const Operator last = R(1, i, i, 1, u - v) / su * tv.D(l, i) * tu.C(k);
          rhs -= last;
          record("CD", lhs, rhs, ts + max_abs(last));
        }
      }
    }
    for (int k = 2; k <= n; ++k) {
      const Operator lhs = tv.C(k) * tu.A();
      const Operator t1 = std::sinh(u - v - eta) / su * tu.A() * tv.C(k);
      const Operator t2 = R(k, 1, 1, k, v - u) / su * tv.A() * tu.C(k);
      record("CA", lhs, t1 + t2, max_abs(t1) + max_abs(t2));
    }
    for (int i = 2; i <= n; ++i) {
      for (int l = 2; l <= n; ++l) {
        const Operator lhs = tu.C(i) * tv.B(l) - tv.B(l) * tu.C(i);
        const Operator a1 = R(l, 1, 1, l, u - v) / su * tv.A() * tu.D(i, l);
        const Operator a2 = R(i, 1, 1, i, u - v) / su * tu.A() * tv.D(i, l);
        record("CB", lhs, a1 - a2, max_abs(a1) + max_abs(a2));
        const Operator b1 = R(1, l, l, 1, v - u) / su * tu.D(i, l) * tv.A();
        const Operator b2 = R(1, i, i, 1, v - u) / su * tv.D(i, l) * tu.A();
        record("CB'", lhs, b1 - b2, max_abs(b1) + max_abs(b2));
      }
    }
    for (int i = 2; i <= n; ++i) {
      const Operator lhs = tu.A() * tv.B(i);
      const Operator t1 = std::sinh(u - v - eta) / su * tv.B(i) * tu.A();
      const Operator t2 = R(1, i, i, 1, v - u) / su * tu.B(i) * tv.A();
      record("AB", lhs, t1 + t2, max_abs(t1) + max_abs(t2));
    }
    for (int j = 2; j <= n; ++j) {
      for (int i = 2; i <= n; ++i) {
        for (int l = 2; l <= n; ++l) {
          const Operator lhs = tu.D(j, i) * tv.B(l);
          Operator rhs = zero;
          double ts = 0.0;
          for (int al = 2; al <= n; ++al) {
            for (int be = 2; be <= n; ++be) {
              const Operator t = R(al, be, i, l, u - v) / su * tv.B(be) * tu.D(j, al);
              ts += max_abs(t);
              rhs += t;
            }
          }
          const Operator last = R(j, 1, 1, j, u - v) / su * tu.B(i) * tv.D(j, l);
          rhs -= last;
          record("DB", lhs, rhs, ts + max_abs(last));
        }
      }
    }
    for (int i = 2; i <= n; ++i) {
      for (int j = 2; j <= n; ++j) {
        const Operator lhs_b = tu.B(i) * tv.B(j);
        const Operator lhs_c = tv.C(j) * tu.C(i);
        Operator rhs_b = zero;
        Operator rhs_c = zero;
        double sb = 0.0;
        double sc = 0.0;
        for (int al = 2; al <= n; ++al) {
          for (int be = 2; be <= n; ++be) {
            const Operator tb = R(al, be, i, j, u - v) / sue * tv.B(be) * tu.B(al);
            const Operator tc = R(i, j, al, be, u - v) / sue * tu.C(al) * tv.C(be);
            sb += max_abs(tb);
            sc += max_abs(tc);
            rhs_b += tb;
            rhs_c += tc;
          }
        }
        record("BB", lhs_b, rhs_b, sb);
        record("CC", lhs_c, rhs_c, sc);
      }
    }
    for (int a = 1; a <= n; ++a) {
      for (int b = 1; b <= n; ++b) {
        const Operator x = tu.entry(a, b) * tv.entry(a, b);
        record("TT-1", x, tv.entry(a, b) * tu.entry(a, b), max_abs(x));
        if (a == b) continue;
        const Operator lhs2 = tu.entry(a, a) * tv.entry(b, b) - tv.entry(b, b) * tu.entry(a, a);
        const Operator p1 = R(b, a, a, b, u - v) / su * tv.entry(b, a) * tu.entry(a, b);
        const Operator p2 = R(a, b, b, a, u - v) / su * tu.entry(b, a) * tv.entry(a, b);
        record("TT-2", lhs2, p1 - p2, max_abs(p1) + max_abs(p2));
        const Operator lhs3 = tu.entry(a, b) * tv.entry(b, a) - tv.entry(b, a) * tu.entry(a, b);
        const Operator q1 = R(a, b, b, a, u - v) / su * tv.entry(b, b) * tu.entry(a, a);
        const Operator q2 = R(a, b, b, a, u - v) / su * tu.entry(b, b) * tv.entry(a, a);
        record("TT-3", lhs3, q1 - q2, max_abs(q1) + max_abs(q2));
      }
    }
  }

  double overall = 0.0;
  std::string detail;
  for (const auto& [name, w] : worst) {
    overall = std::max(overall, w);
    if (!detail.empty()) detail += " ";
    detail += name;
  }
  auto result = finish("exchange-relations", overall, tolerance, "relations: " + detail);
  result.metrics = worst;
  return result;
}

CheckResult check_vacuum_actions(const ChainSpec& spec, const CheckOptions& options, double tolerance) {
  validate_shape(spec);
  const int n = spec.rank;
  const StateVector e0 = reference_state(spec);
  PointSampler sample(options.seed);
  double worst = 0.0;
  double weakest_creation = INFINITY;
  for (int s = 0; s < options.operator_samples; ++s) {
    const Complex u = sample();
    const auto t = Monodromy::evaluate(spec, u);
    const Complex a = scalar_a(u, spec);
    const Complex d = scalar_d(u, spec);
    const double scale = std::max({std::abs(a), std::abs(d), 1.0});
    auto left = [&](const Operator& op) -> StateVector { return op.transpose() * e0; };
    worst = std::max(worst, max_abs(StateVector(left(t.A()) - a * e0)) / scale);
    worst = std::max(worst, max_abs(StateVector(t.A() * e0 - a * e0)) / scale);
    for (int i = 2; i <= n; ++i) {
      worst = std::max(worst, max_abs(left(t.B(i))) / scale);
      worst = std::max(worst, max_abs(StateVector(t.C(i) * e0)) / scale);
      weakest_creation = std::min({weakest_creation, max_abs(left(t.C(i))) / scale,
                                   max_abs(StateVector(t.B(i) * e0)) / scale});
      for (int l = 2; l <= n; ++l) {
        const Complex expected = (i == l) ? d : Complex{};
        worst = std::max(worst, max_abs(StateVector(left(t.D(l, i)) - expected * e0)) / scale);
        worst = std::max(worst, max_abs(StateVector(t.D(l, i) * e0 - expected * e0)) / scale);
      }
    }
  }

  // <0|U(g) = <0̄|
  const StateVector bar = bar_reference_state(spec);
  worst = std::max(worst, max_abs(StateVector(twist_operator(spec).transpose() * e0 - bar)));

  // <0| C^n(θ_1)⋯C^n(θ_N) |0̄> = Π a(θ_k), generic specs only
  double normalization = 0.0;
  bool generic = true;
  try {
    require_generic(spec);
  } catch (const SpecError&) {
    generic = false;
  }
  if (generic) {
    StateVector v = e0;
    Complex expected{1.0, 0.0};
    for (int k = 1; k <= spec.sites; ++k) {
      v = Monodromy::evaluate(spec, spec.th(k)).C(n).transpose() * v;
      expected *= scalar_a(spec.th(k), spec);
    }
    normalization = std::abs(bilinear_pair(v, bar) / expected - 1.0);
    worst = std::max(worst, normalization);
  }

  auto result = finish("vacuum-actions", worst, tolerance);
  result.metrics["weakest_creation"] = weakest_creation;
  result.metrics["vacuum_normalization"] = normalization;
  // <0|C^i and B_i|0> must not vanish.
  if (!(weakest_creation > 1e-8)) {
    result.passed = false;
    result.detail = "a creation operator annihilates the quasi-vacuum";
  }
  return result;
}

CheckResult check_product_identity(const ChainSpec& spec, double tolerance) {
  validate_shape(spec);
  Operator product = Operator::Identity(spec.dimension(), spec.dimension());
  Complex a_product{1.0, 0.0};
  for (int j = 1; j <= spec.sites; ++j) {
    product = product * transfer(spec.th(j), spec);
    a_product *= scalar_a(spec.th(j), spec);
  }
  const Operator expected = a_product * twist_operator(spec);
  return finish("product-identity", max_abs(Operator(product - expected)) / std::abs(a_product), tolerance);
}

CheckResult check_hamiltonian(int rank, int sites, Complex eta, double tolerance) {
  const ChainSpec spec = homogeneous_spec(rank, sites, eta);
  const Operator h = global_hamiltonian(rank, sites, eta);
  const double step = 1e-4;
  auto t = [&](double x) { return transfer(Complex{x, 0.0}, spec); };
  const Operator dt = (-t(2 * step) + 8.0 * t(step) - 8.0 * t(-step) + t(-2 * step)) / (12.0 * step);
  const Operator log_derivative = std::sinh(eta) * dt * t(0.0).inverse();
  return finish("hamiltonian", (h - log_derivative).norm() / h.norm(), tolerance,
                "N=" + std::to_string(sites));
}

std::vector<CheckResult> check_basis(const ChainSpec& spec, const Tolerances& tolerances) {
  const double tol_diag = tolerance_for(tolerances, "orthogonality");
  const double tol_off = tolerance_for(tolerances, "off-diagonal");
  const double tol_id = tolerance_for(tolerances, "identity-resolution");
  if (spec.rank != 3 || spec.sites > 4) {
    const std::string why = "requires su(3) and N <= 4";
    return {skipped("orthogonality", tol_diag, why), skipped("identity-resolution", tol_id, why)};
  }
  const auto report = verify_orthogonality(spec);
  auto ortho = finish("orthogonality", report.max_diagonal_error, tol_diag,
                      "worst off-diagonal pair " + report.worst_row.label() + " x " + report.worst_col.label());
  ortho.metrics["max_offdiagonal"] = report.max_offdiagonal;
  ortho.metrics["offdiagonal_tolerance"] = tol_off;
  ortho.metrics["min_abs_g_factor"] = report.min_abs_g_factor;
  ortho.metrics["gram_scale"] = report.gram_scale;
  ortho.metrics["basis_size"] = static_cast<double>(report.basis_size);
  ortho.passed = ortho.passed && report.max_offdiagonal < tol_off && report.min_abs_g_factor > 1e-12;
  auto identity = finish("identity-resolution", report.identity_resolution_error, tol_id);
  return {ortho, identity};
}

CheckResult check_decompositions(const ChainSpec& spec, const CheckOptions& options, double tolerance,
                                 double vanishing_tolerance) {
  if (spec.rank != 3) return skipped("decompositions", tolerance, "requires su(3)");
  const SovBasis basis(spec);
  const auto labels = enumerate_basis(spec.sites);
  std::vector<StateVector> lefts;
  std::vector<StateVector> rights;
  for (const auto& idx : labels) {
    lefts.push_back(basis.left_state(idx));
    rights.push_back(basis.right_state(idx));
  }

  PointSampler sample(options.seed);
  double worst = 0.0;
  std::string worst_case;
  for (int s = 0; s < options.decomposition_samples; ++s) {
    const Complex u = sample();
    const auto t = Monodromy::evaluate(spec, u);
    for (const auto op : kBasisOperators) {
      const Operator& m = operator_entry(op, t);
      for (std::size_t k = 0; k < labels.size(); ++k) {
        const StateVector direct = m.transpose() * lefts[k];
        const auto terms = act_on_bra(op, u, labels[k], spec);
        StateVector expanded = StateVector::Zero(direct.size());
        double term_scale = 0.0;
        for (const auto& term : terms) {
          const auto pos = std::lower_bound(labels.begin(), labels.end(), term.index) - labels.begin();
          const StateVector piece = term.coefficient * lefts[static_cast<std::size_t>(pos)];
          term_scale = std::max(term_scale, piece.norm());
          expanded += piece;
        }
        const double scale = std::max({direct.norm(), term_scale, 1e-300});
        const double err = (expanded - direct).norm() / scale;
        if (err > worst) {
          worst = err;
          worst_case = std::string(to_string(op)) + " on " + labels[k].label();
        }
      }
    }
  }

  // Vanishing relations at u = θ_l for l outside the label.
  double vanishing = 0.0;
  for (int l = 1; l <= spec.sites; ++l) {
    const auto& t = basis.at_theta(l);
    double op_scale = 1.0;
    for (int i = 1; i <= 3; ++i) {
      for (int j = 1; j <= 3; ++j) op_scale = std::max(op_scale, max_abs(t.entry(i, j)));
    }
    for (std::size_t k = 0; k < labels.size(); ++k) {
      if (labels[k].contains(l)) continue;
      const double scale = op_scale * std::max(max_abs(lefts[k]), max_abs(rights[k]));
      for (const auto op : {BasisOperator::D33, BasisOperator::B3}) {
        const auto terms = act_on_bra(op, spec.th(l), labels[k], spec);
        if (!terms.empty()) vanishing = INFINITY;
        vanishing = std::max(vanishing, max_abs(StateVector(operator_entry(op, t).transpose() * lefts[k])) / scale);
      }
      for (int i = 2; i <= 3; ++i) {
        vanishing = std::max(vanishing, max_abs(StateVector(t.C(i) * rights[k])) / scale);
        for (int j = 2; j <= 3; ++j) {
          vanishing = std::max(vanishing, max_abs(StateVector(t.D(i, j) * rights[k])) / scale);
        }
      }
    }
  }

  auto result = finish("decompositions", worst, tolerance, "worst " + worst_case);
  result.metrics["vanishing"] = vanishing;
  result.metrics["vanishing_tolerance"] = vanishing_tolerance;
  result.passed = result.passed && vanishing < vanishing_tolerance;
  return result;
}

std::vector<CheckResult> run_verify_suite(const ChainSpec& spec, const Tolerances& tolerances,
                                          const CheckOptions& options) {
  validate_shape(spec);
  const RParams p = spec.r_params();
  auto tol = [&](const char* name) { return tolerance_for(tolerances, name); };

  std::vector<CheckResult> out;
  out.push_back(check_qybe(p, options, tol("QYBE")));
  out.push_back(check_initial_condition(p, tol("initial-condition")));
  out.push_back(check_unitarity(p, options, tol("unitarity")));
  out.push_back(check_crossing(p, options, tol("crossing")));
  out.push_back(check_fusion_rank(p, tol("fusion-rank")));
  out.push_back(check_twist_invariance(p, options, tol("twist-invariance")));
  out.push_back(check_commuting_transfer(spec, options, tol("commuting-transfer")));
  out.push_back(check_exchange_relations(spec, options, tol("exchange-relations")));
  out.push_back(check_vacuum_actions(spec, options, tol("vacuum-actions")));
  for (auto& r : check_basis(spec, tolerances)) out.push_back(std::move(r));
  out.push_back(check_decompositions(spec, options, tol("decompositions"), tol("vanishing")));
  out.push_back(check_product_identity(spec, tol("product-identity")));
  return out;
}

}  // namespace spintorus
