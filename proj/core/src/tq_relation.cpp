#include "spintorus/tq_relation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <string>

#include "spintorus/errors.hpp"
#include "spintorus/monodromy.hpp"
#include "spintorus/parallel.hpp"

namespace spintorus {

namespace {

constexpr double kPoleThreshold = 1e-14;

Complex guarded(Complex q, const char* what) {
  if (std::abs(q) < kPoleThreshold) throw PoleError(std::string("vanishing ") + what + " in the T-Q relation");
  return q;
}

void require_tq_spec(const ChainSpec& spec, const TQSolution& sol) {
  if (spec.rank != 3) throw SpecError("the T-Q relation is implemented for su(3) only");
  if (sol.sites() != spec.sites) throw DimensionError("TQSolution has the wrong number of roots per level");
  for (const auto& level : sol.roots) {
    if (static_cast<int>(level.size()) != spec.sites) throw DimensionError("every Q level needs N roots");
  }
}

Complex sum(std::span<const Complex> xs) {
  Complex s{};
  for (const auto& x : xs) s += x;
  return s;
}

double max_abs(std::span<const Complex> xs) {
  double m = 0.0;
  for (const auto& x : xs) m = std::max(m, std::abs(x));
  return m;
}

// Residuals as a vector; non-finite entries or a pole give an empty result.
std::vector<Complex> safe_residuals(std::span<const Complex> x, const ChainSpec& spec) {
  try {
    auto r = bae_residuals(TQSolution::unpack(x, spec.sites), spec);
    for (const auto& v : r) {
      if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return {};
    }
    return r;
  } catch (const PoleError&) {
    return {};
  }
}

double norm2(const std::vector<Complex>& r) {
  double s = 0.0;
  for (const auto& v : r) s += std::norm(v);
  return std::sqrt(s);
}

}  // namespace

std::vector<Complex> TQSolution::pack() const {
  std::vector<Complex> x;
  for (const auto& level : roots) x.insert(x.end(), level.begin(), level.end());
  x.insert(x.end(), {f1_plus, f1_minus, f2_minus, exp_phi1});
  return x;
}

TQSolution TQSolution::unpack(std::span<const Complex> x, int sites) {
  const auto n = static_cast<std::size_t>(sites);
  if (x.size() != 4 * n + 4) throw DimensionError("packed TQSolution must have 4N+4 entries");
  TQSolution s;
  for (std::size_t i = 0; i < 4; ++i) s.roots[i].assign(x.begin() + i * n, x.begin() + (i + 1) * n);
  s.f1_plus = x[4 * n];
  s.f1_minus = x[4 * n + 1];
  s.f2_minus = x[4 * n + 2];
  s.exp_phi1 = x[4 * n + 3];
  return s;
}

Complex q_function(std::span<const Complex> roots, Complex u) {
  Complex r{1.0, 0.0};
  for (const auto& l : roots) r *= std::sinh(u - l);
  return r;
}

Complex tq_lambda(Complex u, const TQSolution& sol, const ChainSpec& spec) {
  require_tq_spec(spec, sol);
  const Complex eta = spec.eta;
  const Complex w = kOmega;
  const Complex ep = guarded(sol.exp_phi1, "e^{phi1}");
  auto Q = [&](int i, Complex z) { return q_function(sol.roots[static_cast<std::size_t>(i - 1)], z); };

  const Complex a = scalar_a(u, spec);
  const Complex d = scalar_d(u, spec);
  const Complex q1 = guarded(Q(1, u), "Q1");
  const Complex q2 = guarded(Q(2, u), "Q2");
  const Complex q3 = guarded(Q(3, u), "Q3");
  const Complex q4 = guarded(Q(4, u), "Q4");
  const Complex f1 = sol.f1_plus * std::exp(u) + sol.f1_minus * std::exp(-u);
  const Complex f2 = sol.f2_minus * std::exp(-u);

  const Complex terms = ep * std::exp(u) * a * Q(1, u - eta) / q2 +
                        w / ep * std::exp(-u - 2.0 * eta / 3.0) * d * Q(2, u + eta) * Q(3, u - eta) / (q1 * q4) +
                        w * w * std::exp(-u - 4.0 * eta / 3.0) * d * Q(4, u + eta) / q3 +
                        a * d * Q(3, u - eta) * f1 / (q1 * q2) + a * d * Q(2, u + eta) * f2 / (q3 * q4);
  return std::exp(u / 3.0) * terms;
}

std::vector<Complex> bae_residuals(const TQSolution& sol, const ChainSpec& spec) {
  require_tq_spec(spec, sol);
  const Complex eta = spec.eta;
  const Complex w = kOmega;
  const Complex ep = guarded(sol.exp_phi1, "e^{phi1}");
  auto Q = [&](int i, Complex z) { return q_function(sol.roots[static_cast<std::size_t>(i - 1)], z); };
  auto a = [&](Complex z) { return scalar_a(z, spec); };
  auto d = [&](Complex z) { return scalar_d(z, spec); };
  auto f1 = [&](Complex z) { return sol.f1_plus * std::exp(z) + sol.f1_minus * std::exp(-z); };
  auto f2 = [&](Complex z) { return sol.f2_minus * std::exp(-z); };

  std::vector<Complex> r;
  r.reserve(4 * sol.roots[0].size() + 4);
  for (const auto& l : sol.roots[0]) {
    r.push_back(w / ep * std::exp(-l - 2.0 * eta / 3.0) * Q(2, l + eta) / guarded(Q(4, l), "Q4") +
                a(l) * f1(l) / guarded(Q(2, l), "Q2"));
  }
  for (const auto& l : sol.roots[1]) {
    r.push_back(ep * std::exp(l) * Q(1, l - eta) + d(l) * Q(3, l - eta) * f1(l) / guarded(Q(1, l), "Q1"));
  }
  for (const auto& l : sol.roots[2]) {
    r.push_back(w * w * std::exp(-l - 4.0 * eta / 3.0) * Q(4, l + eta) +
                a(l) * Q(2, l + eta) * f2(l) / guarded(Q(4, l), "Q4"));
  }
  for (const auto& l : sol.roots[3]) {
    r.push_back(w / ep * std::exp(-l - 2.0 * eta / 3.0) * Q(3, l - eta) / guarded(Q(1, l), "Q1") +
                a(l) * f2(l) / guarded(Q(3, l), "Q3"));
  }

  Complex theta_sum{};
  for (const auto& t : spec.theta) theta_sum += t;
  const Complex th = theta_sum;
  const Complex c1 = sum(sol.roots[0]);
  const Complex c2 = sum(sol.roots[1]);
  const Complex c3 = sum(sol.roots[2]);
  const Complex c4 = sum(sol.roots[3]);
  const Complex ne = static_cast<double>(spec.sites) * eta;
  const Complex f1p = sol.f1_plus;
  const Complex f1m = sol.f1_minus;
  const Complex f2m = sol.f2_minus;
  auto e = [](Complex z) { return std::exp(z); };

  r.push_back(ep * e(-th - c1 + c2) + e(-2.0 * th + c1 + c2 - c3) * f1p);
  r.push_back(w / ep * e(-2.0 * eta / 3.0 + th - c1 + c2 + c3 - c4) + w * w * e(-4.0 * eta / 3.0 + th - c3 + c4 - ne) +
              e(2.0 * th - ne) * (e(-c1 - c2 + c3 + ne) * f1m + e(c2 - c3 - c4 - ne) * f2m));
  r.push_back(w * e(-th - c3 + c4) + w * w * ep * e(-2.0 * eta / 3.0 - th - c1 + c2 + c3 - c4 + ne) +
              e(-2.0 * th + ne) * (w * w * e(-2.0 * eta / 3.0 + c1 + c2 - c4) * f1p +
                                   ep * e(2.0 * eta / 3.0 - c1 + c3 + c4 + ne) * f2m));
  r.push_back(1.0 / ep * e(-4.0 * eta / 3.0 + th - c1 + c2 - ne) +
              w * w * e(-2.0 * eta / 3.0 + 2.0 * th - c1 - c2 + c4 - ne) * f1m);
  return r;
}

NewtonOutcome newton_solve(const TQSolution& start, const ChainSpec& spec, const BaeOptions& options) {
  NewtonOutcome out;
  out.solution = start;
  out.residual = std::numeric_limits<double>::infinity();
  std::vector<Complex> x = start.pack();
  const auto n = static_cast<Eigen::Index>(x.size());

  std::vector<Complex> r = safe_residuals(x, spec);
  if (r.empty()) return out;
  double nr = norm2(r);

  for (int it = 0; it < options.max_iterations; ++it) {
    out.iterations = it;
    if (nr < 1e-13) break;

    // Residuals are holomorphic in every unknown, so a real step gives the
    // complex Jacobian and Newton on C^n equals Newton on the real split.
    Matrix jac(n, n);
    bool ok = true;
    for (Eigen::Index j = 0; j < n && ok; ++j) {
      std::vector<Complex> xp = x;
      xp[static_cast<std::size_t>(j)] += options.jacobian_step;
      const auto rp = safe_residuals(xp, spec);
      if (rp.empty()) {
        ok = false;
        break;
      }
      for (Eigen::Index i = 0; i < n; ++i) {
        jac(i, j) = (rp[static_cast<std::size_t>(i)] - r[static_cast<std::size_t>(i)]) / options.jacobian_step;
      }
    }
    if (!ok) break;

    const StateVector rhs = -Eigen::Map<const StateVector>(r.data(), n);
    const Eigen::FullPivLU<Matrix> lu(jac);
    if (lu.rank() < n) break;
    const StateVector dx = lu.solve(rhs);
    if (!dx.allFinite()) break;

    // Armijo backtracking on ‖r‖.
    double step = 1.0;
    std::vector<Complex> xn;
    std::vector<Complex> rn;
    bool accepted = false;
    while (step > 1e-4) {
      xn = x;
      for (Eigen::Index k = 0; k < n; ++k) xn[static_cast<std::size_t>(k)] += step * dx(k);
      rn = safe_residuals(xn, spec);
      if (!rn.empty() && norm2(rn) < (1.0 - 1e-4 * step) * nr) {
        accepted = true;
        break;
      }
      step *= 0.5;
    }
    if (!accepted) break;
    x = std::move(xn);
    r = std::move(rn);
    nr = norm2(r);
  }

  out.solution = TQSolution::unpack(x, spec.sites);
  out.residual = max_abs(r);
  out.converged = out.residual < options.tolerance;
  return out;
}

std::vector<TQSolution> bae_seeds(const ChainSpec& spec, const BaeOptions& options) {
  std::mt19937_64 rng(options.rng_seed);
  std::uniform_real_distribution<double> box(-options.seed_half_width, options.seed_half_width);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  Complex centre{};
  for (const auto& t : spec.theta) centre += t;
  centre /= static_cast<double>(spec.sites);

  auto disk = [&] {
    const double radius = std::sqrt(unit(rng));
    const double angle = 2.0 * 3.14159265358979323846 * unit(rng);
    return std::polar(radius, angle);
  };

  std::vector<TQSolution> seeds;
  seeds.reserve(static_cast<std::size_t>(options.seeds));
  for (int s = 0; s < options.seeds; ++s) {
    TQSolution seed;
    for (auto& level : seed.roots) {
      for (int l = 0; l < spec.sites; ++l) {
        const double re = box(rng);
        const double im = box(rng);
        level.push_back(centre + Complex{re, im});
      }
    }
    seed.f1_plus = disk();
    seed.f1_minus = disk();
    seed.f2_minus = disk();
    seed.exp_phi1 = disk();
    seeds.push_back(std::move(seed));
  }
  return seeds;
}

bool same_solution(const TQSolution& a, const TQSolution& b, double tolerance) {
  if (a.sites() != b.sites()) return false;
  // Q^(i) only sees roots modulo iπ; a shift by iπ flips the sign of Q^(i)
  // and is absorbed by the signs of the coefficients.
  auto root_distance = [](Complex x, Complex y) { return std::abs(std::sinh(x - y)); };
  auto coefficient_distance = [](Complex x, Complex y) { return std::min(std::abs(x - y), std::abs(x + y)); };
  for (std::size_t i = 0; i < 4; ++i) {
    std::vector<Complex> rest = b.roots[i];
    for (const auto& x : a.roots[i]) {
      auto best = std::min_element(rest.begin(), rest.end(), [&](Complex p, Complex q) {
        return root_distance(p, x) < root_distance(q, x);
      });
      if (best == rest.end() || root_distance(*best, x) > tolerance) return false;
      rest.erase(best);
    }
  }
  return coefficient_distance(a.f1_plus, b.f1_plus) <= tolerance &&
         coefficient_distance(a.f1_minus, b.f1_minus) <= tolerance &&
         coefficient_distance(a.f2_minus, b.f2_minus) <= tolerance &&
         coefficient_distance(a.exp_phi1, b.exp_phi1) <= tolerance;
}

BaeReport solve_bae(const ChainSpec& spec, const std::vector<SpectralRecord>& records, const BaeOptions& options) {
  validate_shape(spec);
  require_generic(spec);
  if (spec.rank != 3) throw SpecError("solve_bae: su(3) only");
  if (spec.sites > 2) throw DimensionError("solve_bae: N <= 2 (4N+4 unknowns, multi-start coverage)");

  const auto seeds = bae_seeds(spec, options);
  std::vector<NewtonOutcome> outcomes(seeds.size());
  parallel_for(
      seeds.size(), [&](std::size_t i) { outcomes[i] = newton_solve(seeds[i], spec, options); }, options.threads);

  BaeReport report;
  report.total_records = static_cast<int>(records.size());
  std::vector<NewtonOutcome> distinct;
  for (const auto& o : outcomes) {
    report.seed_residuals.push_back(o.residual);
    if (!o.converged) continue;
    ++report.converged_seeds;
    const bool seen = std::any_of(distinct.begin(), distinct.end(), [&](const NewtonOutcome& d) {
      return same_solution(d.solution, o.solution, options.dedup_tolerance);
    });
    if (!seen) distinct.push_back(o);
  }
  report.distinct_converged = static_cast<int>(distinct.size());

  Complex a_product{1.0, 0.0};
  for (int j = 1; j <= spec.sites; ++j) a_product *= scalar_a(spec.th(j), spec);

  for (const auto& o : distinct) {
    std::vector<Complex> lambda;
    try {
      for (int j = 1; j <= spec.sites; ++j) lambda.push_back(tq_lambda(spec.th(j), o.solution, spec));
    } catch (const PoleError&) {
      ++report.rejected_pole;
      continue;
    }
    // Selection rule: Π Λ(θ_j) / Π a(θ_j) must be a cube root of unity.
    Complex ratio{1.0, 0.0};
    for (const auto& l : lambda) ratio *= l;
    ratio /= a_product;
    bool selected = false;
    for (int z = 0; z < 3; ++z) selected = selected || std::abs(ratio - std::pow(kOmega, z)) < options.selection_tolerance;
    if (!selected) {
      ++report.rejected_selection;
      continue;
    }
    int best = -1;
    double best_error = std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k < records.size(); ++k) {
      double scale = 1.0;
      double err = 0.0;
      for (std::size_t j = 0; j < lambda.size(); ++j) {
        scale = std::max(scale, std::abs(records[k].lambda_at_theta[j]));
        err = std::max(err, std::abs(lambda[j] - records[k].lambda_at_theta[j]));
      }
      err /= scale;
      if (err < best_error) {
        best_error = err;
        best = static_cast<int>(k);
      }
    }
    if (best < 0 || best_error >= options.match_tolerance) {
      ++report.unmatched;
      continue;
    }
    const auto& rec = records[static_cast<std::size_t>(best)];
    report.solutions.push_back({o.solution, o.residual, best, best_error, rec.z_charge});
    report.sectors_covered[static_cast<std::size_t>(rec.z_charge)] = true;
    if (std::find(report.matched_records.begin(), report.matched_records.end(), best) ==
        report.matched_records.end()) {
      report.matched_records.push_back(best);
    }
  }
  std::sort(report.matched_records.begin(), report.matched_records.end());
  std::stable_sort(report.solutions.begin(), report.solutions.end(),
                   [](const BaeSolution& a, const BaeSolution& b) { return a.record < b.record; });
  return report;
}

std::vector<NewtonOutcome> track_scaling(const TQSolution& start, const ChainSpec& spec, const std::vector<double>& eps,
                                         const BaeOptions& options) {
  std::vector<NewtonOutcome> out;
  TQSolution current = start;
  for (double e : eps) {
    ChainSpec scaled = spec;
    for (auto& t : scaled.theta) t *= e;
    auto o = newton_solve(current, scaled, options);
    current = o.solution;
    out.push_back(std::move(o));
  }
  return out;
}

}  // namespace spintorus
