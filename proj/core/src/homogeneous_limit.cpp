#include <cmath>
#include <limits>
#include <string>

#include "spintorus/eigenstate.hpp"
#include "spintorus/errors.hpp"
#include "spintorus/monodromy.hpp"

namespace spintorus {

namespace {

// Polynomial extrapolation to ε = 0 through all points (Neville at zero).
StateVector extrapolate_to_zero(const std::vector<double>& eps, const std::vector<StateVector>& values) {
  std::vector<StateVector> p = values;
  const std::size_t n = eps.size();
  for (std::size_t level = 1; level < n; ++level) {
    for (std::size_t i = 0; i + level < n; ++i) {
      const double xi = eps[i];
      const double xj = eps[i + level];
      p[i] = (xj * p[i] - xi * p[i + 1]) / (xj - xi);
    }
  }
  return p.front();
}

}  // namespace

StateVector homogeneous_closed_form_n2(Complex lambda0, Complex lambda0_prime, Complex eta) {
  const ChainSpec spec = homogeneous_spec(3, 2, eta);
  const auto jet = MonodromyJet::evaluate(spec, 0.0);
  const Operator& b2 = jet.value.B(2);
  const Operator& b3 = jet.value.B(3);
  const Operator& b2p = jet.derivative.B(2);
  const Operator& b3p = jet.derivative.B(3);
  const StateVector e0 = reference_state(spec);

  const Complex s = std::sinh(eta);
  const Complex ct = 1.0 / std::tanh(eta);
  const Complex l = lambda0;
  const Complex r = lambda0_prime / lambda0;
  const Complex a0 = s * s;  // a(0) at the homogeneous point

  StateVector v = e0;
  v += (lambda0_prime * (b3 * e0) + l * (b3p * e0) - 2.0 * ct * l * (b3 * e0)) / std::pow(s, 3);
  v += l * l / std::pow(s, 8) * (b3 * (b3 * e0));

  StateVector inner = ((8.0 / 9.0 - 2.0 * ct * r + r * r) * b2 + (r - ct - 1.0 / 3.0) * b2p) * e0;
  inner += l / std::pow(s, 4) *
           ((ct * r - r / 3.0 - 8.0 / 9.0) * (b3 * (b2 * e0)) +
            (r - ct - 1.0 / 3.0) * (b3p * (b2 * e0) - b3 * (b2p * e0)));
  inner += l * l / std::pow(s, 8) * (b2 * (b2 * e0));
  v += l * l / (a0 * a0) * inner;
  return v;
}

HomogeneousLimitReport homogeneous_limit_study(int sites, Complex eta, const HomogeneousLimitOptions& options) {
  if (static_cast<int>(options.direction.size()) != sites) {
    throw DimensionError("homogeneous_limit_study: direction needs one entry per site");
  }
  if (options.eps.size() < 2) throw SpecError("homogeneous_limit_study: need at least two ε values");
  for (double e : options.eps) {
    ChainSpec probe{3, sites, eta, {}};
    for (const auto& x : options.direction) probe.theta.push_back(e * x);
    require_generic(probe);
  }

  HomogeneousLimitReport report;
  report.sites = sites;
  report.eps = options.eps;
  report.direction = options.direction;

  const ChainSpec hom = homogeneous_spec(3, sites, eta);
  const auto hom_records = brute_force_spectrum(hom, options.spectrum);

  // Spectra and Λ(θ) along the path, computed once per ε.
  struct Point {
    ChainSpec spec;
    std::vector<SpectralRecord> records;
  };
  std::vector<Point> path;
  for (double e : options.eps) {
    Point p{ChainSpec{3, sites, eta, {}}, {}};
    for (const auto& x : options.direction) p.spec.theta.push_back(e * x);
    p.records = brute_force_spectrum(p.spec, options.spectrum);
    path.push_back(std::move(p));
  }

  report.converged = true;
  for (std::size_t target = 0; target < hom_records.size(); ++target) {
    const auto& h = hom_records[target];
    HomogeneousStateReport state;
    state.lambda0 = eigenvalue_at(h, 0.0, hom);
    state.lambda0_prime = eigenvalue_derivative_at(h, 0.0, hom);

    std::vector<StateVector> vectors;
    for (const auto& p : path) {
      std::size_t best = 0;
      double best_error = std::numeric_limits<double>::infinity();
      for (std::size_t k = 0; k < p.records.size(); ++k) {
        double err = 0.0;
        for (std::size_t s = 0; s < h.samples.size(); ++s) {
          err = std::max(err, std::abs(p.records[k].samples[s].value - h.samples[s].value));
        }
        if (err < best_error) {
          best_error = err;
          best = k;
        }
      }
      state.match_error.push_back(best_error);
      try {
        vectors.push_back(fix_phase(reconstruct(p.records[best].lambda_at_theta, 1.0, p.spec)));
      } catch (const Error& e) {
        report.notes.push_back("state " + std::to_string(target) + ": reconstruction failed: " + e.what());
        break;
      }
    }
    if (vectors.size() != path.size()) {
      report.converged = false;
      report.states.push_back(std::move(state));
      continue;
    }

    state.monotone = true;
    for (std::size_t k = 0; k + 1 < vectors.size(); ++k) {
      state.distances.push_back((vectors[k + 1] - vectors[k]).norm());
      if (k > 0 && state.distances[k] >= state.distances[k - 1]) state.monotone = false;
    }
    if (!state.monotone) {
      report.converged = false;
      report.notes.push_back("state " + std::to_string(target) + ": Cauchy distances do not decrease");
    }

    const StateVector limit = extrapolate_to_zero(options.eps, vectors);
    state.brute_force_angle = ray_angle(limit, h.eigenvector);
    if (sites == 2) {
      const StateVector closed = homogeneous_closed_form_n2(state.lambda0, state.lambda0_prime, eta);
      state.has_closed_form = true;
      state.angle = ray_angle(limit, closed);
      const Operator t = transfer({0.3, 0.2}, hom);
      const Complex lam = eigenvalue_at(h, {0.3, 0.2}, hom);
      state.closed_form_residual = (t * closed - lam * closed).norm() / closed.norm();
      report.max_angle = std::max(report.max_angle, state.angle);
    }
    report.states.push_back(std::move(state));
  }
  return report;
}

}  // namespace spintorus
