#include "spintorus/eigenstate.hpp"

#include <algorithm>
#include <cmath>

#include "spintorus/errors.hpp"
#include "spintorus/monodromy.hpp"
#include "spintorus/sov_basis.hpp"

namespace spintorus {

namespace {

Complex sh(Complex x) { return std::sinh(x); }

Complex denom(Complex x, const char* what) {
  if (std::abs(x) < 1e-12) throw PoleError(what);
  return x;
}

// All m-subsets of 1..n in lexicographic order.
std::vector<std::vector<int>> subsets_of_size(int n, int m) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int start) -> void {
    if (static_cast<int>(cur.size()) == m) {
      out.push_back(cur);
      return;
    }
    for (int s = start; s <= n; ++s) {
      cur.push_back(s);
      self(self, s + 1);
      cur.pop_back();
    }
  };
  rec(rec, 1);
  return out;
}

std::vector<int> complement(std::span<const int> pset, int sites) {
  std::vector<int> out;
  for (int j = 1; j <= sites; ++j) {
    if (std::find(pset.begin(), pset.end(), j) == pset.end()) out.push_back(j);
  }
  return out;
}

void require_lambda(std::span<const Complex> lambda, const ChainSpec& spec) {
  if (static_cast<int>(lambda.size()) != spec.sites) throw DimensionError("need Λ at every θ_j");
}

}  // namespace

Complex f_factor(std::span<const int> pset, const ChainSpec& spec) {
  const Complex eta = spec.eta;
  Complex r{1.0, 0.0};
  for (int p : pset) {
    const Complex tp = spec.th(p);
    r *= sh(eta) * scalar_d_l(tp, p, spec) * scalar_a(tp, spec);
    for (int q : pset) {
      if (q == p) continue;
      const Complex tq = spec.th(q);
      r *= sh(tp - tq + eta) / denom(sh(tp - tq), "f_m: coincident inhomogeneities");
    }
  }
  return r;
}

Complex g_m_function(std::span<const Complex> vset, std::span<const Complex> uset, Complex eta) {
  if (vset.size() != uset.size()) throw DimensionError("g_m: |v| != |u|");
  const auto m = static_cast<Eigen::Index>(vset.size());
  if (m == 0) return {1.0, 0.0};

  Matrix folded(m, m);
  for (Eigen::Index a = 0; a < m; ++a) {
    for (Eigen::Index k = 0; k < m; ++k) {
      Complex entry = sh(eta) * std::exp(-(uset[a] - vset[k]) / 3.0);
      for (Eigen::Index j = 0; j < m; ++j) {
        if (j != k) entry *= sh(uset[a] - vset[j] + eta) * sh(uset[a] - vset[j]);
      }
      folded(a, k) = entry;
    }
  }
  Complex den{1.0, 0.0};
  for (Eigen::Index k = 0; k < m; ++k) {
    for (Eigen::Index l = k + 1; l < m; ++l) {
      den *= denom(sh(uset[l] - uset[k]), "g_m: coincident arguments in the primed set") *
             denom(sh(vset[k] - vset[l]), "g_m: coincident arguments in the unprimed set");
    }
  }
  return folded.determinant() / den;
}

Complex scalar_F(std::span<const int> pset, std::span<const Complex> lambda_at_theta, Complex psi_bar0,
                 const ChainSpec& spec) {
  require_lambda(lambda_at_theta, spec);
  const int m = static_cast<int>(pset.size());
  const auto comp = complement(pset, spec.sites);
  auto lam = [&](int j) { return lambda_at_theta[static_cast<std::size_t>(j - 1)]; };

  std::vector<Complex> vs;
  for (int p : pset) vs.push_back(spec.th(p));

  Complex total{};
  for (const auto& primed : subsets_of_size(spec.sites, m)) {
    std::vector<Complex> us;
    for (int p : primed) us.push_back(spec.th(p));
    Complex term = g_m_function(vs, us, spec.eta);
    for (int a : primed) {
      for (int k : comp) term *= sh(spec.th(a) - spec.th(k) + spec.eta);
      term *= lam(a);
    }
    total += term / f_factor(primed, spec);
  }

  Complex prefactor = psi_bar0;
  for (int k = 1; k <= spec.sites; ++k) prefactor *= scalar_a(spec.th(k), spec);
  for (int k : comp) prefactor /= denom(lam(k), "scalar_F: Λ(θ_k) vanishes on the complement");
  return total * prefactor;
}

Complex ScalarProductTable::at(const std::vector<int>& pset) const {
  const auto it = entries.find(pset);
  if (it == entries.end()) throw IndexError("scalar product table has no entry for this index set");
  return it->second;
}

ScalarProductTable scalar_product_table(std::span<const Complex> lambda_at_theta, Complex psi_bar0,
                                        const ChainSpec& spec) {
  require_generic(spec);
  ScalarProductTable table;
  for (int m = 0; m <= spec.sites; ++m) {
    for (const auto& pset : subsets_of_size(spec.sites, m)) {
      table.entries[pset] = scalar_F(pset, lambda_at_theta, psi_bar0, spec);
    }
  }
  return table;
}

StateVector reconstruct(std::span<const Complex> lambda_at_theta, Complex psi_bar0, const ChainSpec& spec) {
  require_lambda(lambda_at_theta, spec);
  const SovBasis basis(spec);
  const auto table = scalar_product_table(lambda_at_theta, psi_bar0, spec);

  StateVector psi = StateVector::Zero(spec.dimension());
  for (const auto& idx : enumerate_basis(spec.sites)) {
    const auto b2 = idx.block2();
    Complex c = table.at(std::vector<int>(b2.begin(), b2.end()));
    for (int p : idx.block3()) c *= lambda_at_theta[static_cast<std::size_t>(p - 1)];
    psi += c / g_factor(idx, spec) * basis.right_state(idx);
  }
  return psi;
}

StateVector fix_phase(const StateVector& v) {
  const double norm = v.norm();
  if (norm == 0.0) throw EigenError("fix_phase: zero vector");
  StateVector out = v / norm;
  for (Eigen::Index k = 0; k < out.size(); ++k) {
    if (std::abs(out(k)) > 1e-12) {
      out *= std::abs(out(k)) / out(k);
      break;
    }
  }
  return out;
}

double ray_angle(const StateVector& a, const StateVector& b) {
  const double c = std::abs(a.dot(b)) / (a.norm() * b.norm());
  return std::acos(std::min(1.0, c));
}

}  // namespace spintorus
