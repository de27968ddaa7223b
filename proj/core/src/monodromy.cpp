#include "spintorus/monodromy.hpp"

#include <string>

#include "spintorus/errors.hpp"
#include "spintorus/rmatrix.hpp"

namespace spintorus {

namespace {

std::size_t flat(int rank, int i, int j) { return static_cast<std::size_t>((i - 1) * rank + (j - 1)); }

// n×n block (i, l) of a two-site matrix with the auxiliary factor first.
Matrix aux_block(const Matrix& r, int n, int i, int l) { return r.block(i * n, l * n, n, n); }

std::vector<Operator> identity_entries(int n) {
  std::vector<Operator> t(static_cast<std::size_t>(n * n), Operator::Zero(1, 1));
  for (int i = 0; i < n; ++i) t[static_cast<std::size_t>(i * n + i)](0, 0) = 1.0;
  return t;
}

// One site step: T'_{ij} = Σ_l T_{lj} ⊗ R_{il}; the new site is the fastest factor.
std::vector<Operator> absorb_site(const std::vector<Operator>& t, const Matrix& r, int n) {
  std::vector<Operator> next(t.size());
  const Eigen::Index old_dim = t.front().rows();
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      Operator acc = Operator::Zero(old_dim * n, old_dim * n);
      for (int l = 0; l < n; ++l) {
        const Matrix blk = aux_block(r, n, i, l);
        if (blk.isZero(0.0)) continue;
        const Operator& prev = t[static_cast<std::size_t>(l * n + j)];
        if (prev.isZero(0.0)) continue;
        acc += kron(prev, blk);
      }
      next[static_cast<std::size_t>(i * n + j)] = std::move(acc);
    }
  }
  return next;
}

std::vector<Operator> sum_entries(std::vector<Operator> a, const std::vector<Operator>& b) {
  for (std::size_t k = 0; k < a.size(); ++k) a[k] += b[k];
  return a;
}

}  // namespace

const Operator& Monodromy::entry(int i, int j) const {
  if (i < 1 || i > rank_ || j < 1 || j > rank_) {
    throw DimensionError("monodromy entry (" + std::to_string(i) + "," + std::to_string(j) + ") outside 1.." +
                         std::to_string(rank_));
  }
  return entries_[flat(rank_, i, j)];
}

Operator Monodromy::twisted_trace() const {
  const Matrix g = twist_matrix(rank_);
  Operator t = Operator::Zero(entries_.front().rows(), entries_.front().cols());
  for (int i = 1; i <= rank_; ++i) {
    for (int j = 1; j <= rank_; ++j) {
      const Complex gji = g(j - 1, i - 1);
      if (gji != Complex{}) t += gji * entry(i, j);
    }
  }
  return t;
}

Monodromy Monodromy::evaluate(const ChainSpec& spec, Complex u) {
  validate_shape(spec);
  const int n = spec.rank;
  const RParams p = spec.r_params();
  std::vector<Operator> t = identity_entries(n);
  for (int k = 1; k <= spec.sites; ++k) t = absorb_site(t, r_matrix(u - spec.th(k), p), n);
  return Monodromy(n, std::move(t));
}

MonodromyJet MonodromyJet::evaluate(const ChainSpec& spec, Complex u) {
  validate_shape(spec);
  const int n = spec.rank;
  const RParams p = spec.r_params();
  std::vector<Operator> t = identity_entries(n);
  std::vector<Operator> dt(t.size(), Operator::Zero(1, 1));
  for (int k = 1; k <= spec.sites; ++k) {
    const Matrix r = r_matrix(u - spec.th(k), p);
    const Matrix dr = r_matrix_derivative(u - spec.th(k), p);
    dt = sum_entries(absorb_site(dt, r, n), absorb_site(t, dr, n));
    t = absorb_site(t, r, n);
  }
  return {Monodromy(n, std::move(t)), Monodromy(n, std::move(dt))};
}

Operator monodromy_entry(Complex u, int i, int j, const ChainSpec& spec) {
  return Monodromy::evaluate(spec, u).entry(i, j);
}

Complex scalar_a(Complex u, const ChainSpec& spec) {
  Complex r{1.0, 0.0};
  for (const auto& t : spec.theta) r *= std::sinh(u - t + spec.eta);
  return r;
}

Complex scalar_d(Complex u, const ChainSpec& spec) {
  Complex r{1.0, 0.0};
  for (const auto& t : spec.theta) r *= std::sinh(u - t);
  return r;
}

Complex scalar_d_l(Complex u, int l, const ChainSpec& spec) {
  if (l < 1 || l > spec.sites) throw DimensionError("d_l: index l outside 1..N");
  Complex r{1.0, 0.0};
  for (int k = 1; k <= spec.sites; ++k) {
    if (k != l) r *= std::sinh(u - spec.th(k));
  }
  return r;
}

Operator transfer(Complex u, const ChainSpec& spec) { return Monodromy::evaluate(spec, u).twisted_trace(); }

Operator transfer_derivative(Complex u, const ChainSpec& spec) {
  return MonodromyJet::evaluate(spec, u).derivative.twisted_trace();
}

Operator twist_operator(const ChainSpec& spec) {
  validate_shape(spec);
  const Matrix g = twist_matrix(spec.rank);
  Operator u = Operator::Identity(1, 1);
  for (int k = 0; k < spec.sites; ++k) u = kron(u, g);
  return u;
}

Operator global_hamiltonian(int rank, int sites, Complex eta) {
  if (sites < 2) throw DimensionError("the global Hamiltonian needs N >= 2");
  const TensorShape shape{rank, sites};
  const long dim = shape.dimension();
  const Matrix h = local_hamiltonian({rank, eta});

  Operator hamiltonian = Operator::Zero(dim, dim);
  for (int j = 1; j < sites; ++j) hamiltonian += embed_two_site_operator(h, j, j + 1, shape);

  // Site N+1 is site 1 conjugated by g_1.
  const Operator g1 = embed_site_operator(twist_matrix(rank), 1, shape);
  hamiltonian += g1 * embed_two_site_operator(h, sites, 1, shape) * g1.transpose();
  return hamiltonian;
}

StateVector reference_state(const ChainSpec& spec) { return uniform_product_state(1, spec.shape()); }

StateVector bar_reference_state(const ChainSpec& spec) { return uniform_product_state(spec.rank, spec.shape()); }

}  // namespace spintorus
