#include "spintorus/tensor.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <unsupported/Eigen/KroneckerProduct>

#include "spintorus/errors.hpp"

namespace spintorus {

long TensorShape::dimension() const {
  if (rank < 2) throw DimensionError("rank must be at least 2, got " + std::to_string(rank));
  if (sites < 1) throw DimensionError("number of sites must be at least 1, got " + std::to_string(sites));
  if (sites > kMaxSites) {
    throw DimensionError("N=" + std::to_string(sites) + " exceeds the dense budget (N <= " +
                         std::to_string(kMaxSites) + ")");
  }
  long dim = 1;
  for (int k = 0; k < sites; ++k) dim *= rank;
  if (dim > kMaxDimension) {
    throw DimensionError("dimension " + std::to_string(rank) + "^" + std::to_string(sites) + " = " +
                         std::to_string(dim) + " exceeds the dense budget (" +
                         std::to_string(kMaxDimension) + ")");
  }
  return dim;
}

double max_abs(const Matrix& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

double max_abs(const StateVector& v) { return v.size() == 0 ? 0.0 : v.cwiseAbs().maxCoeff(); }

bool all_finite(const Matrix& m) { return m.allFinite(); }

Matrix unit_matrix(int n, int k, int l) {
  if (k < 1 || k > n || l < 1 || l > n) throw DimensionError("unit matrix label out of range");
  Matrix e = Matrix::Zero(n, n);
  e(k - 1, l - 1) = 1.0;
  return e;
}

Matrix kron(const Matrix& a, const Matrix& b) { return Eigen::kroneckerProduct(a, b).eval(); }

Operator embed_site_operator(const Matrix& a, int site, const TensorShape& shape) {
  (void)shape.dimension();
  if (a.rows() != shape.rank || a.cols() != shape.rank) {
    throw DimensionError("site operator must be " + std::to_string(shape.rank) + "x" +
                         std::to_string(shape.rank));
  }
  if (site < 1 || site > shape.sites) {
    throw DimensionError("site " + std::to_string(site) + " outside 1.." + std::to_string(shape.sites));
  }
  long left = 1;
  for (int k = 1; k < site; ++k) left *= shape.rank;
  long right = 1;
  for (int k = site + 1; k <= shape.sites; ++k) right *= shape.rank;
  return kron(kron(Matrix::Identity(left, left), a), Matrix::Identity(right, right));
}

Operator embed_two_site_operator(const Matrix& h, int first, int second, const TensorShape& shape) {
  const long dim = shape.dimension();
  const int n = shape.rank;
  if (h.rows() != n * n || h.cols() != n * n) throw DimensionError("two-site operator must be n^2 x n^2");
  if (first < 1 || first > shape.sites || second < 1 || second > shape.sites || first == second) {
    throw DimensionError("two-site embedding needs distinct sites in 1..N");
  }
  // stride of factor j (1-based) in the i_1-slowest ordering
  auto stride = [&](int site) {
    long s = 1;
    for (int k = site + 1; k <= shape.sites; ++k) s *= n;
    return s;
  };
  const long s1 = stride(first);
  const long s2 = stride(second);

  Operator out = Operator::Zero(dim, dim);
  for (long col = 0; col < dim; ++col) {
    const int x1 = static_cast<int>((col / s1) % n);
    const int x2 = static_cast<int>((col / s2) % n);
    const long rest = col - x1 * s1 - x2 * s2;
    for (int y1 = 0; y1 < n; ++y1) {
      for (int y2 = 0; y2 < n; ++y2) {
        const Complex value = h(y1 * n + y2, x1 * n + x2);
        if (value != Complex{}) out(rest + y1 * s1 + y2 * s2, col) += value;
      }
    }
  }
  return out;
}

Complex bilinear_pair(const StateVector& bra, const StateVector& ket) {
  if (bra.size() != ket.size()) {
    throw DimensionError("bilinear_pair: dimension mismatch " + std::to_string(bra.size()) + " vs " +
                         std::to_string(ket.size()));
  }
  return (bra.transpose() * ket)(0, 0);
}

StateVector uniform_product_state(int level, const TensorShape& shape) {
  const long dim = shape.dimension();
  if (level < 1 || level > shape.rank) throw DimensionError("product-state level out of range");
  long index = 0;
  for (int k = 0; k < shape.sites; ++k) index = index * shape.rank + (level - 1);
  StateVector v = StateVector::Zero(dim);
  v(index) = 1.0;
  return v;
}

namespace {

// Unit norm, first component within 1e-8 of the largest magnitude made real positive.
void fix_gauge(StateVector& v) {
  v.normalize();
  const double largest = max_abs(v);
  for (Eigen::Index k = 0; k < v.size(); ++k) {
    if (std::abs(v(k)) >= (1.0 - 1e-8) * largest) {
      v *= std::abs(v(k)) / v(k);
      return;
    }
  }
}

void check_commuting(std::span<const Operator> family, double tolerance) {
  for (std::size_t a = 0; a < family.size(); ++a) {
    for (std::size_t b = a + 1; b < family.size(); ++b) {
      const double scale = std::max(family[a].norm() * family[b].norm(), 1e-300);
      const double comm = (family[a] * family[b] - family[b] * family[a]).norm();
      if (comm > tolerance * scale) {
        throw EigenError("family members " + std::to_string(a) + " and " + std::to_string(b) +
                         " do not commute: relative commutator " + std::to_string(comm / scale));
      }
    }
  }
}

}  // namespace

SimultaneousEigenResult simultaneous_eigen(std::span<const Operator> family,
                                           const SimultaneousEigenOptions& options) {
  if (family.empty()) throw EigenError("simultaneous_eigen: empty family");
  const Eigen::Index dim = family.front().rows();
  for (const auto& op : family) {
    if (op.rows() != dim || op.cols() != dim) throw DimensionError("simultaneous_eigen: mixed dimensions");
    if (!op.allFinite()) throw EigenError("simultaneous_eigen: non-finite operator entries");
  }
  check_commuting(family, options.commutator_tolerance);

  std::mt19937_64 rng(options.seed);
  std::normal_distribution<double> normal(0.0, 1.0);

  double worst = 0.0;
  for (int attempt = 1; attempt <= options.max_attempts; ++attempt) {
    Operator mix = Operator::Zero(dim, dim);
    for (const auto& op : family) {
      const double norm = std::max(op.norm(), 1e-300);
      const Complex c{normal(rng), normal(rng)};
      mix += (c / norm) * op;
    }

    Eigen::ComplexEigenSolver<Operator> solver(mix, true);
    if (solver.info() != Eigen::Success) continue;
    const Operator& vectors = solver.eigenvectors();
    Eigen::PartialPivLU<Operator> lu(vectors);
    const Operator duals = lu.inverse();
    if (!duals.allFinite()) continue;

    SimultaneousEigenResult result;
    result.attempts = attempt;
    Eigen::JacobiSVD<Operator> svd(vectors);
    const auto& sv = svd.singularValues();
    result.condition_number = sv(sv.size() - 1) > 0 ? sv(0) / sv(sv.size() - 1) : INFINITY;
    result.pairs.reserve(static_cast<std::size_t>(dim));

    worst = 0.0;
    for (Eigen::Index k = 0; k < dim; ++k) {
      EigenPair pair;
      pair.vector = vectors.col(k);
      fix_gauge(pair.vector);
      pair.dual = duals.row(k).transpose();
      pair.dual /= bilinear_pair(pair.dual, pair.vector);
      for (const auto& op : family) {
        const StateVector ov = op * pair.vector;
        const Complex mu = bilinear_pair(pair.dual, ov);
        const double scale = std::max(op.norm() * pair.vector.norm(), 1e-300);
        pair.residual = std::max(pair.residual, (ov - mu * pair.vector).norm() / scale);
        pair.eigenvalues.push_back(mu);
      }
      worst = std::max(worst, pair.residual);
      result.pairs.push_back(std::move(pair));
    }
    if (worst <= options.residual_tolerance) return result;
  }
  throw EigenError("simultaneous_eigen: degenerate joint spectrum not resolved after " +
                   std::to_string(options.max_attempts) + " random mixings (worst residual " +
                   std::to_string(worst) + ")");
}

double reconstruction_error(std::span<const Operator> family, const SimultaneousEigenResult& result) {
  double worst = 0.0;
  for (std::size_t f = 0; f < family.size(); ++f) {
    Operator rebuilt = Operator::Zero(family[f].rows(), family[f].cols());
    for (const auto& pair : result.pairs) {
      rebuilt += pair.eigenvalues.at(f) * pair.vector * pair.dual.transpose();
    }
    const double scale = std::max(family[f].norm(), 1e-300);
    worst = std::max(worst, (rebuilt - family[f]).norm() / scale);
  }
  return worst;
}

}  // namespace spintorus
