#include "spintorus/sov_basis.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "spintorus/errors.hpp"

namespace spintorus {

namespace {

void require_su3(const ChainSpec& spec) {
  if (spec.rank != 3) throw SpecError("the nested SoV basis is implemented for su(3) (rank 3) only");
}

Complex sh(Complex x) { return std::sinh(x); }

// Guarded θ-only denominator.
Complex denom(Complex x) {
  if (std::abs(x) < 1e-12) throw PoleError("vanishing theta-only denominator: the spec is not generic");
  return x;
}

// Π_{j not in excluded} sinh(u − θ_j): d(u) with the excluded factors cancelled.
Complex reduced_d(Complex u, const ChainSpec& spec, std::initializer_list<std::span<const int>> excluded,
                  int extra = 0) {
  Complex r{1.0, 0.0};
  for (int j = 1; j <= spec.sites; ++j) {
    if (j == extra) continue;
    bool skip = false;
    for (const auto& block : excluded) {
      if (std::find(block.begin(), block.end(), j) != block.end()) {
        skip = true;
        break;
      }
    }
    if (!skip) r *= sh(u - spec.th(j));
  }
  return r;
}

std::vector<int> without(std::span<const int> block, int site) {
  std::vector<int> out;
  for (int s : block) {
    if (s != site) out.push_back(s);
  }
  return out;
}

std::vector<int> with(std::span<const int> block, int site) {
  std::vector<int> out(block.begin(), block.end());
  out.push_back(site);
  return out;
}

std::vector<int> replaced(std::span<const int> block, int old_site, int new_site) {
  std::vector<int> out(block.begin(), block.end());
  std::replace(out.begin(), out.end(), old_site, new_site);
  return out;
}

}  // namespace

BasisIndex BasisIndex::from_blocks(std::vector<int> block2, std::vector<int> block3) {
  std::sort(block2.begin(), block2.end());
  std::sort(block3.begin(), block3.end());
  BasisIndex idx;
  idx.m2 = static_cast<int>(block2.size());
  idx.m = idx.m2 + static_cast<int>(block3.size());
  idx.p = std::move(block2);
  idx.p.insert(idx.p.end(), block3.begin(), block3.end());
  std::vector<int> all = idx.p;
  std::sort(all.begin(), all.end());
  if (std::adjacent_find(all.begin(), all.end()) != all.end()) {
    throw IndexError("basis label repeats a site: " + idx.label());
  }
  return idx;
}

bool BasisIndex::contains(int site) const { return std::find(p.begin(), p.end(), site) != p.end(); }

void BasisIndex::validate(int sites) const {
  if (m < 0 || m > sites || m2 < 0 || m2 > m || static_cast<int>(p.size()) != m) {
    throw IndexError("basis label needs 0 <= m2 <= m <= N and |P| = m: " + label());
  }
  for (int s : p) {
    if (s < 1 || s > sites) throw IndexError("basis label site outside 1..N: " + label());
  }
  const auto b2 = block2();
  const auto b3 = block3();
  if (std::adjacent_find(b2.begin(), b2.end(), std::greater_equal<>{}) != b2.end() ||
      std::adjacent_find(b3.begin(), b3.end(), std::greater_equal<>{}) != b3.end()) {
    throw IndexError("blocks must be strictly increasing: " + label());
  }
  std::vector<int> all = p;
  std::sort(all.begin(), all.end());
  if (std::adjacent_find(all.begin(), all.end()) != all.end()) {
    throw IndexError("basis label repeats a site: " + label());
  }
}

std::string BasisIndex::label() const {
  std::string s = "(";
  for (int k = 0; k < m; ++k) {
    if (k == m2) s += ";";
    else if (k > 0) s += ",";
    s += std::to_string(p[static_cast<std::size_t>(k)]);
  }
  if (m2 == m) s += ";";
  return s + ")";
}

std::vector<BasisIndex> enumerate_basis(int sites) {
  if (sites < 1 || sites > kMaxSites) {
    throw DimensionError("enumerate_basis: N=" + std::to_string(sites) + " outside the dense budget 1.." +
                         std::to_string(kMaxSites));
  }
  // Each site carries a level: 0 = absent, 2 = C² block, 3 = C³ block.
  std::vector<BasisIndex> out;
  long total = 1;
  for (int k = 0; k < sites; ++k) total *= 3;
  out.reserve(static_cast<std::size_t>(total));
  for (long code = 0; code < total; ++code) {
    long c = code;
    std::vector<int> b2, b3;
    for (int s = 1; s <= sites; ++s) {
      const int digit = static_cast<int>(c % 3);
      c /= 3;
      if (digit == 1) b2.push_back(s);
      if (digit == 2) b3.push_back(s);
    }
    out.push_back(BasisIndex::from_blocks(std::move(b2), std::move(b3)));
  }
  std::sort(out.begin(), out.end());
  return out;
}

SovBasis::SovBasis(ChainSpec spec) : spec_(std::move(spec)) {
  require_su3(spec_);
  require_generic(spec_);
  at_theta_.reserve(static_cast<std::size_t>(spec_.sites));
  for (int j = 1; j <= spec_.sites; ++j) at_theta_.push_back(Monodromy::evaluate(spec_, spec_.th(j)));
}

const Monodromy& SovBasis::at_theta(int site) const {
  if (site < 1 || site > spec_.sites) throw DimensionError("site outside 1..N");
  return at_theta_[static_cast<std::size_t>(site - 1)];
}

StateVector SovBasis::left_state(const BasisIndex& idx) const {
  idx.validate(spec_.sites);
  StateVector v = reference_state(spec_);
  // <v| X  ==  (X^T v)^T
  for (int s : idx.block2()) v = at_theta(s).C(2).transpose() * v;
  for (int s : idx.block3()) v = at_theta(s).C(3).transpose() * v;
  return v;
}

StateVector SovBasis::right_state(const BasisIndex& idx) const {
  idx.validate(spec_.sites);
  StateVector v = reference_state(spec_);
  for (int s : idx.block2()) v = at_theta(s).B(2) * v;
  for (int s : idx.block3()) v = at_theta(s).B(3) * v;
  return v;
}

StateVector left_state(const BasisIndex& idx, const ChainSpec& spec) { return SovBasis(spec).left_state(idx); }

StateVector right_state(const BasisIndex& idx, const ChainSpec& spec) { return SovBasis(spec).right_state(idx); }

Complex d33_eigenvalue(Complex u, const BasisIndex& idx, const ChainSpec& spec) {
  idx.validate(spec.sites);
  Complex r = reduced_d(u, spec, {idx.block3()});
  for (int s : idx.block3()) r *= sh(u - spec.th(s) + spec.eta);
  return r;
}

Complex g_factor(const BasisIndex& idx, const ChainSpec& spec) {
  require_generic(spec);
  idx.validate(spec.sites);
  const Complex eta = spec.eta;
  const Complex sh_eta = sh(eta);
  auto t = [&](int s) { return spec.th(s); };

  Complex r{1.0, 0.0};
  const auto b2 = idx.block2();
  const auto b3 = idx.block3();
  for (int k : b2) {
    r *= sh_eta * scalar_d_l(t(k), k, spec) * scalar_a(t(k), spec);
    for (int l : b2) {
      if (l != k) r *= sh(t(k) - t(l) + eta) / denom(sh(t(k) - t(l)));
    }
  }
  for (int k : b3) {
    r *= sh_eta * scalar_d_l(t(k), k, spec) * scalar_a(t(k), spec);
    for (int l : b3) {
      if (l != k) r *= sh(t(k) - t(l) + eta) / denom(sh(t(k) - t(l)));
    }
    for (int l : b2) r *= sh(t(k) - t(l) - eta) / denom(sh(t(k) - t(l)));
  }
  return r;
}

OrthogonalityReport verify_orthogonality(const ChainSpec& spec) {
  if (spec.sites > 4) throw DimensionError("verify_orthogonality builds the full Gram matrix; N <= 4");
  const SovBasis basis(spec);
  const auto labels = enumerate_basis(spec.sites);
  const auto count = static_cast<Eigen::Index>(labels.size());
  const long dim = spec.dimension();

  Matrix lefts(dim, count);
  Matrix rights(dim, count);
  std::vector<Complex> g(labels.size());
  for (Eigen::Index k = 0; k < count; ++k) {
    const auto& idx = labels[static_cast<std::size_t>(k)];
    lefts.col(k) = basis.left_state(idx);
    rights.col(k) = basis.right_state(idx);
    g[static_cast<std::size_t>(k)] = g_factor(idx, spec);
  }
  const Matrix gram = lefts.transpose() * rights;

  OrthogonalityReport report;
  report.sites = spec.sites;
  report.basis_size = labels.size();
  report.gram_scale = max_abs(gram);
  report.min_abs_g_factor = INFINITY;
  report.worst_row = labels.front();
  report.worst_col = labels.front();
  for (Eigen::Index i = 0; i < count; ++i) {
    const Complex gi = g[static_cast<std::size_t>(i)];
    report.min_abs_g_factor = std::min(report.min_abs_g_factor, std::abs(gi));
    report.max_diagonal_error = std::max(report.max_diagonal_error, std::abs(gram(i, i) / gi - 1.0));
    for (Eigen::Index j = 0; j < count; ++j) {
      if (i == j) continue;
      const double off = std::abs(gram(i, j)) / report.gram_scale;
      if (off > report.max_offdiagonal) {
        report.max_offdiagonal = off;
        report.worst_row = labels[static_cast<std::size_t>(i)];
        report.worst_col = labels[static_cast<std::size_t>(j)];
      }
    }
  }

  Operator resolution = Operator::Zero(dim, dim);
  for (Eigen::Index k = 0; k < count; ++k) {
    resolution += rights.col(k) * lefts.col(k).transpose() / g[static_cast<std::size_t>(k)];
  }
  report.identity_resolution_error = (resolution - Operator::Identity(dim, dim)).norm();
  return report;
}

std::string_view to_string(BasisOperator op) {
  switch (op) {
    case BasisOperator::D33: return "D33";
    case BasisOperator::D23: return "D23";
    case BasisOperator::D32: return "D32";
    case BasisOperator::B3: return "B3";
    case BasisOperator::C3: return "C3";
  }
  return "?";
}

const Operator& operator_entry(BasisOperator op, const Monodromy& t) {
  switch (op) {
    case BasisOperator::D33: return t.D(3, 3);
    case BasisOperator::D23: return t.D(2, 3);
    case BasisOperator::D32: return t.D(3, 2);
    case BasisOperator::B3: return t.B(3);
    case BasisOperator::C3: return t.C(3);
  }
  throw Error("unknown basis operator");
}

BraDecomposition act_on_bra(BasisOperator op, Complex u, const BasisIndex& idx, const ChainSpec& spec) {
  require_su3(spec);
  require_generic(spec);
  idx.validate(spec.sites);

  const Complex eta = spec.eta;
  const Complex sh_eta = sh(eta);
  auto t = [&](int s) { return spec.th(s); };
  const auto b2 = idx.block2();
  const auto b3 = idx.block3();

  std::map<BasisIndex, Complex> terms;
  auto add = [&](BasisIndex target, Complex c) {
    if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) {
      throw PoleError(std::string("non-finite coefficient in ") + std::string(to_string(op)) + " acting on " +
                      idx.label());
    }
    terms[std::move(target)] += c;
  };

  // Π_{k in C³, k != skip} sinh(u−θ_k+η) · [θ-weight](l, k)
  auto c3_product = [&](int skip, auto theta_weight) {
    Complex r{1.0, 0.0};
    for (int k : b3) {
      if (k != skip) r *= sh(u - t(k) + eta) * theta_weight(k);
    }
    return r;
  };

  switch (op) {
    case BasisOperator::D33: {
      add(idx, d33_eigenvalue(u, idx, spec));
      break;
    }
    case BasisOperator::D23: {
      for (int l : b3) {
        const Complex c = sh_eta * std::exp((u - t(l)) / 3.0) * reduced_d(u, spec, {b3}) *
                          c3_product(l, [&](int k) { return sh(t(l) - t(k) - eta) / denom(sh(t(l) - t(k))); });
        add(BasisIndex::from_blocks(with(b2, l), without(b3, l)), c);
      }
      break;
    }
    case BasisOperator::D32: {
      for (int l : b2) {
        Complex c = sh_eta * std::exp(-(u - t(l)) / 3.0) * reduced_d(u, spec, {b3}, l) *
                    c3_product(0, [](int) { return Complex{1.0, 0.0}; });
        for (int k : b2) {
          if (k != l) c *= sh(t(l) - t(k) + eta) / denom(sh(t(l) - t(k)));
        }
        add(BasisIndex::from_blocks(without(b2, l), with(b3, l)), c);
      }
      break;
    }
    case BasisOperator::B3: {
      for (int l : b3) {
        const Complex base =
            sh_eta * std::exp(-(u - t(l)) / 3.0) * reduced_d(u, spec, {b3}) *
            c3_product(l, [&](int k) { return sh(t(l) - t(k) - eta) / denom(sh(t(l) - t(k))); });
        const auto rest3 = without(b3, l);

        Complex first = base * scalar_a(t(l), spec);
        for (int a : b2) first *= sh(t(l) - t(a) - eta) / denom(sh(t(l) - t(a)));
        add(BasisIndex::from_blocks(std::vector<int>(b2.begin(), b2.end()), rest3), first);

        for (int a : b2) {
          Complex second = base * sh_eta * std::exp(-(t(a) - t(l)) / 3.0) / denom(sh(t(l) - t(a))) *
                           scalar_a(t(a), spec);
          for (int k : b2) {
            if (k != a) second *= sh(t(a) - t(k) - eta) / denom(sh(t(a) - t(k)));
          }
          add(BasisIndex::from_blocks(replaced(b2, a, l), rest3), second);
        }
      }
      break;
    }
    case BasisOperator::C3: {
      for (int l = 1; l <= spec.sites; ++l) {
        if (idx.contains(l)) continue;
        const Complex dl = denom(scalar_d_l(t(l), l, spec));
        const Complex common =
            c3_product(0, [&](int k) { return sh(t(l) - t(k)) / denom(sh(t(l) - t(k) + eta)); });

        const Complex first = std::exp((u - t(l)) / 3.0) * reduced_d(u, spec, {b3}, l) / dl * common;
        add(BasisIndex::from_blocks(std::vector<int>(b2.begin(), b2.end()), with(b3, l)), first);

        for (int a : b2) {
          Complex second = std::exp((u - t(a)) / 3.0) * common * sh_eta * reduced_d(u, spec, {b3}, a) *
                           std::exp((t(l) - t(a)) / 3.0) / (dl * denom(sh(t(a) - t(l) - eta)));
          for (int k : b2) {
            if (k != a) {
              second *= sh(t(l) - t(k)) / denom(sh(t(l) - t(k) + eta)) * sh(t(a) - t(k) + eta) /
                        denom(sh(t(a) - t(k)));
            }
          }
          add(BasisIndex::from_blocks(replaced(b2, a, l), with(b3, a)), second);
        }
      }
      break;
    }
  }

  BraDecomposition out;
  out.reserve(terms.size());
  for (auto& [target, c] : terms) {
    if (c != Complex{}) out.push_back({target, c});
  }
  return out;
}

StateVector expand(const BraDecomposition& terms, const SovBasis& basis) {
  StateVector v = StateVector::Zero(basis.spec().dimension());
  for (const auto& term : terms) v += term.coefficient * basis.left_state(term.index);
  return v;
}

}  // namespace spintorus
