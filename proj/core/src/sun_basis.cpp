#include "spintorus/sun_basis.hpp"

#include <algorithm>
#include <string>

#include "spintorus/errors.hpp"
#include "spintorus/monodromy.hpp"

namespace spintorus {

SunBasisIndex SunBasisIndex::from_counts(int rank, int sites, const std::vector<int>& counts,
                                         const std::vector<int>& p) {
  if (static_cast<int>(counts.size()) != rank - 1) {
    throw IndexError("su(n) label needs n−1 block counts, got " + std::to_string(counts.size()));
  }
  int total = 0;
  for (int c : counts) {
    if (c < 0) throw IndexError("negative block count");
    total += c;
  }
  if (total > sites || static_cast<int>(p.size()) != total) {
    throw IndexError("block counts must sum to |P| <= N");
  }
  SunBasisIndex idx;
  auto it = p.begin();
  for (int c : counts) {
    idx.blocks.emplace_back(it, it + c);
    it += c;
  }
  idx.validate(rank, sites);
  return idx;
}

void SunBasisIndex::validate(int rank, int sites) const {
  if (static_cast<int>(blocks.size()) != rank - 1) throw IndexError("su(n) label needs n−1 blocks");
  std::vector<int> all;
  for (const auto& b : blocks) {
    if (std::adjacent_find(b.begin(), b.end(), std::greater_equal<>{}) != b.end()) {
      throw IndexError("su(n) label blocks must be strictly increasing");
    }
    for (int s : b) {
      if (s < 1 || s > sites) throw IndexError("su(n) label site outside 1..N");
      all.push_back(s);
    }
  }
  std::sort(all.begin(), all.end());
  if (std::adjacent_find(all.begin(), all.end()) != all.end()) throw IndexError("su(n) label repeats a site");
}

std::vector<SunBasisIndex> enumerate_sun_basis(int rank, int sites) {
  const long total = TensorShape{rank, sites}.dimension();
  std::vector<SunBasisIndex> out;
  out.reserve(static_cast<std::size_t>(total));
  for (long code = 0; code < total; ++code) {
    SunBasisIndex idx;
    idx.blocks.resize(static_cast<std::size_t>(rank - 1));
    long c = code;
    for (int s = 1; s <= sites; ++s) {
      const int level = static_cast<int>(c % rank);
      c /= rank;
      if (level > 0) idx.blocks[static_cast<std::size_t>(level - 1)].push_back(s);
    }
    out.push_back(std::move(idx));
  }
  std::sort(out.begin(), out.end());
  return out;
}

StateVector sun_basis_state(const SunBasisIndex& idx, Side side, const ChainSpec& spec) {
  validate_shape(spec);
  require_generic(spec);
  idx.validate(spec.rank, spec.sites);
  StateVector v = reference_state(spec);
  for (std::size_t k = 0; k < idx.blocks.size(); ++k) {
    const int level = static_cast<int>(k) + 2;
    for (int s : idx.blocks[k]) {
      const auto t = Monodromy::evaluate(spec, spec.th(s));
      if (side == Side::Left) {
        v = t.C(level).transpose() * v;
      } else {
        v = t.B(level) * v;
      }
    }
  }
  return v;
}

Complex sun_dnn_eigenvalue(Complex u, const SunBasisIndex& idx, const ChainSpec& spec) {
  idx.validate(spec.rank, spec.sites);
  const auto& top = idx.blocks.back();
  Complex r{1.0, 0.0};
  for (int j = 1; j <= spec.sites; ++j) {
    const bool in_top = std::find(top.begin(), top.end(), j) != top.end();
    r *= in_top ? std::sinh(u - spec.th(j) + spec.eta) : std::sinh(u - spec.th(j));
  }
  return r;
}

}  // namespace spintorus
