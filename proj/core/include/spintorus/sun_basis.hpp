#pragma once

// Nested basis states of the su(n) chain,
//
//   <0| C²(θ_{P²})⋯ C³(θ_{P³})⋯ Cⁿ(θ_{Pⁿ})     and     Bₙ(θ_{Pⁿ})⋯ B₂(θ_{P²}) |0>,
//
// with one block of sites per level 2..n. Only the construction and the
// Dⁿₙ eigen-relation are provided; no decomposition formulas for n > 3.

#include <vector>

#include "spintorus/chain_spec.hpp"

namespace spintorus {

struct SunBasisIndex {
  // blocks[k] holds the sorted sites of level k+2; blocks.size() == n−1.
  std::vector<std::vector<int>> blocks;

  // Builds from the counts (m₂,…,m_n) and the concatenated site list P.
  // Throws IndexError on invalid counts or an unsorted / repeated P.
  static SunBasisIndex from_counts(int rank, int sites, const std::vector<int>& counts, const std::vector<int>& p);

  void validate(int rank, int sites) const;
  auto operator<=>(const SunBasisIndex&) const = default;
};

// n^N labels, one level (1..n, 1 = absent) per site.
[[nodiscard]] std::vector<SunBasisIndex> enumerate_sun_basis(int rank, int sites);

enum class Side { Left, Right };

[[nodiscard]] StateVector sun_basis_state(const SunBasisIndex& idx, Side side, const ChainSpec& spec);

// Dⁿₙ(u) eigenvalue: d(u) Π_{l in top block} sinh(u−θ_l+η)/sinh(u−θ_l).
[[nodiscard]] Complex sun_dnn_eigenvalue(Complex u, const SunBasisIndex& idx, const ChainSpec& spec);

}  // namespace spintorus
