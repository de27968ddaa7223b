#pragma once

// Nested separation-of-variables basis of the su(3) chain.
//
//   <θ_{p_1..p_m2}; θ_{p_m2+1..p_m}| = <0| C²(θ_{p_1})⋯C²(θ_{p_m2}) C³(θ_{p_m2+1})⋯C³(θ_{p_m})
//   |θ_{p_1..p_m2}; θ_{p_m2+1..p_m}> = B₃(θ_{p_m})⋯B₃(θ_{p_m2+1}) B₂(θ_{p_m2})⋯B₂(θ_{p_1}) |0>
//
// Operators in the same block commute at these arguments, so labels are
// stored with both blocks sorted.

#include <compare>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "spintorus/chain_spec.hpp"
#include "spintorus/monodromy.hpp"

namespace spintorus {

struct BasisIndex {
  int m = 0;
  int m2 = 0;
  std::vector<int> p;  // p[0..m2) is the C²/B₂ block, p[m2..m) the C³/B₃ block; 1-based sites

  // Sorts each block and validates distinctness.
  static BasisIndex from_blocks(std::vector<int> block2, std::vector<int> block3);

  [[nodiscard]] std::span<const int> block2() const { return {p.data(), static_cast<std::size_t>(m2)}; }
  [[nodiscard]] std::span<const int> block3() const {
    return {p.data() + m2, static_cast<std::size_t>(m - m2)};
  }
  [[nodiscard]] bool contains(int site) const;

  // Ordering conditions of the label set; throws IndexError.
  void validate(int sites) const;

  [[nodiscard]] std::string label() const;

  auto operator<=>(const BasisIndex&) const = default;
};

// All 3^N labels, ordered lexicographically by (m, m2, P).
[[nodiscard]] std::vector<BasisIndex> enumerate_basis(int sites);

// Caches T(θ_j) for every site; all basis constructions go through it.
class SovBasis {
 public:
  // Requires a generic su(3) spec.
  explicit SovBasis(ChainSpec spec);

  [[nodiscard]] const ChainSpec& spec() const { return spec_; }
  [[nodiscard]] const Monodromy& at_theta(int site) const;

  [[nodiscard]] StateVector left_state(const BasisIndex& idx) const;
  [[nodiscard]] StateVector right_state(const BasisIndex& idx) const;

 private:
  ChainSpec spec_;
  std::vector<Monodromy> at_theta_;
};

[[nodiscard]] StateVector left_state(const BasisIndex& idx, const ChainSpec& spec);
[[nodiscard]] StateVector right_state(const BasisIndex& idx, const ChainSpec& spec);

// Eigenvalue of D³₃(u) on the label: d(u) Π_{l in C³ block} sinh(u−θ_l+η)/sinh(u−θ_l).
[[nodiscard]] Complex d33_eigenvalue(Complex u, const BasisIndex& idx, const ChainSpec& spec);

// G_m normalization <idx|idx>; throws SpecError on a non-generic spec.
[[nodiscard]] Complex g_factor(const BasisIndex& idx, const ChainSpec& spec);

struct OrthogonalityReport {
  int sites = 0;
  std::size_t basis_size = 0;
  double gram_scale = 0.0;               // max |Gram|
  double max_diagonal_error = 0.0;       // max |Gram_ii / G_i − 1|
  double max_offdiagonal = 0.0;          // max |Gram_ij| / gram_scale, i != j
  double min_abs_g_factor = 0.0;
  BasisIndex worst_row;                  // worst off-diagonal pair
  BasisIndex worst_col;
  double identity_resolution_error = 0.0;  // ‖Σ |r><l|/G − id‖_F
};

// Full Gram matrix of left against right states; N <= 4.
[[nodiscard]] OrthogonalityReport verify_orthogonality(const ChainSpec& spec);

enum class BasisOperator { D33, D23, D32, B3, C3 };

inline constexpr BasisOperator kBasisOperators[] = {BasisOperator::D33, BasisOperator::D23, BasisOperator::D32,
                                                    BasisOperator::B3, BasisOperator::C3};

[[nodiscard]] std::string_view to_string(BasisOperator op);

// Monodromy entry (row, col) represented by the operator id.
[[nodiscard]] const Operator& operator_entry(BasisOperator op, const Monodromy& t);

struct BraTerm {
  BasisIndex index;
  Complex coefficient;
};
using BraDecomposition = std::vector<BraTerm>;

// <idx| Op(u) expanded on left basis states, terms sorted by label with
// exact zeros dropped. Coefficients are evaluated with d(u) cancelled
// against the 1/sinh(u−θ) factors, which makes them entire in u.
[[nodiscard]] BraDecomposition act_on_bra(BasisOperator op, Complex u, const BasisIndex& idx,
                                          const ChainSpec& spec);

// Σ coeff · left_state(target).
[[nodiscard]] StateVector expand(const BraDecomposition& terms, const SovBasis& basis);

}  // namespace spintorus
