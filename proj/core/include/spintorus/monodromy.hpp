#pragma once

// Row-to-row monodromy T_0(u) = R_{0N}(u-θ_N) ⋯ R_{01}(u-θ_1), its operator
// entries T^i_j(u), the antiperiodic transfer matrix t(u) = tr_0{g_0 T_0(u)}
// and the operators built from them.
//
// Entry naming follows the su(n) convention:
//   A = T^1_1,  B_i = T^1_i,  C^i = T^i_1,  D^i_j = T^i_j  (i, j >= 2).

#include <vector>

#include "spintorus/chain_spec.hpp"
#include "spintorus/tensor.hpp"

namespace spintorus {

class Monodromy {
 public:
  // T(u). The auxiliary index is contracted site by site, so the
  // (n·n^N)-dimensional product is never formed.
  static Monodromy evaluate(const ChainSpec& spec, Complex u);

  [[nodiscard]] int rank() const { return rank_; }
  [[nodiscard]] const Operator& entry(int i, int j) const;

  [[nodiscard]] const Operator& A() const { return entry(1, 1); }
  [[nodiscard]] const Operator& B(int i) const { return entry(1, i); }
  [[nodiscard]] const Operator& C(int i) const { return entry(i, 1); }
  [[nodiscard]] const Operator& D(int i, int j) const { return entry(i, j); }

  // tr_0{g_0 T_0} = Σ_{ij} g_{ji} T^i_j.
  [[nodiscard]] Operator twisted_trace() const;

 private:
  friend struct MonodromyJet;
  Monodromy(int rank, std::vector<Operator> entries) : rank_(rank), entries_(std::move(entries)) {}

  int rank_;
  std::vector<Operator> entries_;  // row-major over (i, j)
};

// T(u) together with dT/du, both exact (analytic R'(u) via the product rule).
struct MonodromyJet {
  Monodromy value;
  Monodromy derivative;

  static MonodromyJet evaluate(const ChainSpec& spec, Complex u);
};

[[nodiscard]] Operator monodromy_entry(Complex u, int i, int j, const ChainSpec& spec);

// a(u) = Π sinh(u−θ_l+η)
[[nodiscard]] Complex scalar_a(Complex u, const ChainSpec& spec);
// d(u) = Π sinh(u−θ_l) = a(u−η)
[[nodiscard]] Complex scalar_d(Complex u, const ChainSpec& spec);
// d_l(u) = Π_{k≠l} sinh(u−θ_k), l 1-based
[[nodiscard]] Complex scalar_d_l(Complex u, int l, const ChainSpec& spec);

[[nodiscard]] Operator transfer(Complex u, const ChainSpec& spec);
[[nodiscard]] Operator transfer_derivative(Complex u, const ChainSpec& spec);

// U(g) = g_1 g_2 ⋯ g_N.
[[nodiscard]] Operator twist_operator(const ChainSpec& spec);

// H = Σ_j h_{j,j+1} on the homogeneous chain with E^{k,l}_{N+1} = g_1 E^{k,l}_1 g_1^{-1}.
// Requires N >= 2.
[[nodiscard]] Operator global_hamiltonian(int rank, int sites, Complex eta);

// |0> = |1,…,1>
[[nodiscard]] StateVector reference_state(const ChainSpec& spec);
// |0̄> = |n,…,n>  (|3,…,3> for su(3))
[[nodiscard]] StateVector bar_reference_state(const ChainSpec& spec);

}  // namespace spintorus
