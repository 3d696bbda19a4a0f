/*
 * Copyright 2026 The fbsim Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef FBSIM_FIRST_QUANTIZATION_HPP
#define FBSIM_FIRST_QUANTIZATION_HPP

// Brute-force first-quantization model of N particles with mode and internal
// degrees of freedom. Everything here is dense and exponential in N; it is the
// ground truth the permanent/determinant fast path is checked against.

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "fbsim/complex_matrix.hpp"
#include "fbsim/fock.hpp"
#include "fbsim/occupation.hpp"

namespace fbsim {

inline constexpr int kOracleMaxParticles = 4;
inline constexpr std::size_t kOracleMaxDimension = 4096;
/// Side length cap for explicitly materialized operators.
inline constexpr std::size_t kDenseOperatorMaxDimension = 1024;
/// Below this, det(G)/N! (or per(G)/N!) counts as a vanishing state.
inline constexpr double kVanishingThreshold = 1e-14;

/// Permutation symmetry: S means eps(sigma) = 1, A means eps(sigma) = sgn(sigma).
enum class Symmetry { S, A };

/// Z2 product: S*S = S, S*A = A, A*A = S.
constexpr Symmetry operator*(Symmetry a, Symmetry b) {
  return a == b ? Symmetry::S : Symmetry::A;
}

std::string_view to_string(Symmetry s);
Symmetry parse_symmetry(std::string_view s);

/// sigma[a] = sigma(a), 0-based.
using Permutation = std::vector<int>;

int permutation_sign(const Permutation& sigma);
/// (sigma tau)(a) = sigma(tau(a)).
Permutation compose(const Permutation& sigma, const Permutation& tau);
Permutation inverse(const Permutation& sigma);
/// All permutations of n elements, lexicographic.
std::vector<Permutation> all_permutations(int n);
/// eps(sigma) for the given symmetry.
int character(Symmetry eps, const Permutation& sigma);

/// Tensor factor a permutation or symmetrizer acts on.
enum class Factor { modes, internal, both };

/**
 * Index layout of (H (x) K)^(x)N with dim H = M modes and dim K = D internal
 * states.
 *
 * Particle-major: particle 0 is the most significant digit. Within a particle
 * the slot value is k * D + j (mode-major, then internal). A layout with
 * D = 1 is the pure mode space H^(x)N, one with M = 1 the pure internal space.
 */
class TensorLayout {
 public:
  TensorLayout(int modes, int internal_dim, int particles);

  int modes() const noexcept { return modes_; }
  int internal_dim() const noexcept { return internal_dim_; }
  int particles() const noexcept { return particles_; }
  std::size_t slot_dim() const noexcept { return static_cast<std::size_t>(modes_) * internal_dim_; }
  std::size_t dimension() const noexcept { return dimension_; }
  /// Stride of particle a's slot digit.
  std::size_t stride(int particle) const { return strides_[particle]; }

  std::size_t index(std::span<const int> modes, std::span<const int> internal) const;
  void decode(std::size_t index, std::span<int> modes, std::span<int> internal) const;

  friend bool operator==(const TensorLayout&, const TensorLayout&) = default;

 private:
  int modes_;
  int internal_dim_;
  int particles_;
  std::size_t dimension_;
  std::vector<std::size_t> strides_;
};

/**
 * The internal single-particle states |phi_1>, ..., |phi_N> in C^D and their
 * Gram matrix G_ab = <phi_a|phi_b>.
 */
class InternalStateSet {
 public:
  /// Throws InvalidArgument unless every vector has length D and unit norm
  /// within 1e-12.
  InternalStateSet(int dim, std::vector<std::vector<Complex>> vectors);

  /// Basis vectors e_1..e_N of C^D (D defaults to N).
  static InternalStateSet orthonormal(int particles, int dim = 0);
  /// Two states in C^2 with <phi_1|phi_2> = g: (1,0) and (g, sqrt(1-|g|^2)).
  static InternalStateSet pairwise_overlap(Complex g);
  /// N normalized complex Gaussian vectors in C^D; generically independent.
  static InternalStateSet random(int particles, int dim, std::uint64_t seed);

  int dimension() const noexcept { return dim_; }
  int size() const noexcept { return static_cast<int>(vectors_.size()); }
  std::span<const Complex> vector(int a) const { return vectors_[a]; }
  const ComplexMatrix& gram() const noexcept { return gram_; }

 private:
  int dim_;
  std::vector<std::vector<Complex>> vectors_;
  ComplexMatrix gram_;
};

/// `{"D":..,"vectors":[[[re,im],...],...]}`.
nlohmann::json internal_states_to_json(const InternalStateSet& s);
InternalStateSet internal_states_from_json(const nlohmann::json& j);

/// Amplitudes over the product basis |k>|j> of a TensorLayout.
class LabeledStateVector {
 public:
  explicit LabeledStateVector(TensorLayout layout);
  LabeledStateVector(TensorLayout layout, std::vector<Complex> amplitudes);

  /// |k_1,...,k_N>|phi_1,...,phi_N> for 0-based modes k_a.
  static LabeledStateVector product_state(int mode_count, std::span<const int> modes,
                                          const InternalStateSet& internal);

  const TensorLayout& layout() const noexcept { return layout_; }
  std::span<const Complex> amplitudes() const noexcept { return amplitudes_; }
  std::span<Complex> amplitudes() noexcept { return amplitudes_; }
  Complex operator[](std::size_t i) const { return amplitudes_[i]; }
  Complex& operator[](std::size_t i) { return amplitudes_[i]; }

  double norm() const;
  /// <this|other>.
  Complex inner(const LabeledStateVector& other) const;

  LabeledStateVector& operator+=(const LabeledStateVector& other);
  LabeledStateVector& operator-=(const LabeledStateVector& other);
  LabeledStateVector& operator*=(Complex s);

 private:
  TensorLayout layout_;
  std::vector<Complex> amplitudes_;
};

/// ||a - b||_2.
double distance(const LabeledStateVector& a, const LabeledStateVector& b);

/// Tensor product of a pure mode vector (layout M,1,N) with a pure internal
/// vector (layout 1,D,N) in the interleaved (M,D,N) layout.
LabeledStateVector combine(const LabeledStateVector& mode_part,
                           const LabeledStateVector& internal_part);

/// P_sigma |x_1..x_N> = |x_{sigma^-1(1)} .. x_{sigma^-1(N)}> on the chosen factor.
LabeledStateVector apply_permutation(const LabeledStateVector& state, const Permutation& sigma,
                                     Factor factor);
/// Dense matrix of apply_permutation.
ComplexMatrix permutation_operator(const Permutation& sigma, Factor factor,
                                   const TensorLayout& layout);

/// (1/N!) sum_sigma eps(sigma) P_sigma applied to `state`.
LabeledStateVector symmetrize(const LabeledStateVector& state, Symmetry eps, Factor factor);
/// Dense symmetrizer; throws CapExceeded above kDenseOperatorMaxDimension.
ComplexMatrix symmetrizer(Symmetry eps, Factor factor, const TensorLayout& layout);

/// ||(I (x) S_eps2) S_eps1 - S_{eps1 eps2} (x) S_eps2||_F.
double verify_projector_identity(Symmetry eps1, Symmetry eps2, int modes, int internal_dim,
                                 int particles);

/// c = [(1/N!) sum_sigma eps(sigma) prod_a G_{a,sigma(a)}]^(-1/2), i.e.
/// [per(G)/N!]^(-1/2) for S and [det(G)/N!]^(-1/2) for A. Throws
/// VanishingState if the bracket is at or below kVanishingThreshold.
double normalization_constant(const InternalStateSet& internal, Symmetry eps2);

/// Fock state ||m^(eps)>> = sqrt(N!/mu(m)) S_eps |l> of the mode space
/// (layout M,1,N), assembled directly from the distinct orderings of l.
/// The zero vector for eps = A with a multiply occupied mode.
LabeledStateVector fock_mode_state(const OccupationVector& m, Symmetry eps);

/**
 * Input state c_eps2 sqrt(N!/mu(n)) (I (x) S_eps2) S_eps1 |k, phi>, unit norm.
 *
 * The construction is checked against the factorized form
 * c_eps2 ||n^(eps1 eps2)>> |phi^(eps2)> to 1e-12 (ContractViolation on
 * failure). Throws VanishingState when eps1*eps2 = A meets a double
 * occupancy, or eps2 = A meets linearly dependent internal states.
 */
LabeledStateVector build_epsilon_state(const OccupationVector& n,
                                       const InternalStateSet& internal, Symmetry eps1,
                                       Symmetry eps2);

/// U^(x)N (x) I with |k> -> sum_l U_kl |l>.
LabeledStateVector apply_network(const LabeledStateVector& state, const ComplexMatrix& u);

/// p(l) = sum_j |psi(l, j)|^2 over all M^N mode strings l (particle 0 most
/// significant).
std::vector<double> mode_pattern_marginal(const LabeledStateVector& state);

/**
 * Label-blind counting probability of configuration m: the sum of
 * <psi| (|l'><l'| (x) I) |psi> over the distinct orderings l' of m. For
 * eps-symmetric states this equals povm_probability_sorted().
 */
double povm_probability(const LabeledStateVector& state, const OccupationVector& m);

/// <psi| Pi_l |psi> with Pi_l = (N!/mu(m)) |l><l| (x) I and l ascending.
double povm_probability_sorted(const LabeledStateVector& state, const OccupationVector& m);

/// Dense Pi_l.
ComplexMatrix mode_pattern_projector(const OccupationVector& m, const TensorLayout& layout);
/// Dense Pi^(eps)(m) = S_eps Pi_l S_eps.
ComplexMatrix povm_element(Symmetry eps, const OccupationVector& m, const TensorLayout& layout);
/// Pi^(eps)(m) |psi> without materializing the operator.
LabeledStateVector apply_povm_element(const LabeledStateVector& state, Symmetry eps,
                                      const OccupationVector& m);

/// ||sum_{|m|=N} Pi^(eps)(m) - S_eps||_F.
double verify_povm_completeness(Symmetry eps, int modes, int internal_dim, int particles);

/// ||(I (x) S_eps2) Pi^(eps1)(m) - Pi^(eps1)(m) (I (x) S_eps2)||_F.
double verify_povm_commutation(Symmetry eps1, Symmetry eps2, int modes, int internal_dim,
                               int particles, const OccupationVector& m);

/// ||(S_eps (x) I) Pi_l (S_eps (x) I) - ||m^(eps)>><<m^(eps)|| (x) I||_F.
double verify_fock_projector_identity(Symmetry eps, int internal_dim,
                                      const OccupationVector& m);

struct EpsilonInput {
  OccupationVector n;
  InternalStateSet internal;
  Symmetry eps1;
  Symmetry eps2;
};

/// Applies `u` to a unit-norm state and evaluates povm_probability over every
/// configuration. Tagged Statistics::general.
OutputDistribution oracle_distribution(const LabeledStateVector& input, const ComplexMatrix& u);
OutputDistribution oracle_distribution(const EpsilonInput& input, const ComplexMatrix& u);

}  // namespace fbsim

#endif  // FBSIM_FIRST_QUANTIZATION_HPP
