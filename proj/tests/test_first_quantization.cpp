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

#include <doctest.h>

#include <cmath>
#include <random>

#include "fbsim/error.hpp"
#include "fbsim/first_quantization.hpp"
#include "fbsim/fock.hpp"
#include "fbsim/permanent.hpp"
#include "fbsim/unitary.hpp"
#include "test_support.hpp"

using namespace fbsim;

namespace {

constexpr Symmetry kFlags[] = {Symmetry::S, Symmetry::A};

LabeledStateVector random_state(const TensorLayout& layout, std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  std::vector<Complex> amps(layout.dimension());
  for (auto& z : amps) {
    const double re = normal(gen);
    const double im = normal(gen);
    z = {re, im};
  }
  LabeledStateVector v(layout, std::move(amps));
  v *= 1.0 / v.norm();
  return v;
}

LabeledStateVector normalized(LabeledStateVector v) {
  v *= 1.0 / v.norm();
  return v;
}

double max_abs_entry(const LabeledStateVector& v) {
  double worst = 0.0;
  for (const auto& z : v.amplitudes()) worst = std::max(worst, std::abs(z));
  return worst;
}

/// <<m^(eps)|| U^(x)N ||n^(eps)>> evaluated in the labeled mode space.
Complex mode_amplitude(const ComplexMatrix& u, const OccupationVector& n,
                       const OccupationVector& m, Symmetry eps) {
  const auto in = apply_network(fock_mode_state(n, eps), u);
  return fock_mode_state(m, eps).inner(in);
}

}  // namespace

TEST_SUITE("first-quantization-oracle") {

TEST_CASE("permutation helpers") {
  CHECK(permutation_sign({0, 1, 2}) == 1);
  CHECK(permutation_sign({1, 0, 2}) == -1);
  CHECK(permutation_sign({1, 2, 0}) == 1);
  CHECK(all_permutations(3).size() == 6);
  CHECK(compose({1, 0, 2}, {0, 2, 1}) == Permutation{1, 2, 0});
  CHECK(compose(Permutation{1, 2, 0}, inverse({1, 2, 0})) == Permutation{0, 1, 2});
  CHECK(character(Symmetry::A, {1, 0}) == -1);
  CHECK(character(Symmetry::S, {1, 0}) == 1);
  CHECK(Symmetry::A * Symmetry::A == Symmetry::S);
  CHECK(Symmetry::S * Symmetry::A == Symmetry::A);
  CHECK(parse_symmetry("A") == Symmetry::A);
  CHECK_THROWS_AS(parse_symmetry("X"), InvalidArgument);
}

TEST_CASE("tensor layout indexing and caps") {
  const TensorLayout layout(3, 2, 2);
  CHECK(layout.dimension() == 36);
  const std::vector<int> modes{2, 1};
  const std::vector<int> internal{1, 0};
  const auto idx = layout.index(modes, internal);
  CHECK(idx == (2 * 2 + 1) * 6 + (1 * 2 + 0));
  std::vector<int> m2(2), i2(2);
  layout.decode(idx, m2, i2);
  CHECK(m2 == modes);
  CHECK(i2 == internal);
  CHECK_THROWS_AS(TensorLayout(2, 1, kOracleMaxParticles + 1), CapExceeded);
  CHECK_THROWS_AS(TensorLayout(9, 1, 4), CapExceeded);  // 9^4 > 4096
  CHECK_NOTHROW(TensorLayout(4, 3, 3));                  // 12^3 = 1728
}

TEST_CASE("internal state sets validate normalization and compute the Gram matrix") {
  CHECK_THROWS_AS(InternalStateSet(2, {{1.0, 1.0}}), InvalidArgument);
  CHECK_THROWS_AS(InternalStateSet(2, {{1.0}}), InvalidArgument);
  const auto pair = InternalStateSet::pairwise_overlap(0.3);
  CHECK(std::abs(pair.gram()(0, 1) - 0.3) < 1e-15);
  CHECK(std::abs(pair.gram()(1, 1) - 1.0) < 1e-15);
  const auto r = InternalStateSet::random(3, 4, 9);
  const auto back = internal_states_from_json(internal_states_to_json(r));
  CHECK(back.gram() == r.gram());
}

TEST_CASE("identity permutation operator is the identity") {
  const TensorLayout layout(2, 2, 2);
  for (auto f : {Factor::modes, Factor::internal, Factor::both}) {
    const auto p = permutation_operator({0, 1}, f, layout);
    CHECK(test::max_abs(p - ComplexMatrix::identity(layout.dimension())) == 0.0);
  }
}

TEST_CASE("transposition on both factors swaps the particles") {
  const auto internal = InternalStateSet::orthonormal(2);
  const std::vector<int> in_modes{0, 1};
  const auto state = LabeledStateVector::product_state(2, in_modes, internal);
  const auto swapped = apply_permutation(state, {1, 0}, Factor::both);
  const InternalStateSet reversed(2, {{0.0, 1.0}, {1.0, 0.0}});
  const std::vector<int> out_modes{1, 0};
  const auto expected = LabeledStateVector::product_state(2, out_modes, reversed);
  CHECK(distance(swapped, expected) < 1e-15);
}

TEST_CASE("permutation operators compose as a representation") {
  const TensorLayout layout(2, 2, 3);
  std::mt19937_64 gen(3);
  for (int trial = 0; trial < 20; ++trial) {
    const auto sigma = test::random_permutation(3, gen);
    const auto tau = test::random_permutation(3, gen);
    for (auto f : {Factor::modes, Factor::internal, Factor::both}) {
      const auto lhs = permutation_operator(compose(sigma, tau), f, layout);
      const auto rhs = permutation_operator(sigma, f, layout) * permutation_operator(tau, f, layout);
      CHECK(test::max_abs(lhs - rhs) == 0.0);
    }
  }
}

TEST_CASE("symmetrizers are orthogonal projectors") {
  const TensorLayout one(3, 2, 1);
  for (Symmetry e : kFlags)
    CHECK(test::max_abs(symmetrizer(e, Factor::both, one) -
                        ComplexMatrix::identity(one.dimension())) == 0.0);

  const TensorLayout layout(2, 2, 3);
  for (auto f : {Factor::modes, Factor::internal, Factor::both}) {
    const auto s = symmetrizer(Symmetry::S, f, layout);
    const auto a = symmetrizer(Symmetry::A, f, layout);
    CHECK(frobenius_distance(s * s, s) < 1e-12);
    CHECK(frobenius_distance(a * a, a) < 1e-12);
    CHECK(frobenius_distance(s.adjoint(), s) < 1e-12);
    CHECK(frobenius_distance(a.adjoint(), a) < 1e-12);
    CHECK(test::max_abs(s * a) < 1e-12);
  }
  CHECK_THROWS_AS(symmetrizer(Symmetry::S, Factor::both, TensorLayout(4, 3, 3)), CapExceeded);
}

TEST_CASE("antisymmetrizing two particles in one mode gives the zero vector") {
  const std::vector<int> modes{1, 1};
  const auto state =
      LabeledStateVector::product_state(2, modes, InternalStateSet::orthonormal(2));
  CHECK(symmetrize(state, Symmetry::A, Factor::modes).norm() == 0.0);
  CHECK(symmetrize(state, Symmetry::S, Factor::modes).norm() > 0.5);
}

TEST_CASE("matrix-free symmetrization matches the dense symmetrizer") {
  const TensorLayout layout(2, 2, 3);
  const auto v = random_state(layout, 31);
  for (Symmetry e : kFlags) {
    for (auto f : {Factor::modes, Factor::internal, Factor::both}) {
      const auto dense = symmetrizer(e, f, layout);
      const auto fast = symmetrize(v, e, f);
      for (std::size_t i = 0; i < layout.dimension(); ++i) {
        Complex acc = 0.0;
        for (std::size_t j = 0; j < layout.dimension(); ++j) acc += dense(i, j) * v[j];
        CHECK(std::abs(acc - fast[i]) < 1e-14);
      }
    }
  }
}

TEST_CASE("projector identity holds for every flag pair") {
  CHECK(verify_projector_identity(Symmetry::S, Symmetry::S, 2, 2, 2) < 1e-12);
  CHECK(verify_projector_identity(Symmetry::A, Symmetry::A, 2, 2, 3) < 1e-12);
  for (Symmetry e1 : kFlags)
    for (Symmetry e2 : kFlags) {
      CHECK(verify_projector_identity(e1, e2, 2, 2, 1) == 0.0);
      CHECK(verify_projector_identity(e1, e2, 2, 2, 2) < 1e-12);
      CHECK(verify_projector_identity(e1, e2, 2, 2, 3) < 1e-12);
      CHECK(verify_projector_identity(e1, e2, 3, 2, 2) < 1e-12);
    }
}

TEST_CASE("normalization constant examples") {
  for (int n = 1; n <= 4; ++n)
    for (Symmetry e : kFlags)
      CHECK(std::abs(normalization_constant(InternalStateSet::orthonormal(n), e) -
                     std::sqrt(static_cast<double>(factorial(n)))) < 1e-12);
  for (double g : {0.0, 0.2, 0.7, 0.95}) {
    const auto pair = InternalStateSet::pairwise_overlap(g);
    CHECK(std::abs(normalization_constant(pair, Symmetry::S) -
                   std::sqrt(2.0) / std::sqrt(1.0 + g * g)) < 1e-12);
    CHECK(std::abs(normalization_constant(pair, Symmetry::A) -
                   std::sqrt(2.0) / std::sqrt(1.0 - g * g)) < 1e-12);
  }
  CHECK_THROWS_AS(normalization_constant(InternalStateSet::pairwise_overlap(1.0), Symmetry::A),
                  VanishingState);
}

TEST_CASE("symmetric input with identical internal states is the standard two-boson state") {
  const InternalStateSet same(2, {{1.0, 0.0}, {1.0, 0.0}});
  const auto psi = build_epsilon_state(OccupationVector{1, 1}, same, Symmetry::S, Symmetry::S);
  CHECK(std::abs(psi.norm() - 1.0) < 1e-12);
  const std::vector<int> a{0, 1};
  const std::vector<int> b{1, 0};
  auto expected = LabeledStateVector::product_state(2, a, same);
  expected += LabeledStateVector::product_state(2, b, same);
  expected *= 1.0 / std::sqrt(2.0);
  CHECK(distance(psi, expected) < 1e-12);
}

TEST_CASE("antisymmetric internal states vanish when they coincide") {
  const InternalStateSet same(2, {{1.0, 0.0}, {1.0, 0.0}});
  CHECK_THROWS_AS(build_epsilon_state(OccupationVector{1, 1}, same, Symmetry::S, Symmetry::A),
                  VanishingState);
  CHECK_THROWS_AS(build_epsilon_state(OccupationVector{2, 0}, InternalStateSet::orthonormal(2),
                                      Symmetry::S, Symmetry::A),
                  VanishingState);
}

TEST_CASE("mode permutations act on the input state with the combined character") {
  for (int n : {2, 3}) {
    const auto internal = InternalStateSet::random(n, 3, 40 + n);
    std::vector<int> counts(3, 0);
    std::fill(counts.begin(), counts.begin() + n, 1);
    const OccupationVector occ(counts);
    for (Symmetry e1 : kFlags)
      for (Symmetry e2 : kFlags) {
        const auto psi = build_epsilon_state(occ, internal, e1, e2);
        CHECK(std::abs(psi.norm() - 1.0) < 1e-12);
        for (const auto& sigma : all_permutations(n)) {
          auto moved = apply_permutation(psi, sigma, Factor::modes);
          auto expected = psi;
          expected *= static_cast<double>(character(e1 * e2, sigma));
          CHECK(distance(moved, expected) < 1e-12);
          // The full state has total symmetry eps1.
          auto both = apply_permutation(psi, sigma, Factor::both);
          auto expected_both = psi;
          expected_both *= static_cast<double>(character(e1, sigma));
          CHECK(distance(both, expected_both) < 1e-12);
        }
      }
  }
}

TEST_CASE("network application") {
  const auto internal = InternalStateSet::random(2, 2, 5);
  const std::vector<int> modes{0, 2};
  const auto state = LabeledStateVector::product_state(3, modes, internal);
  CHECK(distance(apply_network(state, ComplexMatrix::identity(3)), state) < 1e-15);

  // One particle: |k>|phi> -> sum_l U_kl |l>|phi>.
  const auto single = InternalStateSet::random(1, 2, 6);
  const auto u = haar_random_unitary(3, 8);
  const std::vector<int> k{1};
  const auto out = apply_network(LabeledStateVector::product_state(3, k, single), u);
  for (int l = 0; l < 3; ++l)
    for (int j = 0; j < 2; ++j) {
      const std::vector<int> ml{l};
      const std::vector<int> mj{j};
      CHECK(std::abs(out[out.layout().index(ml, mj)] - u(1, l) * single.vector(0)[j]) < 1e-15);
    }

  const TensorLayout layout(3, 2, 2);
  for (int trial = 0; trial < 20; ++trial) {
    const auto v = random_state(layout, 700 + trial);
    CHECK(std::abs(apply_network(v, haar_random_unitary(3, 900 + trial)).norm() - 1.0) < 1e-12);
  }
}

TEST_CASE("network action commutes with the symmetrizers") {
  const TensorLayout layout(3, 2, 3);
  const auto u = haar_random_unitary(3, 12);
  const auto v = random_state(layout, 13);
  for (Symmetry e : kFlags)
    for (auto f : {Factor::modes, Factor::internal, Factor::both}) {
      const auto a = apply_network(symmetrize(v, e, f), u);
      const auto b = symmetrize(apply_network(v, u), e, f);
      CHECK(distance(a, b) < 1e-12);
    }
}

TEST_CASE("label-blind counting probabilities") {
  const auto internal = InternalStateSet::orthonormal(3);
  const std::vector<int> all_first{0, 0, 0};
  const auto bunched = LabeledStateVector::product_state(2, all_first, internal);
  CHECK(std::abs(povm_probability(bunched, OccupationVector{3, 0}) - 1.0) < 1e-15);

  // Two distinguishable particles on a balanced splitter.
  const auto pair = InternalStateSet::orthonormal(2);
  const std::vector<int> modes{0, 1};
  const auto out =
      apply_network(LabeledStateVector::product_state(2, modes, pair), balanced_beam_splitter());
  CHECK(std::abs(povm_probability(out, OccupationVector{1, 1}) - 0.5) < 1e-12);
  CHECK(std::abs(povm_probability(out, OccupationVector{2, 0}) - 0.25) < 1e-12);
  CHECK(std::abs(povm_probability(out, OccupationVector{0, 2}) - 0.25) < 1e-12);
}

TEST_CASE("counting probabilities sum to one on symmetric states and match the sorted form") {
  const TensorLayout layout(3, 2, 3);
  for (Symmetry e : kFlags) {
    for (int trial = 0; trial < 5; ++trial) {
      const auto v = normalized(symmetrize(random_state(layout, 60 + trial), e, Factor::both));
      double total = 0.0;
      for (const auto& m : enumerate_configurations(3, 3, false)) {
        const double p = povm_probability(v, m);
        total += p;
        CHECK(std::abs(p - povm_probability_sorted(v, m)) < 1e-12);
        // <psi| Pi^(eps)(m) |psi> through the matrix-free POVM element.
        CHECK(std::abs(v.inner(apply_povm_element(v, e, m)).real() - p) < 1e-12);
      }
      CHECK(std::abs(total - 1.0) < 1e-12);
    }
  }
}

TEST_CASE("POVM completeness and commutation") {
  for (Symmetry e : kFlags) {
    CHECK(verify_povm_completeness(e, 2, 2, 1) < 1e-15);
    CHECK(verify_povm_completeness(e, 2, 2, 2) < 1e-12);
    CHECK(verify_povm_completeness(e, 2, 2, 3) < 1e-12);
  }
  CHECK(verify_povm_commutation(Symmetry::A, Symmetry::A, 2, 2, 1, OccupationVector{1, 0}) ==
        0.0);
  for (Symmetry e1 : kFlags)
    for (Symmetry e2 : kFlags)
      CHECK(verify_povm_commutation(e1, e2, 2, 2, 2, OccupationVector{1, 1}) < 1e-12);
}

TEST_CASE("symmetrized mode projector equals the Fock projector") {
  for (Symmetry e : kFlags)
    for (const auto& m : enumerate_configurations(2, 2, false))
      CHECK(verify_fock_projector_identity(e, 2, m) < 1e-12);
}

TEST_CASE("Fock mode states reproduce permanent and determinant amplitudes") {
  const auto u = haar_random_unitary(3, 21);
  for (const auto& n : enumerate_configurations(3, 3, false)) {
    for (const auto& m : enumerate_configurations(3, 3, false)) {
      CHECK(std::abs(mode_amplitude(u, n, m, Symmetry::S) - boson_amplitude(u, n, m)) < 1e-12);
    }
  }
  for (const auto& n : enumerate_configurations(3, 2, true))
    for (const auto& m : enumerate_configurations(3, 2, true))
      CHECK(std::abs(mode_amplitude(u, n, m, Symmetry::A) - fermion_amplitude(u, n, m)) < 1e-12);
  CHECK(fock_mode_state(OccupationVector{2, 0}, Symmetry::A).norm() == 0.0);
}

TEST_CASE("oracle distribution reproduces the Fock-space distributions") {
  const auto u = haar_random_unitary(3, 22);
  const OccupationVector n{1, 1, 0};
  const auto bose = output_distribution_fast(u, n, Statistics::bosonic);
  const auto fermi = output_distribution_fast(u, n, Statistics::fermionic);
  const auto internal = InternalStateSet::orthonormal(2);
  CHECK(max_abs_deviation(oracle_distribution(EpsilonInput{n, internal, Symmetry::S, Symmetry::S}, u),
                          bose) < 1e-10);
  CHECK(max_abs_deviation(oracle_distribution(EpsilonInput{n, internal, Symmetry::A, Symmetry::A}, u),
                          bose) < 1e-10);
  CHECK(max_abs_deviation(oracle_distribution(EpsilonInput{n, internal, Symmetry::S, Symmetry::A}, u),
                          fermi) < 1e-10);
  CHECK(max_abs_deviation(oracle_distribution(EpsilonInput{n, internal, Symmetry::A, Symmetry::S}, u),
                          fermi) < 1e-10);
  const InternalStateSet same(2, {{1.0, 0.0}, {1.0, 0.0}});
  CHECK(max_abs_deviation(oracle_distribution(EpsilonInput{n, same, Symmetry::S, Symmetry::S}, u),
                          bose) < 1e-10);
  // Bunched input with effective symmetric statistics.
  const OccupationVector bunched{2, 1, 0};
  const auto three = InternalStateSet::orthonormal(3);
  CHECK(max_abs_deviation(
            oracle_distribution(EpsilonInput{bunched, three, Symmetry::A, Symmetry::A}, u),
            output_distribution_fast(u, bunched, Statistics::bosonic)) < 1e-10);
}

TEST_CASE("oracle distribution requires a normalized input") {
  const TensorLayout layout(2, 1, 2);
  auto v = random_state(layout, 1);
  v *= 2.0;
  CHECK_THROWS(oracle_distribution(v, balanced_beam_splitter()));
  CHECK(max_abs_entry(v) > 0.0);
}

}  // TEST_SUITE
