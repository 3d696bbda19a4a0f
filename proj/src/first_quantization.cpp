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

#include "fbsim/first_quantization.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <random>
#include <string>

#include "fbsim/error.hpp"
#include "fbsim/permanent.hpp"

namespace fbsim {

namespace {

std::string format_scientific(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", x);
  return buf;
}

}  // namespace

std::string_view to_string(Symmetry s) { return s == Symmetry::S ? "S" : "A"; }

Symmetry parse_symmetry(std::string_view s) {
  if (s == "S" || s == "s") return Symmetry::S;
  if (s == "A" || s == "a") return Symmetry::A;
  throw InvalidArgument("symmetry flag must be S or A, got '" + std::string(s) + "'");
}

// ---------------------------------------------------------------------------
// Permutations

namespace {

void require_permutation(const Permutation& sigma, int n) {
  if (static_cast<int>(sigma.size()) != n) {
    throw InvalidArgument("permutation has " + std::to_string(sigma.size()) +
                          " entries, expected " + std::to_string(n));
  }
  std::vector<bool> seen(n, false);
  for (int v : sigma) {
    if (v < 0 || v >= n || seen[v]) {
      throw InvalidArgument("not a permutation of " + std::to_string(n) + " elements");
    }
    seen[v] = true;
  }
}

}  // namespace

int permutation_sign(const Permutation& sigma) {
  require_permutation(sigma, static_cast<int>(sigma.size()));
  std::vector<bool> visited(sigma.size(), false);
  int sign = 1;
  for (std::size_t start = 0; start < sigma.size(); ++start) {
    if (visited[start]) continue;
    std::size_t length = 0;
    for (std::size_t a = start; !visited[a]; a = sigma[a]) {
      visited[a] = true;
      ++length;
    }
    if (length % 2 == 0) sign = -sign;
  }
  return sign;
}

Permutation compose(const Permutation& sigma, const Permutation& tau) {
  require_permutation(tau, static_cast<int>(sigma.size()));
  Permutation out(sigma.size());
  for (std::size_t a = 0; a < tau.size(); ++a) {
    out[a] = sigma[tau[a]];
  }
  return out;
}

Permutation inverse(const Permutation& sigma) {
  Permutation out(sigma.size());
  for (std::size_t a = 0; a < sigma.size(); ++a) {
    out[sigma[a]] = static_cast<int>(a);
  }
  return out;
}

std::vector<Permutation> all_permutations(int n) {
  Permutation p(n);
  std::iota(p.begin(), p.end(), 0);
  std::vector<Permutation> out;
  out.reserve(factorial(n));
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

int character(Symmetry eps, const Permutation& sigma) {
  return eps == Symmetry::S ? 1 : permutation_sign(sigma);
}

// ---------------------------------------------------------------------------
// Layout

TensorLayout::TensorLayout(int modes, int internal_dim, int particles)
    : modes_(modes), internal_dim_(internal_dim), particles_(particles), dimension_(1) {
  if (modes < 1 || internal_dim < 1 || particles < 1) {
    throw InvalidArgument("tensor layout needs M, D, N >= 1");
  }
  if (particles > kOracleMaxParticles) {
    throw CapExceeded("first-quantization oracle supports N <= " +
                      std::to_string(kOracleMaxParticles) + ", got N = " +
                      std::to_string(particles));
  }
  strides_.assign(particles, 1);
  for (int a = particles - 1; a >= 0; --a) {
    strides_[a] = dimension_;
    dimension_ *= slot_dim();
    if (dimension_ > kOracleMaxDimension) {
      throw CapExceeded("tensor dimension (M*D)^N = (" + std::to_string(slot_dim()) + ")^" +
                        std::to_string(particles) + " exceeds the oracle cap " +
                        std::to_string(kOracleMaxDimension));
    }
  }
}

std::size_t TensorLayout::index(std::span<const int> modes, std::span<const int> internal) const {
  std::size_t idx = 0;
  for (int a = 0; a < particles_; ++a) {
    idx += strides_[a] * (static_cast<std::size_t>(modes[a]) * internal_dim_ + internal[a]);
  }
  return idx;
}

void TensorLayout::decode(std::size_t index, std::span<int> modes, std::span<int> internal) const {
  const std::size_t d = slot_dim();
  for (int a = 0; a < particles_; ++a) {
    const std::size_t digit = (index / strides_[a]) % d;
    modes[a] = static_cast<int>(digit / internal_dim_);
    internal[a] = static_cast<int>(digit % internal_dim_);
  }
}

// ---------------------------------------------------------------------------
// Internal states

InternalStateSet::InternalStateSet(int dim, std::vector<std::vector<Complex>> vectors)
    : dim_(dim), vectors_(std::move(vectors)) {
  if (dim_ < 1) {
    throw InvalidArgument("internal dimension must be at least 1");
  }
  for (std::size_t a = 0; a < vectors_.size(); ++a) {
    if (static_cast<int>(vectors_[a].size()) != dim_) {
      throw InvalidArgument("internal state " + std::to_string(a + 1) + " has length " +
                            std::to_string(vectors_[a].size()) + ", expected D = " +
                            std::to_string(dim_));
    }
    double n2 = 0.0;
    for (const auto& z : vectors_[a]) n2 += std::norm(z);
    if (std::abs(std::sqrt(n2) - 1.0) > 1e-12) {
      throw InvalidArgument("internal state " + std::to_string(a + 1) +
                            " is not normalized (norm " + std::to_string(std::sqrt(n2)) + ")");
    }
  }
  const std::size_t n = vectors_.size();
  gram_ = ComplexMatrix(n, n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      Complex s = 0.0;
      for (int i = 0; i < dim_; ++i) s += std::conj(vectors_[a][i]) * vectors_[b][i];
      gram_(a, b) = s;
    }
  }
}

InternalStateSet InternalStateSet::orthonormal(int particles, int dim) {
  if (dim == 0) dim = particles;
  if (dim < particles) {
    throw InvalidArgument("need D >= N for orthonormal internal states");
  }
  std::vector<std::vector<Complex>> v(particles, std::vector<Complex>(dim));
  for (int a = 0; a < particles; ++a) v[a][a] = 1.0;
  return InternalStateSet(dim, std::move(v));
}

InternalStateSet InternalStateSet::pairwise_overlap(Complex g) {
  const double a = std::abs(g);
  if (a > 1.0 + 1e-15) {
    throw InvalidArgument("overlap modulus must not exceed 1");
  }
  const double rest = std::sqrt(std::max(0.0, 1.0 - a * a));
  return InternalStateSet(2, {{1.0, 0.0}, {g, rest}});
}

InternalStateSet InternalStateSet::random(int particles, int dim, std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  std::vector<std::vector<Complex>> v(particles, std::vector<Complex>(dim));
  for (auto& vec : v) {
    double n2 = 0.0;
    for (auto& z : vec) {
      const double re = normal(gen);
      const double im = normal(gen);
      z = {re, im};
      n2 += std::norm(z);
    }
    const double inv = 1.0 / std::sqrt(n2);
    for (auto& z : vec) z *= inv;
  }
  return InternalStateSet(dim, std::move(v));
}

nlohmann::json internal_states_to_json(const InternalStateSet& s) {
  nlohmann::json vectors = nlohmann::json::array();
  for (int a = 0; a < s.size(); ++a) {
    nlohmann::json v = nlohmann::json::array();
    for (const auto& z : s.vector(a)) v.push_back({z.real(), z.imag()});
    vectors.push_back(std::move(v));
  }
  return {{"D", s.dimension()}, {"vectors", std::move(vectors)}};
}

InternalStateSet internal_states_from_json(const nlohmann::json& j) {
  try {
    const int dim = j.at("D").get<int>();
    std::vector<std::vector<Complex>> vectors;
    for (const auto& v : j.at("vectors")) {
      std::vector<Complex> vec;
      for (const auto& e : v) {
        if (e.is_number()) {
          vec.emplace_back(e.get<double>(), 0.0);
        } else {
          vec.emplace_back(e.at(0).get<double>(), e.at(1).get<double>());
        }
      }
      vectors.push_back(std::move(vec));
    }
    return InternalStateSet(dim, std::move(vectors));
  } catch (const nlohmann::json::exception& e) {
    throw InvalidArgument(std::string("internal state JSON: ") + e.what());
  }
}

// ---------------------------------------------------------------------------
// State vectors

LabeledStateVector::LabeledStateVector(TensorLayout layout)
    : layout_(std::move(layout)), amplitudes_(layout_.dimension()) {}

LabeledStateVector::LabeledStateVector(TensorLayout layout, std::vector<Complex> amplitudes)
    : layout_(std::move(layout)), amplitudes_(std::move(amplitudes)) {
  if (amplitudes_.size() != layout_.dimension()) {
    throw InvalidArgument("state vector length does not match its layout");
  }
}

LabeledStateVector LabeledStateVector::product_state(int mode_count, std::span<const int> modes,
                                                     const InternalStateSet& internal) {
  const int n = static_cast<int>(modes.size());
  if (internal.size() != n) {
    throw InvalidArgument("product state: " + std::to_string(n) + " modes but " +
                          std::to_string(internal.size()) + " internal states");
  }
  for (int k : modes) {
    if (k < 0 || k >= mode_count) {
      throw InvalidArgument("product state: mode index out of range");
    }
  }
  const int dim = internal.dimension();
  LabeledStateVector out(TensorLayout(mode_count, dim, n));
  std::vector<int> j(n, 0);
  // Odometer over internal labels j; modes stay fixed.
  while (true) {
    Complex amp = 1.0;
    for (int a = 0; a < n; ++a) amp *= internal.vector(a)[j[a]];
    out[out.layout().index(modes, j)] = amp;
    int a = n - 1;
    while (a >= 0 && ++j[a] == dim) {
      j[a] = 0;
      --a;
    }
    if (a < 0) break;
  }
  return out;
}

double LabeledStateVector::norm() const {
  double s = 0.0;
  for (const auto& z : amplitudes_) s += std::norm(z);
  return std::sqrt(s);
}

Complex LabeledStateVector::inner(const LabeledStateVector& other) const {
  if (!(layout_ == other.layout_)) {
    throw InvalidArgument("inner product of states with different layouts");
  }
  Complex s = 0.0;
  for (std::size_t i = 0; i < amplitudes_.size(); ++i) {
    s += std::conj(amplitudes_[i]) * other.amplitudes_[i];
  }
  return s;
}

LabeledStateVector& LabeledStateVector::operator+=(const LabeledStateVector& other) {
  if (!(layout_ == other.layout_)) throw InvalidArgument("state sum layout mismatch");
  for (std::size_t i = 0; i < amplitudes_.size(); ++i) amplitudes_[i] += other.amplitudes_[i];
  return *this;
}

LabeledStateVector& LabeledStateVector::operator-=(const LabeledStateVector& other) {
  if (!(layout_ == other.layout_)) throw InvalidArgument("state difference layout mismatch");
  for (std::size_t i = 0; i < amplitudes_.size(); ++i) amplitudes_[i] -= other.amplitudes_[i];
  return *this;
}

LabeledStateVector& LabeledStateVector::operator*=(Complex s) {
  for (auto& z : amplitudes_) z *= s;
  return *this;
}

double distance(const LabeledStateVector& a, const LabeledStateVector& b) {
  LabeledStateVector d = a;
  d -= b;
  return d.norm();
}

LabeledStateVector combine(const LabeledStateVector& mode_part,
                           const LabeledStateVector& internal_part) {
  const auto& ml = mode_part.layout();
  const auto& il = internal_part.layout();
  if (ml.internal_dim() != 1 || il.modes() != 1 || ml.particles() != il.particles()) {
    throw InvalidArgument("combine expects a (M,1,N) mode vector and a (1,D,N) internal vector");
  }
  const int n = ml.particles();
  TensorLayout layout(ml.modes(), il.internal_dim(), n);
  LabeledStateVector out(layout);
  std::vector<int> k(n), j(n), zeros(n, 0);
  for (std::size_t i = 0; i < layout.dimension(); ++i) {
    layout.decode(i, k, j);
    out[i] = mode_part[ml.index(k, zeros)] * internal_part[il.index(zeros, j)];
  }
  return out;
}

// ---------------------------------------------------------------------------
// Permutation operators and symmetrizers

namespace {

/// Index of P_sigma |x> given sigma^-1.
class Permuter {
 public:
  Permuter(const TensorLayout& layout, const Permutation& sigma, Factor factor)
      : layout_(layout),
        inv_(inverse(sigma)),
        factor_(factor),
        k_(layout.particles()),
        j_(layout.particles()),
        k_out_(layout.particles()),
        j_out_(layout.particles()) {
    require_permutation(sigma, layout.particles());
  }

  std::size_t operator()(std::size_t index) {
    layout_.decode(index, k_, j_);
    const int n = layout_.particles();
    for (int a = 0; a < n; ++a) {
      const int src = inv_[a];
      k_out_[a] = (factor_ == Factor::internal) ? k_[a] : k_[src];
      j_out_[a] = (factor_ == Factor::modes) ? j_[a] : j_[src];
    }
    return layout_.index(k_out_, j_out_);
  }

 private:
  const TensorLayout& layout_;
  Permutation inv_;
  Factor factor_;
  std::vector<int> k_, j_, k_out_, j_out_;
};

void require_dense(const TensorLayout& layout) {
  if (layout.dimension() > kDenseOperatorMaxDimension) {
    throw CapExceeded("dense operator side " + std::to_string(layout.dimension()) +
                      " exceeds the cap " + std::to_string(kDenseOperatorMaxDimension));
  }
}

}  // namespace

LabeledStateVector apply_permutation(const LabeledStateVector& state, const Permutation& sigma,
                                     Factor factor) {
  Permuter target(state.layout(), sigma, factor);
  LabeledStateVector out(state.layout());
  for (std::size_t i = 0; i < state.layout().dimension(); ++i) {
    out[target(i)] = state[i];
  }
  return out;
}

ComplexMatrix permutation_operator(const Permutation& sigma, Factor factor,
                                   const TensorLayout& layout) {
  require_dense(layout);
  Permuter target(layout, sigma, factor);
  ComplexMatrix p(layout.dimension(), layout.dimension());
  for (std::size_t i = 0; i < layout.dimension(); ++i) {
    p(target(i), i) = 1.0;
  }
  return p;
}

LabeledStateVector symmetrize(const LabeledStateVector& state, Symmetry eps, Factor factor) {
  const auto& layout = state.layout();
  const int n = layout.particles();
  const double scale = 1.0 / static_cast<double>(factorial(n));
  LabeledStateVector out(layout);
  for (const auto& sigma : all_permutations(n)) {
    const double w = character(eps, sigma) * scale;
    Permuter target(layout, sigma, factor);
    for (std::size_t i = 0; i < layout.dimension(); ++i) {
      out[target(i)] += w * state[i];
    }
  }
  return out;
}

ComplexMatrix symmetrizer(Symmetry eps, Factor factor, const TensorLayout& layout) {
  require_dense(layout);
  const int n = layout.particles();
  const double scale = 1.0 / static_cast<double>(factorial(n));
  ComplexMatrix s(layout.dimension(), layout.dimension());
  for (const auto& sigma : all_permutations(n)) {
    const double w = character(eps, sigma) * scale;
    Permuter target(layout, sigma, factor);
    for (std::size_t i = 0; i < layout.dimension(); ++i) {
      s(target(i), i) += w;
    }
  }
  return s;
}

double verify_projector_identity(Symmetry eps1, Symmetry eps2, int modes, int internal_dim,
                                 int particles) {
  const TensorLayout layout(modes, internal_dim, particles);
  const ComplexMatrix lhs =
      symmetrizer(eps2, Factor::internal, layout) * symmetrizer(eps1, Factor::both, layout);
  const ComplexMatrix rhs = symmetrizer(eps1 * eps2, Factor::modes, layout) *
                            symmetrizer(eps2, Factor::internal, layout);
  return frobenius_distance(lhs, rhs);
}

// ---------------------------------------------------------------------------
// Epsilon-symmetric input states

double normalization_constant(const InternalStateSet& internal, Symmetry eps2) {
  const int n = internal.size();
  if (n < 1) {
    throw InvalidArgument("normalization_constant needs at least one internal state");
  }
  const Complex raw =
      eps2 == Symmetry::S ? permanent(internal.gram()) : determinant(internal.gram());
  const double bracket = raw.real() / static_cast<double>(factorial(n));
  if (!(bracket > kVanishingThreshold)) {
    throw VanishingState(std::string("vanishing symmetrized state: ") +
                         (eps2 == Symmetry::S ? "per(G)" : "det(G)") + "/N! = " +
                         format_scientific(bracket) +
                         (eps2 == Symmetry::A ? " (internal states are linearly dependent)" : ""));
  }
  return 1.0 / std::sqrt(bracket);
}

LabeledStateVector fock_mode_state(const OccupationVector& m, Symmetry eps) {
  const int n = m.total();
  const TensorLayout layout(static_cast<int>(m.mode_count()), 1, n);
  LabeledStateVector out(layout);
  const std::vector<int> zeros(n, 0);
  auto l = m.modes_ascending();
  if (eps == Symmetry::S) {
    const double amp = std::sqrt(static_cast<double>(multiplicity(m)) /
                                 static_cast<double>(factorial(n)));
    do {
      out[layout.index(l, zeros)] = amp;
    } while (std::next_permutation(l.begin(), l.end()));
    return out;
  }
  if (!m.single_occupancy()) {
    return out;
  }
  const double amp = 1.0 / std::sqrt(static_cast<double>(factorial(n)));
  std::vector<int> y(n);
  for (const auto& sigma : all_permutations(n)) {
    const auto inv = inverse(sigma);
    for (int a = 0; a < n; ++a) y[a] = l[inv[a]];
    out[layout.index(y, zeros)] = permutation_sign(sigma) * amp;
  }
  return out;
}

LabeledStateVector build_epsilon_state(const OccupationVector& n,
                                       const InternalStateSet& internal, Symmetry eps1,
                                       Symmetry eps2) {
  const int particles = n.total();
  if (particles < 1) {
    throw InvalidArgument("input configuration holds no particles");
  }
  if (internal.size() != particles) {
    throw InvalidArgument("input " + n.to_string() + " holds " + std::to_string(particles) +
                          " particles but " + std::to_string(internal.size()) +
                          " internal states were given");
  }
  const Symmetry effective = eps1 * eps2;
  if (effective == Symmetry::A) {
    for (std::size_t k = 0; k < n.mode_count(); ++k) {
      if (n[k] > 1) {
        throw VanishingState("vanishing symmetrized state: the mode factor is antisymmetric "
                             "but mode " + std::to_string(k + 1) + " of " + n.to_string() +
                             " holds " + std::to_string(n[k]) + " particles");
      }
    }
  }
  const double c = normalization_constant(internal, eps2);
  const auto modes = n.modes_ascending();
  const int mode_count = static_cast<int>(n.mode_count());
  const double fock_scale = std::sqrt(static_cast<double>(factorial(particles)) /
                                      static_cast<double>(multiplicity(n)));

  const auto raw = LabeledStateVector::product_state(mode_count, modes, internal);
  LabeledStateVector state =
      symmetrize(symmetrize(raw, eps1, Factor::both), eps2, Factor::internal);
  state *= c * fock_scale;

  // Factorized form: c ||n^(eps1 eps2)>> |phi^(eps2)>.
  const std::vector<int> first_mode(particles, 0);
  const auto internal_sym = symmetrize(
      LabeledStateVector::product_state(1, first_mode, internal), eps2, Factor::internal);
  LabeledStateVector factorized = combine(fock_mode_state(n, effective), internal_sym);
  factorized *= c;
  const double dev = distance(state, factorized);
  if (!(dev < 1e-12)) {
    throw ContractViolation("epsilon state disagrees with its factorized form by " +
                                std::to_string(dev),
                            dev);
  }
  const double norm = state.norm();
  if (!(std::abs(norm - 1.0) < 1e-10)) {
    throw ContractViolation("epsilon state norm " + std::to_string(norm) + " is not 1",
                            std::abs(norm - 1.0));
  }
  state *= 1.0 / norm;
  return state;
}

// ---------------------------------------------------------------------------
// Network action and counting measurement

LabeledStateVector apply_network(const LabeledStateVector& state, const ComplexMatrix& u) {
  const auto& layout = state.layout();
  const int m = layout.modes();
  if (u.rows() != static_cast<std::size_t>(m) || u.cols() != static_cast<std::size_t>(m)) {
    throw InvalidArgument("network is " + std::to_string(u.rows()) + "x" +
                          std::to_string(u.cols()) + " but the state has " +
                          std::to_string(m) + " modes");
  }
  require_unitary(u, "apply_network");
  const std::size_t d = layout.internal_dim();
  LabeledStateVector current = state;
  for (int a = 0; a < layout.particles(); ++a) {
    const std::size_t stride = layout.stride(a);
    const std::size_t mode_step = stride * d;
    LabeledStateVector next(layout);
    for (std::size_t i = 0; i < layout.dimension(); ++i) {
      const Complex amp = current[i];
      if (amp == Complex{}) continue;
      const std::size_t digit = (i / stride) % layout.slot_dim();
      const std::size_t k = digit / d;
      const std::size_t base = i - k * mode_step;
      for (int l = 0; l < m; ++l) {
        next[base + l * mode_step] += u(k, l) * amp;
      }
    }
    current = std::move(next);
  }
  return current;
}

std::vector<double> mode_pattern_marginal(const LabeledStateVector& state) {
  const auto& layout = state.layout();
  const int n = layout.particles();
  std::size_t patterns = 1;
  for (int a = 0; a < n; ++a) patterns *= layout.modes();
  std::vector<double> p(patterns, 0.0);
  std::vector<int> k(n), j(n);
  for (std::size_t i = 0; i < layout.dimension(); ++i) {
    const double w = std::norm(state[i]);
    if (w == 0.0) continue;
    layout.decode(i, k, j);
    std::size_t idx = 0;
    for (int a = 0; a < n; ++a) idx = idx * layout.modes() + k[a];
    p[idx] += w;
  }
  return p;
}

namespace {

void require_configuration(const TensorLayout& layout, const OccupationVector& m) {
  if (static_cast<int>(m.mode_count()) != layout.modes() || m.total() != layout.particles()) {
    throw InvalidArgument("configuration " + m.to_string() + " does not describe " +
                          std::to_string(layout.particles()) + " particles in " +
                          std::to_string(layout.modes()) + " modes");
  }
}

double configuration_probability(const std::vector<double>& marginal, int modes,
                                 const OccupationVector& m) {
  auto l = m.modes_ascending();
  double p = 0.0;
  do {
    std::size_t idx = 0;
    for (int k : l) idx = idx * modes + k;
    p += marginal[idx];
  } while (std::next_permutation(l.begin(), l.end()));
  return p;
}

}  // namespace

double povm_probability(const LabeledStateVector& state, const OccupationVector& m) {
  require_configuration(state.layout(), m);
  return configuration_probability(mode_pattern_marginal(state), state.layout().modes(), m);
}

double povm_probability_sorted(const LabeledStateVector& state, const OccupationVector& m) {
  const auto& layout = state.layout();
  require_configuration(layout, m);
  const auto l = m.modes_ascending();
  std::vector<int> j(layout.particles(), 0);
  double p = 0.0;
  while (true) {
    p += std::norm(state[layout.index(l, j)]);
    int a = layout.particles() - 1;
    while (a >= 0 && ++j[a] == layout.internal_dim()) {
      j[a] = 0;
      --a;
    }
    if (a < 0) break;
  }
  return p * static_cast<double>(factorial(m.total())) / static_cast<double>(multiplicity(m));
}

ComplexMatrix mode_pattern_projector(const OccupationVector& m, const TensorLayout& layout) {
  require_configuration(layout, m);
  require_dense(layout);
  const auto l = m.modes_ascending();
  const double weight =
      static_cast<double>(factorial(m.total())) / static_cast<double>(multiplicity(m));
  ComplexMatrix p(layout.dimension(), layout.dimension());
  std::vector<int> k(layout.particles()), j(layout.particles());
  for (std::size_t i = 0; i < layout.dimension(); ++i) {
    layout.decode(i, k, j);
    if (k == l) p(i, i) = weight;
  }
  return p;
}

ComplexMatrix povm_element(Symmetry eps, const OccupationVector& m, const TensorLayout& layout) {
  const ComplexMatrix s = symmetrizer(eps, Factor::both, layout);
  return s * mode_pattern_projector(m, layout) * s;
}

LabeledStateVector apply_povm_element(const LabeledStateVector& state, Symmetry eps,
                                      const OccupationVector& m) {
  const auto& layout = state.layout();
  require_configuration(layout, m);
  const auto l = m.modes_ascending();
  const double weight =
      static_cast<double>(factorial(m.total())) / static_cast<double>(multiplicity(m));
  LabeledStateVector projected = symmetrize(state, eps, Factor::both);
  std::vector<int> k(layout.particles()), j(layout.particles());
  for (std::size_t i = 0; i < layout.dimension(); ++i) {
    layout.decode(i, k, j);
    projected[i] = (k == l) ? projected[i] * weight : Complex{};
  }
  return symmetrize(projected, eps, Factor::both);
}

double verify_povm_completeness(Symmetry eps, int modes, int internal_dim, int particles) {
  const TensorLayout layout(modes, internal_dim, particles);
  ComplexMatrix sum(layout.dimension(), layout.dimension());
  for (const auto& m : enumerate_configurations(modes, particles, false)) {
    sum += povm_element(eps, m, layout);
  }
  return frobenius_distance(sum, symmetrizer(eps, Factor::both, layout));
}

double verify_povm_commutation(Symmetry eps1, Symmetry eps2, int modes, int internal_dim,
                               int particles, const OccupationVector& m) {
  const TensorLayout layout(modes, internal_dim, particles);
  const ComplexMatrix pi = povm_element(eps1, m, layout);
  const ComplexMatrix s = symmetrizer(eps2, Factor::internal, layout);
  return frobenius_distance(s * pi, pi * s);
}

double verify_fock_projector_identity(Symmetry eps, int internal_dim, const OccupationVector& m) {
  const int n = m.total();
  const int modes = static_cast<int>(m.mode_count());
  const TensorLayout layout(modes, internal_dim, n);
  const ComplexMatrix s = symmetrizer(eps, Factor::modes, layout);
  const ComplexMatrix lhs = s * mode_pattern_projector(m, layout) * s;

  const LabeledStateVector fock = fock_mode_state(m, eps);
  const auto& fl = fock.layout();
  ComplexMatrix rhs(layout.dimension(), layout.dimension());
  std::vector<int> k(n), j(n), k2(n), j2(n);
  const std::vector<int> zeros(n, 0);
  for (std::size_t r = 0; r < layout.dimension(); ++r) {
    layout.decode(r, k, j);
    const Complex fr = fock[fl.index(k, zeros)];
    if (fr == Complex{}) continue;
    for (std::size_t c = 0; c < layout.dimension(); ++c) {
      layout.decode(c, k2, j2);
      if (j2 != j) continue;
      rhs(r, c) = fr * std::conj(fock[fl.index(k2, zeros)]);
    }
  }
  return frobenius_distance(lhs, rhs);
}

OutputDistribution oracle_distribution(const LabeledStateVector& input, const ComplexMatrix& u) {
  const double norm = input.norm();
  if (!(std::abs(norm - 1.0) < 1e-10)) {
    throw InvalidArgument("oracle input state must be normalized, norm = " +
                          std::to_string(norm));
  }
  const auto& layout = input.layout();
  const auto output = apply_network(input, u);
  const auto marginal = mode_pattern_marginal(output);
  const auto configs = enumerate_configurations(layout.modes(), layout.particles(), false);
  std::vector<OutputDistribution::Entry> entries;
  entries.reserve(configs.size());
  for (const auto& m : configs) {
    entries.push_back({m, configuration_probability(marginal, layout.modes(), m)});
  }
  OutputDistribution d(layout.modes(), layout.particles(), Statistics::general,
                       std::move(entries));
  d.check_normalized();
  return d;
}

OutputDistribution oracle_distribution(const EpsilonInput& input, const ComplexMatrix& u) {
  return oracle_distribution(build_epsilon_state(input.n, input.internal, input.eps1, input.eps2),
                             u);
}

}  // namespace fbsim
