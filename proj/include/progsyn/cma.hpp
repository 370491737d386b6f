// Copyright 2026 The progsyn Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


// (mu/mu_w, lambda) CMA-ES with cumulative step-size adaptation, stall
// detection and flag-based restarts. Dense types follow Eigen conventions and
// are templated on the scalar type; samples are the columns of a matrix.

#ifndef PROGSYN_CMA_HPP
#define PROGSYN_CMA_HPP

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numeric>
#include <optional>
#include <random>
#include <span>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "progsyn/rng.hpp"

namespace progsyn {

/// Default population size 4 + floor(3 ln n).
inline Eigen::Index default_lambda(Eigen::Index n) {
  return 4 + static_cast<Eigen::Index>(std::floor(3.0 * std::log(static_cast<double>(n))));
}

/// Strategy constants for a given dimension and population size.
template <typename Scalar>
struct CmaParams {
  using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

  CmaParams(Eigen::Index n, Eigen::Index lambda) : mu(lambda / 2), weights(lambda / 2) {
    if (n < 1) throw std::invalid_argument("dimension must be at least 1");
    if (lambda < 2) throw std::invalid_argument("population size must be at least 2");
    using std::log, std::sqrt, std::max, std::min;
    const Scalar dn = static_cast<Scalar>(n);
    for (Eigen::Index i = 0; i < mu; ++i)
      weights[i] = log(static_cast<Scalar>(mu) + Scalar(0.5)) - log(static_cast<Scalar>(i + 1));
    weights /= weights.sum();
    mueff = Scalar(1) / weights.squaredNorm();
    cs = (mueff + 2) / (dn + mueff + 5);
    damps = 1 + 2 * max(Scalar(0), sqrt((mueff - 1) / (dn + 1)) - 1) + cs;
    cc = (4 + mueff / dn) / (dn + 4 + 2 * mueff / dn);
    c1 = 2 / ((dn + Scalar(1.3)) * (dn + Scalar(1.3)) + mueff);
    cmu = min(1 - c1, 2 * (mueff - 2 + 1 / mueff) / ((dn + 2) * (dn + 2) + mueff));
    chi_n = sqrt(dn) * (1 - 1 / (4 * dn) + 1 / (21 * dn * dn));
  }

  Eigen::Index mu;
  Vector weights;
  Scalar mueff, cs, damps, cc, c1, cmu, chi_n;
};

template <typename Scalar>
struct CmaState {
  using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
  using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

  Eigen::Index n = 0;
  Vector mean;
  Matrix cov;
  Scalar sigma = 1;
  Scalar sigma0 = 1;
  Vector path_sigma;
  Vector path_c;
  Eigen::Index lambda = 0;
  Eigen::Index lambda0 = 0;
  std::uint64_t generation = 0;
  std::uint64_t restarts = 0;

  // Best error of each generation since the last restart, and the spread of
  // the latest generation's errors.
  std::vector<double> best_errors;
  double last_range = std::numeric_limits<double>::infinity();

  // Eigensystem cov = B diag(D^2) B^T, refreshed lazily.
  Matrix basis;
  Vector scales;
  std::uint64_t eigen_generation = 0;
};

/// The largest population a PB restart may reach.
inline constexpr Eigen::Index kLambdaGrowthCap = 1024;

/// Fresh state: mean uniform in [-2, 2]^n, C = I, sigma = sigma0.
template <typename Scalar = double>
CmaState<Scalar> cma_init(Eigen::Index n, Rng& rng, Scalar sigma0 = 1, Eigen::Index lambda = 0) {
  if (n < 1) throw std::invalid_argument("dimension must be at least 1");
  if (!(sigma0 > 0)) throw std::invalid_argument("initial step size must be positive");
  CmaState<Scalar> s;
  s.n = n;
  s.mean.resize(n);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  for (Eigen::Index i = 0; i < n; ++i) s.mean[i] = static_cast<Scalar>(u(rng));
  s.cov.setIdentity(n, n);
  s.sigma = s.sigma0 = sigma0;
  s.path_sigma.setZero(n);
  s.path_c.setZero(n);
  s.lambda = s.lambda0 = lambda > 0 ? lambda : default_lambda(n);
  s.basis.setIdentity(n, n);
  s.scales.setOnes(n);
  return s;
}

namespace detail {

template <typename Scalar>
bool try_decompose(CmaState<Scalar>& s) {
  Eigen::SelfAdjointEigenSolver<typename CmaState<Scalar>::Matrix> es(s.cov);
  if (es.info() != Eigen::Success) return false;
  const auto& ev = es.eigenvalues();
  if (!ev.allFinite() || ev.minCoeff() <= 0) return false;
  s.basis = es.eigenvectors();
  s.scales = ev.cwiseSqrt();
  s.eigen_generation = s.generation;
  return true;
}

}  // namespace detail

/// Refreshes B and D when C has changed enough since the last decomposition
/// (or `force`; callers that edit C directly must force). A non-positive-definite C is symmetrised and shifted onto the
/// positive cone once; a second failure throws std::runtime_error.
template <typename Scalar>
void update_eigensystem(CmaState<Scalar>& s, bool force = false) {
  const CmaParams<Scalar> p(s.n, s.lambda);
  const double lag = static_cast<double>(s.lambda) / static_cast<double>(p.c1 + p.cmu) /
                     static_cast<double>(s.n) / 10.0;
  if (!force && static_cast<double>(s.generation - s.eigen_generation) <= lag) return;
  s.cov = (s.cov + s.cov.transpose()) / Scalar(2);
  if (detail::try_decompose(s)) return;
  Eigen::SelfAdjointEigenSolver<typename CmaState<Scalar>::Matrix> es(s.cov);
  if (es.info() == Eigen::Success && es.eigenvalues().allFinite()) {
    const Scalar floor = std::max(es.eigenvalues().maxCoeff(), Scalar(1)) * Scalar(1e-14);
    const auto clamped = es.eigenvalues().cwiseMax(floor);
    s.cov = es.eigenvectors() * clamped.asDiagonal() * es.eigenvectors().transpose();
  } else {
    s.cov += Scalar(1e-10) * (s.cov.trace() / static_cast<Scalar>(s.n) + 1) *
             CmaState<Scalar>::Matrix::Identity(s.n, s.n);
  }
  if (!detail::try_decompose(s)) throw std::runtime_error("covariance matrix is not positive definite");
}

/// Draws lambda samples m + sigma B D z as the columns of an n x lambda matrix.
template <typename Scalar>
typename CmaState<Scalar>::Matrix cma_ask(CmaState<Scalar>& s, Rng& rng) {
  if (!(s.sigma > 0) || !std::isfinite(static_cast<double>(s.sigma)))
    throw std::invalid_argument("step size must be positive and finite");
  update_eigensystem(s);
  std::normal_distribution<double> normal;
  typename CmaState<Scalar>::Matrix z(s.n, s.lambda);
  for (Eigen::Index j = 0; j < s.lambda; ++j)
    for (Eigen::Index i = 0; i < s.n; ++i) z(i, j) = static_cast<Scalar>(normal(rng));
  typename CmaState<Scalar>::Matrix x = (s.basis * s.scales.asDiagonal() * z) * s.sigma;
  x.colwise() += s.mean;
  return x;
}

/// Standard rank-one plus rank-mu update from samples ranked ascending by
/// error. Non-finite errors rank last.
template <typename Scalar>
void cma_tell(CmaState<Scalar>& s, const typename CmaState<Scalar>::Matrix& samples, std::span<const double> errors) {
  using Vector = typename CmaState<Scalar>::Vector;
  using Matrix = typename CmaState<Scalar>::Matrix;
  if (samples.cols() != s.lambda || static_cast<Eigen::Index>(errors.size()) != s.lambda || samples.rows() != s.n)
    throw std::invalid_argument("sample batch does not match the population size");
  const CmaParams<Scalar> p(s.n, s.lambda);
  std::vector<double> key(errors.begin(), errors.end());
  for (auto& e : key)
    if (!std::isfinite(e)) e = std::numeric_limits<double>::infinity();
  std::vector<Eigen::Index> order(static_cast<std::size_t>(s.lambda));
  std::iota(order.begin(), order.end(), Eigen::Index{0});
  std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) {
    return key[static_cast<std::size_t>(a)] < key[static_cast<std::size_t>(b)];
  });

  Matrix y(s.n, p.mu);
  for (Eigen::Index i = 0; i < p.mu; ++i) y.col(i) = (samples.col(order[static_cast<std::size_t>(i)]) - s.mean) / s.sigma;
  const double lo = key[static_cast<std::size_t>(order.front())];
  s.best_errors.push_back(lo);
  s.last_range = key[static_cast<std::size_t>(order.back())] - lo;

  const Vector step = y * p.weights;
  s.mean += s.sigma * step;

  update_eigensystem(s);
  const Vector whitened = s.basis * (s.basis.transpose() * step).cwiseQuotient(s.scales);
  s.path_sigma = (1 - p.cs) * s.path_sigma + std::sqrt(p.cs * (2 - p.cs) * p.mueff) * whitened;
  ++s.generation;
  const Scalar ps_norm = s.path_sigma.norm();
  const Scalar decay = 1 - std::pow(1 - p.cs, Scalar(2) * static_cast<Scalar>(s.generation));
  const bool hsig = ps_norm / std::sqrt(decay) / p.chi_n < Scalar(1.4) + Scalar(2) / static_cast<Scalar>(s.n + 1);
  s.path_c = (1 - p.cc) * s.path_c + (hsig ? std::sqrt(p.cc * (2 - p.cc) * p.mueff) : Scalar(0)) * step;

  const Scalar c1a = p.c1 * (1 - (hsig ? Scalar(0) : p.cc * (2 - p.cc)));
  s.cov = (1 - c1a - p.cmu) * s.cov + p.c1 * s.path_c * s.path_c.transpose() +
          p.cmu * y * p.weights.asDiagonal() * y.transpose();
  s.cov = (s.cov + s.cov.transpose()) / Scalar(2);
  s.sigma *= std::exp(std::min(Scalar(1), (p.cs / p.damps) * (ps_norm / p.chi_n - 1)));
}

enum class StallReason : std::uint8_t { NoEffectAxis, Condition, TolX, TolFun };

std::string_view to_string(StallReason r) noexcept;

inline constexpr double kMaxCondition = 1e14;
inline constexpr double kTolX = 1e-12;
inline constexpr double kTolFun = 1e-12;

/// Generations of flat best error needed before TolFun fires.
inline std::size_t flat_history_length(Eigen::Index n, Eigen::Index lambda) {
  return 10 + static_cast<std::size_t>(std::ceil(30.0 * static_cast<double>(n) / static_cast<double>(lambda)));
}

/// Checks, in order: an axis whose 0.1-sigma step leaves the mean unchanged,
/// cond(C) above 1e14, sigma * max sqrt(C_ii) below 1e-12, and finally a flat
/// landscape: the best errors of the last 10 + ceil(30 n / lambda) generations
/// and all errors of the latest one lie within 1e-12. Without the last check
/// a search on a decode plateau never stalls, because sigma does not shrink
/// when every sample scores the same.
template <typename Scalar>
std::optional<StallReason> detect_stall(const CmaState<Scalar>& s) {
  Eigen::SelfAdjointEigenSolver<typename CmaState<Scalar>::Matrix> es(s.cov);
  const auto& ev = es.eigenvalues();
  if (es.info() != Eigen::Success || !ev.allFinite() || ev.minCoeff() <= 0) return StallReason::Condition;
  for (Eigen::Index i = 0; i < s.n; ++i) {
    const typename CmaState<Scalar>::Vector moved =
        s.mean + Scalar(0.1) * s.sigma * std::sqrt(ev[i]) * es.eigenvectors().col(i);
    if (moved == s.mean) return StallReason::NoEffectAxis;
  }
  if (static_cast<double>(ev.maxCoeff() / ev.minCoeff()) > kMaxCondition) return StallReason::Condition;
  if (static_cast<double>(s.sigma * std::sqrt(s.cov.diagonal().maxCoeff())) < kTolX) return StallReason::TolX;
  const std::size_t h = flat_history_length(s.n, s.lambda);
  if (s.best_errors.size() >= h && s.last_range <= kTolFun) {
    const auto [lo, hi] = std::minmax_element(s.best_errors.end() - static_cast<std::ptrdiff_t>(h), s.best_errors.end());
    if (*hi - *lo <= kTolFun) return StallReason::TolFun;
  }
  return std::nullopt;
}

/// Restart flags; any combination is allowed.
struct RestartPolicy {
  bool pb = false;  // double the population
  bool mb = false;  // re-draw the mean
  bool cb = false;  // reset the covariance

  static constexpr RestartPolicy none() { return {}; }
  static constexpr RestartPolicy ipop() { return {true, true, true}; }
  friend bool operator==(const RestartPolicy&, const RestartPolicy&) = default;
};

/// Parses "none", "ipop" or a '+'-joined subset of "pb", "mb", "cb".
RestartPolicy parse_restart_policy(std::string_view text);
std::string to_string(const RestartPolicy& policy);

/// Applies the flagged resets. Step size, evolution paths and the error
/// history always return to their initial values; quantities whose flag is unset are kept.
template <typename Scalar>
void apply_restart(CmaState<Scalar>& s, const RestartPolicy& policy, Rng& rng) {
  if (policy.pb) s.lambda = std::min(2 * s.lambda, kLambdaGrowthCap * s.lambda0);
  if (policy.mb) {
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    for (Eigen::Index i = 0; i < s.n; ++i) s.mean[i] = static_cast<Scalar>(u(rng));
  }
  if (policy.cb) s.cov.setIdentity(s.n, s.n);
  s.sigma = s.sigma0;
  s.path_sigma.setZero(s.n);
  s.path_c.setZero(s.n);
  s.best_errors.clear();
  s.last_range = std::numeric_limits<double>::infinity();
  update_eigensystem(s, true);
  ++s.restarts;
}

}  // namespace progsyn

#endif  // PROGSYN_CMA_HPP
