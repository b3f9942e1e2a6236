#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <memory>
#include <string>
#include <variant>

#include "rdg/errors.hpp"

namespace rdg {

class EdgeProbabilityModel;

/// 1 / (n^beta * d), clamped to [0, 1]. Any real beta is accepted.
struct InverseDistance {
  double beta;
  std::uint64_t n;
};

/// alpha * exp(-d / beta_w) with alpha, beta_w in (0, 1].
struct WaxmanExponential {
  double alpha;
  double beta_w;
};

struct ConstantProbability {
  double p;
};

/// Zero beyond cutoff, otherwise the wrapped model.
struct Truncated {
  std::shared_ptr<const EdgeProbabilityModel> inner;
  double cutoff;
};

inline std::string format_fixed(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", x);
  return buf;
}

/// A non-increasing edge probability f(d). Immutable once built.
class EdgeProbabilityModel {
 public:
  using Variant = std::variant<InverseDistance, WaxmanExponential, ConstantProbability, Truncated>;

  static EdgeProbabilityModel inverse_distance(double beta, std::uint64_t n) {
    detail::require(n >= 1, "inverse-distance: n must be positive");
    detail::require(std::isfinite(beta), "inverse-distance: beta must be finite");
    return EdgeProbabilityModel(InverseDistance{beta, n});
  }

  static EdgeProbabilityModel waxman(double alpha, double beta_w) {
    detail::require(alpha > 0.0 && alpha <= 1.0, "waxman: alpha must lie in (0, 1]");
    detail::require(beta_w > 0.0 && beta_w <= 1.0, "waxman: beta_w must lie in (0, 1]");
    return EdgeProbabilityModel(WaxmanExponential{alpha, beta_w});
  }

  static EdgeProbabilityModel constant(double p) {
    detail::require(p >= 0.0 && p <= 1.0, "constant: p must lie in [0, 1]");
    return EdgeProbabilityModel(ConstantProbability{p});
  }

  static EdgeProbabilityModel truncated(EdgeProbabilityModel inner, double cutoff) {
    detail::require(cutoff > 0.0, "truncated: cutoff must be positive");
    return EdgeProbabilityModel(
        Truncated{std::make_shared<const EdgeProbabilityModel>(std::move(inner)), cutoff});
  }

  const Variant& variant() const { return model_; }

  template <class T>
  bool holds() const {
    return std::holds_alternative<T>(model_);
  }

  /// f(d) for d > 0. Distance zero is a self pair and is rejected.
  double operator()(double d) const {
    detail::require(d > 0.0, "edge probability: distance must be positive");
    return evaluate(d);
  }

  std::string describe() const {
    return std::visit(
        [](const auto& m) -> std::string {
          using T = std::decay_t<decltype(m)>;
          if constexpr (std::is_same_v<T, InverseDistance>)
            return "inverse-distance(beta=" + format_fixed(m.beta) + ",n=" + std::to_string(m.n) + ")";
          else if constexpr (std::is_same_v<T, WaxmanExponential>)
            return "waxman(alpha=" + format_fixed(m.alpha) + ",beta_w=" + format_fixed(m.beta_w) + ")";
          else if constexpr (std::is_same_v<T, ConstantProbability>)
            return "constant(p=" + format_fixed(m.p) + ")";
          else
            return "truncated(" + m.inner->describe() + ",cutoff=" + format_fixed(m.cutoff) + ")";
        },
        model_);
  }

 private:
  explicit EdgeProbabilityModel(Variant v) : model_(std::move(v)) {}

  double evaluate(double d) const {
    return std::visit(
        [d](const auto& m) -> double {
          using T = std::decay_t<decltype(m)>;
          if constexpr (std::is_same_v<T, InverseDistance>) {
            const double value = 1.0 / (std::pow(static_cast<double>(m.n), m.beta) * d);
            return std::clamp(value, 0.0, 1.0);
          } else if constexpr (std::is_same_v<T, WaxmanExponential>) {
            return m.alpha * std::exp(-d / m.beta_w);
          } else if constexpr (std::is_same_v<T, ConstantProbability>) {
            return m.p;
          } else {
            return d > m.cutoff ? 0.0 : m.inner->evaluate(d);
          }
        },
        model_);
  }

  Variant model_;
};

inline double edge_probability(const EdgeProbabilityModel& model, double d) { return model(d); }

}  // namespace rdg
