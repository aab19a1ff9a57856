#include "xychain/profile.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "xychain/error.hpp"

namespace xychain {

namespace {

// log(cosh(x)) without overflow for large |x|.
double log_cosh(double x) {
  const double a = std::abs(x);
  return a + std::log1p(std::exp(-2.0 * a)) - std::numbers::ln2;
}

void require_time(double t) {
  if (!(t >= 0.0) || !std::isfinite(t)) {
    throw PreconditionError("profile time must be finite and non-negative, got " +
                            std::to_string(t));
  }
}

}  // namespace

std::string_view to_string(ProfileKind kind) {
  switch (kind) {
    case ProfileKind::constant: return "constant";
    case ProfileKind::exp: return "exp";
    case ProfileKind::cos: return "cos";
    case ProfileKind::sin: return "sin";
    case ProfileKind::tanh: return "tanh";
    case ProfileKind::proportional: return "proportional";
  }
  return "unknown";
}

ProfileKind profile_kind_from_string(std::string_view name) {
  for (auto kind : {ProfileKind::constant, ProfileKind::exp, ProfileKind::cos,
                    ProfileKind::sin, ProfileKind::tanh, ProfileKind::proportional}) {
    if (to_string(kind) == name) return kind;
  }
  throw ConfigError("unknown profile kind '" + std::string(name) + "'");
}

DrivingProfile DrivingProfile::constant(double value) {
  return {ProfileKind::constant, value, value, 1.0, 1.0};
}

DrivingProfile DrivingProfile::exponential(double J0, double J1, double K) {
  return {ProfileKind::exp, J0, J1, K, 1.0};
}

DrivingProfile DrivingProfile::cosine(double J0, double K) {
  return {ProfileKind::cos, J0, 0.0, K, 1.0};
}

DrivingProfile DrivingProfile::sine(double J0, double K) {
  return {ProfileKind::sin, J0, 0.0, K, 1.0};
}

DrivingProfile DrivingProfile::hyperbolic(double J0, double J1, double K) {
  return {ProfileKind::tanh, J0, J1, K, 1.0};
}

DrivingProfile DrivingProfile::proportional(double lambda) {
  return {ProfileKind::proportional, 0.0, 0.0, 1.0, lambda};
}

void DrivingProfile::validate() const {
  if (!std::isfinite(J0) || !std::isfinite(J1)) {
    throw ConfigError("profile amplitudes must be finite");
  }
  if (kind == ProfileKind::proportional) {
    if (!std::isfinite(lambda) || lambda == 0.0) {
      throw ConfigError("proportional profile needs a finite nonzero lambda");
    }
    return;
  }
  if (time_dependent() && !(K > 0.0 && std::isfinite(K))) {
    throw ConfigError("profile '" + std::string(to_string(kind)) +
                      "' needs a positive finite K");
  }
}

bool DrivingProfile::time_dependent() const { return kind != ProfileKind::constant; }

std::optional<double> DrivingProfile::period() const {
  if (kind == ProfileKind::cos || kind == ProfileKind::sin) {
    return 2.0 * std::numbers::pi / K;
  }
  return std::nullopt;
}

double DrivingProfile::settle_time() const {
  switch (kind) {
    case ProfileKind::constant: return 0.0;
    case ProfileKind::exp: return 40.0 / K;  // exp(-40) ~ 4e-18
    case ProfileKind::tanh: return kTanhCenter + 20.0 / K;  // 1 - tanh(20) ~ 8e-18
    case ProfileKind::cos:
    case ProfileKind::sin:
    case ProfileKind::proportional: break;
  }
  return std::numeric_limits<double>::infinity();
}

double DrivingProfile::max_abs() const {
  switch (kind) {
    case ProfileKind::constant: return std::abs(J0);
    case ProfileKind::exp:
    case ProfileKind::tanh: return std::max(std::abs(J0), std::abs(J1));
    case ProfileKind::cos:
    case ProfileKind::sin: return 2.0 * std::abs(J0);
    case ProfileKind::proportional: break;
  }
  throw PreconditionError("max_abs is undefined for a proportional profile");
}

DrivingProfile DrivingProfile::scaled(double factor) const {
  DrivingProfile out = *this;
  out.J0 *= factor;
  out.J1 *= factor;
  return out;
}

double evaluate_profile(const DrivingProfile& p, double t, std::optional<double> companion) {
  require_time(t);
  switch (p.kind) {
    case ProfileKind::constant: return p.J0;
    case ProfileKind::exp: return p.J1 + (p.J0 - p.J1) * std::exp(-p.K * t);
    case ProfileKind::cos: return p.J0 - p.J0 * std::cos(p.K * t);
    case ProfileKind::sin: return p.J0 - p.J0 * std::sin(p.K * t);
    case ProfileKind::tanh:
      return p.J0 + 0.5 * (p.J1 - p.J0) * (std::tanh(p.K * (t - kTanhCenter)) + 1.0);
    case ProfileKind::proportional:
      if (!companion) {
        throw ConfigError("proportional profile evaluated without its companion value");
      }
      return p.lambda * *companion;
  }
  return 0.0;
}

double profile_antiderivative(const DrivingProfile& p, double t,
                              std::optional<double> companion_integral) {
  require_time(t);
  switch (p.kind) {
    case ProfileKind::constant: return p.J0 * t;
    case ProfileKind::exp:
      return p.J1 * t - (p.J0 - p.J1) * std::expm1(-p.K * t) / p.K;
    case ProfileKind::cos: return p.J0 * t - p.J0 * std::sin(p.K * t) / p.K;
    case ProfileKind::sin: {
      const double s = std::sin(0.5 * p.K * t);
      return p.J0 * t - p.J0 * 2.0 * s * s / p.K;
    }
    case ProfileKind::tanh: {
      const double shift =
          (log_cosh(p.K * (t - kTanhCenter)) - log_cosh(p.K * kTanhCenter)) / p.K;
      return p.J0 * t + 0.5 * (p.J1 - p.J0) * (t + shift);
    }
    case ProfileKind::proportional:
      if (!companion_integral) {
        throw ConfigError("proportional profile integrated without its companion integral");
      }
      return p.lambda * *companion_integral;
  }
  return 0.0;
}

}  // namespace xychain
