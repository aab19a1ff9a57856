#pragma once

#include <optional>
#include <string>
#include <string_view>

namespace xychain {

enum class ProfileKind { constant, exp, cos, sin, tanh, proportional };

std::string_view to_string(ProfileKind kind);
ProfileKind profile_kind_from_string(std::string_view name);

/// Time dependence of the exchange coupling J(t) or the field h(t).
///
///   constant      J0
///   exp           J1 + (J0 - J1) exp(-K t)
///   cos           J0 - J0 cos(K t)
///   sin           J0 - J0 sin(K t)
///   tanh          J0 + (J1 - J0)/2 [tanh(K (t - 5/2)) + 1]
///   proportional  lambda * companion(t)   (J(t) = lambda h(t))
///
/// Parameters are unconstrained in sign. K must be positive for every
/// time-dependent kind; lambda must be finite and nonzero.
struct DrivingProfile {
  ProfileKind kind = ProfileKind::constant;
  double J0 = 0.0;
  double J1 = 0.0;
  double K = 1.0;
  double lambda = 1.0;

  static DrivingProfile constant(double value);
  static DrivingProfile exponential(double J0, double J1, double K);
  static DrivingProfile cosine(double J0, double K);
  static DrivingProfile sine(double J0, double K);
  static DrivingProfile hyperbolic(double J0, double J1, double K);
  static DrivingProfile proportional(double lambda);

  void validate() const;

  bool time_dependent() const;

  // 2 pi / K for the periodic kinds.
  std::optional<double> period() const;

  // Time after which the profile is constant to double precision: 0 for
  // constant, infinity for the periodic kinds.
  double settle_time() const;

  // Upper bound on |value(t)| over t >= 0. Not defined for proportional.
  double max_abs() const;

  // Same shape with every amplitude multiplied by `factor` (lambda untouched).
  DrivingProfile scaled(double factor) const;

  friend bool operator==(const DrivingProfile&, const DrivingProfile&) = default;
};

// Offset of the tanh switch, in time units.
inline constexpr double kTanhCenter = 2.5;

/// J(t) (or h(t)). `companion` is the partner quantity for the
/// proportional kind and is ignored otherwise.
double evaluate_profile(const DrivingProfile& profile, double t,
                        std::optional<double> companion = std::nullopt);

/// Closed-form integral of evaluate_profile over [0, t]. For the
/// proportional kind `companion_integral` is the partner's integral.
double profile_antiderivative(const DrivingProfile& profile, double t,
                              std::optional<double> companion_integral = std::nullopt);

}  // namespace xychain
