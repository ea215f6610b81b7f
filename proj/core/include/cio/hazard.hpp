/// @file hazard.hpp
/// @brief Piecewise-constant default intensity and its calibration to spot index quotes.

#pragma once

#include <vector>

#include "cio/curves.hpp"

namespace cio {

/// Intensity lambda on (t_{k-1}, t_k]; the last value extends to infinity.
struct IntensityPillar {
    double time;       ///< right end of the segment
    double intensity;  ///< lambda >= 0 on the segment
};

/// Deterministic hazard curve with survival S(T) = exp(-int_0^T lambda(s) ds).
class HazardCurve {
public:
    /// Pillar times must be strictly increasing and positive, intensities >= 0.
    explicit HazardCurve(std::vector<IntensityPillar> pillars);

    static HazardCurve flat(double intensity);

    /// Integrated intensity Lambda(T).
    double cumulative(double t) const;
    double survival(double t) const;
    double default_probability(double t) const { return 1.0 - survival(t); }

    const std::vector<IntensityPillar>& pillars() const noexcept { return pillars_; }

private:
    std::vector<IntensityPillar> pillars_;
};

/// Flat lambda* solving protection_leg = spread * annuity on a spot schedule.
///
/// The bracket starts around the credit-triangle guess spread/(1-R) and is
/// widened up to lambda = 20. Throws CalibrationError when the spread is not
/// positive or no admissible intensity reprices the quote to 1e-12.
HazardCurve calibrate_flat_intensity(double spread, double recovery, const Schedule& spot,
                                     const DiscountCurve& curve);

inline constexpr double kMaxIntensity = 20.0;

}  // namespace cio
