#pragma once

#include <optional>

#include "curlicue/interferometer.hpp"

namespace curlicue::testing {

inline constexpr double kDemoDisplacementNm = 523426.8;
inline constexpr double kDemoLambdaMinNm = 460.36;
inline constexpr double kDemoLambdaMaxNm = 463.24;

inline InterferometerConfig demo_config() {
    return {0.0, kDemoDisplacementNm, SumSpec(3, 2)};
}

inline SpectralWindow demo_window() {
    return {kDemoLambdaMinNm, kDemoLambdaMaxNm, 2048};
}

/// Noiseless M = 3 interferogram at the demonstration parameters.
inline const Interferogram& demo_interferogram() {
    static const Interferogram ig = simulate(demo_config(), demo_window(), std::nullopt);
    return ig;
}

}  // namespace curlicue::testing
