#pragma once

namespace rootgap {

inline constexpr double kPi = 3.141592653589793238462643383279502884;
inline constexpr double kTwoPi = 6.283185307179586476925286766559005768;

}  // namespace rootgap
