#pragma once

namespace qstab {

inline constexpr const char* kToolVersion = "1.0.0";

// Bumped when any JSON artifact changes shape.
inline constexpr int kFormatVersion = 1;

}  // namespace qstab
