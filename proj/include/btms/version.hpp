#pragma once

namespace btms {

inline constexpr const char* kVersion = "1.0.0";

// Bumped whenever the reference-front sampling pipeline changes in a way that
// alters its output for a fixed (n, seed).
inline constexpr const char* kFrontGeneratorVersion = "1";

}  // namespace btms
