#pragma once

namespace symgenus {

// Bumped whenever search order or record layout changes: cached witnesses
// from other versions are recomputed, never trusted.
inline constexpr const char* kEngineVersion = "0.1.0";

}  // namespace symgenus
