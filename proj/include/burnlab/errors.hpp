#pragma once
#include <stdexcept>
#include <string>

namespace burnlab {

inline constexpr const char* kVersion = "0.1.0";

// Thrown when an exact engine is asked for an instance past its advertised
// size cap. Callers that want best-effort behaviour catch this and fall back
// to bounds; the CLI maps it to its own exit code.
struct LimitError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace burnlab
