#pragma once

namespace graded {

/// Execution policy for the exhaustive-search kernels. Both paths return
/// identical results; counterexample selection is always the lexicographic
/// minimum, so parallel chunks reduce with min-combining.
enum class Exec { serial, parallel };

}  // namespace graded
