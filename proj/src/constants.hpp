#pragma once

// Numeric tolerances and size caps used throughout the lab.
// Every tolerance asserted by a verifier or test is pinned here.

namespace glab {

// --- identities and inequalities (exact sums over <= 2^20 states) ---
inline constexpr double kIdentityTol = 1e-10;      // two-route identity agreement
inline constexpr double kInequalityRelTol = 1e-9;  // LHS <= RHS * (1 + tol) + tol*scale
inline constexpr double kProbNormTol = 1e-12;      // enumerated measure normalization
inline constexpr double kDetailedBalanceTol = 1e-12;

// --- spectral / LSI ---
inline constexpr double kEigResidualTol = 1e-8;    // dual-solver agreement
inline constexpr double kLsiImproveTol = 1e-6;     // refinement loop stopping rule
inline constexpr double kLsiRecomputeTol = 1e-8;   // certificate ratio reproduction
inline constexpr double kGapVsLsiSlack = 1e-6;     // assert gap >= gamma_hat - slack

// --- de Bruijn finite differences ---
inline constexpr double kFdStep = 1e-5;
inline constexpr double kFdTol = 1e-6;

// --- size caps ---
inline constexpr int kEnumSiteCap = 20;            // exact tables up to 2^20 states
inline constexpr int kDenseEigSiteCap = 14;        // dense eigendecomposition cap
inline constexpr int kLsiSiteCap = 12;             // optimizer cap (2^12 states)
inline constexpr int kSparseGapSiteCap = 20;       // Lanczos gap-only cap
inline constexpr unsigned long long kGeometrySiteCap = (1ull << 32); // refuse >= this

// dense semigroup path below this many states, series path above
inline constexpr int kSemigroupDenseSiteCap = 10;

}  // namespace glab
