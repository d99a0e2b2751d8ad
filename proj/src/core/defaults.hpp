#pragma once

namespace qx {

inline constexpr const char* kToolVersion = "0.1.0";

// Numeric defaults. The Perron tolerance is a residual bound scaled by q.
inline constexpr double kPerronTol = 1e-12;
inline constexpr long kPerronMaxIter = 1'000'000;

// Size ceilings.
inline constexpr int kDenseCeiling = 512;      // dense eigensolver
inline constexpr int kCanonicalCeiling = 12;   // exact canonical forms
inline constexpr int kDeskNoIsolated = 8;      // full no-isolated-vertex sweeps
inline constexpr int kDeskConnected = 9;       // connected-only sweeps
inline constexpr int kSearchCeiling = 80;      // local-search edge count
inline constexpr long kCrossCheckCeiling = 500;

// Search defaults.
inline constexpr long kMoveCap = 100'000;      // exact evaluations per restart
inline constexpr int kDefaultRestarts = 20;
inline constexpr unsigned long long kDefaultSeed = 1;
inline constexpr double kAcceptEps = 1e-12;    // strict q increase per accepted move
inline constexpr double kScreenFallbackRate = 0.1;

// Verification defaults.
inline constexpr long kDefaultTrials = 1000;
inline constexpr double kVerifyTol = 1e-9;
inline constexpr double kQuotientMatchTol = 1e-7;
inline constexpr double kCrossRelTol = 1e-8;
inline constexpr double kProbeBandBelow = 1e-6;
inline constexpr double kProbeBandAbove = 1e-9;
inline constexpr double kTieTol = 1e-9;

}  // namespace qx
