#pragma once

// Reference values frozen from an independent high-precision computation
// (30-digit bisection on the defining equations and exact closed forms),
// rounded to double.  Tests compare solver/library output against these, so
// a regression in either the equations or the bisection shows up as a
// mismatch against numbers that were not produced by this code base.

namespace frozen {

// Positive roots of 2 (1+r) r^N = (1-r)^2, N = 1..8 (index 0 unused).
inline constexpr double kPsiRoot[9] = {0.0,
                                       0.2360679774997897,
                                       0.37608588944209327,
                                       0.46235113926831086,
                                       0.52287105429440974,
                                       0.56846640268621956,
                                       0.60443292941896339,
                                       0.63373841379149654,
                                       0.65820175540208548};

// Positive roots of (1+r) r^N = (1-r)^2, N = 1..8.
inline constexpr double kPrimeRoot[9] = {0.0,
                                         0.33333333333333333,
                                         0.45339765151640377,
                                         0.52709828044645251,
                                         0.57890031091499285,
                                         0.61803398874989485,
                                         0.64898895258004100,
                                         0.67427715062066547,
                                         0.69543826870349553};

// Positive roots of 2 r^N = 1 - r, N = 1..8.
inline constexpr double kAnRoot[9] = {0.0,
                                      0.33333333333333333,
                                      0.5,
                                      0.58975451230145838,
                                      0.64779887126104239,
                                      0.68913946223788423,
                                      0.72041256125453184,
                                      0.74507197294175656,
                                      0.76511680858680407};

inline constexpr double kUnivalentRoot = 0.1010205144336438;  // 5 - 2 sqrt 6
inline constexpr double kSqrt1127 = 0.63828473850422541;      // sqrt(11/27)
inline constexpr double kSqrt311 = 0.52223296786709351;       // sqrt(3/11)

// Bohr sum of (a-z)/(1-az) at a = 0.9, r = 1/3: a + (1-a^2) r / (1 - a r).
inline constexpr double kBohrMoebius09 = 0.99047619047619048;

// Tail sum_{k>=2} |a_k| 0.3^k for a = 0.5: (1-a^2) a r^2 / (1 - a r).
inline constexpr double kTailMoebius05 = 0.039705882352941176;

// Area functional of (a-z)/(1-az) at a = 0.5, r = 1/3:
// (1-a^2)^2 r^2 / (1 - a^2 r^2)^2.  (Exact value; a published 4-digit
// rounding of this quantity as 0.0664 is slightly off.)
inline constexpr double kAreaMoebius05 = 0.066122448979591837;

// (r + a)/(1 + a r) at a = 0.5, r = 1/3.
inline constexpr double kEvalMoebius05 = 0.71428571428571429;

}  // namespace frozen
