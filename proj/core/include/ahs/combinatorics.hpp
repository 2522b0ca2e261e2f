#pragma once

#include <cstdint>

#include "ahs/enclosure.hpp"
#include "ahs/exact.hpp"

namespace ahs {

inline constexpr std::uint64_t kDefaultBruteforceCap = 5'000'000;

// Enclosure of ln(m!), exactly 0 for m <= 1.
Real log_factorial(unsigned long m, Precision prec);

// Enclosure of ln m, exactly 0 for m = 1.
Real log_natural(const Natural& m, Precision prec);

// Sum over compositions I of D of ln(I!/D!), by direct enumeration.
// Throws ResourceError when r(n,D) exceeds cap.
Real c_bruteforce(unsigned n, unsigned long D, Precision prec,
                  std::uint64_t cap = kDefaultBruteforceCap);

// Sum_{m=2}^{D} (r(n,m-1) - r(n,D-m)) ln m.
Real q_exact(unsigned n, unsigned long D, Precision prec);

// Sum_{m=2}^{D} ((m-1)^n - (D-m)^n) ln m, for n >= 1.
Real s_exact(unsigned n, unsigned long D, Precision prec);

// C(n,D) via C(n,D) = sum_{m=0}^{D} C(n-1,m) - Q(n,D) and C(0,.) = 0.
// Results are memoized process-wide per (n, D, precision).
Real c_recurrence(unsigned n, unsigned long D, Precision prec);

// -sum_{m=0}^{D} ln binomial(D, m), the closed form of C(1,D).
Real c1_binomial_form(unsigned long D, Precision prec);

}  // namespace ahs
