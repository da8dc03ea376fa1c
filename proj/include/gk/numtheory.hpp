#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "gk/common.hpp"

namespace gk::numtheory {

/// Positive integer together with its full prime factorization,
/// primes strictly ascending.
struct FactoredInteger {
  i128 value = 1;
  std::vector<std::pair<i128, std::uint32_t>> factors;

  std::vector<i128> primes() const;
};

/// Deterministic primality for n below the certified witness bound
/// (about 3.3e24). Larger inputs raise RangeError rather than giving a
/// probabilistic answer.
bool is_prime(i128 n);

/// Unique prime factorization; factorize(1) has an empty factor list.
FactoredInteger factorize(i128 n);

/// Exponent k with base^k == n, if one exists.
std::optional<std::uint32_t> power_of(i128 n, i128 base);

i128 checked_mul(i128 a, i128 b);
i128 checked_pow(i128 base, std::uint32_t exp);

/// Primes up to and including n.
std::vector<std::uint32_t> primes_upto(std::uint32_t n);

struct DiophantineSolution {
  enum class Kind { catalan, nagell_exceptional, nagell_pell };
  i128 p = 0;
  std::uint32_t m = 0;
  i128 q = 0;
  std::uint32_t n = 0;
  int sign = +1;  // catalan solutions always +1
  Kind kind = Kind::catalan;

  bool operator==(const DiophantineSolution&) const = default;
};

/// All (p, m, q, n) with p, q prime within bounds, m, n > 1 and
/// p^m - q^n = 1. Exact arithmetic; overflow raises RangeError naming
/// the offending pair.
std::vector<DiophantineSolution> scan_catalan(std::uint32_t p_max, std::uint32_t q_max,
                                              std::uint32_t m_max, std::uint32_t n_max);

struct NagellScan {
  std::vector<DiophantineSolution> exceptional;  // m, n not both 2
  std::vector<DiophantineSolution> pell;         // m == n == 2
};

/// All solutions of p^m - 2 q^n = +-1 within bounds, partitioned into
/// pell (m = n = 2) and the two known exceptional relations. An
/// exceptional solution outside the known pair raises
/// InconsistencyError.
NagellScan scan_nagell(std::uint32_t p_max, std::uint32_t q_max,
                       std::uint32_t m_max, std::uint32_t n_max);

enum class B3Side { minus, plus };  // minus: (p-1)/2 = 3^k, plus: (p+1)/2 = 3^k

struct B3Prime {
  std::uint64_t p = 0;
  B3Side side = B3Side::minus;
  std::uint32_t k = 0;

  bool operator==(const B3Prime&) const = default;
};

/// Primes p <= bound with (p -+ 1)/2 a positive power of 3, ascending.
/// Found by iterating the exponent, so runtime is logarithmic in bound.
std::vector<B3Prime> search_b3_primes(std::uint64_t bound);

}  // namespace gk::numtheory
