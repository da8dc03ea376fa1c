#include "gk/numtheory.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace gk::numtheory {

namespace {

// Largest n for which the Miller-Rabin witness set {2,...,41} is a
// proven deterministic primality test: 3,317,044,064,679,887,385,961,981.
const i128 kCertifiedPrimalityBound =
    i128(3317044) * i128(1000000000000000000LL) + i128(64679887385961981LL);

constexpr std::uint32_t kTrialBound = 100000;

const std::vector<std::uint32_t>& small_primes() {
  static const std::vector<std::uint32_t> table = primes_upto(kTrialBound);
  return table;
}

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t n) {
  return std::uint64_t(u128(a) * b % n);
}

std::uint64_t powmod_u64(std::uint64_t a, std::uint64_t e, std::uint64_t n) {
  std::uint64_t r = 1 % n;
  a %= n;
  while (e > 0) {
    if (e & 1) r = mulmod_u64(r, a, n);
    a = mulmod_u64(a, a, n);
    e >>= 1;
  }
  return r;
}

// Russian-peasant multiply mod n for operands beyond 64 bits.
u128 mulmod_u128(u128 a, u128 b, u128 n) {
  a %= n;
  b %= n;
  u128 r = 0;
  while (b > 0) {
    if (b & 1) {
      r += a;
      if (r >= n) r -= n;
    }
    a <<= 1;
    if (a >= n) a -= n;
    b >>= 1;
  }
  return r;
}

u128 powmod_u128(u128 a, u128 e, u128 n) {
  u128 r = 1 % n;
  a %= n;
  while (e > 0) {
    if (e & 1) r = mulmod_u128(r, a, n);
    a = mulmod_u128(a, a, n);
    e >>= 1;
  }
  return r;
}

template <typename U>
bool mr_witness(U n, U a, U (*mulmod)(U, U, U), U (*powmod)(U, U, U)) {
  U d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  U x = powmod(a % n, d, n);
  if (x == 1 || x == n - 1) return true;
  for (int i = 1; i < s; ++i) {
    x = mulmod(x, x, n);
    if (x == n - 1) return true;
  }
  return false;
}

bool is_prime_u64(std::uint64_t n) {
  for (std::uint64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n == a) return true;
    if (n % a == 0) return false;
  }
  if (n < 41 * 41) return n > 1;
  for (std::uint64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (!mr_witness<std::uint64_t>(n, a, mulmod_u64, powmod_u64)) return false;
  }
  return true;
}

std::uint64_t rho_brent_u64(std::uint64_t n) {
  // Deterministic parameter sequence; n is odd, composite, not a prime
  // power of a small prime.
  for (std::uint64_t c = 1;; ++c) {
    std::uint64_t x = 2, y = 2, d = 1;
    std::uint64_t ys = y, q = 1;
    std::uint64_t r = 1;
    auto f = [&](std::uint64_t v) { return (mulmod_u64(v, v, n) + c) % n; };
    while (d == 1) {
      x = y;
      for (std::uint64_t i = 0; i < r; ++i) y = f(y);
      std::uint64_t k = 0;
      while (k < r && d == 1) {
        ys = y;
        std::uint64_t lim = std::min<std::uint64_t>(128, r - k);
        for (std::uint64_t i = 0; i < lim; ++i) {
          y = f(y);
          q = mulmod_u64(q, x > y ? x - y : y - x, n);
        }
        d = std::gcd(q, n);
        k += lim;
      }
      r <<= 1;
    }
    if (d == n) {
      d = 1;
      while (d == 1) {
        ys = f(ys);
        d = std::gcd(x > ys ? x - ys : ys - x, n);
      }
    }
    if (d != n) return d;
  }
}

u128 rho_brent_u128(u128 n) {
  for (u128 c = 1;; ++c) {
    u128 x = 2, y = 2, d = 1, ys = 2, q = 1, r = 1;
    auto f = [&](u128 v) { return (mulmod_u128(v, v, n) + c) % n; };
    auto g = [](u128 a, u128 b) {
      while (b) {
        u128 t = a % b;
        a = b;
        b = t;
      }
      return a;
    };
    while (d == 1) {
      x = y;
      for (u128 i = 0; i < r; ++i) y = f(y);
      u128 k = 0;
      while (k < r && d == 1) {
        ys = y;
        u128 lim = std::min<u128>(128, r - k);
        for (u128 i = 0; i < lim; ++i) {
          y = f(y);
          q = mulmod_u128(q, x > y ? x - y : y - x, n);
        }
        d = g(q, n);
        k += lim;
      }
      r <<= 1;
    }
    if (d == n) {
      d = 1;
      while (d == 1) {
        ys = f(ys);
        d = g(x > ys ? x - ys : ys - x, n);
      }
    }
    if (d != n) return d;
  }
}

}  // namespace

std::vector<i128> FactoredInteger::primes() const {
  std::vector<i128> out;
  out.reserve(factors.size());
  for (const auto& [p, e] : factors) out.push_back(p);
  return out;
}

std::vector<std::uint32_t> primes_upto(std::uint32_t n) {
  std::vector<bool> sieve(std::size_t(n) + 1, true);
  std::vector<std::uint32_t> out;
  if (n < 2) return out;
  sieve[0] = sieve[1] = false;
  for (std::uint64_t i = 2; i <= n; ++i) {
    if (!sieve[i]) continue;
    out.push_back(std::uint32_t(i));
    for (std::uint64_t j = i * i; j <= n; j += i) sieve[j] = false;
  }
  return out;
}

bool is_prime(i128 n) {
  if (n < 2) return false;
  if (n < i128(std::uint64_t(-1))) {
    return is_prime_u64(std::uint64_t(n));
  }
  if (n >= kCertifiedPrimalityBound) {
    throw RangeError("is_prime: " + to_string_i128(n) +
                     " exceeds the certified deterministic primality range");
  }
  u128 u = u128(n);
  for (u128 a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41}) {
    if (u % a == 0) return false;
  }
  for (u128 a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41}) {
    if (!mr_witness<u128>(u, a, mulmod_u128, powmod_u128)) return false;
  }
  return true;
}

FactoredInteger factorize(i128 n) {
  if (n < 1) throw DomainError("factorize: input must be >= 1");
  FactoredInteger out;
  out.value = n;
  std::map<i128, std::uint32_t> acc;
  i128 rest = n;
  for (std::uint32_t p : small_primes()) {
    if (i128(p) * p > rest) break;
    while (rest % p == 0) {
      rest /= p;
      ++acc[p];
    }
  }
  // Split remaining cofactors with Pollard rho; every reported prime is
  // certified by is_prime.
  std::vector<i128> work;
  if (rest > 1) work.push_back(rest);
  while (!work.empty()) {
    i128 v = work.back();
    work.pop_back();
    if (v == 1) continue;
    if (is_prime(v)) {
      ++acc[v];
      continue;
    }
    i128 d;
    if (v < i128(std::uint64_t(-1))) {
      d = i128(rho_brent_u64(std::uint64_t(v)));
    } else {
      d = i128(rho_brent_u128(u128(v)));
    }
    work.push_back(d);
    work.push_back(v / d);
  }
  out.factors.assign(acc.begin(), acc.end());
  return out;
}

std::optional<std::uint32_t> power_of(i128 n, i128 base) {
  if (n < 1) throw DomainError("power_of: n must be >= 1");
  if (base < 2) throw DomainError("power_of: base must be >= 2");
  std::uint32_t k = 0;
  i128 v = n;
  while (v % base == 0) {
    v /= base;
    ++k;
  }
  if (v == 1) return k;
  return std::nullopt;
}

i128 checked_mul(i128 a, i128 b) {
  i128 r;
  if (__builtin_mul_overflow(a, b, &r)) {
    throw RangeError("exact-integer overflow in multiply");
  }
  return r;
}

i128 checked_pow(i128 base, std::uint32_t exp) {
  i128 r = 1;
  for (std::uint32_t i = 0; i < exp; ++i) r = checked_mul(r, base);
  return r;
}

namespace {

i128 pow_named(std::uint32_t base, std::uint32_t exp) {
  try {
    return checked_pow(i128(base), exp);
  } catch (const RangeError&) {
    throw RangeError("scan overflow at " + std::to_string(base) + "^" +
                     std::to_string(exp));
  }
}

void require_bounds(std::uint32_t p_max, std::uint32_t q_max, std::uint32_t m_max,
                    std::uint32_t n_max) {
  if (p_max < 2 || q_max < 2 || m_max < 2 || n_max < 2) {
    throw DomainError("scan bounds must all be >= 2");
  }
}

}  // namespace

std::vector<DiophantineSolution> scan_catalan(std::uint32_t p_max, std::uint32_t q_max,
                                              std::uint32_t m_max, std::uint32_t n_max) {
  require_bounds(p_max, q_max, m_max, n_max);
  std::map<i128, std::pair<i128, std::uint32_t>> qpow;  // q^n -> (q, n)
  for (std::uint32_t q : primes_upto(q_max)) {
    for (std::uint32_t n = 2; n <= n_max; ++n) {
      qpow.emplace(pow_named(q, n), std::make_pair(i128(q), n));
    }
  }
  std::vector<DiophantineSolution> out;
  for (std::uint32_t p : primes_upto(p_max)) {
    for (std::uint32_t m = 2; m <= m_max; ++m) {
      i128 v = pow_named(p, m);
      auto it = qpow.find(v - 1);
      if (it != qpow.end()) {
        out.push_back({i128(p), m, it->second.first, it->second.second, +1,
                       DiophantineSolution::Kind::catalan});
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return std::tie(a.p, a.m, a.q, a.n) < std::tie(b.p, b.m, b.q, b.n);
  });
  return out;
}

NagellScan scan_nagell(std::uint32_t p_max, std::uint32_t q_max, std::uint32_t m_max,
                       std::uint32_t n_max) {
  require_bounds(p_max, q_max, m_max, n_max);
  std::map<i128, std::pair<i128, std::uint32_t>> twice_qpow;  // 2*q^n -> (q, n)
  for (std::uint32_t q : primes_upto(q_max)) {
    for (std::uint32_t n = 2; n <= n_max; ++n) {
      twice_qpow.emplace(checked_mul(2, pow_named(q, n)), std::make_pair(i128(q), n));
    }
  }
  std::vector<DiophantineSolution> all;
  for (std::uint32_t p : primes_upto(p_max)) {
    for (std::uint32_t m = 2; m <= m_max; ++m) {
      i128 v = pow_named(p, m);
      for (int sign : {+1, -1}) {
        auto it = twice_qpow.find(v - sign);
        if (it != twice_qpow.end()) {
          all.push_back({i128(p), m, it->second.first, it->second.second, sign,
                         DiophantineSolution::Kind::nagell_pell});
        }
      }
    }
  }
  std::sort(all.begin(), all.end(), [](const auto& a, const auto& b) {
    return std::tie(a.p, a.m, a.q, a.n, a.sign) < std::tie(b.p, b.m, b.q, b.n, b.sign);
  });
  NagellScan out;
  for (auto s : all) {
    if (s.m == 2 && s.n == 2) {
      s.kind = DiophantineSolution::Kind::nagell_pell;
      out.pell.push_back(s);
    } else {
      s.kind = DiophantineSolution::Kind::nagell_exceptional;
      bool known = (s.p == 3 && s.m == 5 && s.q == 11 && s.n == 2 && s.sign == +1) ||
                   (s.p == 239 && s.m == 2 && s.q == 13 && s.n == 4 && s.sign == -1);
      if (!known) {
        throw InconsistencyError(
            "scan_nagell: unexpected exceptional solution " + to_string_i128(s.p) + "^" +
            std::to_string(s.m) + " - 2*" + to_string_i128(s.q) + "^" + std::to_string(s.n));
      }
      out.exceptional.push_back(s);
    }
  }
  return out;
}

std::vector<B3Prime> search_b3_primes(std::uint64_t bound) {
  std::vector<B3Prime> out;
  i128 pow3 = 1;
  for (std::uint32_t k = 1;; ++k) {
    pow3 = checked_mul(pow3, 3);
    i128 lo = 2 * pow3 - 1;  // (p+1)/2 = 3^k
    i128 hi = 2 * pow3 + 1;  // (p-1)/2 = 3^k
    if (lo > i128(bound)) break;
    if (lo <= i128(bound) && is_prime(lo)) {
      out.push_back({std::uint64_t(lo), B3Side::plus, k});
    }
    if (hi <= i128(bound) && is_prime(hi)) {
      out.push_back({std::uint64_t(hi), B3Side::minus, k});
    }
  }
  std::sort(out.begin(), out.end(),
            [](const B3Prime& a, const B3Prime& b) { return a.p < b.p; });
  return out;
}

}  // namespace gk::numtheory
