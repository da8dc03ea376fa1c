#include "gk/spectra.hpp"

#include <algorithm>
#include <set>

namespace gk::spectra {

std::vector<std::uint64_t> divisibility_maxima(const std::vector<std::uint64_t>& values) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t a : values) {
    bool maximal = true;
    for (std::uint64_t b : values) {
      if (a != b && b % a == 0) {
        maximal = false;
        break;
      }
    }
    if (maximal) out.push_back(a);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<std::uint64_t> divisor_closure(const std::vector<std::uint64_t>& maxima) {
  if (maxima.empty()) throw DomainError("divisor_closure: empty input");
  std::set<std::uint64_t> out;
  for (std::uint64_t m : maxima) {
    if (m == 0) throw DomainError("divisor_closure: zero member");
    for (std::uint64_t d = 1; d * d <= m; ++d) {
      if (m % d == 0) {
        out.insert(d);
        out.insert(m / d);
      }
    }
  }
  return {out.begin(), out.end()};
}

Spectrum spectrum_of(const groups::GroupTable& table) {
  std::set<std::uint64_t> orders(table.orders().begin(), table.orders().end());
  Spectrum s;
  s.all_orders.assign(orders.begin(), orders.end());
  s.maxima = divisibility_maxima(s.all_orders);
  s.source = Source::enumerated;
  // Element orders of a group are divisor-closed; anything else means a
  // broken order computation.
  check(s.all_orders == divisor_closure(s.maxima),
        "spectrum_of: order set is not divisor-closed");
  return s;
}

Spectrum mu_closed_form(Family family, std::uint64_t p, std::uint32_t k) {
  if (family == Family::psl34) {
    throw DomainError("mu_closed_form covers the PSL2/PGL2 families only");
  }
  if (!numtheory::is_prime(i128(p))) {
    throw DomainError("mu_closed_form: p must be prime");
  }
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < k; ++i) q *= p;
  if (q <= 3) throw DomainError("mu_closed_form requires p^k > 3");

  std::vector<std::uint64_t> maxima;
  if (p == 2) {
    maxima = {2, q - 1, q + 1};
  } else if (family == Family::pgl2) {
    maxima = {p, q - 1, q + 1};
  } else {
    maxima = {p, (q - 1) / 2, (q + 1) / 2};
  }
  Spectrum s;
  s.maxima = divisibility_maxima(maxima);  // guards degenerate collisions
  s.all_orders = divisor_closure(s.maxima);
  s.source = Source::closed_form;
  return s;
}

numtheory::FactoredInteger order_closed_form(Family family, std::uint64_t q) {
  if (family == Family::psl34) {
    return numtheory::factorize(20160);
  }
  auto [p, n] = groups::prime_power(q);
  (void)p;
  (void)n;
  i128 o = numtheory::checked_mul(i128(q), numtheory::checked_mul(i128(q) - 1, i128(q) + 1));
  if (family == Family::psl2 && q % 2 == 1) o /= 2;
  return numtheory::factorize(o);
}

}  // namespace gk::spectra
