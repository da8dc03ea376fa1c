#pragma once

#include <cstdint>
#include <vector>

#include "gk/groups.hpp"
#include "gk/numtheory.hpp"

namespace gk::spectra {

enum class Family { psl2, pgl2, psl34 };
enum class Source { enumerated, closed_form };

/// Element-order spectrum: all orders (divisor-closed, ascending) and
/// the divisibility-maximal ones.
struct Spectrum {
  std::vector<std::uint64_t> all_orders;
  std::vector<std::uint64_t> maxima;
  Source source = Source::enumerated;
};

/// Exact spectrum of a fully enumerated group.
Spectrum spectrum_of(const groups::GroupTable& table);

/// Closed-form maxima for PSL(2, p^k) / PGL(2, p^k), p^k > 3, with the
/// divisor closure filled in; re-filtered for maximality.
Spectrum mu_closed_form(Family family, std::uint64_t p, std::uint32_t k);

/// q(q^2-1)/gcd(2, q-1) for psl2, q(q^2-1) for pgl2, 20160 for psl34
/// (q ignored there), returned factored.
numtheory::FactoredInteger order_closed_form(Family family, std::uint64_t q);

/// Every divisor of every member, ascending.
std::vector<std::uint64_t> divisor_closure(const std::vector<std::uint64_t>& maxima);

/// Divisibility-maximal members (an antichain).
std::vector<std::uint64_t> divisibility_maxima(const std::vector<std::uint64_t>& values);

}  // namespace gk::spectra
