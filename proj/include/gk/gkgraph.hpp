#pragma once

#include <cstdint>
#include <vector>

#include "gk/numtheory.hpp"
#include "gk/spectra.hpp"

namespace gk::gkgraph {

/// Prime graph: vertices are the primes dividing the group order,
/// p ~ q when some element order is divisible by pq.
struct PrimeGraph {
  std::vector<std::uint64_t> vertices;  // ascending primes
  std::vector<std::vector<bool>> adj;   // symmetric, no loops

  bool adjacent(std::size_t i, std::size_t j) const { return adj[i][j]; }
  /// Index of a prime in the vertex list; DomainError if absent.
  std::size_t vertex_index(std::uint64_t p) const;
  std::uint32_t degree(std::size_t i) const;
  std::uint32_t degree_of_prime(std::uint64_t p) const;
  bool has_vertex(std::uint64_t p) const;
};

struct DegreePattern {
  std::vector<std::uint64_t> primes;    // ascending
  std::vector<std::uint32_t> degrees;  // matching positions
};

PrimeGraph graph_from_spectrum(const numtheory::FactoredInteger& order,
                               const spectra::Spectrum& spectrum);

DegreePattern degree_pattern(const PrimeGraph& g);

std::vector<std::vector<std::uint64_t>> components(const PrimeGraph& g);
bool is_component_complete(const PrimeGraph& g, const std::vector<std::uint64_t>& comp);
std::vector<std::uint64_t> isolated(const PrimeGraph& g);

/// Tuple-only equality (positional degree comparison, the default
/// notion); strict mode also compares the prime lists.
bool same_degree_tuple(const DegreePattern& a, const DegreePattern& b);
bool same_pattern_strict(const DegreePattern& a, const DegreePattern& b);

/// Per-vertex comparison of the first-principles degree against the
/// printed closed-form candidates for PSL(2, 3^n), under both readings
/// of the vertex-count parameters (halved and unhalved).
struct PrintedDegreeComparison {
  std::uint64_t prime = 0;
  std::uint32_t first_principles = 0;
  std::int64_t printed_minus_side = 0;  // n1 - 2
  std::int64_t printed_plus_side = 0;   // n2 - 2
  bool agrees = false;      // first_principles matches the side's printed value
  bool agrees_alt = false;  // same under the unhalved reading
};

struct Psl2PatternReport {
  DegreePattern pattern;
  std::uint64_t n1 = 0;      // |pi((3^n - 1)/2)|
  std::uint64_t n2 = 0;      // |pi((3^n + 1)/2)|
  std::uint64_t n1_alt = 0;  // |pi(3^n - 1)|
  std::uint64_t n2_alt = 0;  // |pi(3^n + 1)|
  std::vector<PrintedDegreeComparison> comparison;
  bool printed_matches = false;      // stated reading matches at every vertex
  bool printed_matches_alt = false;  // unhalved reading matches at every vertex
};

/// First-principles degree pattern of PSL(2, 3^n), n > 1, plus the
/// comparison against the printed degree values.
Psl2PatternReport pattern_formula_psl2_3n(std::uint32_t n);

/// First-principles degree pattern of PGL(2, 3^n), n > 1.
DegreePattern pattern_formula_pgl2_3n(std::uint32_t n);

/// Degree pattern of PSL(2, p) for primes p with (p -+ 1)/2 a power
/// of 3, p > 3.
DegreePattern pattern_formula_psl2_p(std::uint64_t p);

}  // namespace gk::gkgraph
