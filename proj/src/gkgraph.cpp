#include "gk/gkgraph.hpp"

#include <algorithm>
#include <set>

namespace gk::gkgraph {

std::size_t PrimeGraph::vertex_index(std::uint64_t p) const {
  auto it = std::lower_bound(vertices.begin(), vertices.end(), p);
  if (it == vertices.end() || *it != p) {
    throw DomainError("prime " + std::to_string(p) + " is not a vertex");
  }
  return std::size_t(it - vertices.begin());
}

bool PrimeGraph::has_vertex(std::uint64_t p) const {
  return std::binary_search(vertices.begin(), vertices.end(), p);
}

std::uint32_t PrimeGraph::degree(std::size_t i) const {
  std::uint32_t d = 0;
  for (bool b : adj[i]) d += b;
  return d;
}

std::uint32_t PrimeGraph::degree_of_prime(std::uint64_t p) const {
  return degree(vertex_index(p));
}

namespace {

std::vector<std::uint64_t> prime_list_u64(const numtheory::FactoredInteger& n) {
  std::vector<std::uint64_t> out;
  for (const auto& [p, e] : n.factors) out.push_back(std::uint64_t(p));
  return out;
}

PrimeGraph graph_from_orders(const std::vector<std::uint64_t>& vertices,
                             const std::vector<std::uint64_t>& orders) {
  PrimeGraph g;
  g.vertices = vertices;
  g.adj.assign(vertices.size(), std::vector<bool>(vertices.size(), false));
  for (std::uint64_t m : orders) {
    for (std::size_t i = 0; i < vertices.size(); ++i) {
      if (m % vertices[i] != 0) continue;
      for (std::size_t j = i + 1; j < vertices.size(); ++j) {
        if (m % (vertices[i] * vertices[j]) == 0) {
          g.adj[i][j] = g.adj[j][i] = true;
        }
      }
    }
  }
  return g;
}

}  // namespace

PrimeGraph graph_from_spectrum(const numtheory::FactoredInteger& order,
                               const spectra::Spectrum& spectrum) {
  for (std::uint64_t m : spectrum.all_orders) {
    if (m == 0 || i128(order.value) % i128(m) != 0) {
      throw InconsistencyError(
          "graph_from_spectrum: spectrum member " + std::to_string(m) +
          " does not divide the group order");
    }
  }
  std::vector<std::uint64_t> vertices = prime_list_u64(order);
  PrimeGraph from_all = graph_from_orders(vertices, spectrum.all_orders);
  PrimeGraph from_maxima = graph_from_orders(vertices, spectrum.maxima);
  // Divisor closure makes the two routes coincide.
  check(from_all.adj == from_maxima.adj,
        "graph_from_spectrum: full-order route and maxima route disagree");
  return from_all;
}

DegreePattern degree_pattern(const PrimeGraph& g) {
  DegreePattern d;
  d.primes = g.vertices;
  d.degrees.reserve(g.vertices.size());
  for (std::size_t i = 0; i < g.vertices.size(); ++i) d.degrees.push_back(g.degree(i));
  std::uint64_t handshake = 0;
  for (std::uint32_t deg : d.degrees) handshake += deg;
  check(handshake % 2 == 0, "degree_pattern: odd degree sum");
  return d;
}

std::vector<std::vector<std::uint64_t>> components(const PrimeGraph& g) {
  std::vector<std::vector<std::uint64_t>> out;
  std::vector<bool> seen(g.vertices.size(), false);
  for (std::size_t s = 0; s < g.vertices.size(); ++s) {
    if (seen[s]) continue;
    std::vector<std::size_t> stack = {s};
    std::vector<std::uint64_t> comp;
    seen[s] = true;
    while (!stack.empty()) {
      std::size_t v = stack.back();
      stack.pop_back();
      comp.push_back(g.vertices[v]);
      for (std::size_t w = 0; w < g.vertices.size(); ++w) {
        if (g.adj[v][w] && !seen[w]) {
          seen[w] = true;
          stack.push_back(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

bool is_component_complete(const PrimeGraph& g, const std::vector<std::uint64_t>& comp) {
  for (std::size_t a = 0; a < comp.size(); ++a) {
    for (std::size_t b = a + 1; b < comp.size(); ++b) {
      if (!g.adjacent(g.vertex_index(comp[a]), g.vertex_index(comp[b]))) return false;
    }
  }
  return true;
}

std::vector<std::uint64_t> isolated(const PrimeGraph& g) {
  std::vector<std::uint64_t> out;
  for (std::size_t i = 0; i < g.vertices.size(); ++i) {
    if (g.degree(i) == 0) out.push_back(g.vertices[i]);
  }
  return out;
}

bool same_degree_tuple(const DegreePattern& a, const DegreePattern& b) {
  return a.degrees == b.degrees;
}

bool same_pattern_strict(const DegreePattern& a, const DegreePattern& b) {
  return a.degrees == b.degrees && a.primes == b.primes;
}

namespace {

// Two disjoint cliques on the odd-part primes of the torus orders, with
// the defining prime isolated. Shared by all three formula builders.
DegreePattern two_clique_pattern(std::uint64_t char_prime,
                                 const std::vector<std::uint64_t>& minus_side,
                                 const std::vector<std::uint64_t>& plus_side) {
  DegreePattern out;
  std::set<std::uint64_t> all(minus_side.begin(), minus_side.end());
  all.insert(plus_side.begin(), plus_side.end());
  all.insert(char_prime);
  out.primes.assign(all.begin(), all.end());
  out.degrees.assign(out.primes.size(), 0);
  auto in = [](const std::vector<std::uint64_t>& v, std::uint64_t p) {
    return std::find(v.begin(), v.end(), p) != v.end();
  };
  for (std::size_t i = 0; i < out.primes.size(); ++i) {
    std::uint64_t p = out.primes[i];
    if (p == char_prime) continue;
    std::uint32_t deg = 0;
    if (in(minus_side, p)) deg += std::uint32_t(minus_side.size()) - 1;
    if (in(plus_side, p)) deg += std::uint32_t(plus_side.size()) - 1;
    out.degrees[i] = deg;
  }
  return out;
}

}  // namespace

Psl2PatternReport pattern_formula_psl2_3n(std::uint32_t n) {
  if (n < 2) throw DomainError("pattern_formula_psl2_3n requires n > 1");
  i128 q = numtheory::checked_pow(3, n);
  auto minus = numtheory::factorize((q - 1) / 2);
  auto plus = numtheory::factorize((q + 1) / 2);
  std::vector<std::uint64_t> ms = prime_list_u64(minus);
  std::vector<std::uint64_t> ps = prime_list_u64(plus);

  Psl2PatternReport rep;
  rep.pattern = two_clique_pattern(3, ms, ps);
  rep.n1 = ms.size();
  rep.n2 = ps.size();
  rep.n1_alt = numtheory::factorize(q - 1).factors.size();
  rep.n2_alt = numtheory::factorize(q + 1).factors.size();

  rep.printed_matches = true;
  rep.printed_matches_alt = true;
  for (std::size_t i = 0; i < rep.pattern.primes.size(); ++i) {
    std::uint64_t p = rep.pattern.primes[i];
    if (p == 3) continue;
    PrintedDegreeComparison c;
    c.prime = p;
    c.first_principles = rep.pattern.degrees[i];
    c.printed_minus_side = std::int64_t(rep.n1) - 2;
    c.printed_plus_side = std::int64_t(rep.n2) - 2;
    bool on_minus = std::find(ms.begin(), ms.end(), p) != ms.end();
    std::int64_t printed = on_minus ? c.printed_minus_side : c.printed_plus_side;
    std::int64_t printed_alt =
        (on_minus ? std::int64_t(rep.n1_alt) : std::int64_t(rep.n2_alt)) - 2;
    c.agrees = std::int64_t(c.first_principles) == printed;
    c.agrees_alt = std::int64_t(c.first_principles) == printed_alt;
    rep.printed_matches &= c.agrees;
    rep.printed_matches_alt &= c.agrees_alt;
    rep.comparison.push_back(c);
  }
  return rep;
}

DegreePattern pattern_formula_pgl2_3n(std::uint32_t n) {
  if (n < 2) throw DomainError("pattern_formula_pgl2_3n requires n > 1");
  i128 q = numtheory::checked_pow(3, n);
  std::vector<std::uint64_t> ms = prime_list_u64(numtheory::factorize(q - 1));
  std::vector<std::uint64_t> ps = prime_list_u64(numtheory::factorize(q + 1));
  return two_clique_pattern(3, ms, ps);
}

DegreePattern pattern_formula_psl2_p(std::uint64_t p) {
  if (p <= 3 || !numtheory::is_prime(i128(p))) {
    throw DomainError("pattern_formula_psl2_p requires a prime p > 3");
  }
  auto half_minus = numtheory::power_of(i128(p - 1) / 2, 3);
  auto half_plus = numtheory::power_of(i128(p + 1) / 2, 3);
  bool minus_is_power = half_minus.has_value() && *half_minus >= 1;
  bool plus_is_power = half_plus.has_value() && *half_plus >= 1;
  if (!minus_is_power && !plus_is_power) {
    throw DomainError("pattern_formula_psl2_p: neither (p-1)/2 nor (p+1)/2 is a power of 3");
  }
  // The non-3-power half carries the clique; 3 and p stay isolated.
  std::uint64_t clique_half = minus_is_power ? (p + 1) / 2 : (p - 1) / 2;
  std::vector<std::uint64_t> clique =
      prime_list_u64(numtheory::factorize(i128(clique_half)));
  DegreePattern out = two_clique_pattern(3, clique, {});
  out.primes.push_back(p);
  out.degrees.push_back(0);
  check(std::is_sorted(out.primes.begin(), out.primes.end()),
        "pattern_formula_psl2_p: p is not the largest prime");
  return out;
}

}  // namespace gk::gkgraph
