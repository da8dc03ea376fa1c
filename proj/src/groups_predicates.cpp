#include <algorithm>
#include <numeric>
#include <random>

#include "gk/groups.hpp"

namespace gk::groups {

namespace {

std::uint32_t commutator(const FiniteGroup& g, std::uint32_t a, std::uint32_t b) {
  return g.multiply(g.multiply(g.invert(a), g.invert(b)), g.multiply(a, b));
}

bool commute(const FiniteGroup& g, std::uint32_t a, std::uint32_t b) {
  return g.multiply(a, b) == g.multiply(b, a);
}

// Derived subgroup of the subgroup S: normal closure (within S) of the
// commutators of a generating set of S.
SubgroupHandle derived_subgroup(const FiniteGroup& g, const SubgroupHandle& s) {
  SubgroupView view(g, s);
  const auto& gens = view.generators();
  std::vector<std::uint32_t> seeds;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      seeds.push_back(commutator(view, gens[i], gens[j]));
    }
  }
  SubgroupHandle local = normal_closure(view, seeds);
  SubgroupHandle out;
  out.members.reserve(local.members.size());
  for (std::uint32_t l : local.members) out.members.push_back(view.parent_index(l));
  std::sort(out.members.begin(), out.members.end());
  return out;
}

}  // namespace

SubgroupHandle derived_subgroup_bruteforce(const FiniteGroup& g, const SubgroupHandle& s) {
  std::vector<std::uint32_t> seeds;
  for (std::uint32_t a : s.members) {
    for (std::uint32_t b : s.members) {
      seeds.push_back(commutator(g, a, b));
    }
  }
  std::sort(seeds.begin(), seeds.end());
  seeds.erase(std::unique(seeds.begin(), seeds.end()), seeds.end());
  return subgroup_closure(g, seeds);
}

std::vector<SubgroupHandle> derived_series(const FiniteGroup& g) {
  std::vector<SubgroupHandle> series;
  series.push_back(whole_group(g));
  while (true) {
    SubgroupHandle next = derived_subgroup(g, series.back());
    if (next.members.size() == series.back().members.size()) break;
    series.push_back(std::move(next));
    if (series.back().members.size() == 1) break;
  }
  return series;
}

bool is_solvable(const FiniteGroup& g) {
  return derived_series(g).back().members.size() == 1;
}

bool is_cyclic(const FiniteGroup& g) {
  for (std::uint32_t i = 0; i < g.size(); ++i) {
    if (g.order_of(i) == g.size()) return true;
  }
  return false;
}

bool is_nilpotent(const FiniteGroup& g, std::uint64_t pair_cap) {
  if (g.size() > pair_cap) {
    throw CapError("is_nilpotent: group size exceeds pairwise cap " +
                   std::to_string(pair_cap));
  }
  std::vector<std::uint64_t> ord(g.size());
  for (std::uint32_t i = 0; i < g.size(); ++i) ord[i] = g.order_of(i);
  for (std::uint32_t a = 0; a < g.size(); ++a) {
    for (std::uint32_t b = a + 1; b < g.size(); ++b) {
      if (std::gcd(ord[a], ord[b]) == 1 && !commute(g, a, b)) return false;
    }
  }
  return true;
}

namespace {

// Deterministically seeded complement search: a subgroup H with
// |H| = |G|/|K| and H meeting K trivially. Randomized greedy first,
// exhaustive backtracking second.
bool find_complement(const FiniteGroup& g, const SubgroupHandle& kernel,
                     std::uint32_t target, SubgroupHandle& out) {
  std::vector<std::uint32_t> candidates;
  for (std::uint32_t i = 0; i < g.size(); ++i) {
    if (i == g.identity() || kernel.contains(i)) continue;
    if (target % g.order_of(i) == 0) candidates.push_back(i);
  }

  auto meets_kernel_trivially = [&](const SubgroupHandle& h) {
    for (std::uint32_t x : h.members) {
      if (x != g.identity() && kernel.contains(x)) return false;
    }
    return true;
  };

  // Cyclic fast path.
  for (std::uint32_t x : candidates) {
    if (g.order_of(x) != target) continue;
    SubgroupHandle h = subgroup_closure(g, {x});
    if (h.members.size() == target && meets_kernel_trivially(h)) {
      out = std::move(h);
      return true;
    }
  }

  auto extend_ok = [&](const std::vector<std::uint32_t>& gens, SubgroupHandle& h) {
    h = subgroup_closure(g, gens);
    return h.members.size() <= target && target % h.members.size() == 0 &&
           meets_kernel_trivially(h);
  };

  // Randomized greedy attempts with a fixed seed.
  std::mt19937 rng(0xC0FFEEu + g.size());
  for (int attempt = 0; attempt < 64 && !candidates.empty(); ++attempt) {
    std::vector<std::uint32_t> gens;
    SubgroupHandle h = trivial_subgroup(g);
    for (int step = 0; step < 64; ++step) {
      std::uint32_t pick = candidates[rng() % candidates.size()];
      if (h.contains(pick)) continue;
      std::vector<std::uint32_t> trial = gens;
      trial.push_back(pick);
      SubgroupHandle h2;
      if (extend_ok(trial, h2)) {
        gens = std::move(trial);
        h = std::move(h2);
        if (h.members.size() == target) {
          out = std::move(h);
          return true;
        }
      }
    }
  }

  // Exhaustive backtracking, ascending candidate order.
  std::vector<std::uint32_t> gens;
  std::function<bool(std::size_t)> rec = [&](std::size_t from) {
    SubgroupHandle h;
    if (!gens.empty()) {
      if (!extend_ok(gens, h)) return false;
      if (h.members.size() == target) {
        out = std::move(h);
        return true;
      }
    }
    for (std::size_t i = from; i < candidates.size(); ++i) {
      gens.push_back(candidates[i]);
      if (rec(i + 1)) return true;
      gens.pop_back();
    }
    return false;
  };
  return rec(0);
}

// C_G(k) <= K for every nonidentity k in K; equivalent to the Frobenius
// property when a complement exists. Used as a cross-check.
bool kernel_centralizers_inside(const FiniteGroup& g, const SubgroupHandle& kernel) {
  for (std::uint32_t k : kernel.members) {
    if (k == g.identity()) continue;
    for (std::uint32_t x = 0; x < g.size(); ++x) {
      if (kernel.contains(x)) continue;
      if (commute(g, x, k)) return false;
    }
  }
  return true;
}

}  // namespace

FrobeniusResult is_frobenius(const FiniteGroup& g, const SubgroupHandle& kernel) {
  SubgroupHandle k = kernel;
  if (!k.is_normal && !verify_normal(g, k)) {
    throw DomainError("is_frobenius: kernel is not normal");
  }
  if (k.members.size() <= 1 || k.members.size() >= g.size()) {
    throw DomainError("is_frobenius: kernel must be proper and nontrivial");
  }
  if (g.size() % k.members.size() != 0) {
    throw InconsistencyError("is_frobenius: kernel size does not divide group size");
  }
  std::uint32_t target = g.size() / std::uint32_t(k.members.size());

  FrobeniusResult res;
  SubgroupHandle h;
  if (!find_complement(g, k, target, h)) {
    res.status = FrobeniusResult::Status::no_complement_found;
    return res;
  }

  bool fixed_point_free = true;
  for (std::uint32_t x : h.members) {
    if (x == g.identity()) continue;
    std::uint32_t xi = g.invert(x);
    for (std::uint32_t kk : k.members) {
      if (kk == g.identity()) continue;
      if (g.multiply(g.multiply(x, kk), xi) == kk) {
        fixed_point_free = false;
        break;
      }
    }
    if (!fixed_point_free) break;
  }

  res.status = fixed_point_free ? FrobeniusResult::Status::frobenius
                                : FrobeniusResult::Status::not_frobenius;
  if (fixed_point_free) res.complement = std::move(h);

  check(kernel_centralizers_inside(g, k) == fixed_point_free,
        "is_frobenius: complement route and centralizer route disagree");
  return res;
}

TwoFrobeniusResult is_2frobenius(const FiniteGroup& g, const SubgroupHandle& h,
                                 const SubgroupHandle& k) {
  SubgroupHandle hh = h, kk = k;
  if (!hh.is_normal && !verify_normal(g, hh)) {
    throw DomainError("is_2frobenius: H is not normal");
  }
  if (!kk.is_normal && !verify_normal(g, kk)) {
    throw DomainError("is_2frobenius: K is not normal");
  }
  TwoFrobeniusResult res;
  // Degenerate chains are simply not 2-Frobenius chains.
  if (hh.members.size() <= 1 || hh.members.size() >= kk.members.size() ||
      kk.members.size() >= g.size()) {
    return res;
  }
  for (std::uint32_t x : hh.members) {
    if (!kk.contains(x)) return res;
  }

  SubgroupView kview(g, kk);
  SubgroupHandle h_in_k;
  h_in_k.members.reserve(hh.members.size());
  for (std::uint32_t x : hh.members) h_in_k.members.push_back(kview.local_index(x));
  std::sort(h_in_k.members.begin(), h_in_k.members.end());
  if (!verify_normal(kview, h_in_k)) return res;
  res.lower_frobenius = bool(is_frobenius(kview, h_in_k));

  QuotientTable q(g, hh);
  SubgroupHandle k_mod_h;
  {
    std::vector<std::uint32_t> cosets;
    for (std::uint32_t x : kk.members) cosets.push_back(q.coset_of(x));
    std::sort(cosets.begin(), cosets.end());
    cosets.erase(std::unique(cosets.begin(), cosets.end()), cosets.end());
    k_mod_h.members = std::move(cosets);
  }
  if (!verify_normal(q, k_mod_h)) {
    throw InconsistencyError("is_2frobenius: K/H not normal although K is");
  }
  res.upper_frobenius = bool(is_frobenius(q, k_mod_h));

  res.value = res.lower_frobenius && res.upper_frobenius;
  if (!res.value) return res;

  if (g.size() % 2 == 0) {
    // Even-order consequences; violations would contradict the
    // structure just established.
    std::uint64_t gk_order = g.size() / kk.members.size();
    std::uint64_t kh_order = kk.members.size() / hh.members.size();
    QuotientTable gq(g, kk);
    res.quotients_cyclic = is_cyclic(gq) && [&] {
      SubgroupView kmh(q, k_mod_h);
      return is_cyclic(kmh);
    }();
    res.orders_coprime = std::gcd(gk_order, kh_order) == 1;
    // K/H cyclic of order c has automorphism group of order phi(c).
    std::uint64_t phi = kh_order;
    for (const auto& [pr, e] : numtheory::factorize(i128(kh_order)).factors) {
      phi -= phi / std::uint64_t(pr);
    }
    res.aut_divides = phi % gk_order == 0;
    SubgroupView hview(g, hh);
    res.kernel_nilpotent = is_nilpotent(hview);
    res.group_solvable = is_solvable(g);
    check(res.quotients_cyclic, "2-Frobenius consequence failed: quotients cyclic");
    check(res.orders_coprime, "2-Frobenius consequence failed: coprime quotients");
    check(res.aut_divides, "2-Frobenius consequence failed: |G/K| divides |Aut(K/H)|");
    check(res.kernel_nilpotent, "2-Frobenius consequence failed: H nilpotent");
    check(res.group_solvable, "2-Frobenius consequence failed: G solvable");
  }
  return res;
}

bool is_ctheta(const FiniteGroup& g, std::uint64_t pair_cap) {
  bool div3 = false;
  std::vector<std::uint64_t> ord(g.size());
  std::uint64_t count3 = 0;
  for (std::uint32_t i = 0; i < g.size(); ++i) {
    ord[i] = g.order_of(i);
    if (ord[i] % 3 == 0) div3 = true;
    if (ord[i] == 3) ++count3;
  }
  if (!div3) throw DomainError("is_ctheta: group order not divisible by 3");

  // Order route: no element order is divisible by 3 and a second prime.
  bool by_orders = true;
  for (std::uint64_t o : ord) {
    if (o % 3 == 0) {
      std::uint64_t v = o;
      while (v % 3 == 0) v /= 3;
      if (v != 1) {
        by_orders = false;
        break;
      }
    }
  }

  // Centralizer route, cross-checked when the pair sweep stays within
  // the work budget.
  if (g.size() <= pair_cap && count3 * g.size() <= 8'000'000) {
    bool by_centralizers = true;
    for (std::uint32_t x = 0; x < g.size() && by_centralizers; ++x) {
      if (ord[x] != 3) continue;
      for (std::uint32_t y = 0; y < g.size(); ++y) {
        if (!commute(g, x, y)) continue;
        std::uint64_t v = ord[y];
        while (v % 3 == 0) v /= 3;
        if (v != 1) {
          by_centralizers = false;
          break;
        }
      }
    }
    check(by_centralizers == by_orders,
          "is_ctheta: order route and centralizer route disagree");
  }
  return by_orders;
}

SubgroupHandle sylow_subgroup(const FiniteGroup& g, std::uint64_t p) {
  std::uint64_t target = 1;
  std::uint64_t n = g.size();
  while (n % p == 0) {
    n /= p;
    target *= p;
  }
  std::vector<std::uint32_t> p_elements;
  for (std::uint32_t i = 0; i < g.size(); ++i) {
    std::uint64_t o = g.order_of(i);
    std::uint64_t v = o;
    while (v % p == 0) v /= p;
    if (v == 1 && o > 1) p_elements.push_back(i);
  }
  SubgroupHandle best = trivial_subgroup(g);
  bool grew = true;
  while (best.members.size() < target && grew) {
    grew = false;
    for (std::uint32_t x : p_elements) {
      if (best.contains(x)) continue;
      std::vector<std::uint32_t> seeds = best.members;
      seeds.push_back(x);
      SubgroupHandle trial = subgroup_closure(g, seeds);
      std::uint64_t sz = trial.members.size();
      std::uint64_t v = sz;
      while (v % p == 0) v /= p;
      if (v == 1 && sz <= target) {
        best = std::move(trial);
        grew = true;
        if (best.members.size() == target) break;
      }
    }
  }
  if (best.members.size() != target) {
    throw InconsistencyError("sylow_subgroup: greedy growth stalled");
  }
  return best;
}

bool sylow3_contains_centralizers(const FiniteGroup& g) {
  if (g.size() % 3 != 0) throw DomainError("group order not divisible by 3");
  SubgroupHandle m = sylow_subgroup(g, 3);
  for (std::uint32_t x : m.members) {
    if (x == g.identity()) continue;
    for (std::uint32_t y = 0; y < g.size(); ++y) {
      if (commute(g, x, y) && !m.contains(y)) return false;
    }
  }
  return true;
}

bool ComplementStructureReport::all_pass() const {
  bool two_ok = !has_two_sylow ||
                (two_sylow_unique_involution &&
                 (two_sylow_kind == TwoSylowKind::cyclic ||
                  two_sylow_kind == TwoSylowKind::generalized_quaternion));
  return all_pq_cyclic && odd_sylows_cyclic && two_ok;
}

ComplementStructureReport complement_structure_check(const FiniteGroup& h) {
  ComplementStructureReport rep;

  std::vector<std::uint32_t> prime_order;
  for (std::uint32_t i = 0; i < h.size(); ++i) {
    std::uint64_t o = h.order_of(i);
    if (o > 1 && numtheory::is_prime(i128(o))) prime_order.push_back(i);
  }
  std::vector<std::vector<std::uint32_t>> seen;
  for (std::size_t a = 0; a < prime_order.size(); ++a) {
    for (std::size_t b = a; b < prime_order.size(); ++b) {
      std::uint64_t pa = h.order_of(prime_order[a]);
      std::uint64_t pb = h.order_of(prime_order[b]);
      SubgroupHandle s = subgroup_closure(h, {prime_order[a], prime_order[b]});
      if (s.members.size() != pa * pb) continue;
      if (std::find(seen.begin(), seen.end(), s.members) != seen.end()) continue;
      seen.push_back(s.members);
      SubgroupView v(h, s);
      bool cyc = is_cyclic(v);
      rep.pq_subgroups.push_back({pa * pb, cyc});
      if (!cyc) rep.all_pq_cyclic = false;
    }
  }

  for (const auto& [pr, e] : numtheory::factorize(i128(h.size())).factors) {
    std::uint64_t p = std::uint64_t(pr);
    SubgroupHandle s = sylow_subgroup(h, p);
    SubgroupView v(h, s);
    SylowFact fact;
    fact.prime = p;
    fact.order = s.members.size();
    fact.cyclic = is_cyclic(v);
    if (p == 2) {
      std::uint32_t invol = 0;
      for (std::uint32_t i = 0; i < v.size(); ++i) {
        if (v.order_of(i) == 2) ++invol;
      }
      fact.involutions = invol;
      rep.has_two_sylow = true;
      rep.two_sylow = fact;
      rep.two_sylow_unique_involution = invol == 1;
      if (invol != 1) {
        rep.two_sylow_kind = ComplementStructureReport::TwoSylowKind::other;
      } else if (fact.cyclic) {
        rep.two_sylow_kind = ComplementStructureReport::TwoSylowKind::cyclic;
      } else {
        // Unique involution and nonabelian forces generalized quaternion.
        bool abelian = true;
        for (std::uint32_t a = 0; a < v.size() && abelian; ++a) {
          for (std::uint32_t b = a + 1; b < v.size(); ++b) {
            if (!commute(v, a, b)) {
              abelian = false;
              break;
            }
          }
        }
        rep.two_sylow_kind = abelian
                                 ? ComplementStructureReport::TwoSylowKind::other
                                 : ComplementStructureReport::TwoSylowKind::generalized_quaternion;
      }
    } else {
      rep.odd_sylows.push_back(fact);
      if (!fact.cyclic) rep.odd_sylows_cyclic = false;
    }
  }
  return rep;
}

}  // namespace gk::groups
