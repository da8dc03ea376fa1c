#include "gk/groups.hpp"

namespace gk::groups {

std::pair<std::uint32_t, std::uint32_t> prime_power(std::uint64_t q) {
  if (q < 2) throw DomainError("prime power expected, got " + std::to_string(q));
  numtheory::FactoredInteger f = numtheory::factorize(i128(q));
  if (f.factors.size() != 1) {
    throw DomainError(std::to_string(q) + " is not a prime power");
  }
  return {std::uint32_t(f.factors[0].first), f.factors[0].second};
}

std::vector<GroupElement> psl2_generators(const gf::Field& f, const ScalarSet& scalars) {
  // Upper and lower transvections over the power basis of the least
  // primitive element; for prime fields this is the classic pair.
  std::vector<GroupElement> gens;
  std::uint32_t x = 1;
  for (std::uint32_t i = 0; i < f->n(); ++i) {
    gens.push_back(projective_matrix(f, 2, {1, x, 0, 1}, scalars));
    gens.push_back(projective_matrix(f, 2, {1, 0, x, 1}, scalars));
    x = f->mul(x, f->generator());
  }
  return gens;
}

GroupTable psl2(std::uint64_t q, std::uint64_t cap) {
  auto [p, n] = prime_power(q);
  gf::Field f = gf::make_field(p, n);
  return GroupTable::generate(psl2_generators(f, ScalarSet::plus_minus(f)), cap);
}

GroupTable pgl2(std::uint64_t q, std::uint64_t cap) {
  auto [p, n] = prime_power(q);
  gf::Field f = gf::make_field(p, n);
  ScalarSet scalars = ScalarSet::full(f);
  std::vector<GroupElement> gens = psl2_generators(f, scalars);
  gens.push_back(projective_matrix(f, 2, {f->generator(), 0, 0, 1}, scalars));
  return GroupTable::generate(gens, cap);
}

GroupTable psl3_4(std::uint64_t cap) {
  gf::Field f = gf::make_field(2, 2);
  ScalarSet scalars = ScalarSet::full(f);
  std::vector<GroupElement> gens;
  for (std::uint32_t i = 0; i < 3; ++i) {
    for (std::uint32_t j = 0; j < 3; ++j) {
      if (i == j) continue;
      for (std::uint32_t x : {1u, f->generator()}) {
        std::vector<std::uint32_t> m = {1, 0, 0, 0, 1, 0, 0, 0, 1};
        m[i * 3 + j] = x;
        gens.push_back(projective_matrix(f, 3, m, scalars));
      }
    }
  }
  return GroupTable::generate(gens, cap);
}

GroupTable psigma_l2(std::uint64_t q, std::uint64_t cap) {
  auto [p, n] = prime_power(q);
  if (n < 2) {
    throw DomainError("psigma_l2 needs a proper extension field, got degree 1");
  }
  gf::Field f = gf::make_field(p, n);
  ScalarSet scalars = ScalarSet::plus_minus(f);
  std::vector<GroupElement> gens;
  std::uint32_t x = 1;
  for (std::uint32_t i = 0; i < n; ++i) {
    gens.push_back(matrix_field_aut(f, 2, {1, x, 0, 1}, 0, scalars));
    gens.push_back(matrix_field_aut(f, 2, {1, 0, x, 1}, 0, scalars));
    x = f->mul(x, f->generator());
  }
  gens.push_back(matrix_field_aut(f, 2, {1, 0, 0, 1}, 1, scalars));
  return GroupTable::generate(gens, cap);
}

}  // namespace gk::groups
