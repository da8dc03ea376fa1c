#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <numeric>

#include "gk/groups.hpp"

using namespace gk;
using namespace gk::groups;

namespace {

// Cyclic group of order k as the subgroup of GF(p)^# generated by a
// 1x1 matrix.
GroupTable cyclic_group(std::uint32_t p, std::uint32_t gen) {
  gf::Field f = gf::make_field(p, 1);
  return GroupTable::generate({projective_matrix(f, 1, {gen}, ScalarSet::trivial())});
}

// GF(9) : C2 with the involution acting by multiplication; order 18,
// structure S3 at n = 1 scale.
GroupTable fro_gf9_c2() {
  gf::Field f = gf::make_field(3, 2);
  return GroupTable::generate({
      affine_map(f, 1, {f->involution()}, {0}),
      affine_map(f, 1, {1}, {1}),
      affine_map(f, 1, {1}, {3}),
  });
}

GroupTable s3_group() {
  gf::Field f = gf::make_field(3, 1);
  return GroupTable::generate({
      affine_map(f, 1, {2}, {0}),
      affine_map(f, 1, {1}, {1}),
  });
}

// GF(4) : C3 (scalar action), structure A4.
GroupTable a4_group() {
  gf::Field f = gf::make_field(2, 2);
  return GroupTable::generate({
      affine_map(f, 1, {f->generator()}, {0}),
      affine_map(f, 1, {1}, {1}),
      affine_map(f, 1, {1}, {2}),
  });
}

// AGL(1, 9) = GF(9) : C8.
GroupTable agl1_9() {
  gf::Field f = gf::make_field(3, 2);
  return GroupTable::generate({
      affine_map(f, 1, {f->generator()}, {0}),
      affine_map(f, 1, {1}, {1}),
      affine_map(f, 1, {1}, {3}),
  });
}

// V4 : S3, structure S4: GF(4) additive, multiplicative C3, Frobenius C2.
class SemilinearScalar final : public SemidirectAction {
 public:
  explicit SemilinearScalar(gf::Field f, std::uint32_t dim) : f_(std::move(f)), m_(dim) {}
  Payload apply(const Payload& actor, const Payload& normal) const override {
    // actor = [s, frob]; normal = affine [I | v].
    Payload out = normal;
    for (std::uint32_t i = 0; i < m_; ++i) {
      std::uint32_t x = normal[std::size_t(m_) * m_ + i];
      for (std::uint32_t k = 0; k < actor[1]; ++k) x = f_->frobenius(x);
      out[std::size_t(m_) * m_ + i] = f_->mul(actor[0], x);
    }
    return out;
  }
  std::string name() const override { return "semilinear-scalar"; }

 private:
  gf::Field f_;
  std::uint32_t m_;
};

GroupTable s4_group() {
  gf::Field f = gf::make_field(2, 2);
  auto action = std::make_shared<SemilinearScalar>(f, 1);
  GroupElement v1 = affine_map(f, 1, {1}, {1});
  GroupElement v2 = affine_map(f, 1, {1}, {2});
  GroupElement v0 = affine_map(f, 1, {1}, {0});
  GroupElement rot = matrix_field_aut(f, 1, {f->generator()}, 0, ScalarSet::trivial());
  GroupElement flip = matrix_field_aut(f, 1, {1}, 1, ScalarSet::trivial());
  GroupElement ida = matrix_field_aut(f, 1, {1}, 0, ScalarSet::trivial());
  return GroupTable::generate({
      semidirect_pair(v1, ida, action),
      semidirect_pair(v2, ida, action),
      semidirect_pair(v0, rot, action),
      semidirect_pair(v0, flip, action),
  });
}

SubgroupHandle members_with_order(const GroupTable& t, std::uint64_t o) {
  SubgroupHandle h;
  for (std::uint32_t i = 0; i < t.size(); ++i) {
    if (t.order_of(i) == o || t.order_of(i) == 1) h.members.push_back(i);
  }
  return h;
}

}  // namespace

TEST_CASE("canonicalize modulo scalar sets") {
  gf::Field f7 = gf::make_field(7, 1);
  ScalarSet pm = ScalarSet::plus_minus(f7);
  GroupElement id = projective_matrix(f7, 2, {1, 0, 0, 1}, pm);
  GroupElement neg_id = projective_matrix(f7, 2, {6, 0, 0, 6}, pm);
  CHECK(id == neg_id);

  gf::Field f4 = gf::make_field(2, 2);
  ScalarSet full = ScalarSet::full(f4);
  GroupElement a = projective_matrix(f4, 3, {2, 0, 0, 0, 1, 0, 0, 0, 1}, full);
  GroupElement b = projective_matrix(f4, 3, {3, 0, 0, 0, 2, 0, 0, 0, 2}, full);
  GroupElement c = projective_matrix(f4, 3, {1, 0, 0, 0, 3, 0, 0, 0, 3}, full);
  CHECK(a == b);
  CHECK(b == c);

  // Fast paths agree with the generic listed-orbit minimum.
  std::vector<std::uint32_t> everything;
  for (std::uint32_t x = 1; x < f4->q(); ++x) everything.push_back(x);
  ScalarSet listed = ScalarSet::listed(f4, everything);
  for (std::uint32_t trial = 0; trial < 200; ++trial) {
    std::vector<std::uint32_t> m(4);
    std::uint32_t seed = trial * 2654435761u;
    bool zero = true;
    for (auto& e : m) {
      seed = seed * 1664525u + 1013904223u;
      e = seed % 4;
      if (e) zero = false;
    }
    if (zero) continue;
    CHECK(projective_matrix(f4, 2, m, full).payload ==
          projective_matrix(f4, 2, m, listed).payload);
  }

  CHECK_THROWS_AS(projective_matrix(f7, 2, {0, 0, 0, 0}, pm), DomainError);
  // Idempotence.
  GroupElement g = projective_matrix(f7, 2, {3, 1, 0, 2}, pm);
  CHECK(canonicalize(g) == g);
}

TEST_CASE("generate basics") {
  gf::Field f7 = gf::make_field(7, 1);
  GroupTable triv = GroupTable::generate(
      {projective_matrix(f7, 2, {1, 0, 0, 1}, ScalarSet::plus_minus(f7))}, 10);
  CHECK(triv.size() == 1);

  CHECK(psl2(4).size() == 60);
  // Closure of the two standard transvections over GF(7) modulo {+-1}.
  GroupTable g168 = GroupTable::generate({
      projective_matrix(f7, 2, {1, 1, 0, 1}, ScalarSet::plus_minus(f7)),
      projective_matrix(f7, 2, {1, 0, 1, 1}, ScalarSet::plus_minus(f7)),
  });
  CHECK(g168.size() == 168);

  CHECK_THROWS_AS(psl2(7, 100), CapError);

  gf::Field f3 = gf::make_field(3, 1);
  CHECK_THROWS_AS(GroupTable::generate({
                      projective_matrix(f7, 2, {1, 1, 0, 1}, ScalarSet::plus_minus(f7)),
                      projective_matrix(f3, 2, {1, 1, 0, 1}, ScalarSet::plus_minus(f3)),
                  }),
                  DomainError);
}

TEST_CASE("group orders match closed forms") {
  CHECK(psl2(5).size() == 60);
  CHECK(psl2(7).size() == 168);
  CHECK(psl2(9).size() == 360);
  CHECK(psl2(8).size() == 504);
  CHECK(pgl2(5).size() == 120);
  CHECK(pgl2(7).size() == 336);
  CHECK(pgl2(9).size() == 720);
  CHECK(psl3_4().size() == 20160);
  CHECK(psigma_l2(9).size() == 720);
}

TEST_CASE("element orders") {
  gf::Field f27 = gf::make_field(3, 3);
  GroupElement t = projective_matrix(f27, 2, {1, 1, 0, 1}, ScalarSet::plus_minus(f27));
  CHECK(element_order(t) == 3);

  gf::Field f9 = gf::make_field(3, 2);
  GroupElement d = projective_matrix(f9, 2, {f9->generator(), 0, 0, 1}, ScalarSet::full(f9));
  CHECK(element_order(d) == 8);

  GroupTable g = psl2(7);
  CHECK(g.order_of(g.identity()) == 1);
  // Lagrange: every element order divides the group order.
  for (std::uint32_t i = 0; i < g.size(); ++i) {
    CHECK(g.size() % g.order_of(i) == 0);
  }
}

TEST_CASE("normal closure") {
  GroupTable s3 = s3_group();
  REQUIRE(s3.size() == 6);
  SubgroupHandle triv = normal_closure(s3, {s3.identity()});
  CHECK(triv.members.size() == 1);

  // Seeded with a 3-cycle: the alternating subgroup of order 3.
  std::uint32_t three = 0;
  for (std::uint32_t i = 0; i < s3.size(); ++i) {
    if (s3.order_of(i) == 3) three = i;
  }
  CHECK(normal_closure(s3, {three}).members.size() == 3);

  GroupTable g = psl2(5);
  for (std::uint32_t i : {1u, 7u, 33u}) {
    CHECK(normal_closure(g, {i}).members.size() == g.size());
  }
}

TEST_CASE("derived series and solvability") {
  GroupTable c6 = cyclic_group(7, 3);
  REQUIRE(c6.size() == 6);
  auto series = derived_series(c6);
  CHECK(series.size() == 2);
  CHECK(series.back().members.size() == 1);
  CHECK(is_solvable(c6));

  GroupTable s4 = s4_group();
  REQUIRE(s4.size() == 24);
  auto s4series = derived_series(s4);
  REQUIRE(s4series.size() == 4);
  CHECK(s4series[0].members.size() == 24);
  CHECK(s4series[1].members.size() == 12);
  CHECK(s4series[2].members.size() == 4);
  CHECK(s4series[3].members.size() == 1);
  CHECK(is_solvable(s4));

  GroupTable simple = psl2(4);
  auto pseries = derived_series(simple);
  CHECK(pseries.size() == 1);
  CHECK(pseries.back().members.size() == simple.size());
  CHECK_FALSE(is_solvable(simple));

  // Generator-commutator route agrees with the full pairwise sweep.
  for (const GroupTable* t : {&s4, &c6}) {
    SubgroupHandle whole = whole_group(*t);
    SubgroupHandle fast = derived_series(*t)[1];
    SubgroupHandle slow = derived_subgroup_bruteforce(*t, whole);
    CHECK(fast.members == slow.members);
  }
}

TEST_CASE("nilpotency") {
  GroupTable p_group = GroupTable::generate({
      affine_map(gf::make_field(3, 2), 1, {1}, {1}),
      affine_map(gf::make_field(3, 2), 1, {1}, {3}),
  });
  REQUIRE(p_group.size() == 9);
  CHECK(is_nilpotent(p_group));

  CHECK_FALSE(is_nilpotent(s3_group()));
  CHECK(is_nilpotent(cyclic_group(7, 3)));
  CHECK_THROWS_AS(is_nilpotent(psl2(5), 10), CapError);
}

TEST_CASE("is_frobenius") {
  GroupTable a4 = a4_group();
  REQUIRE(a4.size() == 12);
  SubgroupHandle v4 = members_with_order(a4, 2);
  REQUIRE(v4.members.size() == 4);
  REQUIRE(verify_normal(a4, v4));
  FrobeniusResult r = is_frobenius(a4, v4);
  CHECK(bool(r));
  CHECK(r.complement.members.size() == 3);
  // Kernel congruence |K| = 1 mod |H| and nilpotent kernel.
  CHECK(v4.members.size() % r.complement.members.size() == 1);
  SubgroupView kview(a4, v4);
  CHECK(is_nilpotent(kview));

  GroupTable s4 = s4_group();
  SubgroupHandle v4s = members_with_order(s4, 2);
  // Keep only the double transpositions: the normal V4 inside S4.
  SubgroupHandle norm;
  for (std::uint32_t i : v4s.members) {
    SubgroupHandle cl = normal_closure(s4, {i});
    if (cl.members.size() == 4) {
      norm = cl;
      break;
    }
  }
  REQUIRE(norm.members.size() == 4);
  REQUIRE(verify_normal(s4, norm));
  CHECK_FALSE(bool(is_frobenius(s4, norm)));

  GroupTable f18 = fro_gf9_c2();
  REQUIRE(f18.size() == 18);
  SubgroupHandle k9 = members_with_order(f18, 3);
  REQUIRE(k9.members.size() == 9);
  REQUIRE(verify_normal(f18, k9));
  FrobeniusResult r18 = is_frobenius(f18, k9);
  CHECK(bool(r18));
  CHECK(r18.complement.members.size() == 2);

  SubgroupHandle not_normal;
  not_normal.members = {s4.identity(), s4.generators()[3]};
  CHECK_THROWS_AS(is_frobenius(s4, not_normal), DomainError);
}

TEST_CASE("is_2frobenius") {
  GroupTable s4 = s4_group();
  SubgroupHandle h;
  for (std::uint32_t i = 0; i < s4.size(); ++i) {
    SubgroupHandle cl = normal_closure(s4, {i});
    if (cl.members.size() == 4) h = cl;
  }
  REQUIRE(h.members.size() == 4);
  SubgroupHandle k;
  for (std::uint32_t i = 0; i < s4.size(); ++i) {
    if (s4.order_of(i) == 3) {
      k = normal_closure(s4, {i});
      break;
    }
  }
  REQUIRE(k.members.size() == 12);
  TwoFrobeniusResult res = is_2frobenius(s4, h, k);
  CHECK(bool(res));
  CHECK(res.quotients_cyclic);
  CHECK(res.orders_coprime);
  CHECK(res.kernel_nilpotent);
  CHECK(res.group_solvable);

  // A4 admits no qualifying chain.
  GroupTable a4 = a4_group();
  std::vector<SubgroupHandle> normals;
  for (std::uint32_t i = 0; i < a4.size(); ++i) {
    SubgroupHandle cl = normal_closure(a4, {i});
    bool seen = false;
    for (const auto& n : normals) {
      if (n.members == cl.members) seen = true;
    }
    if (!seen) normals.push_back(cl);
  }
  for (const auto& hh : normals) {
    for (const auto& kk : normals) {
      if (hh.members.size() >= kk.members.size()) continue;
      CHECK_FALSE(bool(is_2frobenius(a4, hh, kk)));
    }
  }

  // Direct product C3 x S3 with a padded trivial H is not a chain.
  gf::Field f4 = gf::make_field(2, 2);
  GroupTable prod = GroupTable::generate({
      direct_product(projective_matrix(f4, 1, {f4->generator()}, ScalarSet::trivial()),
                     s3_group().element(0)),
      direct_product(projective_matrix(f4, 1, {1}, ScalarSet::trivial()),
                     s3_group().element(s3_group().generators()[0])),
      direct_product(projective_matrix(f4, 1, {1}, ScalarSet::trivial()),
                     s3_group().element(s3_group().generators()[1])),
  });
  REQUIRE(prod.size() == 18);
  SubgroupHandle trivial_h = trivial_subgroup(prod);
  SubgroupHandle some_k = normal_closure(prod, {prod.generators()[0]});
  CHECK_FALSE(bool(is_2frobenius(prod, trivial_h, some_k)));
}

TEST_CASE("is_ctheta") {
  CHECK(is_ctheta(psl2(27)));
  CHECK_FALSE(is_ctheta(psigma_l2(9)));
  CHECK_FALSE(is_ctheta(cyclic_group(7, 3)));  // C6
  CHECK_THROWS_AS(is_ctheta(cyclic_group(7, 6)), DomainError);  // C2
}

TEST_CASE("3CC property matches isolated-3 groups") {
  CHECK(sylow3_contains_centralizers(psl2(9)));
  CHECK(sylow3_contains_centralizers(a4_group()));
  CHECK_FALSE(sylow3_contains_centralizers(cyclic_group(7, 3)));
}

TEST_CASE("complement structure of constructed Frobenius complements") {
  GroupTable a4 = a4_group();
  SubgroupHandle v4 = members_with_order(a4, 2);
  verify_normal(a4, v4);
  FrobeniusResult r = is_frobenius(a4, v4);
  REQUIRE(bool(r));
  SubgroupView c3(a4, r.complement);
  ComplementStructureReport rep = complement_structure_check(c3);
  CHECK(rep.all_pass());
  CHECK_FALSE(rep.has_two_sylow);

  GroupTable f18 = fro_gf9_c2();
  SubgroupHandle k9 = members_with_order(f18, 3);
  verify_normal(f18, k9);
  FrobeniusResult r2 = is_frobenius(f18, k9);
  REQUIRE(bool(r2));
  SubgroupView c2(f18, r2.complement);
  ComplementStructureReport rep2 = complement_structure_check(c2);
  CHECK(rep2.all_pass());
  CHECK(rep2.two_sylow_kind == ComplementStructureReport::TwoSylowKind::cyclic);

  GroupTable agl = agl1_9();
  REQUIRE(agl.size() == 72);
  SubgroupHandle k = members_with_order(agl, 3);
  REQUIRE(k.members.size() == 9);
  verify_normal(agl, k);
  FrobeniusResult r3 = is_frobenius(agl, k);
  REQUIRE(bool(r3));
  CHECK(r3.complement.members.size() == 8);
  SubgroupView c8(agl, r3.complement);
  ComplementStructureReport rep3 = complement_structure_check(c8);
  CHECK(rep3.all_pass());
  CHECK(rep3.two_sylow_kind == ComplementStructureReport::TwoSylowKind::cyclic);
  CHECK(rep3.two_sylow.order == 8);
}

TEST_CASE("quotients") {
  GroupTable s4 = s4_group();
  SubgroupHandle v4;
  for (std::uint32_t i = 0; i < s4.size(); ++i) {
    SubgroupHandle cl = normal_closure(s4, {i});
    if (cl.members.size() == 4) v4 = cl;
  }
  QuotientTable q(s4, v4);
  CHECK(q.size() == 6);
  CHECK_FALSE(is_cyclic(q));  // S3
  CHECK(is_solvable(q));
}

TEST_CASE("sylow subgroups") {
  GroupTable g = psl2(9);
  SubgroupHandle s3 = sylow_subgroup(g, 3);
  CHECK(s3.members.size() == 9);
  SubgroupHandle s2 = sylow_subgroup(g, 2);
  CHECK(s2.members.size() == 8);
  SubgroupHandle s5 = sylow_subgroup(g, 5);
  CHECK(s5.members.size() == 5);
}
