#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include "gk/common.hpp"
#include "gk/gf.hpp"

namespace gk::groups {

/// Flat canonical element data. Small-buffer vector of field encodings
/// (plus small counters like a Frobenius power); meaning is supplied by
/// the owning Ambient.
class Payload {
 public:
  Payload() = default;
  explicit Payload(std::size_t n);
  Payload(const Payload& o);
  Payload(Payload&& o) noexcept;
  Payload& operator=(const Payload& o);
  Payload& operator=(Payload&& o) noexcept;
  ~Payload();

  std::size_t size() const { return len_; }
  const std::uint32_t* data() const { return len_ > kInline ? heap_ : inline_.data(); }
  std::uint32_t* data() { return len_ > kInline ? heap_ : inline_.data(); }
  std::uint32_t operator[](std::size_t i) const { return data()[i]; }
  std::uint32_t& operator[](std::size_t i) { return data()[i]; }

  bool operator==(const Payload& o) const;
  bool operator<(const Payload& o) const;  // lexicographic
  std::uint64_t hash() const;

 private:
  static constexpr std::size_t kInline = 12;
  std::array<std::uint32_t, kInline> inline_{};
  std::uint32_t* heap_ = nullptr;
  std::uint32_t len_ = 0;
};

enum class ElemKind : std::uint8_t {
  projective_matrix,
  affine_map,
  matrix_field_aut,
  semidirect_pair,
};

/// Multiplicative subgroup of GF(q)^# used to canonicalize projective
/// matrices, with fast paths for the common shapes.
struct ScalarSet {
  enum class Mode : std::uint8_t { trivial, plus_minus, full, listed };
  Mode mode = Mode::trivial;
  std::vector<std::uint32_t> members;  // sorted encodings, always contains 1

  static ScalarSet trivial();
  static ScalarSet plus_minus(const gf::Field& f);
  static ScalarSet full(const gf::Field& f);
  static ScalarSet listed(const gf::Field& f, std::vector<std::uint32_t> members);

  bool operator==(const ScalarSet& o) const { return members == o.members; }
};

/// Lexicographically least representative (row-major entry order,
/// entries compared by canonical integer encoding) of the scalar orbit
/// of a nonzero d x d matrix.
Payload canonicalize_matrix(const gf::Field& f, std::uint32_t d, const Payload& raw,
                            const ScalarSet& scalars);

class Ambient;
using AmbientPtr = std::shared_ptr<const Ambient>;

/// Shared structural description of all elements of one group: the
/// element kind, dimensions, field, canonicalization rule, and the
/// multiplication law. Elements of the same group share one Ambient.
class Ambient {
 public:
  virtual ~Ambient() = default;
  virtual ElemKind kind() const = 0;
  virtual std::size_t payload_size() const = 0;
  virtual Payload identity() const = 0;
  virtual Payload multiply(const Payload& a, const Payload& b) const = 0;
  virtual Payload invert(const Payload& a) const = 0;
  virtual bool compatible(const Ambient& other) const = 0;
  virtual std::string describe() const = 0;
  virtual std::string format_element(const Payload& a) const = 0;
};

struct GroupElement {
  AmbientPtr ambient;
  Payload payload;

  friend bool operator==(const GroupElement& a, const GroupElement& b) {
    return a.ambient->compatible(*b.ambient) && a.payload == b.payload;
  }
};

GroupElement mul(const GroupElement& a, const GroupElement& b);
GroupElement inv(const GroupElement& a);

/// Least k >= 1 with g^k = identity, by iterated multiplication with
/// canonical-form comparison.
std::uint64_t element_order(const GroupElement& g);

/// Re-canonicalized copy; identity on already canonical elements.
GroupElement canonicalize(const GroupElement& g);

// Element factories. Matrix entries are row-major field encodings.
GroupElement projective_matrix(const gf::Field& f, std::uint32_t d,
                               const std::vector<std::uint32_t>& entries,
                               const ScalarSet& scalars);
GroupElement affine_map(const gf::Field& f, std::uint32_t dim,
                        const std::vector<std::uint32_t>& matrix,
                        const std::vector<std::uint32_t>& translation);
GroupElement matrix_field_aut(const gf::Field& f, std::uint32_t d,
                              const std::vector<std::uint32_t>& entries,
                              std::uint32_t frobenius_power, const ScalarSet& scalars);

class SemidirectAction {
 public:
  virtual ~SemidirectAction() = default;
  virtual Payload apply(const Payload& actor, const Payload& normal) const = 0;
  virtual std::string name() const = 0;
};

GroupElement semidirect_pair(const GroupElement& normal, const GroupElement& actor,
                             std::shared_ptr<const SemidirectAction> action);

/// Direct product convenience: semidirect pair with the trivial action.
GroupElement direct_product(const GroupElement& a, const GroupElement& b);

// Accessors for semidirect payload halves (diagnostics and subgroup
// extraction in constructions).
Payload semidirect_normal_part(const Ambient& ambient, const Payload& p);
Payload semidirect_actor_part(const Ambient& ambient, const Payload& p);

/// Index-based view of a finite group: the common surface the
/// structural predicates run on. Implemented by enumerated tables,
/// subgroup views, and quotient (coset) tables.
class FiniteGroup {
 public:
  virtual ~FiniteGroup() = default;
  virtual std::uint32_t size() const = 0;
  virtual std::uint32_t identity() const = 0;
  virtual std::uint32_t multiply(std::uint32_t a, std::uint32_t b) const = 0;
  virtual std::uint32_t invert(std::uint32_t a) const = 0;
  virtual const std::vector<std::uint32_t>& generators() const = 0;
  virtual std::uint64_t order_of(std::uint32_t a) const;
  virtual std::string element_label(std::uint32_t a) const;
};

/// Fully enumerated group: canonical elements in deterministic
/// discovery order, index 0 the identity.
class GroupTable final : public FiniteGroup {
 public:
  static GroupTable generate(const std::vector<GroupElement>& generators,
                             std::uint64_t cap = kDefaultEnumCap);

  std::uint32_t size() const override { return std::uint32_t(elems_.size()); }
  std::uint32_t identity() const override { return 0; }
  std::uint32_t multiply(std::uint32_t a, std::uint32_t b) const override;
  std::uint32_t invert(std::uint32_t a) const override;
  const std::vector<std::uint32_t>& generators() const override { return gens_; }
  std::uint64_t order_of(std::uint32_t a) const override;
  std::string element_label(std::uint32_t a) const override;

  const AmbientPtr& ambient() const { return ambient_; }
  const Payload& payload(std::uint32_t i) const { return elems_[i]; }
  GroupElement element(std::uint32_t i) const { return {ambient_, elems_[i]}; }
  /// Index of a canonical payload; throws DomainError if absent.
  std::uint32_t index_of(const Payload& p) const;
  bool contains(const Payload& p) const;
  /// All element orders (cached after first call).
  const std::vector<std::uint64_t>& orders() const;

 private:
  GroupTable() = default;
  std::uint32_t insert(Payload p);
  std::int64_t find(const Payload& p) const;

  AmbientPtr ambient_;
  std::vector<Payload> elems_;
  std::unordered_map<std::uint64_t, std::uint32_t> index_;
  std::vector<std::uint32_t> overflow_;  // indices whose hash collided
  std::vector<std::uint32_t> gens_;
  mutable std::vector<std::uint64_t> orders_;
};

struct SubgroupHandle {
  std::vector<std::uint32_t> members;  // sorted parent indices
  bool is_normal = false;              // set only after verification

  std::uint32_t order() const { return std::uint32_t(members.size()); }
  bool contains(std::uint32_t idx) const;
};

/// Subgroup of a parent group presented as a FiniteGroup of its own.
/// Keeps a pointer to the parent; the parent must outlive the view.
class SubgroupView final : public FiniteGroup {
 public:
  SubgroupView(const FiniteGroup& parent, const SubgroupHandle& handle);

  std::uint32_t size() const override { return std::uint32_t(members_.size()); }
  std::uint32_t identity() const override;
  std::uint32_t multiply(std::uint32_t a, std::uint32_t b) const override;
  std::uint32_t invert(std::uint32_t a) const override;
  const std::vector<std::uint32_t>& generators() const override { return gens_; }
  std::uint64_t order_of(std::uint32_t a) const override;
  std::string element_label(std::uint32_t a) const override;

  std::uint32_t parent_index(std::uint32_t local) const { return members_[local]; }
  std::uint32_t local_index(std::uint32_t parent_idx) const;

 private:
  const FiniteGroup* parent_;
  std::vector<std::uint32_t> members_;
  std::unordered_map<std::uint32_t, std::uint32_t> local_;
  std::vector<std::uint32_t> gens_;
};

/// G/H as an explicit coset table (H must be verified normal).
class QuotientTable final : public FiniteGroup {
 public:
  QuotientTable(const FiniteGroup& parent, const SubgroupHandle& normal,
                std::uint64_t cap = kDefaultEnumCap);

  std::uint32_t size() const override { return n_; }
  std::uint32_t identity() const override { return 0; }
  std::uint32_t multiply(std::uint32_t a, std::uint32_t b) const override;
  std::uint32_t invert(std::uint32_t a) const override;
  const std::vector<std::uint32_t>& generators() const override { return gens_; }
  std::string element_label(std::uint32_t a) const override;

  std::uint32_t coset_of(std::uint32_t parent_idx) const { return coset_of_[parent_idx]; }

 private:
  std::uint32_t n_ = 0;
  std::vector<std::uint32_t> mult_;
  std::vector<std::uint32_t> inv_;
  std::vector<std::uint32_t> rep_;       // least parent index per coset
  std::vector<std::uint32_t> coset_of_;  // parent index -> coset
  std::vector<std::uint32_t> gens_;
};

// Subgroup machinery.
SubgroupHandle subgroup_closure(const FiniteGroup& g, std::vector<std::uint32_t> seeds);
SubgroupHandle normal_closure(const FiniteGroup& g, const std::vector<std::uint32_t>& seeds);
bool verify_normal(const FiniteGroup& g, SubgroupHandle& h);
std::vector<std::uint32_t> small_generating_set(const FiniteGroup& g,
                                                const std::vector<std::uint32_t>& members);
SubgroupHandle whole_group(const FiniteGroup& g);
SubgroupHandle trivial_subgroup(const FiniteGroup& g);

// Structural predicates.
std::vector<SubgroupHandle> derived_series(const FiniteGroup& g);
bool is_solvable(const FiniteGroup& g);
bool is_cyclic(const FiniteGroup& g);

/// Finite nilpotency via the coprime-commuting characterization: every
/// pair of elements of coprime order commutes.
bool is_nilpotent(const FiniteGroup& g, std::uint64_t pair_cap = kDefaultPairwiseCap);

struct FrobeniusResult {
  enum class Status { frobenius, not_frobenius, no_complement_found };
  Status status = Status::not_frobenius;
  SubgroupHandle complement;  // filled when status == frobenius

  explicit operator bool() const { return status == Status::frobenius; }
};

/// Frobenius test for a verified normal kernel: finds a complement
/// (deterministically seeded search) and checks that it acts without
/// nonidentity fixed points on the kernel.
FrobeniusResult is_frobenius(const FiniteGroup& g, const SubgroupHandle& kernel);

struct TwoFrobeniusResult {
  bool value = false;
  bool lower_frobenius = false;   // K Frobenius with kernel H
  bool upper_frobenius = false;   // G/H Frobenius with kernel K/H
  bool quotients_cyclic = false;  // G/K and K/H cyclic
  bool orders_coprime = false;    // gcd(|G/K|, |K/H|) = 1
  bool aut_divides = false;       // |G/K| divides |Aut(K/H)|
  bool kernel_nilpotent = false;  // H nilpotent
  bool group_solvable = false;

  explicit operator bool() const { return value; }
};

/// 2-Frobenius test for a chain 1 < H < K < G with H, K normal in G.
/// Degenerate chains return false; non-normal inputs raise DomainError.
TwoFrobeniusResult is_2frobenius(const FiniteGroup& g, const SubgroupHandle& h,
                                 const SubgroupHandle& k);

/// Centralizers of order-3 elements are 3-groups. Checked through the
/// element-order route always, and cross-checked against the direct
/// centralizer sweep when the group is small enough.
bool is_ctheta(const FiniteGroup& g, std::uint64_t pair_cap = kDefaultPairwiseCap);

/// Sylow p-subgroup by greedy closure growth over p-power-order elements.
SubgroupHandle sylow_subgroup(const FiniteGroup& g, std::uint64_t p);

/// A Sylow 3-subgroup contains the centralizer of each of its
/// nonidentity elements.
bool sylow3_contains_centralizers(const FiniteGroup& g);

struct PqSubgroupFact {
  std::uint64_t order = 0;
  bool cyclic = false;
};

struct SylowFact {
  std::uint64_t prime = 0;
  std::uint64_t order = 0;
  bool cyclic = false;
  std::uint32_t involutions = 0;  // meaningful for prime == 2
};

struct ComplementStructureReport {
  std::vector<PqSubgroupFact> pq_subgroups;
  bool all_pq_cyclic = true;
  std::vector<SylowFact> odd_sylows;
  bool odd_sylows_cyclic = true;
  bool has_two_sylow = false;
  SylowFact two_sylow;
  bool two_sylow_unique_involution = true;  // vacuous without a 2-Sylow
  enum class TwoSylowKind { none, cyclic, generalized_quaternion, other };
  TwoSylowKind two_sylow_kind = TwoSylowKind::none;

  bool all_pass() const;
};

/// Structure facts for a Frobenius complement: subgroups of order pq
/// cyclic, odd Sylows cyclic, 2-Sylow with a unique involution (cyclic
/// or generalized quaternion, separated by the abelian test).
ComplementStructureReport complement_structure_check(const FiniteGroup& h);

// Group constructors.
GroupTable psl2(std::uint64_t q, std::uint64_t cap = kDefaultEnumCap);
GroupTable pgl2(std::uint64_t q, std::uint64_t cap = kDefaultEnumCap);
GroupTable psl3_4(std::uint64_t cap = kDefaultEnumCap);
/// Extension of PSL(2, p^n) by the field automorphism, q = p^n, n > 1.
GroupTable psigma_l2(std::uint64_t q, std::uint64_t cap = kDefaultEnumCap);

/// Standard generating elements of psl2(q) (transvections over a basis
/// of the field), shared by the constructors above.
std::vector<GroupElement> psl2_generators(const gf::Field& f, const ScalarSet& scalars);

/// (p, n) with q = p^n, p prime; DomainError if q is not a prime power.
std::pair<std::uint32_t, std::uint32_t> prime_power(std::uint64_t q);

// Test-oracle variants (intentionally naive).
SubgroupHandle derived_subgroup_bruteforce(const FiniteGroup& g,
                                           const SubgroupHandle& s);

}  // namespace gk::groups
