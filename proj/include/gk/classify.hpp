#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gk/gkgraph.hpp"
#include "gk/groups.hpp"
#include "gk/numtheory.hpp"
#include "gk/spectra.hpp"

namespace gk::classify {

enum class CaseLabel {
  A1_FrobeniusKernel3,
  A1_FrobeniusComplement3,
  A2_TwoFrobenius,
  B1_Elementary2Ext_PSL24_or_PSL28,
  B2_PSL34,
  B3_PSL2p,
  B4_PSL2_3n,
  B5_PGL2_3n,
  Unclassified,
};

std::string to_string(CaseLabel label);

struct ClassificationCase {
  CaseLabel label = CaseLabel::Unclassified;
  std::map<std::string, std::int64_t> parameters;
  std::vector<std::string> evidence;  // predicates actually verified
};

// Constructions for the solvable and extension families; each comes
// back fully enumerated.

/// GF(3^n) : <involution>, order 2 * 3^n; Frobenius with 3-group kernel.
groups::GroupTable build_infi_fro1(std::uint32_t n, std::uint64_t cap = kDefaultEnumCap);

/// GF(2^(2m)) extended by the full 3-part of its multiplicative group;
/// Frobenius with 2-group kernel and cyclic 3-group complement.
groups::GroupTable build_infi_fro2(std::uint32_t m, std::uint64_t cap = kDefaultEnumCap);

struct TwoFrobeniusConstruction {
  groups::GroupTable table;
  groups::SubgroupHandle h;  // translation subgroup, order 4^m
  groups::SubgroupHandle k;  // h extended by the scalar C3
};

/// GF(4)^m : (C3 : C2) with the scalar and Frobenius actions; a
/// 2-Frobenius chain 1 < H < K < G of order 24 * 4^(m-1).
TwoFrobeniusConstruction build_infi_2fro(std::uint32_t m, std::uint64_t cap = kDefaultEnumCap);

/// (GF(q)^2)^copies : SL(2, q) acting blockwise, q in {4, 8}.
groups::GroupTable build_infi_psl(std::uint32_t copies, std::uint32_t q,
                                  std::uint64_t cap = kDefaultEnumCap);

struct OutPglReport {
  std::uint32_t n = 0;
  std::uint32_t deg3_psl = 0;
  std::uint32_t deg3_pgl = 0;
  std::uint32_t deg3_sigma = 0;
  bool psl_isolated = false;
  bool pgl_isolated = false;
  bool sigma_not_isolated = false;

  bool all_pass() const { return psl_isolated && pgl_isolated && sigma_not_isolated; }
};

/// The field-automorphism extension of PSL(2, 3^n) gains an edge at 3
/// while PSL(2, 3^n) and PGL(2, 3^n) keep 3 isolated.
OutPglReport verify_out_pgl(std::uint32_t n, std::uint64_t cap = kDefaultEnumCap);

/// Classify an enumerated group of even order with 3 isolated in its
/// prime graph. Signature matches (order + degree tuple) are recorded
/// as such in the evidence list; an inconclusive match comes back as
/// Unclassified rather than a guess.
ClassificationCase classify_table(const groups::GroupTable& table);

enum class Evidence { enumerated, formula };

struct CatalogEntry {
  std::string family;  // SOLVABLE, PSL2_2EXT, PSL34, PSL2P, PSL2_3N, PGL2_3N
  std::int64_t parameter = 0;
  std::optional<numtheory::FactoredInteger> order;  // absent for family rows
  std::vector<std::uint64_t> primes;                // empty for solvable rows
  std::vector<std::uint32_t> degrees;
  Evidence evidence = Evidence::formula;
};

/// All degree-pattern rows: the solvable family shape, the two
/// elementary-2-extension rows, PSL(3,4), PSL(2,p) rows up to p_max,
/// and PSL/PGL(2, 3^n) rows for 2 <= n <= k_max. Rows whose group
/// order is at most enum_budget are enumerated and cross-checked
/// against the formulas.
std::vector<CatalogEntry> catalog_patterns(std::uint32_t k_max, std::uint64_t p_max,
                                           std::uint64_t enum_budget = 25000,
                                           std::uint32_t solvable_n_max = 10);

struct Collision {
  CatalogEntry a;
  CatalogEntry b;
};

struct CollisionReport {
  std::uint32_t k_max = 0;
  std::uint64_t p_max = 0;
  /// Cross-family tuple collisions hitting a PGL2_3N row with n >= 3;
  /// the recognition scan requires this list to be empty.
  std::vector<Collision> b5_violations;
  /// Cross-family tuple collisions hitting a PSL2_3N row with n >= 3.
  std::vector<Collision> b4_collisions;
  /// The expected ambiguity class at tuple (0,0,0): PSL2_3N n=2,
  /// the elementary-2-extension rows, and small PSL2P rows.
  std::vector<Collision> zero_tuple_class;
  bool expected_b4n2_b1_found = false;
  /// Tuple repeats inside one family (parameter not determined by the
  /// tuple alone); informational.
  std::vector<Collision> same_family_repeats;
  /// Collisions that involve n = 2 rows of the 3^n families only.
  std::vector<Collision> k2_informational;
};

/// Degree-tuple collision scan over the catalog. A collision is tuple
/// equality between rows of different families; repeats inside a
/// family are reported separately.
CollisionReport collision_scan(std::uint32_t k_max, std::uint64_t p_max);

enum class Verdict { pass, fail, expected_mismatch, skipped, info };

struct ReportLine {
  Verdict verdict = Verdict::pass;
  std::string id;
  std::string detail;
};

struct SuiteReport {
  std::vector<ReportLine> lines;

  std::uint32_t count(Verdict v) const;
  bool has_fail() const { return count(Verdict::fail) > 0; }
  std::string render() const;  // deterministic text, one line per check
};

/// Every enumeration-vs-formula check, construction verification,
/// Diophantine scan, the b3 prime search, and the collision scans.
/// Checks whose enumeration exceeds the cap are reported as skipped.
SuiteReport verify_suite(std::uint64_t cap = kDefaultEnumCap);

}  // namespace gk::classify
