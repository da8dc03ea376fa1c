#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "gk/common.hpp"
#include "gk/numtheory.hpp"

namespace gk::gf {

/// Immutable description of GF(p^n) with a deterministic modulus: the
/// lexicographically least monic irreducible of degree n over GF(p)
/// (coefficients compared low-degree-first).
///
/// Elements are encoded as integers in [0, q): the base-p digits of the
/// encoding are the coefficients, constant term first. Multiplication
/// runs through exp/log tables built on the least primitive element.
class FieldSpec {
 public:
  std::uint32_t p() const { return p_; }
  std::uint32_t n() const { return n_; }
  std::uint64_t q() const { return q_; }

  /// Monic modulus, length n+1, constant term first.
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }

  /// Encoding of the least primitive element of GF(q)^#.
  std::uint32_t generator() const { return generator_; }

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t neg(std::uint32_t a) const;
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t inv(std::uint32_t a) const;  // throws DomainError on 0
  std::uint32_t pow(std::uint32_t a, std::uint64_t e) const;
  std::uint32_t frobenius(std::uint32_t a) const { return pow(a, p_); }

  /// Least k >= 1 with a^k = 1; divides q - 1.
  std::uint64_t mult_order(std::uint32_t a) const;

  /// The unique element of multiplicative order 2 (equals -1); requires
  /// odd characteristic.
  std::uint32_t involution() const;

  std::vector<std::uint32_t> coeffs(std::uint32_t a) const;
  std::uint32_t from_coeffs(const std::vector<std::uint32_t>& c) const;

 private:
  friend std::shared_ptr<const FieldSpec> make_field(std::uint32_t, std::uint32_t,
                                                     std::uint64_t);
  FieldSpec() = default;

  std::uint32_t p_ = 0;
  std::uint32_t n_ = 0;
  std::uint64_t q_ = 0;
  std::vector<std::uint32_t> modulus_;
  std::uint32_t generator_ = 0;
  std::vector<std::uint32_t> exp_;  // exp_[i] = generator^i, i in [0, q-1)
  std::vector<std::uint32_t> log_;  // inverse of exp_ on nonzero encodings
  std::vector<std::pair<i128, std::uint32_t>> unit_order_factors_;  // of q-1
};

using Field = std::shared_ptr<const FieldSpec>;

/// Construct (or fetch the cached) GF(p^n). Fields are interned, so
/// element compatibility can be checked by pointer identity.
Field make_field(std::uint32_t p, std::uint32_t n, std::uint64_t cap = kDefaultFieldCap);

/// Value-semantic field element, mainly for tests and serialization;
/// group internals use raw encodings plus a Field.
struct FieldElement {
  Field field;
  std::uint32_t v = 0;

  friend bool operator==(const FieldElement& a, const FieldElement& b) {
    return a.field.get() == b.field.get() && a.v == b.v;
  }
  friend FieldElement operator+(const FieldElement& a, const FieldElement& b) {
    return {a.field, a.field->add(a.v, b.v)};
  }
  friend FieldElement operator-(const FieldElement& a, const FieldElement& b) {
    return {a.field, a.field->sub(a.v, b.v)};
  }
  friend FieldElement operator*(const FieldElement& a, const FieldElement& b) {
    return {a.field, a.field->mul(a.v, b.v)};
  }
};

FieldElement field_involution(const Field& f);

}  // namespace gk::gf
