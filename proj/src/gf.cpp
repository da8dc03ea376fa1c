#include "gk/gf.hpp"

#include <algorithm>
#include <map>
#include <mutex>

namespace gk::gf {

namespace {

// Dense polynomial arithmetic over GF(p), coefficients low-degree-first,
// used only while constructing a field.
using Poly = std::vector<std::uint32_t>;

Poly trim(Poly a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
  return a;
}

Poly poly_mul(const Poly& a, const Poly& b, std::uint32_t p) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      r[i + j] = std::uint32_t((r[i + j] + std::uint64_t(a[i]) * b[j]) % p);
    }
  }
  return trim(r);
}

// Remainder of a by monic b.
Poly poly_mod(Poly a, const Poly& b, std::uint32_t p) {
  a = trim(a);
  while (a.size() >= b.size()) {
    std::uint32_t c = a.back();
    std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) {
      std::uint64_t t = std::uint64_t(c) * b[i] % p;
      std::uint32_t& dst = a[shift + i];
      dst = std::uint32_t((dst + p - t) % p);
    }
    a = trim(a);
  }
  return a;
}

std::uint32_t poly_eval(const Poly& f, std::uint32_t x, std::uint32_t p) {
  std::uint64_t acc = 0;
  for (std::size_t i = f.size(); i-- > 0;) acc = (acc * x + f[i]) % p;
  return std::uint32_t(acc);
}

// Exhaustive check at desk scale: no roots and no monic factor of
// degree <= deg/2.
bool is_irreducible(const Poly& f, std::uint32_t p) {
  std::uint32_t deg = std::uint32_t(f.size() - 1);
  for (std::uint32_t x = 0; x < p; ++x) {
    if (poly_eval(f, x, p) == 0) return false;
  }
  for (std::uint32_t d = 2; 2 * d <= deg; ++d) {
    // Odometer over monic degree-d candidates, low coefficient fastest.
    Poly g(d + 1, 0);
    g[d] = 1;
    while (true) {
      if (poly_mod(f, g, p).empty()) return false;
      std::uint32_t i = 0;
      while (i < d && ++g[i] == p) g[i++] = 0;
      if (i == d) break;
    }
  }
  return true;
}

// Lexicographically least monic irreducible of degree n, coefficients
// compared low-degree-first.
Poly least_irreducible(std::uint32_t p, std::uint32_t n) {
  if (n == 1) {
    return {0, 1};  // x itself
  }
  std::vector<std::uint32_t> c(n, 0);
  while (true) {
    Poly f(c.begin(), c.end());
    f.push_back(1);
    if (is_irreducible(f, p)) return f;
    std::uint32_t i = n;
    while (i-- > 0) {
      if (++c[i] < p) break;
      c[i] = 0;
      if (i == 0) throw InconsistencyError("no irreducible polynomial found");
    }
  }
}

std::uint32_t encode(const Poly& f, std::uint32_t p) {
  std::uint64_t acc = 0;
  for (std::size_t i = f.size(); i-- > 0;) acc = acc * p + f[i];
  return std::uint32_t(acc);
}

Poly decode(std::uint64_t v, std::uint32_t p, std::uint32_t n) {
  Poly out(n, 0);
  for (std::uint32_t i = 0; i < n; ++i) {
    out[i] = std::uint32_t(v % p);
    v /= p;
  }
  return out;
}

}  // namespace

std::uint32_t FieldSpec::add(std::uint32_t a, std::uint32_t b) const {
  if (p_ == 2) return a ^ b;
  std::uint32_t out = 0, mul = 1;
  for (std::uint32_t i = 0; i < n_; ++i) {
    out += mul * ((a % p_ + b % p_) % p_);
    a /= p_;
    b /= p_;
    mul *= p_;
  }
  return out;
}

std::uint32_t FieldSpec::neg(std::uint32_t a) const {
  if (p_ == 2) return a;
  std::uint32_t out = 0, mul = 1;
  for (std::uint32_t i = 0; i < n_; ++i) {
    std::uint32_t d = a % p_;
    out += mul * (d == 0 ? 0 : p_ - d);
    a /= p_;
    mul *= p_;
  }
  return out;
}

std::uint32_t FieldSpec::sub(std::uint32_t a, std::uint32_t b) const {
  return add(a, neg(b));
}

std::uint32_t FieldSpec::mul(std::uint32_t a, std::uint32_t b) const {
  if (a == 0 || b == 0) return 0;
  std::uint64_t e = std::uint64_t(log_[a]) + log_[b];
  if (e >= q_ - 1) e -= q_ - 1;
  return exp_[e];
}

std::uint32_t FieldSpec::inv(std::uint32_t a) const {
  if (a == 0) throw DomainError("field inverse of zero");
  std::uint64_t e = (q_ - 1 - log_[a]) % (q_ - 1);
  return exp_[e];
}

std::uint32_t FieldSpec::pow(std::uint32_t a, std::uint64_t e) const {
  if (a == 0) return e == 0 ? 1 : 0;
  std::uint64_t k = (u128(log_[a]) * (e % (q_ - 1))) % (q_ - 1);
  return exp_[k];
}

std::uint64_t FieldSpec::mult_order(std::uint32_t a) const {
  if (a == 0) throw DomainError("multiplicative order of zero");
  std::uint64_t ord = q_ - 1;
  for (const auto& [r, e] : unit_order_factors_) {
    for (std::uint32_t i = 0; i < e; ++i) {
      if (ord % std::uint64_t(r) == 0 && pow(a, ord / std::uint64_t(r)) == 1) {
        ord /= std::uint64_t(r);
      } else {
        break;
      }
    }
  }
  return ord;
}

std::uint32_t FieldSpec::involution() const {
  if (p_ == 2) {
    throw DomainError("no multiplicative involution in characteristic 2");
  }
  return neg(1);
}

std::vector<std::uint32_t> FieldSpec::coeffs(std::uint32_t a) const {
  return decode(a, p_, n_);
}

std::uint32_t FieldSpec::from_coeffs(const std::vector<std::uint32_t>& c) const {
  if (c.size() != n_) throw DomainError("coefficient vector has wrong length");
  std::uint64_t acc = 0;
  for (std::size_t i = c.size(); i-- > 0;) {
    if (c[i] >= p_) throw DomainError("coefficient out of range");
    acc = acc * p_ + c[i];
  }
  return std::uint32_t(acc);
}

Field make_field(std::uint32_t p, std::uint32_t n, std::uint64_t cap) {
  if (!numtheory::is_prime(p)) {
    throw DomainError("make_field: p = " + std::to_string(p) + " is not prime");
  }
  if (n < 1) throw DomainError("make_field: degree must be >= 1");
  u128 q = 1;
  for (std::uint32_t i = 0; i < n; ++i) {
    q *= p;
    if (q > cap) {
      throw CapError("make_field: field size exceeds cap " + std::to_string(cap));
    }
  }

  static std::mutex mu;
  static std::map<std::pair<std::uint32_t, std::uint32_t>, Field> registry;
  std::lock_guard<std::mutex> lock(mu);
  auto it = registry.find({p, n});
  if (it != registry.end()) return it->second;

  auto spec = std::shared_ptr<FieldSpec>(new FieldSpec());
  spec->p_ = p;
  spec->n_ = n;
  spec->q_ = std::uint64_t(q);
  Poly mod = least_irreducible(p, n);
  spec->modulus_ = mod;
  spec->unit_order_factors_ = numtheory::factorize(i128(spec->q_) - 1).factors;

  // Least primitive element, then exp/log tables from it. Primitivity is
  // decided by polynomial powering before any table exists.
  auto poly_pow_mod = [&](Poly base, std::uint64_t e) {
    Poly r = {1};
    while (e > 0) {
      if (e & 1) r = poly_mod(poly_mul(r, base, p), mod, p);
      base = poly_mod(poly_mul(base, base, p), mod, p);
      e >>= 1;
    }
    return r;
  };
  std::uint64_t unit = spec->q_ - 1;
  std::uint32_t gen = 0;
  for (std::uint32_t cand = 2; cand < spec->q_; ++cand) {
    Poly cp = decode(cand, p, n);
    bool primitive = true;
    for (const auto& [r, e] : spec->unit_order_factors_) {
      Poly t = poly_pow_mod(cp, unit / std::uint64_t(r));
      if (encode(t, p) == 1) {
        primitive = false;
        break;
      }
    }
    if (primitive) {
      gen = cand;
      break;
    }
  }
  if (gen == 0 && spec->q_ == 2) gen = 1;
  if (gen == 0) throw InconsistencyError("no primitive element found");
  spec->generator_ = gen;

  spec->exp_.assign(unit, 0);
  spec->log_.assign(spec->q_, 0);
  Poly acc = {1};
  Poly gp = decode(gen, p, n);
  for (std::uint64_t i = 0; i < unit; ++i) {
    std::uint32_t enc = encode(acc, p);
    spec->exp_[i] = enc;
    spec->log_[enc] = std::uint32_t(i);
    acc = poly_mod(poly_mul(acc, gp, p), mod, p);
  }
  if (encode(acc, p) != 1) {
    throw InconsistencyError("generator order mismatch while building tables");
  }

  Field out = spec;
  registry.emplace(std::make_pair(p, n), out);
  return out;
}

FieldElement field_involution(const Field& f) { return {f, f->involution()}; }

}  // namespace gk::gf
