#include <algorithm>
#include <cstring>
#include <sstream>

#include "gk/groups.hpp"

namespace gk::groups {

// ---------------------------------------------------------------- Payload

Payload::Payload(std::size_t n) : len_(std::uint32_t(n)) {
  if (n > kInline) heap_ = new std::uint32_t[n]();
}

Payload::Payload(const Payload& o) : inline_(o.inline_), len_(o.len_) {
  if (len_ > kInline) {
    heap_ = new std::uint32_t[len_];
    std::memcpy(heap_, o.heap_, len_ * sizeof(std::uint32_t));
  }
}

Payload::Payload(Payload&& o) noexcept : inline_(o.inline_), heap_(o.heap_), len_(o.len_) {
  o.heap_ = nullptr;
  o.len_ = 0;
}

Payload& Payload::operator=(const Payload& o) {
  if (this == &o) return *this;
  Payload tmp(o);
  *this = std::move(tmp);
  return *this;
}

Payload& Payload::operator=(Payload&& o) noexcept {
  if (this == &o) return *this;
  delete[] heap_;
  inline_ = o.inline_;
  heap_ = o.heap_;
  len_ = o.len_;
  o.heap_ = nullptr;
  o.len_ = 0;
  return *this;
}

Payload::~Payload() { delete[] heap_; }

bool Payload::operator==(const Payload& o) const {
  if (len_ != o.len_) return false;
  return std::memcmp(data(), o.data(), len_ * sizeof(std::uint32_t)) == 0;
}

bool Payload::operator<(const Payload& o) const {
  return std::lexicographical_compare(data(), data() + len_, o.data(), o.data() + o.len_);
}

std::uint64_t Payload::hash() const {
  std::uint64_t h = 1469598103934665603ull;
  auto mix = [&h](std::uint32_t v) {
    h ^= v;
    h *= 1099511628211ull;
  };
  mix(len_);
  const std::uint32_t* d = data();
  for (std::uint32_t i = 0; i < len_; ++i) mix(d[i]);
  return h;
}

// -------------------------------------------------------------- ScalarSet

ScalarSet ScalarSet::trivial() {
  ScalarSet s;
  s.mode = Mode::trivial;
  s.members = {1};
  return s;
}

ScalarSet ScalarSet::plus_minus(const gf::Field& f) {
  ScalarSet s;
  if (f->p() == 2) {
    s.mode = Mode::trivial;
    s.members = {1};
    return s;
  }
  s.mode = Mode::plus_minus;
  s.members = {1, f->involution()};
  std::sort(s.members.begin(), s.members.end());
  return s;
}

ScalarSet ScalarSet::full(const gf::Field& f) {
  ScalarSet s;
  s.mode = Mode::full;
  s.members.reserve(f->q() - 1);
  for (std::uint32_t x = 1; x < f->q(); ++x) s.members.push_back(x);
  return s;
}

ScalarSet ScalarSet::listed(const gf::Field& f, std::vector<std::uint32_t> members) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  if (members.empty() || members[0] == 0) {
    throw DomainError("scalar set must be a set of nonzero field elements");
  }
  if (!std::binary_search(members.begin(), members.end(), 1u)) {
    throw DomainError("scalar set must contain 1");
  }
  for (std::uint32_t a : members) {
    for (std::uint32_t b : members) {
      if (!std::binary_search(members.begin(), members.end(), f->mul(a, b))) {
        throw DomainError("scalar set must be closed under multiplication");
      }
    }
  }
  ScalarSet s;
  s.mode = Mode::listed;
  s.members = std::move(members);
  return s;
}

Payload canonicalize_matrix(const gf::Field& f, std::uint32_t d, const Payload& raw,
                            const ScalarSet& scalars) {
  const std::uint32_t nn = d * d;
  std::size_t first = nn;
  for (std::size_t i = 0; i < nn; ++i) {
    if (raw[i] != 0) {
      first = i;
      break;
    }
  }
  if (first == nn) throw DomainError("cannot canonicalize the zero matrix");

  switch (scalars.mode) {
    case ScalarSet::Mode::trivial:
      return raw;
    case ScalarSet::Mode::plus_minus: {
      Payload neg(raw.size());
      for (std::size_t i = 0; i < raw.size(); ++i) neg[i] = f->neg(raw[i]);
      return neg < raw ? neg : raw;
    }
    case ScalarSet::Mode::full: {
      // The least orbit representative has its first nonzero entry
      // normalized to 1.
      std::uint32_t s = f->inv(raw[first]);
      Payload out(raw.size());
      for (std::size_t i = 0; i < raw.size(); ++i) out[i] = f->mul(s, raw[i]);
      return out;
    }
    case ScalarSet::Mode::listed: {
      Payload best = raw;
      bool have = false;
      Payload cur(raw.size());
      for (std::uint32_t s : scalars.members) {
        for (std::size_t i = 0; i < raw.size(); ++i) cur[i] = f->mul(s, raw[i]);
        if (!have || cur < best) {
          best = cur;
          have = true;
        }
      }
      return best;
    }
  }
  throw InconsistencyError("unreachable scalar mode");
}

// --------------------------------------------------------- matrix helpers

namespace {

void mat_mul(const gf::Field& f, std::uint32_t d, const std::uint32_t* a,
             const std::uint32_t* b, std::uint32_t* out) {
  for (std::uint32_t i = 0; i < d; ++i) {
    for (std::uint32_t j = 0; j < d; ++j) {
      std::uint32_t acc = 0;
      for (std::uint32_t k = 0; k < d; ++k) {
        acc = f->add(acc, f->mul(a[i * d + k], b[k * d + j]));
      }
      out[i * d + j] = acc;
    }
  }
}

// Gauss-Jordan inverse; throws DomainError on singular input.
void mat_inv(const gf::Field& f, std::uint32_t d, const std::uint32_t* a,
             std::uint32_t* out) {
  std::vector<std::uint32_t> m(a, a + std::size_t(d) * d);
  for (std::uint32_t i = 0; i < d; ++i) {
    for (std::uint32_t j = 0; j < d; ++j) out[i * d + j] = (i == j) ? 1 : 0;
  }
  for (std::uint32_t col = 0; col < d; ++col) {
    std::uint32_t pivot = col;
    while (pivot < d && m[pivot * d + col] == 0) ++pivot;
    if (pivot == d) throw DomainError("singular matrix");
    if (pivot != col) {
      for (std::uint32_t j = 0; j < d; ++j) {
        std::swap(m[pivot * d + j], m[col * d + j]);
        std::swap(out[pivot * d + j], out[col * d + j]);
      }
    }
    std::uint32_t s = f->inv(m[col * d + col]);
    for (std::uint32_t j = 0; j < d; ++j) {
      m[col * d + j] = f->mul(s, m[col * d + j]);
      out[col * d + j] = f->mul(s, out[col * d + j]);
    }
    for (std::uint32_t r = 0; r < d; ++r) {
      if (r == col || m[r * d + col] == 0) continue;
      std::uint32_t c = m[r * d + col];
      for (std::uint32_t j = 0; j < d; ++j) {
        m[r * d + j] = f->sub(m[r * d + j], f->mul(c, m[col * d + j]));
        out[r * d + j] = f->sub(out[r * d + j], f->mul(c, out[col * d + j]));
      }
    }
  }
}

std::string format_matrix(const gf::Field& f, std::uint32_t d, const std::uint32_t* a) {
  std::ostringstream os;
  os << "[";
  for (std::uint32_t i = 0; i < d; ++i) {
    if (i > 0) os << "; ";
    for (std::uint32_t j = 0; j < d; ++j) {
      if (j > 0) os << ",";
      os << a[i * d + j];
    }
  }
  os << "]";
  (void)f;
  return os.str();
}

}  // namespace

// --------------------------------------------------------------- ambients

namespace {

class PMatAmbient final : public Ambient {
 public:
  PMatAmbient(gf::Field f, std::uint32_t d, ScalarSet scalars)
      : f_(std::move(f)), d_(d), scalars_(std::move(scalars)) {}

  ElemKind kind() const override { return ElemKind::projective_matrix; }
  std::size_t payload_size() const override { return std::size_t(d_) * d_; }

  Payload identity() const override {
    Payload p(payload_size());
    for (std::uint32_t i = 0; i < d_; ++i) p[i * d_ + i] = 1;
    return p;
  }

  Payload multiply(const Payload& a, const Payload& b) const override {
    Payload r(payload_size());
    mat_mul(f_, d_, a.data(), b.data(), r.data());
    return canonicalize_matrix(f_, d_, r, scalars_);
  }

  Payload invert(const Payload& a) const override {
    Payload r(payload_size());
    mat_inv(f_, d_, a.data(), r.data());
    return canonicalize_matrix(f_, d_, r, scalars_);
  }

  bool compatible(const Ambient& other) const override {
    auto* o = dynamic_cast<const PMatAmbient*>(&other);
    return o && o->f_.get() == f_.get() && o->d_ == d_ && o->scalars_ == scalars_;
  }

  std::string describe() const override {
    return "projective " + std::to_string(d_) + "x" + std::to_string(d_) + " over GF(" +
           std::to_string(f_->q()) + "), " + std::to_string(scalars_.members.size()) +
           " scalars";
  }

  std::string format_element(const Payload& a) const override {
    return format_matrix(f_, d_, a.data());
  }

  const gf::Field& field() const { return f_; }
  std::uint32_t dim() const { return d_; }
  const ScalarSet& scalars() const { return scalars_; }

 private:
  gf::Field f_;
  std::uint32_t d_;
  ScalarSet scalars_;
};

class AffineAmbient final : public Ambient {
 public:
  AffineAmbient(gf::Field f, std::uint32_t dim) : f_(std::move(f)), m_(dim) {}

  ElemKind kind() const override { return ElemKind::affine_map; }
  std::size_t payload_size() const override { return std::size_t(m_) * m_ + m_; }

  Payload identity() const override {
    Payload p(payload_size());
    for (std::uint32_t i = 0; i < m_; ++i) p[i * m_ + i] = 1;
    return p;
  }

  // x -> A x + v; product applies the right factor first.
  Payload multiply(const Payload& a, const Payload& b) const override {
    Payload r(payload_size());
    mat_mul(f_, m_, a.data(), b.data(), r.data());
    const std::uint32_t* av = a.data() + std::size_t(m_) * m_;
    const std::uint32_t* bv = b.data() + std::size_t(m_) * m_;
    std::uint32_t* rv = r.data() + std::size_t(m_) * m_;
    for (std::uint32_t i = 0; i < m_; ++i) {
      std::uint32_t acc = av[i];
      for (std::uint32_t k = 0; k < m_; ++k) {
        acc = f_->add(acc, f_->mul(a[i * m_ + k], bv[k]));
      }
      rv[i] = acc;
    }
    return r;
  }

  Payload invert(const Payload& a) const override {
    Payload r(payload_size());
    mat_inv(f_, m_, a.data(), r.data());
    const std::uint32_t* av = a.data() + std::size_t(m_) * m_;
    std::uint32_t* rv = r.data() + std::size_t(m_) * m_;
    for (std::uint32_t i = 0; i < m_; ++i) {
      std::uint32_t acc = 0;
      for (std::uint32_t k = 0; k < m_; ++k) {
        acc = f_->add(acc, f_->mul(r[i * m_ + k], av[k]));
      }
      rv[i] = f_->neg(acc);
    }
    return r;
  }

  bool compatible(const Ambient& other) const override {
    auto* o = dynamic_cast<const AffineAmbient*>(&other);
    return o && o->f_.get() == f_.get() && o->m_ == m_;
  }

  std::string describe() const override {
    return "affine maps on GF(" + std::to_string(f_->q()) + ")^" + std::to_string(m_);
  }

  std::string format_element(const Payload& a) const override {
    std::ostringstream os;
    os << format_matrix(f_, m_, a.data()) << "+(";
    for (std::uint32_t i = 0; i < m_; ++i) {
      if (i > 0) os << ",";
      os << a[std::size_t(m_) * m_ + i];
    }
    os << ")";
    return os.str();
  }

  const gf::Field& field() const { return f_; }
  std::uint32_t dim() const { return m_; }

 private:
  gf::Field f_;
  std::uint32_t m_;
};

class MatFieldAutAmbient final : public Ambient {
 public:
  MatFieldAutAmbient(gf::Field f, std::uint32_t d, ScalarSet scalars)
      : f_(std::move(f)), d_(d), scalars_(std::move(scalars)) {
    if (f_->n() < 1) throw DomainError("matrix_field_aut needs an extension field");
  }

  ElemKind kind() const override { return ElemKind::matrix_field_aut; }
  std::size_t payload_size() const override { return std::size_t(d_) * d_ + 1; }

  Payload identity() const override {
    Payload p(payload_size());
    for (std::uint32_t i = 0; i < d_; ++i) p[i * d_ + i] = 1;
    return p;
  }

  // (M1, f1) * (M2, f2) = (M1 * frob^f1(M2), f1 + f2 mod n).
  Payload multiply(const Payload& a, const Payload& b) const override {
    const std::uint32_t nn = d_ * d_;
    Payload tw(nn);
    for (std::uint32_t i = 0; i < nn; ++i) {
      std::uint32_t x = b[i];
      for (std::uint32_t k = 0; k < a[nn]; ++k) x = f_->frobenius(x);
      tw[i] = x;
    }
    Payload prod(payload_size());
    mat_mul(f_, d_, a.data(), tw.data(), prod.data());
    Payload mat(nn);
    for (std::uint32_t i = 0; i < nn; ++i) mat[i] = prod[i];
    Payload canon = canonicalize_matrix(f_, d_, mat, scalars_);
    Payload out(payload_size());
    for (std::uint32_t i = 0; i < nn; ++i) out[i] = canon[i];
    out[nn] = (a[nn] + b[nn]) % f_->n();
    return out;
  }

  Payload invert(const Payload& a) const override {
    const std::uint32_t nn = d_ * d_;
    std::uint32_t finv = (f_->n() - a[nn]) % f_->n();
    Payload mi(nn);
    mat_inv(f_, d_, a.data(), mi.data());
    for (std::uint32_t i = 0; i < nn; ++i) {
      std::uint32_t x = mi[i];
      for (std::uint32_t k = 0; k < finv; ++k) x = f_->frobenius(x);
      mi[i] = x;
    }
    Payload canon = canonicalize_matrix(f_, d_, mi, scalars_);
    Payload out(payload_size());
    for (std::uint32_t i = 0; i < nn; ++i) out[i] = canon[i];
    out[nn] = finv;
    return out;
  }

  bool compatible(const Ambient& other) const override {
    auto* o = dynamic_cast<const MatFieldAutAmbient*>(&other);
    return o && o->f_.get() == f_.get() && o->d_ == d_ && o->scalars_ == scalars_;
  }

  std::string describe() const override {
    return "semilinear " + std::to_string(d_) + "x" + std::to_string(d_) + " over GF(" +
           std::to_string(f_->q()) + ")";
  }

  std::string format_element(const Payload& a) const override {
    return format_matrix(f_, d_, a.data()) + "*frob^" + std::to_string(a[d_ * d_]);
  }

 private:
  gf::Field f_;
  std::uint32_t d_;
  ScalarSet scalars_;
};

class SemidirectAmbient final : public Ambient {
 public:
  SemidirectAmbient(AmbientPtr normal, AmbientPtr actor,
                    std::shared_ptr<const SemidirectAction> action)
      : normal_(std::move(normal)), actor_(std::move(actor)), action_(std::move(action)) {}

  ElemKind kind() const override { return ElemKind::semidirect_pair; }
  std::size_t payload_size() const override {
    return normal_->payload_size() + actor_->payload_size();
  }

  Payload identity() const override {
    return join(normal_->identity(), actor_->identity());
  }

  Payload multiply(const Payload& a, const Payload& b) const override {
    Payload n1 = normal_part(a), n2 = normal_part(b);
    Payload a1 = actor_part(a), a2 = actor_part(b);
    Payload n = normal_->multiply(n1, action_->apply(a1, n2));
    Payload act = actor_->multiply(a1, a2);
    return join(n, act);
  }

  Payload invert(const Payload& a) const override {
    Payload ai = actor_->invert(actor_part(a));
    Payload ni = action_->apply(ai, normal_->invert(normal_part(a)));
    return join(ni, ai);
  }

  bool compatible(const Ambient& other) const override {
    auto* o = dynamic_cast<const SemidirectAmbient*>(&other);
    return o && o->action_.get() == action_.get() &&
           o->normal_->compatible(*normal_) && o->actor_->compatible(*actor_);
  }

  std::string describe() const override {
    return "(" + normal_->describe() + ") : (" + actor_->describe() + ") via " +
           action_->name();
  }

  std::string format_element(const Payload& a) const override {
    return "(" + normal_->format_element(normal_part(a)) + " | " +
           actor_->format_element(actor_part(a)) + ")";
  }

  Payload normal_part(const Payload& p) const {
    Payload out(normal_->payload_size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = p[i];
    return out;
  }

  Payload actor_part(const Payload& p) const {
    std::size_t ns = normal_->payload_size();
    Payload out(actor_->payload_size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = p[ns + i];
    return out;
  }

 private:
  Payload join(const Payload& n, const Payload& a) const {
    Payload out(payload_size());
    for (std::size_t i = 0; i < n.size(); ++i) out[i] = n[i];
    for (std::size_t i = 0; i < a.size(); ++i) out[n.size() + i] = a[i];
    return out;
  }

  AmbientPtr normal_;
  AmbientPtr actor_;
  std::shared_ptr<const SemidirectAction> action_;
};

class TrivialAction final : public SemidirectAction {
 public:
  Payload apply(const Payload&, const Payload& normal) const override { return normal; }
  std::string name() const override { return "trivial"; }

  static std::shared_ptr<const SemidirectAction> instance() {
    static std::shared_ptr<const SemidirectAction> a = std::make_shared<TrivialAction>();
    return a;
  }
};

}  // namespace

// ------------------------------------------------------ element factories

GroupElement projective_matrix(const gf::Field& f, std::uint32_t d,
                               const std::vector<std::uint32_t>& entries,
                               const ScalarSet& scalars) {
  if (entries.size() != std::size_t(d) * d) {
    throw DomainError("projective_matrix: wrong entry count");
  }
  for (std::uint32_t e : entries) {
    if (e >= f->q()) throw DomainError("projective_matrix: entry out of range");
  }
  Payload raw(entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) raw[i] = entries[i];
  auto amb = std::make_shared<PMatAmbient>(f, d, scalars);
  return {amb, canonicalize_matrix(f, d, raw, scalars)};
}

GroupElement affine_map(const gf::Field& f, std::uint32_t dim,
                        const std::vector<std::uint32_t>& matrix,
                        const std::vector<std::uint32_t>& translation) {
  if (matrix.size() != std::size_t(dim) * dim || translation.size() != dim) {
    throw DomainError("affine_map: wrong entry count");
  }
  auto amb = std::make_shared<AffineAmbient>(f, dim);
  Payload p(amb->payload_size());
  for (std::size_t i = 0; i < matrix.size(); ++i) {
    if (matrix[i] >= f->q()) throw DomainError("affine_map: entry out of range");
    p[i] = matrix[i];
  }
  for (std::size_t i = 0; i < translation.size(); ++i) {
    if (translation[i] >= f->q()) throw DomainError("affine_map: entry out of range");
    p[matrix.size() + i] = translation[i];
  }
  // Reject singular matrix parts early.
  Payload r(amb->payload_size());
  mat_inv(f, dim, p.data(), r.data());
  return {amb, p};
}

GroupElement matrix_field_aut(const gf::Field& f, std::uint32_t d,
                              const std::vector<std::uint32_t>& entries,
                              std::uint32_t frobenius_power, const ScalarSet& scalars) {
  if (entries.size() != std::size_t(d) * d) {
    throw DomainError("matrix_field_aut: wrong entry count");
  }
  auto amb = std::make_shared<MatFieldAutAmbient>(f, d, scalars);
  Payload raw(entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) raw[i] = entries[i];
  Payload canon = canonicalize_matrix(f, d, raw, scalars);
  Payload p(amb->payload_size());
  for (std::size_t i = 0; i < entries.size(); ++i) p[i] = canon[i];
  p[entries.size()] = frobenius_power % f->n();
  return {amb, p};
}

GroupElement semidirect_pair(const GroupElement& normal, const GroupElement& actor,
                             std::shared_ptr<const SemidirectAction> action) {
  auto amb = std::make_shared<SemidirectAmbient>(normal.ambient, actor.ambient,
                                                 std::move(action));
  Payload p(amb->payload_size());
  for (std::size_t i = 0; i < normal.payload.size(); ++i) p[i] = normal.payload[i];
  for (std::size_t i = 0; i < actor.payload.size(); ++i) {
    p[normal.payload.size() + i] = actor.payload[i];
  }
  return {amb, p};
}

GroupElement direct_product(const GroupElement& a, const GroupElement& b) {
  return semidirect_pair(a, b, TrivialAction::instance());
}

Payload semidirect_normal_part(const Ambient& ambient, const Payload& p) {
  auto* s = dynamic_cast<const SemidirectAmbient*>(&ambient);
  if (!s) throw DomainError("not a semidirect ambient");
  return s->normal_part(p);
}

Payload semidirect_actor_part(const Ambient& ambient, const Payload& p) {
  auto* s = dynamic_cast<const SemidirectAmbient*>(&ambient);
  if (!s) throw DomainError("not a semidirect ambient");
  return s->actor_part(p);
}

GroupElement mul(const GroupElement& a, const GroupElement& b) {
  if (!a.ambient->compatible(*b.ambient)) {
    throw DomainError("cannot multiply elements of different kinds");
  }
  return {a.ambient, a.ambient->multiply(a.payload, b.payload)};
}

GroupElement inv(const GroupElement& a) {
  return {a.ambient, a.ambient->invert(a.payload)};
}

std::uint64_t element_order(const GroupElement& g) {
  Payload id = g.ambient->identity();
  Payload acc = g.payload;
  std::uint64_t k = 1;
  while (!(acc == id)) {
    acc = g.ambient->multiply(acc, g.payload);
    ++k;
  }
  return k;
}

GroupElement canonicalize(const GroupElement& g) {
  // Multiplying by the identity routes through the ambient's
  // canonicalization.
  return {g.ambient, g.ambient->multiply(g.ambient->identity(), g.payload)};
}

// ------------------------------------------------------------ FiniteGroup

std::uint64_t FiniteGroup::order_of(std::uint32_t a) const {
  std::uint32_t id = identity();
  std::uint32_t acc = a;
  std::uint64_t k = 1;
  while (acc != id) {
    acc = multiply(acc, a);
    ++k;
  }
  return k;
}

std::string FiniteGroup::element_label(std::uint32_t a) const {
  return "#" + std::to_string(a);
}

// ------------------------------------------------------------- GroupTable

std::int64_t GroupTable::find(const Payload& p) const {
  auto it = index_.find(p.hash());
  if (it != index_.end() && elems_[it->second] == p) return it->second;
  for (std::uint32_t idx : overflow_) {
    if (elems_[idx] == p) return idx;
  }
  return -1;
}

std::uint32_t GroupTable::insert(Payload p) {
  std::uint64_t h = p.hash();
  std::uint32_t idx = std::uint32_t(elems_.size());
  elems_.push_back(std::move(p));
  auto [it, fresh] = index_.emplace(h, idx);
  if (!fresh) overflow_.push_back(idx);
  return idx;
}

GroupTable GroupTable::generate(const std::vector<GroupElement>& generators,
                                std::uint64_t cap) {
  if (generators.empty()) throw DomainError("generate: need at least one generator");
  if (cap < 1) throw DomainError("generate: cap must be >= 1");
  const AmbientPtr& amb = generators[0].ambient;
  for (const auto& g : generators) {
    if (!g.ambient->compatible(*amb)) {
      throw DomainError("generate: mixed element kinds");
    }
  }

  GroupTable t;
  t.ambient_ = amb;
  Payload id = amb->identity();
  t.insert(id);

  std::vector<Payload> gens;
  for (const auto& g : generators) {
    // Route through multiply so raw payloads are canonicalized.
    Payload c = amb->multiply(id, g.payload);
    if (t.find(c) < 0) {
      if (t.elems_.size() + 1 > cap) {
        throw CapError("generate: enumeration cap " + std::to_string(cap) + " exceeded");
      }
      t.insert(c);
    }
    gens.push_back(std::move(c));
  }
  for (const Payload& g : gens) {
    std::int64_t at = t.find(g);
    t.gens_.push_back(std::uint32_t(at));
  }

  for (std::uint32_t head = 0; head < t.elems_.size(); ++head) {
    for (const Payload& g : gens) {
      Payload y = amb->multiply(t.elems_[head], g);
      if (t.find(y) < 0) {
        if (t.elems_.size() + 1 > cap) {
          throw CapError("generate: enumeration cap " + std::to_string(cap) +
                         " exceeded");
        }
        t.insert(std::move(y));
      }
    }
  }
  return t;
}

std::uint32_t GroupTable::multiply(std::uint32_t a, std::uint32_t b) const {
  Payload y = ambient_->multiply(elems_[a], elems_[b]);
  std::int64_t idx = find(y);
  if (idx < 0) throw InconsistencyError("product escaped the enumerated closure");
  return std::uint32_t(idx);
}

std::uint32_t GroupTable::invert(std::uint32_t a) const {
  Payload y = ambient_->invert(elems_[a]);
  std::int64_t idx = find(y);
  if (idx < 0) throw InconsistencyError("inverse escaped the enumerated closure");
  return std::uint32_t(idx);
}

std::uint32_t GroupTable::index_of(const Payload& p) const {
  std::int64_t idx = find(p);
  if (idx < 0) throw DomainError("element not in this group");
  return std::uint32_t(idx);
}

bool GroupTable::contains(const Payload& p) const { return find(p) >= 0; }

const std::vector<std::uint64_t>& GroupTable::orders() const {
  if (orders_.empty()) {
    orders_.resize(elems_.size());
    Payload id = ambient_->identity();
    for (std::size_t i = 0; i < elems_.size(); ++i) {
      Payload acc = elems_[i];
      std::uint64_t k = 1;
      while (!(acc == id)) {
        acc = ambient_->multiply(acc, elems_[i]);
        ++k;
      }
      orders_[i] = k;
    }
  }
  return orders_;
}

std::uint64_t GroupTable::order_of(std::uint32_t a) const { return orders()[a]; }

std::string GroupTable::element_label(std::uint32_t a) const {
  return ambient_->format_element(elems_[a]);
}

// ----------------------------------------------------------- SubgroupView

bool SubgroupHandle::contains(std::uint32_t idx) const {
  return std::binary_search(members.begin(), members.end(), idx);
}

SubgroupView::SubgroupView(const FiniteGroup& parent, const SubgroupHandle& handle)
    : parent_(&parent), members_(handle.members) {
  local_.reserve(members_.size() * 2);
  for (std::uint32_t i = 0; i < members_.size(); ++i) local_.emplace(members_[i], i);
  for (std::uint32_t g : small_generating_set(parent, members_)) {
    gens_.push_back(local_.at(g));
  }
  if (gens_.empty()) gens_.push_back(identity());
}

std::uint32_t SubgroupView::identity() const { return local_.at(parent_->identity()); }

std::uint32_t SubgroupView::multiply(std::uint32_t a, std::uint32_t b) const {
  auto it = local_.find(parent_->multiply(members_[a], members_[b]));
  if (it == local_.end()) throw InconsistencyError("subgroup view is not closed");
  return it->second;
}

std::uint32_t SubgroupView::invert(std::uint32_t a) const {
  return local_.at(parent_->invert(members_[a]));
}

std::uint64_t SubgroupView::order_of(std::uint32_t a) const {
  return parent_->order_of(members_[a]);
}

std::uint32_t SubgroupView::local_index(std::uint32_t parent_idx) const {
  auto it = local_.find(parent_idx);
  if (it == local_.end()) throw DomainError("element not in subgroup");
  return it->second;
}

std::string SubgroupView::element_label(std::uint32_t a) const {
  return parent_->element_label(members_[a]);
}

// ---------------------------------------------------------- QuotientTable

QuotientTable::QuotientTable(const FiniteGroup& parent, const SubgroupHandle& normal,
                             std::uint64_t cap) {
  if (!normal.is_normal) {
    throw DomainError("quotient requires a verified normal subgroup");
  }
  std::uint32_t n = parent.size();
  if (normal.members.empty() || n % normal.members.size() != 0) {
    throw DomainError("quotient: subgroup size does not divide group size");
  }
  std::uint64_t ncosets = n / normal.members.size();
  if (ncosets > cap) {
    throw CapError("quotient: coset count exceeds cap " + std::to_string(cap));
  }
  coset_of_.assign(n, std::uint32_t(-1));
  for (std::uint32_t i = 0; i < n; ++i) {
    if (coset_of_[i] != std::uint32_t(-1)) continue;
    std::uint32_t id = std::uint32_t(rep_.size());
    rep_.push_back(i);
    for (std::uint32_t h : normal.members) {
      coset_of_[parent.multiply(i, h)] = id;
    }
    if (coset_of_[i] != id) {
      throw InconsistencyError("quotient: representative escaped its own coset");
    }
  }
  n_ = std::uint32_t(rep_.size());
  check(n_ == ncosets, "quotient: coset count mismatch");

  mult_.assign(std::size_t(n_) * n_, 0);
  inv_.assign(n_, 0);
  for (std::uint32_t a = 0; a < n_; ++a) {
    for (std::uint32_t b = 0; b < n_; ++b) {
      mult_[std::size_t(a) * n_ + b] = coset_of_[parent.multiply(rep_[a], rep_[b])];
    }
    inv_[a] = coset_of_[parent.invert(rep_[a])];
  }
  check(coset_of_[parent.identity()] == 0, "quotient: identity coset not first");
  for (std::uint32_t g : parent.generators()) {
    std::uint32_t c = coset_of_[g];
    if (std::find(gens_.begin(), gens_.end(), c) == gens_.end()) gens_.push_back(c);
  }
  if (gens_.empty()) gens_.push_back(0);
}

std::uint32_t QuotientTable::multiply(std::uint32_t a, std::uint32_t b) const {
  return mult_[std::size_t(a) * n_ + b];
}

std::uint32_t QuotientTable::invert(std::uint32_t a) const { return inv_[a]; }

std::string QuotientTable::element_label(std::uint32_t a) const {
  return "coset#" + std::to_string(a);
}

// ------------------------------------------------------- subgroup closure

SubgroupHandle subgroup_closure(const FiniteGroup& g, std::vector<std::uint32_t> seeds) {
  std::vector<bool> in(g.size(), false);
  std::vector<std::uint32_t> order;
  auto push = [&](std::uint32_t v) {
    if (!in[v]) {
      in[v] = true;
      order.push_back(v);
    }
  };
  push(g.identity());
  for (std::uint32_t s : seeds) push(s);
  std::vector<std::uint32_t> gens = seeds;
  for (std::uint32_t head = 0; head < order.size(); ++head) {
    for (std::uint32_t s : gens) {
      push(g.multiply(order[head], s));
    }
  }
  SubgroupHandle h;
  h.members = std::move(order);
  std::sort(h.members.begin(), h.members.end());
  return h;
}

SubgroupHandle normal_closure(const FiniteGroup& g, const std::vector<std::uint32_t>& seeds) {
  SubgroupHandle cur = subgroup_closure(g, seeds);
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<std::uint32_t> extra;
    for (std::uint32_t x : cur.members) {
      for (std::uint32_t gen : g.generators()) {
        std::uint32_t c = g.multiply(g.multiply(gen, x), g.invert(gen));
        if (!cur.contains(c)) extra.push_back(c);
      }
    }
    if (!extra.empty()) {
      std::vector<std::uint32_t> all = cur.members;
      all.insert(all.end(), extra.begin(), extra.end());
      cur = subgroup_closure(g, all);
      changed = true;
    }
  }
  cur.is_normal = true;  // by construction
  return cur;
}

bool verify_normal(const FiniteGroup& g, SubgroupHandle& h) {
  std::vector<std::uint32_t> hgens = small_generating_set(g, h.members);
  for (std::uint32_t gen : g.generators()) {
    for (std::uint32_t x : hgens) {
      std::uint32_t c = g.multiply(g.multiply(gen, x), g.invert(gen));
      if (!h.contains(c)) {
        h.is_normal = false;
        return false;
      }
    }
  }
  h.is_normal = true;
  return true;
}

std::vector<std::uint32_t> small_generating_set(const FiniteGroup& g,
                                                const std::vector<std::uint32_t>& members) {
  std::vector<std::uint32_t> gens;
  SubgroupHandle got;
  got.members = {g.identity()};
  for (std::uint32_t idx : members) {
    if (got.contains(idx)) continue;
    gens.push_back(idx);
    got = subgroup_closure(g, gens);
    if (got.members.size() == members.size()) break;
  }
  return gens;
}

SubgroupHandle whole_group(const FiniteGroup& g) {
  SubgroupHandle h;
  h.members.resize(g.size());
  for (std::uint32_t i = 0; i < g.size(); ++i) h.members[i] = i;
  h.is_normal = true;
  return h;
}

SubgroupHandle trivial_subgroup(const FiniteGroup& g) {
  SubgroupHandle h;
  h.members = {g.identity()};
  h.is_normal = true;
  return h;
}

}  // namespace gk::groups
