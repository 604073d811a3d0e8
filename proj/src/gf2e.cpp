#include "qcgoppa/gf2e.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <cmath>
#include <sstream>
#include <string>

#include "moduli_resource.hpp"

namespace qcgoppa {

// ---------------------------------------------------------------------------
// GF(2)[x] on words

namespace gf2x {

int degree(std::uint64_t p) noexcept { return p == 0 ? -1 : 63 - std::countl_zero(p); }

std::uint64_t mul(std::uint64_t a, std::uint64_t b) noexcept {
  std::uint64_t r = 0;
  while (b != 0) {
    if (b & 1u) r ^= a;
    b >>= 1;
    a <<= 1;
  }
  return r;
}

std::uint64_t mod(std::uint64_t a, std::uint64_t m) {
  if (m == 0) throw Error(Errc::DivisionByZeroPoly, "reduction modulo the zero polynomial");
  const int dm = degree(m);
  for (int da = degree(a); da >= dm; da = degree(a)) a ^= m << (da - dm);
  return a;
}

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) { return mod(mul(a, b), m); }

std::uint64_t gcd(std::uint64_t a, std::uint64_t b) {
  while (b != 0) {
    a = mod(a, b);
    std::swap(a, b);
  }
  return a;
}

namespace {

std::uint64_t powmod(std::uint64_t base, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1;
  base = mod(base, m);
  while (e != 0) {
    if (e & 1u) r = mulmod(r, base, m);
    base = mulmod(base, base, m);
    e >>= 1;
  }
  return mod(r, m);
}

// x^(2^k) mod m
std::uint64_t frob_x(unsigned k, std::uint64_t m) {
  std::uint64_t r = mod(2, m);
  for (unsigned i = 0; i < k; ++i) r = mulmod(r, r, m);
  return r;
}

}  // namespace

bool is_irreducible(std::uint64_t p) {
  const int d = degree(p);
  if (d < 1) return false;
  if (d == 1) return true;
  if (d > 31) throw Error(Errc::ScaleExceeded, "word polynomial degree above 31");
  if (frob_x(static_cast<unsigned>(d), p) != mod(2, p)) return false;
  for (std::uint64_t r : prime_factors(static_cast<std::uint64_t>(d))) {
    const std::uint64_t t = frob_x(static_cast<unsigned>(d / static_cast<int>(r)), p) ^ 2u;
    if (gcd(p, mod(t, p)) != 1) return false;
  }
  return true;
}

bool is_primitive(std::uint64_t p) {
  if (!is_irreducible(p)) return false;
  const int d = degree(p);
  if ((p & 1u) == 0) return false;
  const std::uint64_t order = (std::uint64_t{1} << d) - 1;
  if (order == 1) return true;
  for (std::uint64_t r : prime_factors(order)) {
    if (powmod(2, order / r, p) == 1) return false;
  }
  return true;
}

}  // namespace gf2x

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t f = 2; f * f <= n; ++f) {
    if (n % f == 0) {
      out.push_back(f);
      while (n % f == 0) n /= f;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t f = 2; f * f <= n; ++f)
    if (n % f == 0) return false;
  return true;
}

// ---------------------------------------------------------------------------
// FieldImpl

namespace detail {

FieldImpl::FieldImpl(unsigned m, std::uint32_t modulus)
    : m_(m),
      modulus_(modulus),
      top_(std::uint32_t{1} << m),
      mask_((std::uint32_t{1} << m) - 1),
      group_order_((std::uint64_t{1} << m) - 1),
      order_primes_(prime_factors(group_order_)) {
  for (std::uint32_t a = 1; a <= mask_; ++a) {
    if (order(a) == group_order_) {
      generator_ = a;
      break;
    }
  }
  bsgs_step_ = static_cast<std::uint32_t>(std::ceil(std::sqrt(static_cast<double>(group_order_))));
  if (bsgs_step_ == 0) bsgs_step_ = 1;
  std::uint32_t y = 1;
  for (std::uint32_t j = 0; j < bsgs_step_; ++j) {
    baby_.emplace(y, j);
    y = mul(y, generator_);
  }
  bsgs_giant_ = inv(pow(generator_, bsgs_step_));
}

std::uint32_t FieldImpl::pow(std::uint32_t a, std::uint64_t e) const noexcept {
  std::uint32_t r = 1;
  while (e != 0) {
    if (e & 1u) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

std::uint32_t FieldImpl::inv(std::uint32_t a) const {
  if (a == 0) throw Error(Errc::DivisionByZero, "inverse of zero");
  return pow(a, group_order_ - 1);
}

std::uint64_t FieldImpl::order(std::uint32_t a) const {
  if (a == 0) throw Error(Errc::DivisionByZero, "order of zero");
  std::uint64_t ord = group_order_;
  for (std::uint64_t p : order_primes_) {
    while (ord % p == 0 && pow(a, ord / p) == 1) ord /= p;
  }
  return ord;
}

std::optional<std::uint64_t> FieldImpl::log(std::uint32_t a) const {
  if (a == 0) return std::nullopt;
  std::uint32_t y = a;
  for (std::uint64_t i = 0; i <= bsgs_step_; ++i) {
    auto it = baby_.find(y);
    if (it != baby_.end()) return (i * bsgs_step_ + it->second) % group_order_;
    y = mul(y, bsgs_giant_);
  }
  throw Error(Errc::Internal, "discrete log not found");
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Fe

void require_same_field(const Fe& a, const Fe& b) {
  if (a.field() == nullptr || b.field() == nullptr)
    throw Error(Errc::ContextMismatch, "operation on an element without a field");
  if (!a.field()->same_field(b.field()))
    throw Error(Errc::ContextMismatch, "elements belong to different fields");
}

Fe operator+(const Fe& a, const Fe& b) {
  require_same_field(a, b);
  return Fe(a.field_, a.bits_ ^ b.bits_);
}

Fe operator*(const Fe& a, const Fe& b) {
  require_same_field(a, b);
  return Fe(a.field_, a.field_->mul(a.bits_, b.bits_));
}

Fe operator/(const Fe& a, const Fe& b) {
  require_same_field(a, b);
  return Fe(a.field_, a.field_->mul(a.bits_, a.field_->inv(b.bits_)));
}

namespace {
const detail::FieldImpl& field_of(const Fe& x) {
  if (x.field() == nullptr) throw Error(Errc::ContextMismatch, "element without a field");
  return *x.field();
}
}  // namespace

Fe Fe::inv() const { return Fe(field_, field_of(*this).inv(bits_)); }
Fe Fe::pow(std::uint64_t e) const { return Fe(field_, field_of(*this).pow(bits_, e)); }
Fe Fe::square() const { return Fe(field_, field_of(*this).square(bits_)); }

Fe Fe::frobenius(std::uint64_t k) const {
  const auto& f = field_of(*this);
  k %= f.degree();
  std::uint32_t y = bits_;
  for (std::uint64_t i = 0; i < k; ++i) y = f.square(y);
  return Fe(field_, y);
}

Fe Fe::sqrt() const { return frobenius(field_of(*this).degree() - 1); }
std::uint64_t Fe::order() const { return field_of(*this).order(bits_); }

// ---------------------------------------------------------------------------
// FieldCtx

const detail::FieldImpl& FieldCtx::impl() const {
  if (!impl_) throw Error(Errc::ContextMismatch, "empty field context");
  return *impl_;
}

Fe FieldCtx::elem(std::uint32_t bits) const {
  if (bits > impl().mask())
    throw Error(Errc::InvalidArgument, "encoding " + std::to_string(bits) + " exceeds field size");
  return Fe(impl_.get(), bits);
}

Fe FieldCtx::gen_pow(std::int64_t k) const {
  const auto n = static_cast<std::int64_t>(impl().group_order());
  const std::int64_t e = ((k % n) + n) % n;
  return Fe(impl_.get(), impl().pow(impl().generator(), static_cast<std::uint64_t>(e)));
}

std::optional<std::uint64_t> FieldCtx::log(const Fe& x) const {
  require(x);
  return impl().log(x.bits());
}

void FieldCtx::require(const Fe& x) const {
  if (!owns(x)) throw Error(Errc::ContextMismatch, "element does not belong to this field");
}

std::vector<Fe> FieldCtx::elements() const {
  if (size() > kMaxEnumeration)
    throw Error(Errc::ScaleExceeded, "field of size 2^" + std::to_string(degree()) + " is too large to enumerate");
  std::vector<Fe> out;
  out.reserve(size());
  for (std::uint32_t b = 0; b <= impl().mask(); ++b) out.push_back(Fe(impl_.get(), b));
  return out;
}

FieldCtx make_field(unsigned m, std::uint32_t modulus) {
  if (m < 1 || m > kMaxFieldDegree)
    throw Error(Errc::DegreeMismatch, "field degree " + std::to_string(m) + " outside 1..24");
  if (gf2x::degree(modulus) != static_cast<int>(m))
    throw Error(Errc::DegreeMismatch, "modulus degree does not equal " + std::to_string(m));
  if ((modulus & 1u) == 0) throw Error(Errc::ReducibleModulus, "modulus has zero constant term");
  if (!gf2x::is_irreducible(modulus)) throw Error(Errc::ReducibleModulus, "modulus factors over GF(2)");
  return FieldCtx(std::make_shared<const detail::FieldImpl>(m, modulus));
}

// ---------------------------------------------------------------------------
// Modulus table

const ModulusTable& ModulusTable::builtin() {
  static const ModulusTable table = parse(kModuliResource);
  return table;
}

ModulusTable ModulusTable::parse(std::string_view text) {
  ModulusTable t;
  std::istringstream in{std::string(text)};
  std::string line;
  bool have_version = false;
  while (std::getline(in, line)) {
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream ls(line.substr(first));
    std::string key, value;
    ls >> key >> value;
    if (key == "version") {
      t.version_ = std::stoi(value);
      have_version = true;
      continue;
    }
    unsigned degree = 0;
    std::uint32_t modulus = 0;
    auto r1 = std::from_chars(key.data(), key.data() + key.size(), degree);
    auto r2 = std::from_chars(value.data(), value.data() + value.size(), modulus, 16);
    if (r1.ec != std::errc() || r2.ec != std::errc() || value.empty())
      throw Error(Errc::ParseError, "bad modulus table line: " + line);
    t.set(degree, modulus);
  }
  if (!have_version) throw Error(Errc::ParseError, "modulus table lacks a version line");
  return t;
}

std::optional<std::uint32_t> ModulusTable::lookup(unsigned degree) const {
  auto it = entries_.find(degree);
  if (it == entries_.end()) return std::nullopt;
  return it->second;
}

void ModulusTable::set(unsigned degree, std::uint32_t modulus) {
  // Validation is identical to field construction.
  (void)make_field(degree, modulus);
  entries_[degree] = modulus;
}

std::uint32_t ModulusTable::modulus_for(unsigned degree) const {
  if (auto m = lookup(degree)) return *m;
  return find_primitive_modulus(degree);
}

std::uint32_t find_primitive_modulus(unsigned m) {
  if (m < 1 || m > kMaxFieldDegree) throw Error(Errc::TableMiss, "no modulus for degree " + std::to_string(m));
  if (m == 1) return 3;
  for (std::uint64_t p = (std::uint64_t{1} << m) | 1u; p < (std::uint64_t{1} << (m + 1)); p += 2) {
    if (gf2x::is_primitive(p)) return static_cast<std::uint32_t>(p);
  }
  throw Error(Errc::TableMiss, "no primitive polynomial of degree " + std::to_string(m));
}

FieldCtx field_of_degree(unsigned m, const ModulusTable& table) { return make_field(m, table.modulus_for(m)); }

// ---------------------------------------------------------------------------
// Traces and Artin-Schreier

Fe trace(const FieldCtx& sup, unsigned sub_degree, const Fe& x) {
  sup.require(x);
  if (sub_degree == 0 || sup.degree() % sub_degree != 0)
    throw Error(Errc::NonDivisorDegree, std::to_string(sub_degree) + " does not divide " + std::to_string(sup.degree()));
  Fe sum = sup.zero();
  Fe y = x;
  for (unsigned i = 0; i < sup.degree() / sub_degree; ++i) {
    sum += y;
    y = y.frobenius(sub_degree);
  }
  return sum;
}

Fe trace_from_level(const Fe& x, unsigned level_degree) {
  Fe sum = x + x;
  Fe y = x;
  for (unsigned i = 0; i < level_degree; ++i) {
    sum += y;
    y = y.square();
  }
  return sum;
}

unsigned degree_over(const Fe& x, unsigned base_degree) {
  const unsigned n = field_of(x).degree();
  if (base_degree == 0 || n % base_degree != 0)
    throw Error(Errc::NonDivisorDegree, "base degree does not divide field degree");
  const unsigned e = n / base_degree;
  for (unsigned d = 1; d <= e; ++d) {
    if (e % d == 0 && x.frobenius(std::uint64_t{base_degree} * d) == x) return d;
  }
  return e;
}

namespace {

// Echelon basis over GF(2) with tracked combinations; each pivot vector has
// zeros at the pivot bits of every earlier pivot.
template <class Pivot>
void insert_vector(std::vector<Pivot>& pivots, std::uint32_t vec, std::uint32_t combo) {
  for (const auto& p : pivots) {
    if ((vec >> p.bit) & 1u) {
      vec ^= p.vec;
      combo ^= p.combo;
    }
  }
  if (vec == 0) return;
  pivots.push_back(Pivot{vec, combo, 31 - std::countl_zero(vec)});
}

template <class Pivot>
std::pair<std::uint32_t, std::uint32_t> reduce_vector(const std::vector<Pivot>& pivots, std::uint32_t vec) {
  std::uint32_t combo = 0;
  for (const auto& p : pivots) {
    if ((vec >> p.bit) & 1u) {
      vec ^= p.vec;
      combo ^= p.combo;
    }
  }
  return {vec, combo};
}

struct LinPivot {
  std::uint32_t vec;
  std::uint32_t combo;
  int bit;
};

}  // namespace

std::optional<std::pair<Fe, Fe>> solve_artin_schreier(const FieldCtx& ctx, const Fe& t) {
  ctx.require(t);
  if (!trace(ctx, 1, t).is_zero()) return std::nullopt;
  const unsigned m = ctx.degree();
  Fe y = ctx.zero();
  if (m % 2 == 1) {
    // Half-trace.
    Fe term = t;
    for (unsigned i = 0; i <= (m - 1) / 2; ++i) {
      y += term;
      term = term.frobenius(2);
    }
  } else {
    // y -> y^2 + y is GF(2)-linear; solve in the polynomial basis.
    std::vector<LinPivot> pivots;
    for (unsigned i = 0; i < m; ++i) {
      const Fe basis = ctx.elem(std::uint32_t{1} << i);
      insert_vector(pivots, (basis.square() + basis).bits(), std::uint32_t{1} << i);
    }
    auto [residue, combo] = reduce_vector(pivots, t.bits());
    if (residue != 0) throw Error(Errc::Internal, "trace-zero element outside the image of y^2+y");
    y = ctx.elem(combo);
  }
  if (y.bits() & 1u) y += ctx.one();
  return std::make_pair(y, y + ctx.one());
}

// ---------------------------------------------------------------------------
// Towers

TowerEmbedding::TowerEmbedding(FieldCtx sub, FieldCtx sup, Fe image_of_generator)
    : sub_(std::move(sub)), sup_(std::move(sup)), image_(image_of_generator) {
  sup_.require(image_);
  if (sup_.degree() % sub_.degree() != 0)
    throw Error(Errc::NonDivisorDegree, "subfield degree does not divide extension degree");
  Fe p = sup_.one();
  for (unsigned i = 0; i < sub_.degree(); ++i) {
    basis_images_.push_back(p.bits());
    insert_vector(pivots_, p.bits(), std::uint32_t{1} << i);
    p *= image_;
  }
  // image_ must be a root of sub's modulus (x^n = modulus - x^n).
  std::uint32_t reduced = 0;
  const std::uint32_t low = sub_.modulus() ^ (std::uint32_t{1} << sub_.degree());
  for (unsigned i = 0; i < sub_.degree(); ++i)
    if ((low >> i) & 1u) reduced ^= basis_images_[i];
  if (reduced != p.bits()) throw Error(Errc::InvalidArgument, "embedding image is not a root of the subfield modulus");
}

Fe TowerEmbedding::embed(const Fe& x) const {
  sub_.require(x);
  std::uint32_t out = 0;
  for (unsigned i = 0; i < sub_.degree(); ++i)
    if ((x.bits() >> i) & 1u) out ^= basis_images_[i];
  return sup_.elem(out);
}

std::optional<Fe> TowerEmbedding::try_pullback(const Fe& y) const {
  sup_.require(y);
  auto [residue, combo] = reduce_vector(pivots_, y.bits());
  if (residue != 0) return std::nullopt;
  return sub_.elem(combo);
}

bool TowerEmbedding::contains(const Fe& y) const { return try_pullback(y).has_value(); }

Fe TowerEmbedding::pullback(const Fe& y) const {
  auto x = try_pullback(y);
  if (!x) throw Error(Errc::NotInSubfield, "element lies outside the embedded subfield");
  return *x;
}

namespace {

Fe eval_word_poly(std::uint32_t poly, const Fe& at, const FieldCtx& ctx) {
  Fe acc = ctx.zero();
  for (int i = gf2x::degree(poly); i >= 0; --i) {
    acc = acc * at;
    if ((poly >> i) & 1u) acc += ctx.one();
  }
  return acc;
}

}  // namespace

TowerEmbedding make_embedding(const FieldCtx& sub, const FieldCtx& sup) {
  if (sup.degree() % sub.degree() != 0)
    throw Error(Errc::NonDivisorDegree, "subfield degree does not divide extension degree");
  if (sub == sup) return TowerEmbedding(sub, sup, sup.x());
  const unsigned n = sub.degree();
  const unsigned big = sup.degree();
  const std::uint64_t cofactor = ((std::uint64_t{1} << big) - 1) / ((std::uint64_t{1} << n) - 1);
  const Fe zeta = sup.gen_pow(static_cast<std::int64_t>(cofactor));
  if (eval_word_poly(sub.modulus(), zeta, sup).is_zero()) return TowerEmbedding(sub, sup, zeta);
  std::optional<Fe> best;
  Fe z = sup.one();
  for (std::uint64_t j = 0; j + 1 < (std::uint64_t{1} << n); ++j) {
    if (eval_word_poly(sub.modulus(), z, sup).is_zero() && (!best || z.bits() < best->bits())) best = z;
    z *= zeta;
  }
  if (!best) throw Error(Errc::TableMiss, "subfield modulus has no root in the extension");
  return TowerEmbedding(sub, sup, *best);
}

Tower build_tower(const FieldCtx& sub, unsigned s, const ModulusTable& table) {
  if (s == 0) throw Error(Errc::InvalidArgument, "extension degree must be positive");
  if (s == 1) return Tower{sub, TowerEmbedding(sub, sub, sub.x())};
  const unsigned big = sub.degree() * s;
  if (big > kMaxFieldDegree)
    throw Error(Errc::ScaleExceeded, "tower degree " + std::to_string(big) + " exceeds 24");
  FieldCtx sup = field_of_degree(big, table);
  TowerEmbedding emb = make_embedding(sub, sup);
  return Tower{sup, emb};
}

}  // namespace qcgoppa
