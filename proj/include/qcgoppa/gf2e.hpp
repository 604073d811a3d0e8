#pragma once

// Binary fields GF(2^m) in polynomial basis, m <= 24.
//
// A FieldCtx is an immutable, shareable handle. Elements (Fe) carry a raw
// pointer to their field, so a FieldCtx (or a copy of it) must outlive every
// element created from it.

#include <cstdint>
#include <map>
#include <unordered_map>
#include <memory>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "qcgoppa/error.hpp"

namespace qcgoppa {

inline constexpr unsigned kMaxFieldDegree = 24;
/// Largest field (or candidate set) any exhaustive scan is allowed to enumerate.
inline constexpr std::uint64_t kMaxEnumeration = std::uint64_t{1} << 20;

/// Arithmetic on GF(2)[x] polynomials packed into machine words.
namespace gf2x {
int degree(std::uint64_t p) noexcept;
/// Carry-less product; the caller guarantees deg a + deg b < 64.
std::uint64_t mul(std::uint64_t a, std::uint64_t b) noexcept;
std::uint64_t mod(std::uint64_t a, std::uint64_t m);
std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t gcd(std::uint64_t a, std::uint64_t b);
bool is_irreducible(std::uint64_t p);
/// Irreducible and x generates the multiplicative group of GF(2)[x]/(p).
bool is_primitive(std::uint64_t p);
}  // namespace gf2x

/// Distinct prime factors of n, ascending.
std::vector<std::uint64_t> prime_factors(std::uint64_t n);
bool is_prime(std::uint64_t n);

class FieldCtx;

namespace detail {

class FieldImpl {
 public:
  FieldImpl(unsigned m, std::uint32_t modulus);

  unsigned degree() const noexcept { return m_; }
  std::uint32_t modulus() const noexcept { return modulus_; }
  std::uint32_t mask() const noexcept { return mask_; }
  std::uint64_t group_order() const noexcept { return group_order_; }
  std::uint32_t generator() const noexcept { return generator_; }

  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const noexcept {
    std::uint32_t r = 0;
    while (b != 0) {
      if (b & 1u) r ^= a;
      b >>= 1;
      a <<= 1;
      if (a & top_) a ^= modulus_;
    }
    return r;
  }
  std::uint32_t square(std::uint32_t a) const noexcept { return mul(a, a); }
  std::uint32_t pow(std::uint32_t a, std::uint64_t e) const noexcept;
  std::uint32_t inv(std::uint32_t a) const;
  std::uint64_t order(std::uint32_t a) const;
  std::optional<std::uint64_t> log(std::uint32_t a) const;

  bool same_field(const FieldImpl* other) const noexcept {
    return other == this || (other != nullptr && other->m_ == m_ && other->modulus_ == modulus_);
  }

 private:
  unsigned m_;
  std::uint32_t modulus_;
  std::uint32_t top_;
  std::uint32_t mask_;
  std::uint64_t group_order_;
  std::vector<std::uint64_t> order_primes_;
  std::uint32_t generator_ = 1;
  // Baby-step giant-step tables for discrete logs to the canonical generator.
  std::uint32_t bsgs_step_ = 1;
  std::uint32_t bsgs_giant_ = 1;
  std::unordered_map<std::uint32_t, std::uint32_t> baby_;
};

}  // namespace detail

/// An element of a binary field, stored as polynomial-basis coordinates.
class Fe {
 public:
  Fe() = default;

  std::uint32_t bits() const noexcept { return bits_; }
  bool valid() const noexcept { return field_ != nullptr; }
  bool is_zero() const noexcept { return bits_ == 0; }
  bool is_one() const noexcept { return bits_ == 1; }
  const detail::FieldImpl* field() const noexcept { return field_; }

  Fe inv() const;
  Fe pow(std::uint64_t e) const;
  Fe square() const;
  /// The unique square root x^(2^(m-1)).
  Fe sqrt() const;
  /// x^(2^k).
  Fe frobenius(std::uint64_t k) const;
  /// Multiplicative order; divides 2^m - 1.
  std::uint64_t order() const;

  friend Fe operator+(const Fe& a, const Fe& b);
  friend Fe operator-(const Fe& a, const Fe& b) { return a + b; }
  friend Fe operator*(const Fe& a, const Fe& b);
  friend Fe operator/(const Fe& a, const Fe& b);
  Fe& operator+=(const Fe& o) { return *this = *this + o; }
  Fe& operator-=(const Fe& o) { return *this = *this + o; }
  Fe& operator*=(const Fe& o) { return *this = *this * o; }
  Fe& operator/=(const Fe& o) { return *this = *this / o; }

  friend bool operator==(const Fe& a, const Fe& b) noexcept {
    return a.bits_ == b.bits_ && (a.field_ == b.field_ || (a.field_ && a.field_->same_field(b.field_)));
  }

 private:
  friend class FieldCtx;
  Fe(const detail::FieldImpl* f, std::uint32_t bits) : field_(f), bits_(bits) {}

  const detail::FieldImpl* field_ = nullptr;
  std::uint32_t bits_ = 0;
};

/// Orders elements by encoding; used wherever the library needs a canonical order.
struct FeLess {
  bool operator()(const Fe& a, const Fe& b) const noexcept { return a.bits() < b.bits(); }
};

/// Throws ContextMismatch unless both operands live in the same field.
void require_same_field(const Fe& a, const Fe& b);

class FieldCtx {
 public:
  FieldCtx() = default;

  bool valid() const noexcept { return impl_ != nullptr; }
  unsigned degree() const { return impl().degree(); }
  std::uint32_t modulus() const { return impl().modulus(); }
  std::uint64_t size() const { return std::uint64_t{1} << impl().degree(); }

  Fe zero() const { return Fe(impl_.get(), 0); }
  Fe one() const { return Fe(impl_.get(), 1); }
  /// The residue class of x, i.e. the root of the modulus that defines the basis.
  Fe x() const { return elem(impl().degree() == 1 ? 1u : 2u); }
  Fe elem(std::uint32_t bits) const;
  /// Canonical primitive element: the smallest encoding of order 2^m - 1.
  Fe generator() const { return Fe(impl_.get(), impl().generator()); }
  Fe gen_pow(std::int64_t k) const;
  /// Discrete log to the canonical generator; nullopt for zero.
  std::optional<std::uint64_t> log(const Fe& x) const;

  bool owns(const Fe& x) const noexcept { return impl_ && impl_->same_field(x.field()); }
  void require(const Fe& x) const;

  /// All elements in encoding order; refuses fields larger than kMaxEnumeration.
  std::vector<Fe> elements() const;

  const detail::FieldImpl* impl_ptr() const noexcept { return impl_.get(); }

  friend bool operator==(const FieldCtx& a, const FieldCtx& b) noexcept {
    return a.impl_ == b.impl_ || (a.impl_ && a.impl_->same_field(b.impl_.get()));
  }

 private:
  friend FieldCtx make_field(unsigned m, std::uint32_t modulus);
  explicit FieldCtx(std::shared_ptr<const detail::FieldImpl> impl) : impl_(std::move(impl)) {}
  const detail::FieldImpl& impl() const;

  std::shared_ptr<const detail::FieldImpl> impl_;
};

/// Builds GF(2^m) from an irreducible modulus given as a bit vector (bit i = coefficient of x^i).
FieldCtx make_field(unsigned m, std::uint32_t modulus);

/// Degree -> modulus registry, loaded from a versioned text resource.
class ModulusTable {
 public:
  static const ModulusTable& builtin();
  /// Format: comment lines start with '#', one `version <n>` line, then `<degree> <hex>` lines.
  static ModulusTable parse(std::string_view text);

  int version() const noexcept { return version_; }
  std::optional<std::uint32_t> lookup(unsigned degree) const;
  /// Registers or overrides an entry; the modulus must be irreducible of the given degree.
  void set(unsigned degree, std::uint32_t modulus);
  /// Table entry, or the smallest primitive polynomial of that degree.
  std::uint32_t modulus_for(unsigned degree) const;
  const std::map<unsigned, std::uint32_t>& entries() const noexcept { return entries_; }

 private:
  int version_ = 0;
  std::map<unsigned, std::uint32_t> entries_;
};

FieldCtx field_of_degree(unsigned m, const ModulusTable& table = ModulusTable::builtin());
/// Smallest-encoding primitive polynomial of degree m; throws TableMiss if none exists (never for m <= 24).
std::uint32_t find_primitive_modulus(unsigned m);

/// Sum of x^(2^(sub_degree*i)) for i < sup.degree / sub_degree.
Fe trace(const FieldCtx& sup, unsigned sub_degree, const Fe& x);
/// Absolute trace of an element known to lie in the subfield GF(2^level_degree).
Fe trace_from_level(const Fe& x, unsigned level_degree);
/// Least d dividing (field degree / base_degree) with x^(2^(base_degree*d)) = x.
unsigned degree_over(const Fe& x, unsigned base_degree);

/// Solutions {y, y+1} of y^2 + y = t, smaller encoding first; nullopt iff Tr(t) = 1.
std::optional<std::pair<Fe, Fe>> solve_artin_schreier(const FieldCtx& ctx, const Fe& t);

/// A fixed embedding GF(2^n) -> GF(2^(ns)), determined by the image of x.
class TowerEmbedding {
 public:
  TowerEmbedding(FieldCtx sub, FieldCtx sup, Fe image_of_generator);

  const FieldCtx& sub() const noexcept { return sub_; }
  const FieldCtx& sup() const noexcept { return sup_; }
  const Fe& image_of_generator() const noexcept { return image_; }
  unsigned extension_degree() const { return sup_.degree() / sub_.degree(); }

  Fe embed(const Fe& x) const;
  bool contains(const Fe& y) const;
  std::optional<Fe> try_pullback(const Fe& y) const;
  /// Throws NotInSubfield when y is outside the image.
  Fe pullback(const Fe& y) const;

 private:
  struct Pivot {
    std::uint32_t vec;
    std::uint32_t combo;
    int bit;
  };

  FieldCtx sub_;
  FieldCtx sup_;
  Fe image_;
  std::vector<std::uint32_t> basis_images_;
  std::vector<Pivot> pivots_;
};

/// Embedding of sub into sup with the canonical root of sub's modulus (see build_tower).
TowerEmbedding make_embedding(const FieldCtx& sub, const FieldCtx& sup);

struct Tower {
  FieldCtx field;
  TowerEmbedding embedding;
};

/// GF(q^s) over sub = GF(q). s = 1 returns sub itself with the identity embedding.
/// The embedding sends x to gamma^((2^N-1)/(2^n-1)) for the canonical primitive gamma of
/// the extension when that is a root of sub's modulus, else to the smallest-encoding root.
Tower build_tower(const FieldCtx& sub, unsigned s, const ModulusTable& table = ModulusTable::builtin());

}  // namespace qcgoppa
