#pragma once

// Dense univariate polynomials over a binary field.

#include <cstdint>
#include <vector>

#include "qcgoppa/gf2e.hpp"

namespace qcgoppa {

class Poly {
 public:
  Poly() = default;
  /// The zero polynomial over ctx.
  explicit Poly(FieldCtx ctx);
  /// Coefficients lowest degree first; trailing zeros are stripped.
  Poly(FieldCtx ctx, std::vector<Fe> coeffs);

  static Poly constant(const FieldCtx& ctx, const Fe& c);
  static Poly x(const FieldCtx& ctx);
  static Poly monomial(const FieldCtx& ctx, const Fe& c, unsigned degree);
  /// x + r
  static Poly linear(const FieldCtx& ctx, const Fe& r);

  const FieldCtx& ctx() const noexcept { return ctx_; }
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  const std::vector<Fe>& coeffs() const noexcept { return coeffs_; }
  /// Zero beyond the degree.
  Fe coeff(std::size_t i) const;
  Fe lead() const;
  bool is_monic() const { return !is_zero() && lead().is_one(); }

  Fe eval(const Fe& at) const;
  Poly derivative() const;
  Poly monic() const;
  Poly scaled(const Fe& c) const;

  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b) { return a + b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly& operator+=(const Poly& o) { return *this = *this + o; }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }
  friend bool operator==(const Poly& a, const Poly& b);

 private:
  void trim();

  FieldCtx ctx_;
  std::vector<Fe> coeffs_;
};

struct DivMod {
  Poly quotient;
  Poly remainder;
};

DivMod divmod(const Poly& a, const Poly& b);
Poly operator%(const Poly& a, const Poly& b);
/// Quotient; the remainder is discarded.
Poly operator/(const Poly& a, const Poly& b);
/// Quotient of an exact division; throws Internal if b does not divide a.
Poly exact_div(const Poly& a, const Poly& b);
/// Monic gcd; gcd(0, 0) = 0.
Poly gcd(const Poly& a, const Poly& b);

Poly mulmod(const Poly& a, const Poly& b, const Poly& m);
Poly powmod(const Poly& base, std::uint64_t e, const Poly& m);
/// p^(q^e) mod m, by n*e squarings where q = 2^n.
Poly qpow_mod(const Poly& p, std::uint64_t e, const Poly& m);
/// x^(q^e) mod f.
Poly frobenius_mod(const Poly& f, std::uint64_t e);

/// Frobenius-based test. Throws DegreeZero for constants.
bool is_irreducible(const Poly& f);
/// Trial division by every monic polynomial of degree <= deg f / 2.
/// Throws ScaleExceeded when q^(deg f / 2) > 2^20.
bool is_irreducible_oracle(const Poly& f);
bool oracle_feasible(const Poly& f);

/// Distinct roots lying in f's own field, ascending by encoding.
std::vector<Fe> roots_in_ctx(const Poly& f);

struct Factorization {
  Fe unit;
  /// Monic irreducible factors, repeated by multiplicity, in canonical order.
  std::vector<Poly> factors;
};

/// Brute-force factorization: roots first, then trial division by ascending degree.
/// Throws ScaleExceeded when a trial-division degree would need more than 2^22 candidates.
Factorization factor_oracle(const Poly& f);

/// Orders by degree, then by coefficient encodings from the leading term down.
bool canonical_less(const Poly& a, const Poly& b);
void sort_canonical(std::vector<Poly>& polys);

/// Product of polys over ctx via a balanced tree; the empty product is 1.
Poly product(const FieldCtx& ctx, const std::vector<Poly>& polys);
/// Product of (x + r) over roots.
Poly from_roots(const FieldCtx& ctx, const std::vector<Fe>& roots);

Poly embed(const TowerEmbedding& emb, const Poly& p);
std::optional<Poly> try_pullback(const TowerEmbedding& emb, const Poly& p);
/// Throws CoefficientsNotRational when some coefficient lies outside the subfield.
Poly pullback(const TowerEmbedding& emb, const Poly& p);

}  // namespace qcgoppa
