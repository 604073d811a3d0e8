#pragma once

// The projective line over GF(q) and the action of PGL2 on it.

#include <cstdint>
#include <vector>

#include "qcgoppa/gf2e.hpp"

namespace qcgoppa {

class ProjPoint {
 public:
  ProjPoint() = default;
  static ProjPoint infinity() { return ProjPoint(); }
  static ProjPoint finite(const Fe& x) { return ProjPoint(x); }

  bool is_infinity() const noexcept { return inf_; }
  /// Throws InvalidArgument at infinity.
  const Fe& value() const;
  /// Finite points by encoding, infinity above all of them.
  std::uint64_t sort_key() const noexcept { return inf_ ? (std::uint64_t{1} << 32) : x_.bits(); }

  friend bool operator==(const ProjPoint& a, const ProjPoint& b) noexcept {
    return a.inf_ == b.inf_ && (a.inf_ || a.x_ == b.x_);
  }
  friend bool operator<(const ProjPoint& a, const ProjPoint& b) noexcept { return a.sort_key() < b.sort_key(); }

 private:
  explicit ProjPoint(const Fe& x) : inf_(false), x_(x) {}

  bool inf_ = true;
  Fe x_;
};

/// x -> (ax+b)/(cx+d), stored with c in {0,1}; when c = 0 the matrix is scaled so d = 1.
class Mobius {
 public:
  /// Normalizes the representative; throws SingularMatrix when ad + bc = 0.
  static Mobius make(const FieldCtx& ctx, const Fe& a, const Fe& b, const Fe& c, const Fe& d);
  static Mobius identity(const FieldCtx& ctx);

  const FieldCtx& ctx() const noexcept { return ctx_; }
  const Fe& a() const noexcept { return a_; }
  const Fe& b() const noexcept { return b_; }
  const Fe& c() const noexcept { return c_; }
  const Fe& d() const noexcept { return d_; }
  bool c_is_one() const noexcept { return c_.is_one(); }
  bool is_identity() const noexcept { return c_.is_zero() && b_.is_zero() && a_.is_one(); }

  ProjPoint apply(const ProjPoint& p) const;
  /// The adjugate ((d,b),(c,a)); for c = 1 this is ((d,b),(1,a)).
  Mobius inverse() const;
  Mobius pow(std::uint64_t e) const;

  /// Composition: (A * B)(x) = A(B(x)).
  friend Mobius operator*(const Mobius& A, const Mobius& B);
  friend bool operator==(const Mobius& A, const Mobius& B) noexcept {
    return A.a_ == B.a_ && A.b_ == B.b_ && A.c_ == B.c_ && A.d_ == B.d_;
  }

 private:
  Mobius(FieldCtx ctx, Fe a, Fe b, Fe c, Fe d)
      : ctx_(std::move(ctx)), a_(a), b_(b), c_(c), d_(d) {}

  FieldCtx ctx_;
  Fe a_, b_, c_, d_;
};

/// Least l >= 1 with A^l = identity; throws OrderNotFound past q + 1.
std::uint64_t mobius_order(const Mobius& A);

/// GF(q) in encoding order followed by infinity.
std::vector<ProjPoint> projective_line(const FieldCtx& ctx);

struct Orbit {
  /// points[i+1] = A(points[i]); points[0] is the smallest member.
  std::vector<ProjPoint> points;
  std::size_t size() const noexcept { return points.size(); }
  bool contains(const ProjPoint& p) const;
};

/// Partition of domain into A-orbits ordered by smallest member.
/// Throws DomainNotClosed (naming a witness) or InvalidArgument on duplicates.
std::vector<Orbit> orbits(const Mobius& A, const std::vector<ProjPoint>& domain);

enum class NlFilter { all, a_zero, d_zero, b_zero };

/// The order-2 family ((a,b),(1,a)), a^2 != b, or the order-3 family ((a, a^2+ad+d^2),(1,d)), a != d.
/// Filters pick the order-3 subfamilies with a = 0, d = 0 or b = 0.
std::vector<Mobius> enum_order_l(const FieldCtx& ctx, unsigned l, NlFilter filter = NlFilter::all);

/// psi with support[psi[i]] = A^-1(support[i]).
std::vector<std::size_t> induced_permutation(const Mobius& A, const std::vector<ProjPoint>& support);

/// The same map with entries pushed through a field embedding.
Mobius embed(const TowerEmbedding& emb, const Mobius& A);

/// Flattens orbits into one point list, preserving block order.
std::vector<ProjPoint> flatten(const std::vector<Orbit>& blocks);

}  // namespace qcgoppa
