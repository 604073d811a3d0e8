#pragma once

// Irreducible polynomials whose root sets are unions of orbits of a Mobius map.

#include <optional>
#include <string>
#include <vector>

#include "qcgoppa/polyring.hpp"
#include "qcgoppa/projline.hpp"

namespace qcgoppa {

/// (cx+d)^r g(A(x)) with denominators cleared, equal to gamma * g.
struct InvariantWitness {
  Fe gamma;
  Poly shifted;
};

/// (cx+d)^r g((ax+b)/(cx+d)) as a polynomial. For c = 1 throws RootAtA when g(a) = 0.
Poly shift_by_mobius(const Poly& g, const Mobius& A);
/// Witness iff the shifted polynomial is a nonzero multiple of g.
std::optional<InvariantWitness> check_invariance(const Poly& g, const Mobius& A);

/// Tests x^(q^e) (c x + d) == a x + b mod g for A^u = ((a,b),(c,d)).
bool frobenius_acts_as(const Poly& g, const Mobius& A, unsigned u, std::uint64_t e);
/// Least u in [0, ord A) with x^(q^e) acting as A^u modulo g, if any.
std::optional<unsigned> frobenius_power(const Poly& g, const Mobius& A, std::uint64_t e);

struct OrbitPolynomial {
  Poly g;
  /// Least s with beta^(q^s) = A^u(beta).
  unsigned s = 0;
  unsigned u = 0;
  bool irreducible = false;
};

/// prod_{j<s} prod_{i<l} (x - A^i(beta^(q^j))) over the base field of emb.
/// A is over emb.sub(), beta lives in emb.sup(). Throws FixedBeta or CoefficientsNotRational.
OrbitPolynomial orbit_polynomial(const Mobius& A, const Fe& beta, const TowerEmbedding& emb);

enum class TLabel { T, T_level, T1, T2 };

struct TSet {
  FieldCtx ctx;
  std::vector<Fe> members;  // ascending encoding
  TLabel label = TLabel::T;
  bool contains(const Fe& k) const;
};

/// {(a + sqrt b)/c : Tr(c) = 1, c in the level field}, with a, b pushed through level.
/// Throws DegenerateMatrix when a^2 = b.
TSet t_set_order2(const Fe& a, const Fe& b, const TowerEmbedding& level);
TSet t_set_order2(const FieldCtx& ctx, const Fe& a, const Fe& b);

/// x^2 + kx + ak + b
Poly g_k_order2(const FieldCtx& ctx, const Fe& a, const Fe& b, const Fe& k);

/// ((a, a^2+ad+d^2),(1,d)) and ((a,b),(1,a)).
Mobius order3_map(const FieldCtx& ctx, const Fe& a, const Fe& d);
Mobius order2_map(const FieldCtx& ctx, const Fe& a, const Fe& b);

/// The primitive cube root of unity g^((q-1)/3); throws NoCubeRootOfUnity when 3 does not divide q - 1.
Fe cube_root_of_unity(const FieldCtx& ctx);

/// T1 and T2 from the two nontrivial cube cosets. Throws NoCubeRootOfUnity, DegenerateMatrix.
std::pair<TSet, TSet> t_sets_order3(const FieldCtx& ctx, const Fe& a, const Fe& d);

/// x^3 + kx^2 + (a^2 + k(a+d) + ad + d^2)x + a^3 + kad + d^3
Poly g_k_order3(const FieldCtx& ctx, const Fe& a, const Fe& d, const Fe& k);

enum class RootCount { triple, three_in_field, none_in_field };
enum class FrobeniusDirection { A_is_frobenius, A2_is_frobenius };

struct CubicClass {
  RootCount root_count = RootCount::triple;
  std::optional<FrobeniusDirection> direction;
  /// Populated for three_in_field: alpha, A(alpha), A^2(alpha); for triple: k once.
  std::vector<Fe> roots;
};

/// Cardano-style classification of g_k_order3 by the cube coset of (a+d)/(k+aw+dw^2) + 1.
CubicClass classify_cubic(const FieldCtx& ctx, const Fe& a, const Fe& d, const Fe& k);

/// One invariant irreducible polynomial with its provenance.
struct InvariantPoly {
  Poly g;
  /// Class representative (smallest encoding among its Frobenius conjugates).
  Fe k;
  /// k has exact degree `level` over the base field.
  unsigned level = 1;
  /// Roots satisfy alpha^(q^level) = A^u(alpha).
  unsigned frobenius_power = 1;
  std::string origin;
};

struct InvariantListing {
  FieldCtx base;
  FieldCtx tower;  // where k lives
  Mobius A;
  std::vector<InvariantPoly> polys;
  /// Excluded k values (perfect cubes) reported for diagnostics.
  std::vector<Fe> degenerate;
  /// Number of admissible k before Frobenius-class reduction.
  std::size_t k_count = 0;
  /// Every admissible k (tower elements), ascending encoding.
  std::vector<Fe> k_all;
};

/// True for s = 1, s = t^e with t an odd prime, or s = t1*t2 with distinct primes t1, t2 > min_prime.
bool admissible_extension(unsigned s, unsigned min_prime);

/// Degree-2s invariant irreducibles for A = ((a,b),(1,a)) from k of exact degree s.
/// Throws UnsupportedS, ScaleExceeded, DegenerateMatrix.
InvariantListing enum_order2_degree_2s(const FieldCtx& ctx, const Fe& a, const Fe& b, unsigned s);

/// Degree-3s invariant irreducibles for A = ((a,a^2+ad+d^2),(1,d)) from k of exact degree s.
InvariantListing enum_order3_degree_3s(const FieldCtx& ctx, const Fe& a, const Fe& d, unsigned s);

enum class HSide { a_side, d_side };

struct HFactorization {
  Poly h;
  std::vector<Poly> factors;  // canonical order
  bool product_checked = false;
};

/// Factors x^(Q+1) + a x^Q + a x + b (order 2) or the order-3 variants, Q = q^s.
/// Throws UnsupportedOrder, UnsupportedS.
HFactorization factor_h(const FieldCtx& ctx, const Mobius& A, unsigned s, HSide side = HSide::a_side);
Poly h_polynomial(const FieldCtx& ctx, const Mobius& A, unsigned s, HSide side = HSide::a_side);

/// Orbit pencil of a prime-order map with c = 1: each member Num + k*Den has the l points of one
/// orbit of A as roots. Returns (Num, Den).
std::pair<Poly, Poly> orbit_pencil(const Mobius& A);

/// All irreducible degree-l members of the orbit pencil of a prime-order A, with their
/// Frobenius powers. Optionally restricted to a single power u.
InvariantListing enum_invariant_prime_order(const Mobius& A, std::optional<unsigned> only_power = std::nullopt);

}  // namespace qcgoppa
