#include "qcgoppa/invariant.hpp"

#include <algorithm>
#include <functional>

namespace qcgoppa {

// ---------------------------------------------------------------------------
// Invariance and Frobenius action

Poly shift_by_mobius(const Poly& g, const Mobius& A) {
  const FieldCtx& ctx = g.ctx();
  if (!(ctx == A.ctx())) throw Error(Errc::ContextMismatch, "polynomial and map over different fields");
  if (g.is_zero()) throw Error(Errc::InvalidArgument, "shift of the zero polynomial");
  if (A.c_is_one() && g.eval(A.a()).is_zero())
    throw Error(Errc::RootAtA, "g(a) = 0, the shifted polynomial loses degree");
  const auto r = static_cast<std::size_t>(g.degree());
  const Poly num(ctx, {A.b(), A.a()});
  const Poly den(ctx, {A.d(), A.c()});
  std::vector<Poly> num_pow{Poly::constant(ctx, ctx.one())}, den_pow{Poly::constant(ctx, ctx.one())};
  for (std::size_t i = 1; i <= r; ++i) {
    num_pow.push_back(num_pow.back() * num);
    den_pow.push_back(den_pow.back() * den);
  }
  Poly out(ctx);
  for (std::size_t i = 0; i <= r; ++i) {
    if (g.coeffs()[i].is_zero()) continue;
    out += (num_pow[i] * den_pow[r - i]).scaled(g.coeffs()[i]);
  }
  return out;
}

std::optional<InvariantWitness> check_invariance(const Poly& g, const Mobius& A) {
  Poly shifted = shift_by_mobius(g, A);
  if (shifted.degree() != g.degree()) return std::nullopt;
  const Fe gamma = shifted.lead() / g.lead();
  if (!(shifted == g.scaled(gamma))) return std::nullopt;
  return InvariantWitness{gamma, std::move(shifted)};
}

namespace {

bool frobenius_matches(const Poly& g, const Poly& xq, const Mobius& B) {
  const FieldCtx& ctx = g.ctx();
  const Poly lhs = mulmod(xq, Poly(ctx, {B.d(), B.c()}), g);
  const Poly rhs = Poly(ctx, {B.b(), B.a()}) % g;
  return lhs == rhs;
}

}  // namespace

bool frobenius_acts_as(const Poly& g, const Mobius& A, unsigned u, std::uint64_t e) {
  return frobenius_matches(g, frobenius_mod(g, e), A.pow(u));
}

std::optional<unsigned> frobenius_power(const Poly& g, const Mobius& A, std::uint64_t e) {
  const Poly xq = frobenius_mod(g, e);
  const auto l = mobius_order(A);
  Mobius B = Mobius::identity(A.ctx());
  for (unsigned u = 0; u < l; ++u) {
    if (frobenius_matches(g, xq, B)) return u;
    B = A * B;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Orbit polynomials

OrbitPolynomial orbit_polynomial(const Mobius& A, const Fe& beta, const TowerEmbedding& emb) {
  if (!(A.ctx() == emb.sub())) throw Error(Errc::ContextMismatch, "map is not over the embedded subfield");
  emb.sup().require(beta);
  const Mobius As = embed(emb, A);
  const ProjPoint b = ProjPoint::finite(beta);
  if (As.apply(b) == b) throw Error(Errc::FixedBeta, "beta is a fixed point of A");
  const auto l = mobius_order(A);
  std::vector<ProjPoint> a_orbit{b};
  for (ProjPoint p = As.apply(b); !(p == b); p = As.apply(p)) a_orbit.push_back(p);

  const unsigned n = emb.sub().degree();
  const unsigned max_s = emb.sup().degree() / n;
  OrbitPolynomial out;
  for (unsigned s = 1; s <= max_s && out.s == 0; ++s) {
    const ProjPoint img = ProjPoint::finite(beta.frobenius(std::uint64_t{n} * s));
    for (unsigned u = 0; u < a_orbit.size(); ++u) {
      if (a_orbit[u] == img) {
        out.s = s;
        out.u = u;
        break;
      }
    }
  }
  if (out.s == 0) throw Error(Errc::Internal, "no Frobenius power lands in the orbit");

  std::vector<Fe> roots;
  for (unsigned j = 0; j < out.s; ++j) {
    ProjPoint p = ProjPoint::finite(beta.frobenius(std::uint64_t{n} * j));
    for (std::uint64_t i = 0; i < l; ++i) {
      if (!p.is_infinity()) roots.push_back(p.value());
      p = As.apply(p);
    }
  }
  out.g = pullback(emb, from_roots(emb.sup(), roots));
  out.irreducible = out.g.degree() >= 1 && is_irreducible(out.g);
  return out;
}

// ---------------------------------------------------------------------------
// Order 2

bool TSet::contains(const Fe& k) const {
  return std::binary_search(members.begin(), members.end(), k, FeLess{});
}

Mobius order2_map(const FieldCtx& ctx, const Fe& a, const Fe& b) { return Mobius::make(ctx, a, b, ctx.one(), a); }

Mobius order3_map(const FieldCtx& ctx, const Fe& a, const Fe& d) {
  return Mobius::make(ctx, a, a.square() + a * d + d.square(), ctx.one(), d);
}

TSet t_set_order2(const Fe& a, const Fe& b, const TowerEmbedding& level) {
  level.sub().require(a);
  level.sub().require(b);
  if (a.square() == b) throw Error(Errc::DegenerateMatrix, "a^2 = b, the map is singular");
  const FieldCtx& L = level.sup();
  const Fe num = level.embed(a) + level.embed(b).sqrt();
  TSet t{L, {}, level.extension_degree() == 1 ? TLabel::T : TLabel::T_level};
  for (const Fe& c : L.elements()) {
    if (!c.is_zero() && trace(L, 1, c).is_one()) t.members.push_back(num / c);
  }
  std::sort(t.members.begin(), t.members.end(), FeLess{});
  return t;
}

TSet t_set_order2(const FieldCtx& ctx, const Fe& a, const Fe& b) {
  return t_set_order2(a, b, TowerEmbedding(ctx, ctx, ctx.x()));
}

Poly g_k_order2(const FieldCtx& ctx, const Fe& a, const Fe& b, const Fe& k) {
  return Poly(ctx, {a * k + b, k, ctx.one()});
}

// ---------------------------------------------------------------------------
// Order 3

Fe cube_root_of_unity(const FieldCtx& ctx) {
  const std::uint64_t q1 = ctx.size() - 1;
  if (q1 % 3 != 0) throw Error(Errc::NoCubeRootOfUnity, "3 does not divide q - 1");
  return ctx.gen_pow(static_cast<std::int64_t>(q1 / 3));
}

std::pair<TSet, TSet> t_sets_order3(const FieldCtx& ctx, const Fe& a, const Fe& d) {
  const Fe w = cube_root_of_unity(ctx);
  if (a == d) throw Error(Errc::DegenerateMatrix, "a = d, the map is singular");
  const Fe shift = a * w + d * w.square();
  TSet t1{ctx, {}, TLabel::T1}, t2{ctx, {}, TLabel::T2};
  for (const Fe& c : ctx.elements()) {
    if (c.is_zero()) continue;
    const auto j = *ctx.log(c) % 3;
    if (j == 0) continue;
    const Fe k = (a + d) / (c + ctx.one()) + shift;
    (j == 1 ? t1 : t2).members.push_back(k);
  }
  std::sort(t1.members.begin(), t1.members.end(), FeLess{});
  std::sort(t2.members.begin(), t2.members.end(), FeLess{});
  return {t1, t2};
}

Poly g_k_order3(const FieldCtx& ctx, const Fe& a, const Fe& d, const Fe& k) {
  const Fe lin = a.square() + k * (a + d) + a * d + d.square();
  const Fe c0 = a.square() * a + k * a * d + d.square() * d;
  return Poly(ctx, {c0, lin, k, ctx.one()});
}

CubicClass classify_cubic(const FieldCtx& ctx, const Fe& a, const Fe& d, const Fe& k) {
  const Fe w = cube_root_of_unity(ctx);
  if (a == d) throw Error(Errc::DegenerateMatrix, "a = d, the map is singular");
  const Fe w2 = w.square();
  const Fe shift = a * w + d * w2;
  CubicClass out;
  const Fe den = k + shift;
  if (den.is_zero()) {
    out.roots = {k};
    return out;
  }
  const Fe c = (a + d) / den + ctx.one();
  if (c.is_zero()) {
    out.roots = {k};
    return out;
  }
  const Fe v = c.pow((ctx.size() - 1) / 3);
  if (v.is_one()) {
    out.root_count = RootCount::three_in_field;
    const Fe nu = ctx.gen_pow(static_cast<std::int64_t>(*ctx.log(c) / 3));
    for (const Fe& z : {nu, w2 * nu, w * nu}) out.roots.push_back((a + d) / (z + ctx.one()) + shift);
    return out;
  }
  out.root_count = RootCount::none_in_field;
  out.direction = v == w ? FrobeniusDirection::A2_is_frobenius : FrobeniusDirection::A_is_frobenius;
  return out;
}

// ---------------------------------------------------------------------------
// Tower strata

bool admissible_extension(unsigned s, unsigned min_prime) {
  if (s == 1) return true;
  if (s == 0) return false;
  const auto primes = prime_factors(s);
  if (primes.size() == 1) return primes[0] % 2 == 1;
  if (primes.size() == 2 && primes[0] * primes[1] == s) return primes[0] > min_prime && primes[1] > min_prime;
  return false;
}

namespace {

// Frobenius power u of a stratum element, or nullopt when its polynomial is not an invariant irreducible.
using KClassifier = std::function<std::optional<unsigned>(const Fe& k, unsigned level)>;
using GkBuilder = std::function<Poly(const Fe& k)>;

struct StratumScan {
  std::vector<InvariantPoly> polys;
  std::size_t k_count = 0;
  std::vector<Fe> k_all;
};

Fe class_rep(const Fe& k, unsigned n, unsigned level) {
  Fe rep = k;
  Fe y = k;
  for (unsigned j = 1; j < level; ++j) {
    y = y.frobenius(n);
    if (y.bits() < rep.bits()) rep = y;
  }
  return rep;
}

void scan_stratum(const Tower& tower, const Mobius& A, unsigned level, const KClassifier& classify,
                  const GkBuilder& gk, const std::string& origin, const std::function<bool(unsigned)>& keep,
                  StratumScan& out) {
  const FieldCtx& L = tower.field;
  const unsigned n = tower.embedding.sub().degree();
  for (const Fe& k : L.elements()) {
    if (degree_over(k, n) != level) continue;
    const auto u = classify(k, level);
    if (!u || !keep(*u)) continue;
    ++out.k_count;
    out.k_all.push_back(k);
    if (!(class_rep(k, n, level) == k)) continue;
    std::vector<Poly> parts;
    Fe y = k;
    for (unsigned j = 0; j < level; ++j) {
      parts.push_back(gk(y));
      y = y.frobenius(n);
    }
    Poly G = pullback(tower.embedding, product(L, parts));
    if (!is_irreducible(G)) throw Error(Errc::Internal, "stratum product is reducible");
    if (!check_invariance(G, A)) throw Error(Errc::Internal, "stratum product is not invariant");
    if (!frobenius_acts_as(G, A, *u, level)) throw Error(Errc::Internal, "Frobenius action mismatch");
    out.polys.push_back(InvariantPoly{std::move(G), k, level, *u, origin});
  }
}

void require_scale(const FieldCtx& ctx, unsigned s) {
  if (std::uint64_t{ctx.degree()} * s > 20)
    throw Error(Errc::ScaleExceeded, "extension GF(q^" + std::to_string(s) + ") is above 2^20 elements");
}

struct Order2Setup {
  Tower tower;
  Fe num;  // a + sqrt(b), embedded
  Fe a, b; // embedded
};

Order2Setup order2_setup(const FieldCtx& ctx, const Fe& a, const Fe& b, unsigned s) {
  ctx.require(a);
  ctx.require(b);
  if (a.square() == b) throw Error(Errc::DegenerateMatrix, "a^2 = b, the map is singular");
  if (!admissible_extension(s, 2))
    throw Error(Errc::UnsupportedS, "s must be 1, a power of an odd prime, or a product of two distinct odd primes");
  require_scale(ctx, s);
  Tower tower = build_tower(ctx, s);
  const Fe ea = tower.embedding.embed(a);
  const Fe eb = tower.embedding.embed(b);
  return Order2Setup{tower, ea + eb.sqrt(), ea, eb};
}

KClassifier order2_classifier(const Order2Setup& st) {
  const unsigned n = st.tower.embedding.sub().degree();
  return [num = st.num, n](const Fe& k, unsigned level) -> std::optional<unsigned> {
    if (k.is_zero()) return std::nullopt;
    if (!trace_from_level(num / k, n * level).is_one()) return std::nullopt;
    return 1u;
  };
}

GkBuilder order2_builder(const Order2Setup& st) {
  return [L = st.tower.field, a = st.a, b = st.b](const Fe& k) { return g_k_order2(L, a, b, k); };
}

struct Order3Setup {
  Tower tower;
  Fe a, d, w, shift;  // embedded
};

Order3Setup order3_setup(const FieldCtx& ctx, const Fe& a, const Fe& d, unsigned s) {
  ctx.require(a);
  ctx.require(d);
  const Fe w = cube_root_of_unity(ctx);
  if (a == d) throw Error(Errc::DegenerateMatrix, "a = d, the map is singular");
  if (!admissible_extension(s, 3))
    throw Error(Errc::UnsupportedS, "s must be 1, a prime power t^e with t odd, or a product of two distinct primes above 3");
  require_scale(ctx, s);
  Tower tower = build_tower(ctx, s);
  const auto& e = tower.embedding;
  const Fe ew = e.embed(w);
  return Order3Setup{tower, e.embed(a), e.embed(d), ew, e.embed(a) * ew + e.embed(d) * ew.square()};
}

KClassifier order3_classifier(const Order3Setup& st, std::vector<Fe>* degenerate) {
  const unsigned n = st.tower.embedding.sub().degree();
  return [st, n, degenerate](const Fe& k, unsigned level) -> std::optional<unsigned> {
    const Fe den = k + st.shift;
    const Fe one = st.tower.field.one();
    if (den.is_zero()) {
      if (degenerate) degenerate->push_back(k);
      return std::nullopt;
    }
    const Fe c = (st.a + st.d) / den + one;
    if (c.is_zero()) {
      if (degenerate) degenerate->push_back(k);
      return std::nullopt;
    }
    const std::uint64_t Q = std::uint64_t{1} << (n * level);
    const Fe v = c.pow((Q - 1) / 3);
    if (v.is_one()) return std::nullopt;
    return v == st.w ? 2u : 1u;
  };
}

GkBuilder order3_builder(const Order3Setup& st) {
  return [L = st.tower.field, a = st.a, d = st.d](const Fe& k) { return g_k_order3(L, a, d, k); };
}

InvariantListing finish_listing(const FieldCtx& base, const Tower& tower, const Mobius& A, StratumScan&& scan,
                                std::vector<Fe> degenerate) {
  InvariantListing out{base, tower.field, A, std::move(scan.polys), {}, scan.k_count, std::move(scan.k_all)};
  for (const Fe& k : degenerate) out.degenerate.push_back(tower.embedding.pullback(k));
  std::stable_sort(out.polys.begin(), out.polys.end(),
                   [](const InvariantPoly& x, const InvariantPoly& y) { return canonical_less(x.g, y.g); });
  return out;
}

}  // namespace

InvariantListing enum_order2_degree_2s(const FieldCtx& ctx, const Fe& a, const Fe& b, unsigned s) {
  const Order2Setup st = order2_setup(ctx, a, b, s);
  const Mobius A = order2_map(ctx, a, b);
  StratumScan scan;
  scan_stratum(st.tower, A, s, order2_classifier(st), order2_builder(st), "trace set", [](unsigned) { return true; },
               scan);
  return finish_listing(ctx, st.tower, A, std::move(scan), {});
}

InvariantListing enum_order3_degree_3s(const FieldCtx& ctx, const Fe& a, const Fe& d, unsigned s) {
  const Order3Setup st = order3_setup(ctx, a, d, s);
  const Mobius A = order3_map(ctx, a, d);
  StratumScan scan;
  std::vector<Fe> degenerate;
  scan_stratum(st.tower, A, s, order3_classifier(st, &degenerate), order3_builder(st), "cube coset",
               [](unsigned) { return true; }, scan);
  for (auto& p : scan.polys) p.origin = p.frobenius_power == 2 ? "cube coset T1" : "cube coset T2";
  return finish_listing(ctx, st.tower, A, std::move(scan), std::move(degenerate));
}

// ---------------------------------------------------------------------------
// h(x)

Poly h_polynomial(const FieldCtx& ctx, const Mobius& A, unsigned s, HSide side) {
  if (!(A.ctx() == ctx)) throw Error(Errc::ContextMismatch, "map over a different field");
  if (!A.c_is_one()) throw Error(Errc::UnsupportedOrder, "h(x) needs c = 1");
  if (std::uint64_t{ctx.degree()} * s > 20) throw Error(Errc::ScaleExceeded, "q^s above 2^20");
  const std::size_t Q = std::size_t{1} << (ctx.degree() * s);
  const bool swap = side == HSide::d_side;
  std::vector<Fe> v(Q + 2, ctx.zero());
  v[Q + 1] = ctx.one();
  v[Q] = swap ? A.d() : A.a();
  v[1] = swap ? A.a() : A.d();
  v[0] = A.b();
  return Poly(ctx, std::move(v));
}

HFactorization factor_h(const FieldCtx& ctx, const Mobius& A, unsigned s, HSide side) {
  if (!(A.ctx() == ctx)) throw Error(Errc::ContextMismatch, "map over a different field");
  const auto l = mobius_order(A);
  if ((l != 2 && l != 3) || !A.c_is_one()) throw Error(Errc::UnsupportedOrder, "h(x) factors for orders 2 and 3 with c = 1");
  HFactorization out;
  out.h = h_polynomial(ctx, A, s, side);
  StratumScan scan;
  // Roots of h satisfy alpha^(q^s) = A^target(alpha).
  unsigned target = 1;
  if (l == 2) {
    const Order2Setup st = order2_setup(ctx, A.a(), A.b(), s);
    out.factors.push_back(Poly::linear(ctx, A.b().sqrt()));
    for (unsigned e = 1; e <= s; ++e) {
      if (s % e != 0) continue;
      scan_stratum(st.tower, A, e, order2_classifier(st), order2_builder(st), "trace set",
                   [&](unsigned u) { return (u * (s / e)) % 2 == target; }, scan);
    }
  } else {
    target = side == HSide::a_side ? 2 : 1;
    const Order3Setup st = order3_setup(ctx, A.a(), A.d(), s);
    const Fe w = cube_root_of_unity(ctx);
    out.factors.push_back(Poly::linear(ctx, A.a() * w + A.d() * w.square()));
    out.factors.push_back(Poly::linear(ctx, A.a() * w.square() + A.d() * w));
    for (unsigned e = 1; e <= s; ++e) {
      if (s % e != 0) continue;
      scan_stratum(st.tower, A, e, order3_classifier(st, nullptr), order3_builder(st), "cube coset",
                   [&](unsigned u) { return (u * (s / e)) % 3 == target; }, scan);
    }
  }
  for (auto& p : scan.polys) out.factors.push_back(std::move(p.g));
  sort_canonical(out.factors);
  std::size_t total = 0;
  for (const auto& f : out.factors) total += static_cast<std::size_t>(f.degree());
  if (total != static_cast<std::size_t>(out.h.degree()))
    throw Error(Errc::Internal, "factor degrees do not sum to deg h");
  if (std::uint64_t{ctx.degree()} * s <= 14) {
    if (!(product(ctx, out.factors) == out.h)) throw Error(Errc::Internal, "factors do not multiply back to h");
    out.product_checked = true;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Orbit pencil

std::pair<Poly, Poly> orbit_pencil(const Mobius& A) {
  const FieldCtx& ctx = A.ctx();
  if (!A.c_is_one()) throw Error(Errc::UnsupportedOrder, "orbit pencil needs a map moving infinity (c = 1)");
  const auto l = mobius_order(A);
  std::vector<Mobius> powers;
  Mobius P = A;
  for (std::uint64_t i = 1; i < l; ++i) {
    if (!P.c_is_one()) throw Error(Errc::InvalidArgument, "infinity has a short orbit");
    powers.push_back(P);
    P = P * A;
  }
  std::vector<Fe> poles;
  for (const auto& B : powers) poles.push_back(B.a());  // B(inf) = a / c
  const Poly D = from_roots(ctx, poles);
  Poly num = Poly::x(ctx) * D;
  for (const auto& B : powers) num += Poly(ctx, {B.b(), B.a()}) * exact_div(D, Poly::linear(ctx, B.d()));
  return {num, D};
}

InvariantListing enum_invariant_prime_order(const Mobius& A, std::optional<unsigned> only_power) {
  const FieldCtx& ctx = A.ctx();
  const auto l = mobius_order(A);
  if (!is_prime(l)) throw Error(Errc::UnsupportedOrder, "map order " + std::to_string(l) + " is not prime");
  auto [num, den] = orbit_pencil(A);
  InvariantListing out{ctx, ctx, A, {}, {}, 0, {}};
  for (const Fe& k : ctx.elements()) {
    const Poly g = num + den.scaled(k);
    if (!is_irreducible(g)) continue;
    const auto u = frobenius_power(g, A, 1);
    if (!u) throw Error(Errc::Internal, "irreducible pencil member without Frobenius action");
    ++out.k_count;
    out.k_all.push_back(k);
    if (only_power && *u != *only_power) continue;
    out.polys.push_back(InvariantPoly{g, k, 1, *u, "orbit pencil"});
  }
  std::stable_sort(out.polys.begin(), out.polys.end(),
                   [](const InvariantPoly& x, const InvariantPoly& y) { return canonical_less(x.g, y.g); });
  return out;
}

}  // namespace qcgoppa
