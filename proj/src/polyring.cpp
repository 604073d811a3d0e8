#include "qcgoppa/polyring.hpp"

#include <algorithm>

namespace qcgoppa {

namespace {

void require_ctx(const Poly& a, const Poly& b) {
  if (!(a.ctx() == b.ctx())) throw Error(Errc::ContextMismatch, "polynomials over different fields");
}

}  // namespace

Poly::Poly(FieldCtx ctx) : ctx_(std::move(ctx)) {}

Poly::Poly(FieldCtx ctx, std::vector<Fe> coeffs) : ctx_(std::move(ctx)), coeffs_(std::move(coeffs)) {
  for (const Fe& c : coeffs_) ctx_.require(c);
  trim();
}

void Poly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Poly Poly::constant(const FieldCtx& ctx, const Fe& c) { return Poly(ctx, {c}); }
Poly Poly::x(const FieldCtx& ctx) { return Poly(ctx, {ctx.zero(), ctx.one()}); }

Poly Poly::monomial(const FieldCtx& ctx, const Fe& c, unsigned degree) {
  std::vector<Fe> v(degree + 1, ctx.zero());
  v[degree] = c;
  return Poly(ctx, std::move(v));
}

Poly Poly::linear(const FieldCtx& ctx, const Fe& r) { return Poly(ctx, {r, ctx.one()}); }

Fe Poly::coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : ctx_.zero(); }

Fe Poly::lead() const {
  if (is_zero()) throw Error(Errc::DivisionByZeroPoly, "leading coefficient of the zero polynomial");
  return coeffs_.back();
}

Fe Poly::eval(const Fe& at) const {
  ctx_.require(at);
  Fe acc = ctx_.zero();
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * at + *it;
  return acc;
}

Poly Poly::derivative() const {
  std::vector<Fe> v;
  for (std::size_t i = 1; i < coeffs_.size(); ++i) v.push_back(i % 2 == 1 ? coeffs_[i] : ctx_.zero());
  return Poly(ctx_, std::move(v));
}

Poly Poly::monic() const {
  if (is_zero()) throw Error(Errc::DivisionByZeroPoly, "monic form of the zero polynomial");
  return scaled(lead().inv());
}

Poly Poly::scaled(const Fe& c) const {
  std::vector<Fe> v = coeffs_;
  for (Fe& e : v) e *= c;
  return Poly(ctx_, std::move(v));
}

Poly operator+(const Poly& a, const Poly& b) {
  require_ctx(a, b);
  std::vector<Fe> v(std::max(a.coeffs_.size(), b.coeffs_.size()), a.ctx_.zero());
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) v[i] = a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) v[i] += b.coeffs_[i];
  return Poly(a.ctx_, std::move(v));
}

Poly operator*(const Poly& a, const Poly& b) {
  require_ctx(a, b);
  if (a.is_zero() || b.is_zero()) return Poly(a.ctx_);
  std::vector<Fe> v(a.coeffs_.size() + b.coeffs_.size() - 1, a.ctx_.zero());
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return Poly(a.ctx_, std::move(v));
}

bool operator==(const Poly& a, const Poly& b) {
  if (!(a.ctx_ == b.ctx_)) return false;
  if (a.coeffs_.size() != b.coeffs_.size()) return false;
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    if (a.coeffs_[i].bits() != b.coeffs_[i].bits()) return false;
  return true;
}

DivMod divmod(const Poly& a, const Poly& b) {
  require_ctx(a, b);
  if (b.is_zero()) throw Error(Errc::DivisionByZeroPoly, "division by the zero polynomial");
  const FieldCtx& ctx = a.ctx();
  if (a.degree() < b.degree()) return {Poly(ctx), a};
  std::vector<Fe> r = a.coeffs();
  std::vector<Fe> q(static_cast<std::size_t>(a.degree() - b.degree() + 1), ctx.zero());
  const Fe inv_lead = b.lead().inv();
  const auto db = static_cast<std::size_t>(b.degree());
  const auto& bc = b.coeffs();
  for (std::size_t i = r.size(); i-- > db;) {
    if (r[i].is_zero()) continue;
    const Fe f = r[i] * inv_lead;
    q[i - db] = f;
    for (std::size_t j = 0; j <= db; ++j) r[i - db + j] += f * bc[j];
  }
  r.resize(db);
  return {Poly(ctx, std::move(q)), Poly(ctx, std::move(r))};
}

Poly operator%(const Poly& a, const Poly& b) { return divmod(a, b).remainder; }
Poly operator/(const Poly& a, const Poly& b) { return divmod(a, b).quotient; }

Poly exact_div(const Poly& a, const Poly& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw Error(Errc::Internal, "division expected to be exact");
  return q;
}

Poly gcd(const Poly& a, const Poly& b) {
  require_ctx(a, b);
  Poly x = a, y = b;
  while (!y.is_zero()) {
    Poly r = x % y;
    x = std::move(y);
    y = std::move(r);
  }
  return x.is_zero() ? x : x.monic();
}

Poly mulmod(const Poly& a, const Poly& b, const Poly& m) { return (a * b) % m; }

Poly powmod(const Poly& base, std::uint64_t e, const Poly& m) {
  Poly r = Poly::constant(m.ctx(), m.ctx().one()) % m;
  Poly b = base % m;
  while (e != 0) {
    if (e & 1u) r = mulmod(r, b, m);
    b = mulmod(b, b, m);
    e >>= 1;
  }
  return r;
}

Poly qpow_mod(const Poly& p, std::uint64_t e, const Poly& m) {
  Poly r = p % m;
  const std::uint64_t squarings = e * m.ctx().degree();
  for (std::uint64_t i = 0; i < squarings; ++i) r = mulmod(r, r, m);
  return r;
}

Poly frobenius_mod(const Poly& f, std::uint64_t e) {
  if (f.degree() < 1) throw Error(Errc::DegreeZero, "Frobenius modulo a constant");
  return qpow_mod(Poly::x(f.ctx()), e, f);
}

bool is_irreducible(const Poly& f) {
  if (f.degree() < 1) throw Error(Errc::DegreeZero, "irreducibility of a constant");
  if (f.degree() == 1) return true;
  const Poly g = f.monic();
  const auto d = static_cast<std::uint64_t>(g.degree());
  const Poly x = Poly::x(g.ctx());
  if (!(frobenius_mod(g, d) == x % g)) return false;
  for (std::uint64_t r : prime_factors(d)) {
    const Poly t = frobenius_mod(g, d / r) + x;
    if (gcd(g, t).degree() != 0) return false;
  }
  return true;
}

namespace {

// The idx-th monic polynomial of degree d, reading idx in base q.
Poly monic_candidate(const FieldCtx& ctx, unsigned d, std::uint64_t idx) {
  std::vector<Fe> v(d + 1, ctx.zero());
  const unsigned n = ctx.degree();
  const std::uint64_t mask = ctx.size() - 1;
  for (unsigned i = 0; i < d; ++i) {
    v[i] = ctx.elem(static_cast<std::uint32_t>(idx & mask));
    idx >>= n;
  }
  v[d] = ctx.one();
  return Poly(ctx, std::move(v));
}

}  // namespace

bool oracle_feasible(const Poly& f) {
  if (f.degree() < 1) return false;
  const std::uint64_t bits = std::uint64_t{f.ctx().degree()} * static_cast<std::uint64_t>(f.degree() / 2);
  return bits <= 20;
}

bool is_irreducible_oracle(const Poly& f) {
  if (f.degree() < 1) throw Error(Errc::DegreeZero, "irreducibility of a constant");
  if (!oracle_feasible(f)) throw Error(Errc::ScaleExceeded, "trial division would exceed 2^20 candidates");
  const FieldCtx& ctx = f.ctx();
  const auto half = static_cast<unsigned>(f.degree() / 2);
  for (unsigned d = 1; d <= half; ++d) {
    const std::uint64_t count = std::uint64_t{1} << (ctx.degree() * d);
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      if ((f % monic_candidate(ctx, d, idx)).is_zero()) return false;
    }
  }
  return true;
}

namespace {

// Splits a monic product of distinct linear factors.
void split_linear(const Poly& g, std::vector<Fe>& out) {
  if (g.degree() < 1) return;
  const FieldCtx& ctx = g.ctx();
  if (g.degree() == 1) {
    out.push_back(g.coeff(0) / g.lead());
    return;
  }
  for (unsigned i = 0; i < ctx.degree(); ++i) {
    // Tr(beta x) mod g separates roots with different traces.
    Poly p = Poly::monomial(ctx, ctx.elem(std::uint32_t{1} << i), 1) % g;
    Poly acc = p;
    for (unsigned j = 1; j < ctx.degree(); ++j) {
      p = mulmod(p, p, g);
      acc += p;
    }
    Poly h = gcd(g, acc);
    if (h.degree() >= 1 && h.degree() < g.degree()) {
      split_linear(h, out);
      split_linear(exact_div(g, h), out);
      return;
    }
  }
  throw Error(Errc::Internal, "trace splitting failed");
}

}  // namespace

std::vector<Fe> roots_in_ctx(const Poly& f) {
  if (f.is_zero()) throw Error(Errc::InvalidArgument, "roots of the zero polynomial");
  std::vector<Fe> out;
  if (f.degree() < 1) return out;
  const FieldCtx& ctx = f.ctx();
  if (ctx.size() <= (std::uint64_t{1} << 16)) {
    for (const Fe& e : ctx.elements())
      if (f.eval(e).is_zero()) out.push_back(e);
    return out;
  }
  // gcd with x^q - x collects the rational roots, each once.
  const Poly g = f.monic();
  const Poly lin = gcd(g, frobenius_mod(g, 1) + Poly::x(ctx));
  split_linear(lin, out);
  std::sort(out.begin(), out.end(), FeLess{});
  return out;
}

Factorization factor_oracle(const Poly& f) {
  if (f.is_zero()) throw Error(Errc::InvalidArgument, "factorization of the zero polynomial");
  const FieldCtx& ctx = f.ctx();
  Factorization out{f.lead(), {}};
  Poly rem = f.monic();
  for (const Fe& r : roots_in_ctx(rem)) {
    const Poly lin = Poly::linear(ctx, r);
    for (;;) {
      auto [q, m] = divmod(rem, lin);
      if (!m.is_zero()) break;
      out.factors.push_back(lin);
      rem = std::move(q);
    }
  }
  for (unsigned d = 2; 2 * static_cast<int>(d) <= rem.degree(); ++d) {
    const std::uint64_t bits = std::uint64_t{ctx.degree()} * d;
    if (bits > 22) throw Error(Errc::ScaleExceeded, "trial division by degree-" + std::to_string(d) + " candidates");
    const std::uint64_t count = std::uint64_t{1} << bits;
    for (std::uint64_t idx = 0; idx < count && 2 * static_cast<int>(d) <= rem.degree(); ++idx) {
      const Poly cand = monic_candidate(ctx, d, idx);
      for (;;) {
        auto [q, m] = divmod(rem, cand);
        if (!m.is_zero()) break;
        out.factors.push_back(cand);
        rem = std::move(q);
      }
    }
  }
  if (rem.degree() >= 1) out.factors.push_back(rem);
  sort_canonical(out.factors);
  return out;
}

bool canonical_less(const Poly& a, const Poly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (int i = a.degree(); i >= 0; --i) {
    const auto ai = a.coeffs()[static_cast<std::size_t>(i)].bits();
    const auto bi = b.coeffs()[static_cast<std::size_t>(i)].bits();
    if (ai != bi) return ai < bi;
  }
  return false;
}

void sort_canonical(std::vector<Poly>& polys) { std::stable_sort(polys.begin(), polys.end(), canonical_less); }

namespace {

Poly product_range(const FieldCtx& ctx, const std::vector<Poly>& polys, std::size_t lo, std::size_t hi) {
  if (hi - lo == 0) return Poly::constant(ctx, ctx.one());
  if (hi - lo == 1) return polys[lo];
  const std::size_t mid = lo + (hi - lo) / 2;
  return product_range(ctx, polys, lo, mid) * product_range(ctx, polys, mid, hi);
}

}  // namespace

Poly product(const FieldCtx& ctx, const std::vector<Poly>& polys) { return product_range(ctx, polys, 0, polys.size()); }

Poly from_roots(const FieldCtx& ctx, const std::vector<Fe>& roots) {
  std::vector<Poly> lin;
  lin.reserve(roots.size());
  for (const Fe& r : roots) lin.push_back(Poly::linear(ctx, r));
  return product(ctx, lin);
}

Poly embed(const TowerEmbedding& emb, const Poly& p) {
  if (!(p.ctx() == emb.sub())) throw Error(Errc::ContextMismatch, "polynomial is not over the embedded subfield");
  std::vector<Fe> v;
  for (const Fe& c : p.coeffs()) v.push_back(emb.embed(c));
  return Poly(emb.sup(), std::move(v));
}

std::optional<Poly> try_pullback(const TowerEmbedding& emb, const Poly& p) {
  if (!(p.ctx() == emb.sup())) throw Error(Errc::ContextMismatch, "polynomial is not over the extension field");
  std::vector<Fe> v;
  for (const Fe& c : p.coeffs()) {
    auto y = emb.try_pullback(c);
    if (!y) return std::nullopt;
    v.push_back(*y);
  }
  return Poly(emb.sub(), std::move(v));
}

Poly pullback(const TowerEmbedding& emb, const Poly& p) {
  auto r = try_pullback(emb, p);
  if (!r) throw Error(Errc::CoefficientsNotRational, "coefficients do not descend to the subfield");
  return *r;
}

}  // namespace qcgoppa
