#include "qcgoppa/projline.hpp"

#include <algorithm>
#include <unordered_map>

namespace qcgoppa {

const Fe& ProjPoint::value() const {
  if (inf_) throw Error(Errc::InvalidArgument, "infinity has no finite value");
  return x_;
}

Mobius Mobius::make(const FieldCtx& ctx, const Fe& a, const Fe& b, const Fe& c, const Fe& d) {
  ctx.require(a);
  ctx.require(b);
  ctx.require(c);
  ctx.require(d);
  if ((a * d + b * c).is_zero()) throw Error(Errc::SingularMatrix, "determinant ad + bc vanishes");
  const Fe s = c.is_zero() ? d.inv() : c.inv();
  return Mobius(ctx, a * s, b * s, c * s, d * s);
}

Mobius Mobius::identity(const FieldCtx& ctx) { return Mobius(ctx, ctx.one(), ctx.zero(), ctx.zero(), ctx.one()); }

ProjPoint Mobius::apply(const ProjPoint& p) const {
  if (p.is_infinity()) return c_.is_zero() ? ProjPoint::infinity() : ProjPoint::finite(a_ / c_);
  const Fe& z = p.value();
  const Fe den = c_ * z + d_;
  if (den.is_zero()) return ProjPoint::infinity();
  return ProjPoint::finite((a_ * z + b_) / den);
}

Mobius Mobius::inverse() const { return make(ctx_, d_, b_, c_, a_); }

Mobius operator*(const Mobius& A, const Mobius& B) {
  if (!(A.ctx_ == B.ctx_)) throw Error(Errc::ContextMismatch, "maps over different fields");
  return Mobius::make(A.ctx_, A.a_ * B.a_ + A.b_ * B.c_, A.a_ * B.b_ + A.b_ * B.d_, A.c_ * B.a_ + A.d_ * B.c_,
                      A.c_ * B.b_ + A.d_ * B.d_);
}

Mobius Mobius::pow(std::uint64_t e) const {
  Mobius r = identity(ctx_);
  Mobius base = *this;
  while (e != 0) {
    if (e & 1u) r = r * base;
    base = base * base;
    e >>= 1;
  }
  return r;
}

std::uint64_t mobius_order(const Mobius& A) {
  const std::uint64_t cap = A.ctx().size() + 1;
  Mobius p = A;
  for (std::uint64_t l = 1; l <= cap; ++l) {
    if (p.is_identity()) return l;
    p = p * A;
  }
  throw Error(Errc::OrderNotFound, "no order up to q + 1");
}

std::vector<ProjPoint> projective_line(const FieldCtx& ctx) {
  std::vector<ProjPoint> out;
  for (const Fe& x : ctx.elements()) out.push_back(ProjPoint::finite(x));
  out.push_back(ProjPoint::infinity());
  return out;
}

bool Orbit::contains(const ProjPoint& p) const { return std::find(points.begin(), points.end(), p) != points.end(); }

namespace {

std::string describe(const ProjPoint& p) {
  return p.is_infinity() ? std::string("inf") : "encoding " + std::to_string(p.value().bits());
}

}  // namespace

std::vector<Orbit> orbits(const Mobius& A, const std::vector<ProjPoint>& domain) {
  std::unordered_map<std::uint64_t, bool> seen;  // key -> visited
  for (const auto& p : domain) {
    if (!seen.emplace(p.sort_key(), false).second)
      throw Error(Errc::InvalidArgument, "duplicate point in domain: " + describe(p));
  }
  std::vector<ProjPoint> sorted = domain;
  std::sort(sorted.begin(), sorted.end());
  std::vector<Orbit> out;
  for (const auto& start : sorted) {
    if (seen[start.sort_key()]) continue;
    Orbit o;
    ProjPoint p = start;
    do {
      auto it = seen.find(p.sort_key());
      if (it == seen.end())
        throw Error(Errc::DomainNotClosed, "image " + describe(p) + " lies outside the domain");
      if (it->second) throw Error(Errc::Internal, "orbit revisits a point");
      it->second = true;
      o.points.push_back(p);
      p = A.apply(p);
    } while (!(p == start));
    out.push_back(std::move(o));
  }
  return out;
}

std::vector<Mobius> enum_order_l(const FieldCtx& ctx, unsigned l, NlFilter filter) {
  std::vector<Mobius> out;
  const auto elems = ctx.elements();
  if (l == 2) {
    if (filter != NlFilter::all) throw Error(Errc::InvalidArgument, "subfamily filters apply to order 3 only");
    for (const Fe& a : elems)
      for (const Fe& b : elems)
        if (!(a.square() == b)) out.push_back(Mobius::make(ctx, a, b, ctx.one(), a));
    return out;
  }
  if (l != 3) throw Error(Errc::UnsupportedOrder, "closed-form families exist for orders 2 and 3 only");
  if (filter == NlFilter::b_zero && (ctx.size() - 1) % 3 != 0)
    throw Error(Errc::CubeRootAbsent, "b = 0 needs a cube root of unity, i.e. 3 | q - 1");
  for (const Fe& a : elems) {
    for (const Fe& d : elems) {
      if (a == d) continue;
      const Fe b = a.square() + a * d + d.square();
      if (filter == NlFilter::a_zero && !a.is_zero()) continue;
      if (filter == NlFilter::d_zero && !d.is_zero()) continue;
      if (filter == NlFilter::b_zero && !b.is_zero()) continue;
      out.push_back(Mobius::make(ctx, a, b, ctx.one(), d));
    }
  }
  return out;
}

std::vector<std::size_t> induced_permutation(const Mobius& A, const std::vector<ProjPoint>& support) {
  std::unordered_map<std::uint64_t, std::size_t> index;
  for (std::size_t i = 0; i < support.size(); ++i) {
    if (!index.emplace(support[i].sort_key(), i).second)
      throw Error(Errc::InvalidArgument, "duplicate support point: " + describe(support[i]));
  }
  const Mobius inv = A.inverse();
  std::vector<std::size_t> psi(support.size());
  for (std::size_t i = 0; i < support.size(); ++i) {
    const ProjPoint img = inv.apply(support[i]);
    auto it = index.find(img.sort_key());
    if (it == index.end()) throw Error(Errc::DomainNotClosed, "support not closed: " + describe(img));
    psi[i] = it->second;
  }
  return psi;
}

Mobius embed(const TowerEmbedding& emb, const Mobius& A) {
  return Mobius::make(emb.sup(), emb.embed(A.a()), emb.embed(A.b()), emb.embed(A.c()), emb.embed(A.d()));
}

std::vector<ProjPoint> flatten(const std::vector<Orbit>& blocks) {
  std::vector<ProjPoint> out;
  for (const auto& o : blocks) out.insert(out.end(), o.points.begin(), o.points.end());
  return out;
}

}  // namespace qcgoppa
