#include "qcgoppa/codes.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <sstream>
#include <thread>

#include "qcgoppa/text.hpp"

namespace qcgoppa {

std::string_view variant_name(Variant v) noexcept {
  switch (v) {
    case Variant::goppa: return "goppa";
    case Variant::parity_check_subcode: return "parity_check_subcode";
    case Variant::extended: return "extended";
  }
  return "goppa";
}

Variant parse_variant(std::string_view s) {
  if (s == "goppa") return Variant::goppa;
  if (s == "parity_check_subcode" || s == "subcode" || s == "parity-check-subcode") return Variant::parity_check_subcode;
  if (s == "extended") return Variant::extended;
  throw Error(Errc::ParseError, "unknown code variant '" + std::string(s) + "'");
}

std::size_t SupportSpec::length() const {
  std::size_t n = 0;
  for (const auto& b : blocks) n += b.size();
  return n;
}

bool SupportSpec::includes_infinity() const {
  for (const auto& b : blocks)
    for (const auto& p : b.points)
      if (p.is_infinity()) return true;
  return false;
}

// ---------------------------------------------------------------------------
// BinMatrix

BinMatrix::BinMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), words_((cols + 63) / 64), data_(rows * ((cols + 63) / 64), 0) {}

void BinMatrix::set(std::size_t r, std::size_t c, bool v) {
  const std::uint64_t m = std::uint64_t{1} << (c % 64);
  if (v)
    row(r)[c / 64] |= m;
  else
    row(r)[c / 64] &= ~m;
}

void BinMatrix::append_row(const std::uint64_t* bits) {
  data_.insert(data_.end(), bits, bits + words_);
  ++rows_;
}

std::size_t BinMatrix::row_weight(std::size_t r) const {
  std::size_t w = 0;
  for (std::size_t i = 0; i < words_; ++i) w += static_cast<std::size_t>(std::popcount(row(r)[i]));
  return w;
}

std::string BinMatrix::dump() const {
  std::string out;
  out.reserve(rows_ * (cols_ + 1));
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) out.push_back(get(r, c) ? '1' : '0');
    out.push_back('\n');
  }
  return out;
}

BinMatrix BinMatrix::parse(std::string_view text) {
  std::vector<std::string> lines;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!line.empty()) lines.push_back(line);
  }
  const std::size_t cols = lines.empty() ? 0 : lines[0].size();
  BinMatrix m(lines.size(), cols);
  for (std::size_t r = 0; r < lines.size(); ++r) {
    if (lines[r].size() != cols) throw Error(Errc::ParseError, "ragged binary matrix");
    for (std::size_t c = 0; c < cols; ++c) {
      const char ch = lines[r][c];
      if (ch != '0' && ch != '1') throw Error(Errc::ParseError, "binary matrix entries must be 0 or 1");
      m.set(r, c, ch == '1');
    }
  }
  return m;
}

// ---------------------------------------------------------------------------
// Matrices

FieldMatrix parity_check_matrix(const Poly& g, const std::vector<ProjPoint>& support, Variant variant) {
  if (g.degree() < 1) throw Error(Errc::DegreeZero, "Goppa polynomial must have positive degree");
  const FieldCtx& ctx = g.ctx();
  const auto r = static_cast<std::size_t>(g.degree());
  const std::size_t rows = variant == Variant::goppa ? r : r + 1;
  FieldMatrix H{ctx, rows, support.size(), std::vector<Fe>(rows * support.size(), ctx.zero())};
  for (std::size_t j = 0; j < support.size(); ++j) {
    const ProjPoint& p = support[j];
    if (p.is_infinity()) {
      if (variant != Variant::extended)
        throw Error(Errc::InvalidSupport, "infinity belongs only in an extended code's support");
      H.at(rows - 1, j) = g.lead().inv();
      continue;
    }
    const Fe& alpha = p.value();
    ctx.require(alpha);
    const Fe ga = g.eval(alpha);
    if (ga.is_zero()) throw Error(Errc::RootInSupport, "support point " + format(ctx, alpha) + " is a root of g");
    Fe e = ga.inv();
    for (std::size_t i = 0; i < rows; ++i) {
      H.at(i, j) = e;
      e *= alpha;
    }
  }
  return H;
}

FieldMatrix parity_check_matrix(const GoppaSpec& spec) {
  return parity_check_matrix(spec.g, spec.support.points(), spec.support.variant);
}

BinMatrix binary_expand(const FieldMatrix& H) {
  const unsigned m = H.ctx.degree();
  BinMatrix B(H.rows * m, H.cols);
  for (std::size_t i = 0; i < H.rows; ++i)
    for (std::size_t j = 0; j < H.cols; ++j) {
      const auto bits = H.at(i, j).bits();
      for (unsigned b = 0; b < m; ++b)
        if ((bits >> b) & 1u) B.set(i * m + b, j, true);
    }
  return B;
}

std::vector<std::size_t> rref(BinMatrix& M) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  const std::size_t W = M.words();
  for (std::size_t c = 0; c < M.cols() && r < M.rows(); ++c) {
    std::size_t p = r;
    while (p < M.rows() && !M.get(p, c)) ++p;
    if (p == M.rows()) continue;
    if (p != r)
      for (std::size_t w = 0; w < W; ++w) std::swap(M.row(p)[w], M.row(r)[w]);
    for (std::size_t i = 0; i < M.rows(); ++i) {
      if (i != r && M.get(i, c))
        for (std::size_t w = 0; w < W; ++w) M.row(i)[w] ^= M.row(r)[w];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

namespace {

BinMatrix leading_rows(const BinMatrix& M, std::size_t n) {
  BinMatrix out(0, M.cols());
  for (std::size_t i = 0; i < n; ++i) out.append_row(M.row(i));
  return out;
}

}  // namespace

BinMatrix kernel_basis(const BinMatrix& B) {
  if (B.cols() > 128) throw Error(Errc::ScaleExceeded, "kernel computation limited to 128 columns");
  BinMatrix R = B;
  const auto pivots = rref(R);
  std::vector<bool> is_pivot(B.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;
  BinMatrix K(0, B.cols());
  std::vector<std::uint64_t> v(K.words());
  for (std::size_t f = 0; f < B.cols(); ++f) {
    if (is_pivot[f]) continue;
    std::fill(v.begin(), v.end(), 0);
    v[f / 64] |= std::uint64_t{1} << (f % 64);
    for (std::size_t i = 0; i < pivots.size(); ++i)
      if (R.get(i, f)) v[pivots[i] / 64] |= std::uint64_t{1} << (pivots[i] % 64);
    K.append_row(v.data());
  }
  rref(K);
  if (!orthogonal(K, B)) throw Error(Errc::Internal, "kernel basis fails G*B^T = 0");
  return K;
}

bool orthogonal(const BinMatrix& G, const BinMatrix& H) {
  if (G.cols() != H.cols()) throw Error(Errc::InvalidArgument, "column counts differ");
  for (std::size_t i = 0; i < G.rows(); ++i)
    for (std::size_t j = 0; j < H.rows(); ++j) {
      std::uint64_t acc = 0;
      for (std::size_t w = 0; w < G.words(); ++w) acc ^= G.row(i)[w] & H.row(j)[w];
      if (std::popcount(acc) % 2 != 0) return false;
    }
  return true;
}

bool row_space_contains(const BinMatrix& b, const BinMatrix& a) {
  if (a.cols() != b.cols()) return false;
  BinMatrix rb = b;
  const std::size_t rank_b = rref(rb).size();
  BinMatrix both = leading_rows(rb, rank_b);
  for (std::size_t i = 0; i < a.rows(); ++i) both.append_row(a.row(i));
  return rref(both).size() == rank_b;
}

bool same_row_space(const BinMatrix& a, const BinMatrix& b) {
  if (a.cols() != b.cols()) return false;
  BinMatrix ra = a, rb = b;
  const std::size_t na = rref(ra).size(), nb = rref(rb).size();
  return na == nb && leading_rows(ra, na) == leading_rows(rb, nb);
}

unsigned min_distance_exhaustive(const BinMatrix& G, unsigned threads) {
  const std::size_t k = G.rows();
  if (k > 20) throw Error(Errc::ScaleExceeded, "exhaustive distance limited to dimension 20");
  if (k == 0) throw Error(Errc::InvalidArgument, "the zero code has no minimum distance");
  const std::size_t W = G.words();
  const std::uint64_t total = std::uint64_t{1} << k;
  threads = std::max(1u, std::min<unsigned>(threads, 64));
  if (total < 4096) threads = 1;
  std::vector<unsigned> best(threads, std::numeric_limits<unsigned>::max());
  auto work = [&](unsigned t) {
    const std::uint64_t lo = std::max<std::uint64_t>(1, total * t / threads);
    const std::uint64_t hi = total * (t + 1) / threads;
    if (lo >= hi) return;
    std::vector<std::uint64_t> cw(W, 0);
    const std::uint64_t gray0 = (lo - 1) ^ ((lo - 1) >> 1);
    for (std::size_t r = 0; r < k; ++r)
      if ((gray0 >> r) & 1u)
        for (std::size_t w = 0; w < W; ++w) cw[w] ^= G.row(r)[w];
    unsigned local = best[t];
    for (std::uint64_t i = lo; i < hi; ++i) {
      const auto r = static_cast<std::size_t>(std::countr_zero(i));
      unsigned weight = 0;
      for (std::size_t w = 0; w < W; ++w) {
        cw[w] ^= G.row(r)[w];
        weight += static_cast<unsigned>(std::popcount(cw[w]));
      }
      local = std::min(local, weight);
    }
    best[t] = local;
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work, t);
    for (auto& th : pool) th.join();
  }
  return *std::min_element(best.begin(), best.end());
}

// ---------------------------------------------------------------------------
// Codes

namespace {

void check_blocks(const GoppaSpec& spec, std::size_t l) {
  const Mobius& A = *spec.A;
  for (const auto& block : spec.support.blocks) {
    if (block.size() != l)
      throw Error(Errc::OrbitNotUniform, "block of size " + std::to_string(block.size()) + " in a support for a map of order " +
                                             std::to_string(l));
    for (std::size_t i = 0; i < block.size(); ++i) {
      if (!(A.apply(block.points[i]) == block.points[(i + 1) % block.size()]))
        throw Error(Errc::OrbitNotUniform, "block is not an A-orbit in cyclic order");
    }
  }
}

bool permutation_is_blockwise_cycles(const std::vector<std::size_t>& psi, std::size_t l, std::size_t tau) {
  std::vector<bool> seen(psi.size(), false);
  std::size_t cycles = 0;
  for (std::size_t i = 0; i < psi.size(); ++i) {
    if (seen[i]) continue;
    std::size_t len = 0;
    for (std::size_t j = i; !seen[j]; j = psi[j]) {
      seen[j] = true;
      ++len;
    }
    if (len != l) return false;
    ++cycles;
  }
  return cycles == tau;
}

}  // namespace

CodeReport build_code(const GoppaSpec& spec, const BuildOptions& opts) {
  if (!(spec.g.ctx() == spec.support.ctx)) throw Error(Errc::ContextMismatch, "Goppa polynomial and support over different fields");
  CodeReport rep;
  rep.variant = spec.support.variant;
  rep.ctx = spec.support.ctx;
  rep.g = spec.g;
  rep.support = spec.support.points();
  rep.length = rep.support.size();

  std::size_t l = 0;
  if (spec.A) {
    l = mobius_order(*spec.A);
    check_blocks(spec, l);
    if (!check_invariance(spec.g, *spec.A))
      throw Error(Errc::InvalidArgument, "Goppa polynomial is not invariant under the supplied map");
  }

  rep.H = binary_expand(parity_check_matrix(spec.g, rep.support, spec.support.variant));
  rep.G = kernel_basis(rep.H);
  rep.dimension = rep.G.rows();

  if (spec.A) {
    rep.qc = QcBlocks{l, spec.support.blocks.size()};
    const auto psi = induced_permutation(*spec.A, rep.support);
    bool ok = permutation_is_blockwise_cycles(psi, l, spec.support.blocks.size());
    BinMatrix images(0, rep.length);
    std::vector<std::uint64_t> v(rep.G.words());
    for (std::size_t r = 0; ok && r < rep.G.rows(); ++r) {
      std::fill(v.begin(), v.end(), 0);
      for (std::size_t i = 0; i < rep.length; ++i)
        if (rep.G.get(r, psi[i])) v[i / 64] |= std::uint64_t{1} << (i % 64);
      images.append_row(v.data());
    }
    rep.automorphism_verified = ok && orthogonal(images, rep.H);
  }

  if (opts.compute_min_distance && rep.dimension >= 1 && rep.dimension <= 20)
    rep.min_distance = min_distance_exhaustive(rep.G, opts.threads);
  return rep;
}

GoppaSpec support_transform(const GoppaSpec& spec, const Mobius& A) {
  GoppaSpec out = spec;
  out.g = shift_by_mobius(spec.g, A);
  const Mobius inv = A.inverse();
  for (auto& block : out.support.blocks)
    for (auto& p : block.points) p = inv.apply(p);
  return out;
}

SupportSpec unit_group_support(const FieldCtx& ctx_q2, std::uint64_t n, const Mobius& A) {
  if (!(A.ctx() == ctx_q2)) throw Error(Errc::ContextMismatch, "map is not over the support field");
  const std::uint64_t order = ctx_q2.size() - 1;
  if (n == 0 || order % n != 0)
    throw Error(Errc::NonDivisor, std::to_string(n) + " does not divide " + std::to_string(order));
  const Fe z = ctx_q2.gen_pow(static_cast<std::int64_t>(order / n));
  std::vector<ProjPoint> domain;
  Fe y = ctx_q2.one();
  for (std::uint64_t i = 0; i < n; ++i) {
    domain.push_back(ProjPoint::finite(y));
    y *= z;
  }
  for (const auto& p : domain) {
    const ProjPoint img = A.apply(p);
    if (img.is_infinity() || !img.value().pow(n).is_one())
      throw Error(Errc::NotClosed, "U_" + std::to_string(n) + " is not closed under the map");
  }
  SupportSpec spec{ctx_q2, {}, Variant::parity_check_subcode};
  for (auto& o : orbits(A, domain))
    if (o.size() > 1) spec.blocks.push_back(std::move(o));
  return spec;
}

std::vector<Orbit> nontrivial_orbits(const Mobius& A, bool keep_infinity) {
  std::vector<Orbit> out;
  for (auto& o : orbits(A, projective_line(A.ctx()))) {
    if (o.size() == 1) continue;
    if (!keep_infinity && o.contains(ProjPoint::infinity())) continue;
    out.push_back(std::move(o));
  }
  return out;
}

}  // namespace qcgoppa
