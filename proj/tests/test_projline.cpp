#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "qcgoppa/projline.hpp"
#include "qcgoppa/text.hpp"
#include "test_util.hpp"

using namespace qcgoppa;

namespace {

ProjPoint pt(const FieldCtx& ctx, const char* s) { return parse_point(ctx, s); }

Mobius random_mobius(const FieldCtx& ctx, std::mt19937_64& rng) {
  const auto mask = static_cast<std::uint32_t>(ctx.size() - 1);
  for (;;) {
    const Fe a = ctx.elem(static_cast<std::uint32_t>(rng()) & mask);
    const Fe b = ctx.elem(static_cast<std::uint32_t>(rng()) & mask);
    const Fe d = ctx.elem(static_cast<std::uint32_t>(rng()) & mask);
    const Fe c = (rng() % 4 == 0) ? ctx.zero() : ctx.one();
    if (c.is_zero() && (a.is_zero() || d.is_zero())) continue;
    if ((a * d + b * c).is_zero()) continue;
    return Mobius::make(ctx, a, b, c, d);
  }
}

}  // namespace

TEST_CASE("apply examples") {
  const FieldCtx F8 = make_field(3, 0xb);
  const Mobius A = parse_mobius(F8, "[[1,0],[1,1]]");
  CHECK(A.apply(pt(F8, "0")) == pt(F8, "0"));
  CHECK(A.apply(ProjPoint::infinity()) == pt(F8, "1"));
  CHECK(A.apply(pt(F8, "1")).is_infinity());
  const Mobius affine = Mobius::make(F8, F8.generator(), F8.one(), F8.zero(), F8.one());
  CHECK(affine.apply(ProjPoint::infinity()).is_infinity());
}

TEST_CASE("normalization and singular matrices") {
  const FieldCtx F8 = make_field(3, 0xb);
  const Fe g = F8.generator();
  const Mobius A = Mobius::make(F8, g, g * g, g, g.pow(3));
  CHECK(A.c().is_one());
  CHECK(A.a().is_one());
  CHECK(A == Mobius::make(F8, F8.one(), g, F8.one(), g * g));
  const Mobius B = Mobius::make(F8, g, g, F8.zero(), g);
  CHECK(B.d().is_one());
  CHECK_ERRC(Mobius::make(F8, F8.one(), F8.one(), F8.one(), F8.one()), Errc::SingularMatrix);
}

TEST_CASE("mobius_order examples") {
  const FieldCtx F8 = make_field(3, 0xb);
  CHECK(mobius_order(Mobius::identity(F8)) == 1);
  CHECK(mobius_order(parse_mobius(F8, "[[1,0],[1,1]]")) == 2);
  const FieldCtx F64 = make_field(6, 0x5b);
  CHECK(mobius_order(parse_mobius(F64, "[[1,0],[1,g^21]]")) == 3);
  CHECK(mobius_order(parse_mobius(F64, "[[g^9,0],[1,1]]")) == 7);
}

TEST_CASE("orbit decompositions over GF(64)") {
  const FieldCtx F64 = make_field(6, 0x5b);
  const auto line = projective_line(F64);
  REQUIRE(line.size() == 65);

  const Mobius A = parse_mobius(F64, "[[1,0],[1,g^21]]");
  const auto os = orbits(A, line);
  CHECK(os.size() == 23);
  std::vector<std::size_t> fixed;
  for (std::size_t i = 0; i < os.size(); ++i) {
    if (os[i].size() == 1) fixed.push_back(i);
    else CHECK(os[i].size() == 3);
  }
  REQUIRE(fixed.size() == 2);
  std::set<std::string> fixed_pts{format(F64, os[fixed[0]].points[0]), format(F64, os[fixed[1]].points[0])};
  CHECK(fixed_pts == std::set<std::string>{"0", "g^42"});
  const auto with_inf = std::find_if(os.begin(), os.end(), [](const Orbit& o) { return o.contains(ProjPoint::infinity()); });
  REQUIRE(with_inf != os.end());
  CHECK(with_inf->contains(pt(F64, "g^21")));
  CHECK(with_inf->contains(pt(F64, "1")));

  const Mobius B = parse_mobius(F64, "[[g^9,0],[1,1]]");
  const auto os7 = orbits(B, line);
  CHECK(os7.size() == 11);
  std::size_t singles = 0;
  for (const auto& o : os7) {
    if (o.size() == 1) {
      ++singles;
      CHECK((o.points[0] == pt(F64, "0") || o.points[0] == pt(F64, "g^27")));
    } else {
      CHECK(o.size() == 7);
    }
  }
  CHECK(singles == 2);
}

TEST_CASE("orbit structure properties") {
  std::mt19937_64 rng(21);
  for (unsigned m : {2u, 3u, 4u, 5u}) {
    const FieldCtx ctx = field_of_degree(m);
    const auto line = projective_line(ctx);
    for (int i = 0; i < 20; ++i) {
      const Mobius A = random_mobius(ctx, rng);
      const auto os = orbits(A, line);
      std::size_t total = 0;
      std::set<std::uint64_t> seen;
      for (std::size_t j = 0; j < os.size(); ++j) {
        const auto& o = os[j];
        total += o.size();
        for (std::size_t t = 0; t < o.size(); ++t) {
          REQUIRE(seen.insert(o.points[t].sort_key()).second);
          REQUIRE(A.apply(o.points[t]) == o.points[(t + 1) % o.size()]);
          REQUIRE_FALSE(o.points[t] < o.points[0]);
        }
        if (j > 0) REQUIRE(os[j - 1].points[0] < o.points[0]);
      }
      REQUIRE(total == line.size());
      const auto l = mobius_order(A);
      for (const auto& o : os) REQUIRE(l % o.size() == 0);
    }
  }
}

TEST_CASE("identity orbits are singletons; bad domains are rejected") {
  const FieldCtx F8 = make_field(3, 0xb);
  const auto os = orbits(Mobius::identity(F8), projective_line(F8));
  CHECK(os.size() == 9);
  for (const auto& o : os) CHECK(o.size() == 1);

  const Mobius A = parse_mobius(F8, "[[1,0],[1,1]]");
  CHECK_ERRC(orbits(A, {pt(F8, "g")}), Errc::DomainNotClosed);
  CHECK_ERRC(orbits(A, {pt(F8, "0"), pt(F8, "0")}), Errc::InvalidArgument);
}

TEST_CASE("apply undoes the inverse") {
  std::mt19937_64 rng(4);
  for (unsigned m : {1u, 3u, 6u}) {
    const FieldCtx ctx = field_of_degree(m);
    for (int i = 0; i < 50; ++i) {
      const Mobius A = random_mobius(ctx, rng);
      REQUIRE((A * A.inverse()).is_identity());
      for (const auto& p : projective_line(ctx)) {
        REQUIRE(A.apply(A.inverse().apply(p)) == p);
        REQUIRE(A.inverse().apply(A.apply(p)) == p);
      }
      const Mobius B = random_mobius(ctx, rng);
      for (const auto& p : projective_line(ctx)) REQUIRE((A * B).apply(p) == A.apply(B.apply(p)));
    }
  }
}

TEST_CASE("closed-form families have the right sizes and orders") {
  for (unsigned m : {2u, 3u, 4u, 5u}) {
    const FieldCtx ctx = field_of_degree(m);
    const std::uint64_t q = ctx.size();
    const auto n2 = enum_order_l(ctx, 2);
    CHECK(n2.size() == q * (q - 1));
    for (const auto& A : n2) REQUIRE(mobius_order(A) == 2);
    const auto n3 = enum_order_l(ctx, 3);
    CHECK(n3.size() == q * (q - 1));
    for (const auto& A : n3) REQUIRE(mobius_order(A) == 3);

    const auto na = enum_order_l(ctx, 3, NlFilter::a_zero);
    const auto nd = enum_order_l(ctx, 3, NlFilter::d_zero);
    CHECK(na.size() == q - 1);
    CHECK(nd.size() == q - 1);
    for (const auto& A : na) CHECK(A.a().is_zero());
    for (const auto& A : nd) CHECK(A.d().is_zero());
    if (m % 2 == 0) {
      const auto nb = enum_order_l(ctx, 3, NlFilter::b_zero);
      CHECK(nb.size() == 2 * (q - 1));
      for (const auto& A : nb) CHECK(A.b().is_zero());
    } else {
      CHECK_ERRC(enum_order_l(ctx, 3, NlFilter::b_zero), Errc::CubeRootAbsent);
    }
  }
  CHECK(enum_order_l(make_field(3, 0xb), 2).size() == 56);
  CHECK(enum_order_l(field_of_degree(4), 3, NlFilter::b_zero).size() == 30);
  CHECK_ERRC(enum_order_l(field_of_degree(4), 5), Errc::UnsupportedOrder);
}

TEST_CASE("fixed points lie in GF(q) or GF(q^2)") {
  for (unsigned m : {2u, 3u, 4u}) {
    const FieldCtx ctx = field_of_degree(m);
    for (const Fe& a : ctx.elements())
      for (const Fe& b : ctx.elements())
        for (const Fe& d : ctx.elements()) {
          if ((a * d + b).is_zero()) continue;
          const Mobius A = Mobius::make(ctx, a, b, ctx.one(), d);
          // Finite fixed points solve x^2 + (a+d)x + b = 0.
          std::size_t finite_fixed = 0;
          for (const Fe& x : ctx.elements()) finite_fixed += A.apply(ProjPoint::finite(x)) == ProjPoint::finite(x) ? 1 : 0;
          REQUIRE_FALSE(A.apply(ProjPoint::infinity()).is_infinity());
          if (a == d) {
            // Single fixed point sqrt(b), rational.
            REQUIRE(finite_fixed == 1);
          } else {
            // Substituting x = (a+d)y gives y^2 + y = b/(a+d)^2.
            const Fe t = b / ((a + d) * (a + d));
            const bool rational = solve_artin_schreier(ctx, t).has_value();
            REQUIRE(finite_fixed == (rational ? 2u : 0u));
          }
        }
  }
}

TEST_CASE("induced permutation") {
  const FieldCtx F64 = make_field(6, 0x5b);
  const Mobius A = parse_mobius(F64, "[[1,0],[1,g^21]]");

  const std::vector<ProjPoint> fixed{pt(F64, "0")};
  CHECK(induced_permutation(A, fixed) == std::vector<std::size_t>{0});

  const ProjPoint alpha = pt(F64, "g");
  const std::vector<ProjPoint> one{alpha, A.apply(alpha), A.apply(A.apply(alpha))};
  CHECK(induced_permutation(A, one) == std::vector<std::size_t>{2, 0, 1});

  std::vector<Orbit> blocks;
  for (auto& o : orbits(A, projective_line(F64)))
    if (o.size() == 3) blocks.push_back(o);
  const auto support = flatten(blocks);
  REQUIRE(support.size() == 63);
  const auto psi = induced_permutation(A, support);
  for (std::size_t i = 0; i < psi.size(); ++i) {
    REQUIRE(support[psi[i]] == A.inverse().apply(support[i]));
    REQUIRE(psi[i] != i);
    REQUIRE(psi[psi[psi[i]]] == i);
  }
  std::vector<std::size_t> sorted = psi;
  std::sort(sorted.begin(), sorted.end());
  std::vector<std::size_t> iota(psi.size());
  std::iota(iota.begin(), iota.end(), 0);
  CHECK(sorted == iota);

  CHECK_ERRC(induced_permutation(A, {alpha}), Errc::DomainNotClosed);
}

TEST_CASE("embedding a map commutes with apply") {
  const FieldCtx F8 = make_field(3, 0xb);
  const Tower t = build_tower(F8, 2);
  const Mobius A = parse_mobius(F8, "[[g,g^3],[1,g^5]]");
  const Mobius E = embed(t.embedding, A);
  for (const Fe& x : F8.elements()) {
    const ProjPoint img = A.apply(ProjPoint::finite(x));
    const ProjPoint eimg = E.apply(ProjPoint::finite(t.embedding.embed(x)));
    if (img.is_infinity()) CHECK(eimg.is_infinity());
    else CHECK(eimg == ProjPoint::finite(t.embedding.embed(img.value())));
  }
}
