#include <doctest.h>

#include <random>

#include "qcgoppa/polyring.hpp"
#include "qcgoppa/text.hpp"

using namespace qcgoppa;

namespace {

// Every monic polynomial of exactly degree d over ctx.
std::vector<Poly> monic_of_degree(const FieldCtx& ctx, unsigned d) {
  std::vector<Poly> out;
  const auto q = ctx.size();
  std::uint64_t total = 1;
  for (unsigned i = 0; i < d; ++i) total *= q;
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    std::vector<Fe> c;
    std::uint64_t v = idx;
    for (unsigned i = 0; i < d; ++i, v /= q) c.push_back(ctx.elem(static_cast<std::uint32_t>(v % q)));
    c.push_back(ctx.one());
    out.emplace_back(ctx, std::move(c));
  }
  return out;
}

Poly random_poly(const FieldCtx& ctx, unsigned deg, std::mt19937_64& rng) {
  std::vector<Fe> c;
  for (unsigned i = 0; i < deg; ++i) c.push_back(ctx.elem(static_cast<std::uint32_t>(rng() & (ctx.size() - 1))));
  c.push_back(ctx.one());
  return Poly(ctx, std::move(c));
}

}  // namespace

TEST_CASE("ring operations") {
  const FieldCtx F2 = field_of_degree(1);
  const Poly x2p1 = parse_poly(F2, "x^2 + 1");
  const Poly xp1 = parse_poly(F2, "x + 1");
  CHECK(gcd(x2p1, xp1) == xp1);
  CHECK(xp1 * xp1 == x2p1);

  const FieldCtx F8 = make_field(3, 0xb);
  const Poly g = parse_poly(F8, "x^2 + g*x + g");
  CHECK(g.eval(F8.zero()) == F8.generator());
  CHECK(g.derivative() == Poly::constant(F8, F8.generator()));
  CHECK(Poly(F8).degree() == -1);
  CHECK_THROWS_AS(divmod(g, Poly(F8)), Error);
}

TEST_CASE("divmod identity on random inputs") {
  std::mt19937_64 rng(11);
  const FieldCtx F16 = field_of_degree(4);
  for (int i = 0; i < 500; ++i) {
    const Poly a = random_poly(F16, static_cast<unsigned>(rng() % 12), rng);
    const Poly b = random_poly(F16, 1 + static_cast<unsigned>(rng() % 6), rng).scaled(F16.gen_pow(i));
    const auto [q, r] = divmod(a, b);
    REQUIRE(q * b + r == a);
    REQUIRE(r.degree() < b.degree());
  }
}

TEST_CASE("irreducibility examples") {
  const FieldCtx F2 = field_of_degree(1);
  CHECK(is_irreducible(parse_poly(F2, "x^2 + x + 1")));
  CHECK_FALSE(is_irreducible(parse_poly(F2, "x^2 + 1")));
  CHECK(is_irreducible(parse_poly(F2, "x^10 + x^8 + x^7 + x^6 + x^2 + x + 1")));
  CHECK_THROWS_AS(is_irreducible(Poly::constant(F2, F2.one())), Error);
}

TEST_CASE("fast and oracle irreducibility agree on all monic polynomials of degree <= 4 over GF(2), GF(4), GF(8)") {
  for (unsigned m : {1u, 2u, 3u}) {
    const FieldCtx ctx = field_of_degree(m);
    for (unsigned d = 1; d <= 4; ++d) {
      for (const Poly& f : monic_of_degree(ctx, d)) REQUIRE(is_irreducible(f) == is_irreducible_oracle(f));
    }
  }
}

TEST_CASE("irreducible counts follow the necklace formula") {
  // Number of monic irreducibles of degree 4 over GF(q) is (q^4 - q^2) / 4.
  for (unsigned m : {1u, 2u}) {
    const FieldCtx ctx = field_of_degree(m);
    const std::uint64_t q = ctx.size();
    std::size_t n = 0;
    for (const Poly& f : monic_of_degree(ctx, 4)) n += is_irreducible(f) ? 1 : 0;
    CHECK(n == (q * q * q * q - q * q) / 4);
  }
}

TEST_CASE("frobenius_mod") {
  const FieldCtx F2 = field_of_degree(1);
  const Poly f = parse_poly(F2, "x^2 + x + 1");
  CHECK(frobenius_mod(f, 0) == Poly::x(F2));
  CHECK(frobenius_mod(f, 1) == parse_poly(F2, "x + 1"));

  std::mt19937_64 rng(5);
  const FieldCtx F16 = field_of_degree(4);
  for (int i = 0; i < 50; ++i) {
    const Poly g = random_poly(F16, 2 + static_cast<unsigned>(rng() % 6), rng);
    const unsigned a = static_cast<unsigned>(rng() % 5), b = static_cast<unsigned>(rng() % 5);
    REQUIRE(frobenius_mod(g, a + b) == qpow_mod(frobenius_mod(g, a), std::uint64_t{b}, g));
  }
}

TEST_CASE("frobenius_mod evaluated at a root is the Frobenius image of the root") {
  for (unsigned m : {3u, 4u}) {
    const FieldCtx ctx = field_of_degree(m);
    std::mt19937_64 rng(m);
    for (int i = 0; i < 30; ++i) {
      const unsigned deg = 1 + static_cast<unsigned>(rng() % 3);
      const Poly f = random_poly(ctx, deg, rng);
      const Tower t = build_tower(ctx, 6);  // splits every polynomial of degree <= 3
      const Poly fe = embed(t.embedding, f);
      const auto roots = roots_in_ctx(fe);
      for (unsigned e = 0; e <= 2; ++e) {
        const Poly r = embed(t.embedding, frobenius_mod(f, e));
        for (const Fe& z : roots) REQUIRE(r.eval(z) == z.frobenius(std::uint64_t{m} * e));
      }
    }
  }
}

TEST_CASE("roots_in_ctx") {
  const FieldCtx F2 = field_of_degree(1);
  CHECK(roots_in_ctx(parse_poly(F2, "x^2 + x")).size() == 2);
  const FieldCtx F8 = make_field(3, 0xb);
  CHECK(roots_in_ctx(parse_poly(F8, "x^2 + g*x + g")).empty());
  const Fe xi = F8.generator();
  const auto r = roots_in_ctx(Poly::linear(F8, xi) * Poly::linear(F8, xi.square()));
  REQUIRE(r.size() == 2);
  CHECK(((r[0] == xi && r[1] == xi.square()) || (r[1] == xi && r[0] == xi.square())));
}

TEST_CASE("roots_in_ctx on a large field matches the constructed roots") {
  const FieldCtx F = field_of_degree(20);
  std::mt19937_64 rng(3);
  for (int i = 0; i < 10; ++i) {
    std::vector<Fe> roots;
    for (int j = 0; j < 3; ++j) roots.push_back(F.elem(static_cast<std::uint32_t>(rng() & (F.size() - 1))));
    Poly f = from_roots(F, roots) * parse_poly(F, "x^2 + x + g");
    std::sort(roots.begin(), roots.end(), FeLess{});
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    auto got = roots_in_ctx(f);
    // x^2 + x + g may contribute roots of its own.
    for (const Fe& z : roots) REQUIRE(std::find(got.begin(), got.end(), z) != got.end());
    for (const Fe& z : got) REQUIRE(f.eval(z).is_zero());
  }
}

TEST_CASE("factor_oracle examples") {
  const FieldCtx F2 = field_of_degree(1);
  const auto f1 = factor_oracle(parse_poly(F2, "x^2 + 1"));
  REQUIRE(f1.factors.size() == 2);
  CHECK(f1.factors[0] == parse_poly(F2, "x + 1"));
  CHECK(f1.factors[1] == parse_poly(F2, "x + 1"));

  const FieldCtx F8 = make_field(3, 0xb);
  const auto f2 = factor_oracle(parse_poly(F8, "x^9 + x^8 + x"));
  std::vector<Poly> want{parse_poly(F8, "x"), parse_poly(F8, "x^2 + x + 1"), parse_poly(F8, "x^2 + g*x + g"),
                         parse_poly(F8, "x^2 + g^2*x + g^2"), parse_poly(F8, "x^2 + g^4*x + g^4")};
  sort_canonical(want);
  CHECK(f2.factors == want);

  // Cubing is a bijection on GF(8)*, so x^3 + g has exactly one root and an irreducible quadratic cofactor.
  const auto f3 = factor_oracle(parse_poly(F8, "x^3 + g"));
  REQUIRE(f3.factors.size() == 2);
  CHECK(f3.factors[0].degree() == 1);
  CHECK(f3.factors[1].degree() == 2);
  CHECK(roots_in_ctx(parse_poly(F8, "x^3 + g")).size() == 1);
}

TEST_CASE("factor_oracle multiplies back on random inputs") {
  std::mt19937_64 rng(17);
  for (unsigned m : {1u, 2u, 3u, 6u}) {
    const FieldCtx ctx = field_of_degree(m);
    for (int i = 0; i < 40; ++i) {
      const unsigned deg = 1 + static_cast<unsigned>(rng() % (m >= 3 ? 6 : 12));
      const Poly f = random_poly(ctx, deg, rng).scaled(ctx.gen_pow(i));
      const auto fac = factor_oracle(f);
      REQUIRE(product(ctx, fac.factors).scaled(fac.unit) == f);
      for (const auto& p : fac.factors) REQUIRE(is_irreducible(p));
    }
  }
}

TEST_CASE("canonical order and pullback") {
  const FieldCtx F8 = make_field(3, 0xb);
  std::vector<Poly> ps{parse_poly(F8, "x^2 + g*x"), parse_poly(F8, "x + 1"), parse_poly(F8, "x^2 + x")};
  sort_canonical(ps);
  CHECK(ps[0].degree() == 1);
  CHECK(ps[1] == parse_poly(F8, "x^2 + x"));

  const Tower t = build_tower(F8, 2);
  const Poly p = parse_poly(F8, "x^3 + g^5*x + 1");
  CHECK(pullback(t.embedding, embed(t.embedding, p)) == p);
  const Poly outside(t.field, {t.field.generator(), t.field.one()});
  CHECK_FALSE(try_pullback(t.embedding, outside));
  CHECK_THROWS_AS(pullback(t.embedding, outside), Error);
}
