#include <doctest.h>

#include <random>

#include "qcgoppa/gf2e.hpp"

using namespace qcgoppa;

namespace {

Fe random_fe(const FieldCtx& ctx, std::mt19937_64& rng) {
  return ctx.elem(static_cast<std::uint32_t>(rng() & (ctx.size() - 1)));
}

// Evaluates a GF(2) polynomial given as bits at an element.
Fe eval_bits(std::uint32_t poly, const Fe& x, const FieldCtx& ctx) {
  Fe acc = ctx.zero();
  for (int i = gf2x::degree(poly); i >= 0; --i) {
    acc = acc * x;
    if ((poly >> i) & 1u) acc += ctx.one();
  }
  return acc;
}

}  // namespace

TEST_CASE("make_field accepts irreducible moduli and rejects others") {
  CHECK(make_field(3, 0xb).size() == 8);
  CHECK(make_field(6, 0x5b).degree() == 6);
  CHECK_THROWS_AS(make_field(2, 0x6), Error);  // x^2 + x
  try {
    make_field(2, 0x6);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::ReducibleModulus);
  }
  try {
    make_field(3, 0x13);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::DegreeMismatch);
  }
  CHECK_THROWS(make_field(25, 0x2000009));
}

TEST_CASE("arithmetic examples in GF(8)") {
  const FieldCtx F8 = make_field(3, 0xb);
  const Fe xi = F8.generator();
  CHECK(xi == F8.x());
  CHECK(xi.pow(3).inv() == xi.pow(4));
  CHECK(F8.one().sqrt() == F8.one());
  CHECK(xi.order() == 7);
  CHECK_THROWS_AS(F8.zero().inv(), Error);
  const FieldCtx F16 = make_field(4, 0x13);
  CHECK_THROWS_AS(F8.one() + F16.one(), Error);
}

TEST_CASE("field axioms on random pairs") {
  std::mt19937_64 rng(7);
  for (unsigned m : {1u, 3u, 6u, 10u, 16u}) {
    const FieldCtx ctx = field_of_degree(m);
    for (int i = 0; i < 10000; ++i) {
      const Fe x = random_fe(ctx, rng), y = random_fe(ctx, rng);
      if (!x.is_zero()) REQUIRE((x * x.inv()).is_one());
      REQUIRE(x.sqrt().square() == x);
      REQUIRE((x + y).square() == x.square() + y.square());
      REQUIRE((x * y).square() == x.square() * y.square());
      if (!x.is_zero()) REQUIRE((ctx.size() - 1) % x.order() == 0);
    }
  }
}

TEST_CASE("discrete log inverts gen_pow") {
  for (unsigned m : {2u, 5u, 10u, 13u}) {
    const FieldCtx ctx = field_of_degree(m);
    for (std::int64_t k : {0, 1, 2, 17, 100, -1}) {
      const Fe x = ctx.gen_pow(k);
      const auto order = static_cast<std::int64_t>(ctx.size() - 1);
      CHECK(static_cast<std::int64_t>(*ctx.log(x)) == ((k % order) + order) % order);
    }
    CHECK_FALSE(ctx.log(ctx.zero()).has_value());
  }
}

TEST_CASE("trace examples in GF(8)") {
  const FieldCtx F8 = make_field(3, 0xb);
  const Fe xi = F8.generator();
  CHECK(trace(F8, 1, F8.one()).is_one());
  CHECK(trace(F8, 1, xi).is_zero());
  CHECK(trace(F8, 1, xi.pow(5)).is_one());
  CHECK_THROWS_AS(trace(F8, 2, xi), Error);
}

TEST_CASE("relative trace lands in the subfield") {
  for (unsigned m : {4u, 6u, 8u, 10u}) {
    const FieldCtx ctx = field_of_degree(m);
    for (unsigned s = 1; s <= m; ++s) {
      if (m % s != 0) continue;
      for (const Fe& x : ctx.elements()) {
        const Fe t = trace(ctx, s, x);
        REQUIRE(t.frobenius(s) == t);
      }
    }
  }
}

TEST_CASE("Artin-Schreier examples") {
  const FieldCtx F8 = make_field(3, 0xb);
  const auto z = solve_artin_schreier(F8, F8.zero());
  REQUIRE(z);
  CHECK(z->first.is_zero());
  CHECK(z->second.is_one());
  const auto s = solve_artin_schreier(F8, F8.generator());
  REQUIRE(s);
  CHECK(s->first.square() + s->first == F8.generator());
  CHECK_FALSE(solve_artin_schreier(F8, F8.one()));
}

TEST_CASE("Artin-Schreier solvability matches the trace for every field up to degree 10") {
  for (unsigned m = 1; m <= 10; ++m) {
    const FieldCtx ctx = field_of_degree(m);
    for (const Fe& t : ctx.elements()) {
      const auto sol = solve_artin_schreier(ctx, t);
      REQUIRE(sol.has_value() == trace(ctx, 1, t).is_zero());
      if (sol) {
        REQUIRE(sol->first.square() + sol->first == t);
        REQUIRE(sol->second == sol->first + ctx.one());
      }
    }
  }
}

TEST_CASE("modulus table: degrees 1 to 10 are primitive and subfield-compatible") {
  const auto& table = ModulusTable::builtin();
  CHECK(table.version() >= 1);
  for (unsigned m = 1; m <= 10; ++m) {
    const auto mod = table.lookup(m);
    REQUIRE(mod);
    CHECK(gf2x::is_primitive(*mod));
    const FieldCtx ctx = field_of_degree(m);
    if (m > 1) CHECK(ctx.generator() == ctx.x());
    for (unsigned d = 1; d < m; ++d) {
      if (m % d != 0) continue;
      const std::uint64_t e = (ctx.size() - 1) / ((std::uint64_t{1} << d) - 1);
      CHECK(eval_bits(*table.lookup(d), ctx.generator().pow(e), ctx).is_zero());
    }
  }
  CHECK(*table.lookup(3) == 0xb);
  CHECK(*table.lookup(4) == 0x13);
  CHECK(*table.lookup(5) == 0x25);
  CHECK(*table.lookup(6) == 0x5b);
}

TEST_CASE("modulus table parsing and overrides") {
  auto t = ModulusTable::parse("# comment\nversion 3\n3 d\n");
  CHECK(t.version() == 3);
  CHECK(*t.lookup(3) == 0xd);
  CHECK_FALSE(t.lookup(4));
  CHECK(t.modulus_for(4) == find_primitive_modulus(4));
  t.set(4, 0x19);
  CHECK(*t.lookup(4) == 0x19);
  CHECK_THROWS_AS(t.set(4, 0x15), Error);
  CHECK_THROWS_AS(ModulusTable::parse("3 zz\n"), Error);
}

TEST_CASE("towers: identity, the GF(32) case and round trips") {
  const FieldCtx F2 = field_of_degree(1);
  const Tower t1 = build_tower(F2, 1);
  CHECK(t1.field == F2);
  CHECK(t1.embedding.embed(F2.one()).is_one());

  const Tower t5 = build_tower(F2, 5);
  CHECK(t5.field.modulus() == 0x25);

  const FieldCtx F8 = make_field(3, 0xb);
  const Tower t2 = build_tower(F8, 2);
  CHECK(t2.field.degree() == 6);
  for (const Fe& x : F8.elements()) {
    CHECK(t2.embedding.pullback(t2.embedding.embed(x)) == x);
    CHECK(t2.embedding.contains(t2.embedding.embed(x)));
  }
  std::size_t inside = 0;
  for (const Fe& y : t2.field.elements()) inside += t2.embedding.contains(y) ? 1 : 0;
  CHECK(inside == 8);
  CHECK_THROWS_AS(build_tower(F8, 9), Error);
}

TEST_CASE("embedding is a ring homomorphism on exhaustive pairs") {
  for (unsigned n = 1; n <= 5; ++n) {
    const FieldCtx sub = field_of_degree(n);
    for (unsigned s : {2u, 3u}) {
      if (n * s > 15) continue;
      const Tower t = build_tower(sub, s);
      const auto& e = t.embedding;
      REQUIRE(e.embed(sub.zero()).is_zero());
      REQUIRE(e.embed(sub.one()).is_one());
      for (const Fe& x : sub.elements())
        for (const Fe& y : sub.elements()) {
          REQUIRE(e.embed(x + y) == e.embed(x) + e.embed(y));
          REQUIRE(e.embed(x * y) == e.embed(x) * e.embed(y));
        }
    }
  }
}

TEST_CASE("embedding rejects an image that is not a root") {
  const FieldCtx F4 = field_of_degree(2);
  const FieldCtx F16 = field_of_degree(4);
  CHECK_THROWS_AS(TowerEmbedding(F4, F16, F16.x()), Error);
}

TEST_CASE("degree_over finds the smallest subfield") {
  const FieldCtx F64 = field_of_degree(6);
  CHECK(degree_over(F64.one(), 1) == 1);
  CHECK(degree_over(F64.gen_pow(21), 1) == 2);
  CHECK(degree_over(F64.gen_pow(9), 1) == 3);
  CHECK(degree_over(F64.generator(), 1) == 6);
  CHECK(degree_over(F64.generator(), 2) == 3);
}
