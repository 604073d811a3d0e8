#include <doctest.h>

#include <random>

#include "qcgoppa/codes.hpp"
#include "qcgoppa/text.hpp"
#include "random_transform.hpp"
#include "test_util.hpp"

using namespace qcgoppa;

namespace {

std::vector<ProjPoint> finite_points(const FieldCtx& ctx, std::initializer_list<const char*> items) {
  std::vector<ProjPoint> out;
  for (const char* s : items) out.push_back(parse_point(ctx, s));
  return out;
}

SupportSpec singletons(const FieldCtx& ctx, const std::vector<ProjPoint>& pts, Variant v) {
  SupportSpec s{ctx, {}, v};
  for (const auto& p : pts) s.blocks.push_back(Orbit{{p}});
  return s;
}

BinMatrix random_bin(std::size_t rows, std::size_t cols, std::mt19937_64& rng) {
  BinMatrix M(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) M.set(r, c, rng() & 1u);
  return M;
}

}  // namespace

TEST_CASE("parity-check matrix shapes") {
  const FieldCtx F2 = field_of_degree(1);
  const Poly g = parse_poly(F2, "x^2 + x + 1");
  const auto H = parity_check_matrix(g, finite_points(F2, {"0", "1"}), Variant::goppa);
  REQUIRE(H.rows == 2);
  CHECK(H.at(0, 0).is_one());
  CHECK(H.at(0, 1).is_one());
  CHECK(H.at(1, 0).is_zero());
  CHECK(H.at(1, 1).is_one());

  const FieldCtx F8 = make_field(3, 0xb);
  const Poly g2 = parse_poly(F8, "x^2 + g*x + g").scaled(F8.generator());
  std::vector<ProjPoint> pts = finite_points(F8, {"0", "1", "g"});
  pts.push_back(ProjPoint::infinity());
  const auto He = parity_check_matrix(g2, pts, Variant::extended);
  REQUIRE(He.rows == 3);
  CHECK(He.at(0, 3).is_zero());
  CHECK(He.at(1, 3).is_zero());
  CHECK(He.at(2, 3) == F8.generator().inv());
  CHECK_ERRC(parity_check_matrix(g2, pts, Variant::parity_check_subcode), Errc::InvalidSupport);
  CHECK_ERRC(parity_check_matrix(parse_poly(F8, "x^2 + x"), finite_points(F8, {"0", "g"}), Variant::goppa),
             Errc::RootInSupport);

  const FieldCtx F64 = make_field(6, 0x5b);
  const Mobius A = parse_mobius(F64, "[[1,0],[1,g^21]]");
  const auto cubics = enum_invariant_prime_order(A);
  REQUIRE_FALSE(cubics.polys.empty());
  const auto H45 = parity_check_matrix(cubics.polys[0].g, flatten(nontrivial_orbits(A, true)), Variant::extended);
  CHECK(H45.rows == 4);
  CHECK(H45.cols == 63);
}

TEST_CASE("binary expansion") {
  const FieldCtx F8 = make_field(3, 0xb);
  const FieldMatrix one{F8, 1, 1, {F8.one()}};
  const BinMatrix B = binary_expand(one);
  CHECK(B.dump() == "1\n0\n0\n");
  const FieldMatrix zero{F8, 2, 3, std::vector<Fe>(6, F8.zero())};
  CHECK(binary_expand(zero) == BinMatrix(6, 3));

  // x is in the binary kernel iff the field columns it selects sum to zero.
  std::mt19937_64 rng(9);
  for (int t = 0; t < 20; ++t) {
    FieldMatrix H{F8, 2, 7, {}};
    for (int i = 0; i < 14; ++i) H.entries.push_back(F8.elem(static_cast<std::uint32_t>(rng() % 8)));
    const BinMatrix Bx = binary_expand(H);
    for (std::uint32_t x = 0; x < 128; ++x) {
      bool field_zero = true;
      for (std::size_t r = 0; r < H.rows; ++r) {
        Fe s = F8.zero();
        for (std::size_t c = 0; c < H.cols; ++c)
          if ((x >> c) & 1u) s += H.at(r, c);
        field_zero = field_zero && s.is_zero();
      }
      bool bin_zero = true;
      for (std::size_t r = 0; r < Bx.rows(); ++r) {
        unsigned s = 0;
        for (std::size_t c = 0; c < Bx.cols(); ++c) s ^= ((x >> c) & 1u) & static_cast<unsigned>(Bx.get(r, c));
        bin_zero = bin_zero && s == 0;
      }
      REQUIRE(field_zero == bin_zero);
    }
  }
}

TEST_CASE("kernel basis") {
  const BinMatrix K = kernel_basis(BinMatrix::parse("11\n"));
  CHECK(K.dump() == "11\n");
  CHECK(kernel_basis(BinMatrix::parse("100\n010\n001\n")).rows() == 0);

  std::mt19937_64 rng(2);
  for (int t = 0; t < 30; ++t) {
    const std::size_t rows = 1 + rng() % 30, cols = 1 + rng() % 100;
    const BinMatrix B = random_bin(rows, cols, rng);
    const BinMatrix G = kernel_basis(B);
    REQUIRE(orthogonal(G, B));
    BinMatrix R = B;
    const auto pivots = rref(R);
    REQUIRE(G.rows() == cols - pivots.size());
    BinMatrix G2 = G;
    REQUIRE(rref(G2).size() == G.rows());
    REQUIRE(G2 == G);
  }
  CHECK_ERRC(kernel_basis(BinMatrix(1, 129)), Errc::ScaleExceeded);
}

TEST_CASE("exhaustive minimum distance") {
  CHECK(min_distance_exhaustive(BinMatrix::parse("11\n")) == 2);
  CHECK(min_distance_exhaustive(BinMatrix::parse("11111\n")) == 5);
  // [7,4] Hamming code
  CHECK(min_distance_exhaustive(BinMatrix::parse("1000110\n0100101\n0010011\n0001111\n")) == 3);
  CHECK_ERRC(min_distance_exhaustive(BinMatrix(21, 30)), Errc::ScaleExceeded);

  std::mt19937_64 rng(8);
  for (int t = 0; t < 5; ++t) {
    const BinMatrix G = random_bin(14, 48, rng);
    const unsigned d1 = min_distance_exhaustive(G, 1);
    REQUIRE(min_distance_exhaustive(G, 3) == d1);
    REQUIRE(min_distance_exhaustive(G, 8) == d1);
  }
}

TEST_CASE("quasi-cyclic codes from orbit supports over GF(64)") {
  const FieldCtx F64 = make_field(6, 0x5b);
  const Mobius A = parse_mobius(F64, "[[1,0],[1,g^21]]");
  const auto cubics = enum_invariant_prime_order(A);
  REQUIRE_FALSE(cubics.polys.empty());
  const Poly g = cubics.polys[0].g;

  SupportSpec ext{F64, nontrivial_orbits(A, true), Variant::extended};
  const auto R = build_code(GoppaSpec{g, ext, A});
  CHECK(R.length == 63);
  REQUIRE(R.qc);
  CHECK(R.qc->l == 3);
  CHECK(R.qc->tau == 21);
  CHECK(R.automorphism_verified);
  CHECK(orthogonal(R.G, R.H));
  for (std::size_t i = 0; i < R.G.rows(); ++i) CHECK(R.G.row_weight(i) % 2 == 0);

  SupportSpec sub{F64, nontrivial_orbits(A, false), Variant::parity_check_subcode};
  const auto S = build_code(GoppaSpec{g, sub, A});
  CHECK(S.length == 60);
  REQUIRE(S.qc);
  CHECK(S.qc->tau == 20);
  CHECK(S.automorphism_verified);

  // The subcode sits inside the Goppa code on the same support as its even-weight part.
  SupportSpec plain = sub;
  plain.variant = Variant::goppa;
  const auto P = build_code(GoppaSpec{g, plain, std::nullopt}, {false, 1});
  CHECK(row_space_contains(P.G, S.G));
  bool odd = false;
  for (std::size_t i = 0; i < P.G.rows(); ++i) odd = odd || P.G.row_weight(i) % 2 == 1;
  CHECK(S.dimension + (odd ? 1 : 0) == P.dimension);

  // A block that is not a full orbit.
  SupportSpec bad = sub;
  bad.blocks[0].points.pop_back();
  CHECK_ERRC(build_code(GoppaSpec{g, bad, A}), Errc::OrbitNotUniform);

  const auto noninv = parse_poly(F64, "x^3 + g*x + 1");
  if (!check_invariance(noninv, A)) CHECK_THROWS_AS(build_code(GoppaSpec{noninv, sub, A}), Error);
}

TEST_CASE("results do not depend on the thread count") {
  const FieldCtx F64 = make_field(6, 0x5b);
  const Mobius A = parse_mobius(F64, "[[g^9,0],[1,1]]");
  const auto sept = enum_invariant_prime_order(A);
  REQUIRE_FALSE(sept.polys.empty());
  SupportSpec ext{F64, nontrivial_orbits(A, true), Variant::extended};
  const GoppaSpec spec{sept.polys[0].g, ext, A};
  const auto R1 = build_code(spec, {true, 1});
  const auto R4 = build_code(spec, {true, 4});
  CHECK(R1.G == R4.G);
  CHECK(R1.min_distance == R4.min_distance);
  CHECK(R1.automorphism_verified == R4.automorphism_verified);
}

TEST_CASE("unit-group supports") {
  const FieldCtx F32 = field_of_degree(5);
  const FieldCtx F1024 = field_of_degree(10);
  const TowerEmbedding emb = make_embedding(F32, F1024);
  const Fe xi = emb.embed(F32.generator());

  const Mobius A8 = Mobius::make(F1024, xi, F1024.one(), F1024.one(), xi);
  const auto s33 = unit_group_support(F1024, 33, A8);
  CHECK(s33.blocks.size() == 16);
  CHECK(s33.length() == 32);
  for (const auto& b : s33.blocks) CHECK(b.size() == 2);

  const Mobius A9 = parse_mobius(F1024, "[[0,1],[1,0]]");
  const auto s31 = unit_group_support(F1024, 31, A9);
  CHECK(s31.blocks.size() == 15);
  CHECK(s31.length() == 30);
  for (const auto& b : s31.blocks) {
    REQUIRE(b.size() == 2);
    CHECK(b.points[1].value() == b.points[0].value().inv());
  }

  CHECK_ERRC(unit_group_support(F1024, 7, A9), Errc::NonDivisor);
  CHECK_ERRC(unit_group_support(F1024, 33, parse_mobius(F1024, "[[1,g],[1,0]]")), Errc::NotClosed);
}

TEST_CASE("change of variables by a Mobius map preserves the binary code") {
  std::mt19937_64 rng(42);
  for (int t = 0; t < 20; ++t) {
    const auto inst = testing::random_transform_instance(rng);
    const GoppaSpec moved = support_transform(inst.spec, inst.A);
    REQUIRE(moved.g.degree() == inst.spec.g.degree());
    const auto a = build_code(inst.spec, {false, 1});
    const auto b = build_code(moved, {false, 1});
    REQUIRE(a.dimension > 0);
    REQUIRE(a.dimension == b.dimension);
    REQUIRE(same_row_space(a.G, b.G));
  }

  const FieldCtx F8 = make_field(3, 0xb);
  const Poly g = parse_poly(F8, "x^2 + g*x + g");
  const GoppaSpec spec{g, singletons(F8, finite_points(F8, {"0", "g^3", "g^5", "g^6"}), Variant::goppa), std::nullopt};
  const GoppaSpec same = support_transform(spec, Mobius::identity(F8));
  CHECK(same.g == g);
  CHECK(same.support.points() == spec.support.points());
}

TEST_CASE("text forms of variants and binary matrices") {
  CHECK(parse_variant("extended") == Variant::extended);
  for (Variant v : {Variant::goppa, Variant::parity_check_subcode, Variant::extended})
    CHECK(parse_variant(variant_name(v)) == v);
  CHECK_ERRC(parse_variant("bogus"), Errc::ParseError);
  const auto M = BinMatrix::parse("101\n011\n");
  CHECK(M.dump() == "101\n011\n");
  CHECK_ERRC(BinMatrix::parse("10\n1\n"), Errc::ParseError);
}
