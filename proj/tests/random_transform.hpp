#pragma once

// Random desk-scale Goppa specs for checking that a Mobius change of variables preserves the code.

#include <random>

#include "qcgoppa/codes.hpp"

namespace qcgoppa::testing {

struct TransformInstance {
  GoppaSpec spec;
  Mobius A;
};

// Over GF(32): a random irreducible g of degree 2 or 3, a random map with c = 1 and g(a) != 0,
// and 28 random finite support points avoiding the point a (whose preimage is infinity).
// The equality holds for the r + 1 row construction, so the instances use the parity-check subcode.
inline TransformInstance random_transform_instance(std::mt19937_64& rng) {
  const FieldCtx F = field_of_degree(5);
  const auto pick = [&] { return F.elem(static_cast<std::uint32_t>(rng() % F.size())); };
  for (;;) {
    const Fe a = pick(), b = pick(), d = pick();
    if ((a * d + b).is_zero()) continue;
    const Mobius A = Mobius::make(F, a, b, F.one(), d);
    const unsigned r = 2 + static_cast<unsigned>(rng() % 2);
    std::vector<Fe> c;
    for (unsigned i = 0; i < r; ++i) c.push_back(pick());
    c.push_back(F.one());
    const Poly g(F, std::move(c));
    if (!is_irreducible(g) || g.eval(a).is_zero()) continue;

    std::vector<Fe> pool;
    for (const Fe& x : F.elements())
      if (!(x == a)) pool.push_back(x);
    std::shuffle(pool.begin(), pool.end(), rng);
    pool.resize(28);
    std::sort(pool.begin(), pool.end(), FeLess{});
    SupportSpec support{F, {}, Variant::parity_check_subcode};
    for (const Fe& x : pool) support.blocks.push_back(Orbit{{ProjPoint::finite(x)}});
    return {GoppaSpec{g, support, std::nullopt}, A};
  }
}

}  // namespace qcgoppa::testing
