#include "qcgoppa/fixtures.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <set>

#include "qcgoppa/report.hpp"
#include "qcgoppa/text.hpp"

namespace qcgoppa::fixtures {

std::string_view mode_name(MatchMode m) noexcept {
  return m == MatchMode::bit_exact ? "bit_exact" : "structural";
}

bool Result::passed() const { return failures() == 0; }

std::size_t Result::failures() const {
  return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [](const Check& c) { return !c.passed; }));
}

const std::vector<std::string>& ids() {
  static const std::vector<std::string> v{"ex3_10", "ex3_11", "ex3_12", "ex4_5", "ex4_6", "ex4_8", "ex4_9"};
  return v;
}

MatchMode default_mode(std::string_view id) {
  if (id == "ex4_8" || id == "ex4_9") return MatchMode::structural;
  if (std::find(ids().begin(), ids().end(), id) == ids().end())
    throw Error(Errc::InvalidArgument, "unknown fixture '" + std::string(id) + "'");
  return MatchMode::bit_exact;
}

// ---------------------------------------------------------------------------
// Frozen regression values, recorded from the first verified run.

namespace {

struct FrozenEntry {
  const char* label;
  std::size_t dimension;
  int min_distance;  // -1 when not computed
};

constexpr FrozenEntry kFrozen[] = {
#include "regression_values.inc"
};

}  // namespace

std::optional<Regression> regression_value(std::string_view label) {
  for (const auto& e : kFrozen) {
    if (label != e.label) continue;
    Regression r{e.dimension, {}};
    if (e.min_distance >= 0) r.min_distance = static_cast<unsigned>(e.min_distance);
    return r;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Code-level checks

std::vector<Check> code_invariants(const CodeReport& r) {
  std::vector<Check> out;
  out.push_back({"G.H^T = 0", orthogonal(r.G, r.H), ""});
  if (r.variant != Variant::goppa) {
    bool even = true;
    for (std::size_t i = 0; i < r.G.rows(); ++i) even = even && r.G.row_weight(i) % 2 == 0;
    out.push_back({r.variant == Variant::extended ? "rows sum to zero over all coordinates"
                                                  : "all codewords have even weight",
                   even, ""});
  }
  const std::size_t rows = static_cast<std::size_t>(r.g.degree()) + (r.variant == Variant::goppa ? 0 : 1);
  const std::size_t redundancy = r.ctx.degree() * rows;
  const bool bound = r.length <= redundancy || r.dimension >= r.length - redundancy;
  out.push_back({"dimension bound", bound,
                 "dim " + std::to_string(r.dimension) + " vs " + std::to_string(r.length) + " - " +
                     std::to_string(redundancy)});
  if (r.dimension >= 1 && r.dimension <= 20) {
    out.push_back({"minimum distance computed", r.min_distance.has_value(), ""});
    if (r.min_distance && r.variant != Variant::goppa)
      out.push_back({"minimum distance even", *r.min_distance % 2 == 0, std::to_string(*r.min_distance)});
  }
  if (r.qc) out.push_back({"automorphism verified", r.automorphism_verified, ""});
  return out;
}

namespace {

using Clock = std::chrono::steady_clock;

void expect(Result& res, std::string name, bool ok, std::string detail = {}) {
  res.checks.push_back({std::move(name), ok, std::move(detail)});
}

std::vector<std::string> split_list(std::string_view text) {
  std::string s;
  for (char c : text)
    if (c != '(' && c != ')') s.push_back(c);
  std::vector<std::string> out;
  std::size_t pos = 0;
  for (;;) {
    const auto comma = s.find(',', pos);
    out.push_back(s.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

std::vector<ProjPoint> parse_points(const FieldCtx& ctx, std::string_view text) {
  std::vector<ProjPoint> out;
  for (const auto& item : split_list(text)) out.push_back(parse_point(ctx, item));
  return out;
}

std::vector<Fe> parse_elements(const FieldCtx& ctx, std::string_view text) {
  std::vector<Fe> out;
  for (const auto& item : split_list(text)) out.push_back(parse_fe(ctx, item));
  std::sort(out.begin(), out.end(), FeLess{});
  return out;
}

std::vector<Poly> parse_polys(const FieldCtx& ctx, const std::vector<const char*>& texts) {
  std::vector<Poly> out;
  for (const char* t : texts) out.push_back(parse_poly(ctx, t));
  return out;
}

std::string describe(const FieldCtx& ctx, const std::vector<Fe>& xs) {
  std::string out = "{";
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? ", " : "") + format(ctx, xs[i]);
  return out + "}";
}

/// Compares two polynomial lists as sets; the detail names what is missing and what is extra.
void expect_same_polys(Result& res, const std::string& name, std::vector<Poly> got, std::vector<Poly> want) {
  sort_canonical(got);
  sort_canonical(want);
  std::string detail;
  for (const auto& w : want)
    if (std::find(got.begin(), got.end(), w) == got.end()) detail += " missing " + format(w) + ";";
  for (const auto& g : got)
    if (std::find(want.begin(), want.end(), g) == want.end()) detail += " unexpected " + format(g) + ";";
  const bool ok = detail.empty() && got.size() == want.size();
  if (ok) detail = std::to_string(want.size()) + "/" + std::to_string(want.size()) + " polynomials";
  expect(res, name, ok, detail);
}

bool cyclic_equal(const std::vector<ProjPoint>& a, const std::vector<ProjPoint>& b) {
  if (a.size() != b.size()) return false;
  if (a.empty()) return true;
  const auto it = std::find(b.begin(), b.end(), a.front());
  if (it == b.end()) return false;
  const std::size_t off = static_cast<std::size_t>(it - b.begin());
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!(a[i] == b[(i + off) % b.size()])) return false;
  return true;
}

/// Every listed orbit must appear among the computed ones, in the same cyclic order.
void expect_orbits(Result& res, const FieldCtx& ctx, const std::vector<Orbit>& got,
                   const std::vector<const char*>& listed) {
  std::string detail;
  for (std::size_t i = 0; i < listed.size(); ++i) {
    const auto pts = parse_points(ctx, listed[i]);
    const bool found =
        std::any_of(got.begin(), got.end(), [&](const Orbit& o) { return cyclic_equal(o.points, pts); });
    if (!found) detail += " L" + std::to_string(i + 1) + "=" + format_points(ctx, pts) + " not found;";
  }
  const bool ok = detail.empty() && got.size() == listed.size();
  if (ok) detail = std::to_string(listed.size()) + " orbits, memberships and cyclic order exact";
  expect(res, "orbit memberships", ok, detail);
}

struct CodeExpectation {
  std::size_t length = 0;
  std::optional<QcBlocks> qc;
};

/// Builds one code, checks structure, invariants, and the frozen regression values; subcodes
/// are also checked against the Goppa code on the same (g, L).
void add_code(Result& res, const Options& opts, const std::string& label, const Poly& g, std::vector<Orbit> blocks,
              Variant variant, const std::optional<Mobius>& A, const CodeExpectation& want) {
  const FieldCtx ctx = g.ctx();
  GoppaSpec spec{g, SupportSpec{ctx, std::move(blocks), variant}, A};
  CodeReport r;
  try {
    r = build_code(spec, BuildOptions{true, opts.threads});
  } catch (const Error& e) {
    expect(res, label + ": construction", false, e.what());
    return;
  }

  std::string detail = "length " + std::to_string(r.length);
  bool ok = r.length == want.length;
  if (want.qc) {
    ok = ok && r.qc && r.qc->l == want.qc->l && r.qc->tau == want.qc->tau && r.automorphism_verified;
    if (r.qc) detail += ", qc (" + std::to_string(r.qc->l) + "," + std::to_string(r.qc->tau) + ")";
    detail += r.automorphism_verified ? ", verified" : ", NOT verified";
  }
  expect(res, label + ": structure", ok, detail);

  std::string failed;
  for (const auto& c : code_invariants(r))
    if (!c.passed) failed += " " + c.name + (c.detail.empty() ? "" : " (" + c.detail + ")") + ";";
  expect(res, label + ": code invariants", failed.empty(), failed.empty() ? "all hold" : failed);

  const std::string got = "dim " + std::to_string(r.dimension) + ", d " +
                          (r.min_distance ? std::to_string(*r.min_distance) : std::string("n/a"));
  if (const auto frozen = regression_value(label)) {
    const bool same = frozen->dimension == r.dimension && frozen->min_distance == r.min_distance;
    expect(res, label + ": regression", same, got);
  } else {
    expect(res, label + ": regression", false, "no frozen value; computed " + got);
  }

  if (variant == Variant::parity_check_subcode) {
    GoppaSpec parent{g, SupportSpec{ctx, spec.support.blocks, Variant::goppa}, std::nullopt};
    const CodeReport pr = build_code(parent, BuildOptions{false, 1});
    bool parent_has_odd = false;
    for (std::size_t i = 0; i < pr.G.rows(); ++i) parent_has_odd = parent_has_odd || pr.G.row_weight(i) % 2 == 1;
    const bool contained = row_space_contains(pr.G, r.G);
    const bool is_even_part = r.dimension + (parent_has_odd ? 1 : 0) == pr.dimension;
    expect(res, label + ": subcode chain", contained && is_even_part,
           "goppa dim " + std::to_string(pr.dimension) + ", subcode dim " + std::to_string(r.dimension));
  }
  res.codes.push_back({label, std::move(r)});
}

// ---------------------------------------------------------------------------
// Examples over GF(8), GF(2), GF(16)

void run_ex3_10(Result& res, const Options& opts) {
  const FieldCtx F8 = make_field(3, 0xb);
  const Fe a = F8.one(), b = F8.zero();
  const Mobius A = order2_map(F8, a, b);

  const auto t = t_set_order2(F8, a, b);
  const auto want_t = parse_elements(F8, "1, g, g^2, g^4");
  expect(res, "trace set", t.members == want_t, describe(F8, t.members));

  const auto want = parse_polys(F8, {"x^2 + g*x + g", "x^2 + g^2*x + g^2", "x^2 + g^4*x + g^4", "x^2 + x + 1"});
  const auto listing = enum_order2_degree_2s(F8, a, b, 1);
  std::vector<Poly> got;
  for (const auto& p : listing.polys) got.push_back(p.g);
  expect_same_polys(res, "quadratics", got, want);

  bool paired = true;
  for (const char* k : {"g", "g^2", "g^4", "1"}) {
    const Poly g = g_k_order2(F8, a, b, parse_fe(F8, k));
    paired = paired && std::find(want.begin(), want.end(), g) != want.end();
  }
  expect(res, "k pairs with listed polynomial", paired);

  const Poly g1 = want[0];
  add_code(res, opts, "ex3_10/g1/extended", g1, nontrivial_orbits(A, true), Variant::extended, A,
           {8, QcBlocks{2, 4}});
  add_code(res, opts, "ex3_10/g1/subcode", g1, nontrivial_orbits(A, false), Variant::parity_check_subcode, A,
           {6, QcBlocks{2, 3}});
}

void run_ex3_11(Result& res, const Options& opts) {
  const FieldCtx F2 = make_field(1, 0x3);
  const Mobius A = order2_map(F2, F2.one(), F2.zero());
  const auto listing = enum_order2_degree_2s(F2, F2.one(), F2.zero(), 5);
  std::vector<Poly> got;
  for (const auto& p : listing.polys) got.push_back(p.g);
  const auto want = parse_polys(F2, {"x^10 + x^8 + x^7 + x^6 + x^2 + x + 1", "x^10 + x^9 + x^8 + x^7 + x^2 + x + 1",
                                     "x^10 + x^9 + x^5 + x^4 + x^2 + x + 1"});
  expect_same_polys(res, "degree-10 polynomials", got, want);

  bool irreducible = true;
  for (const auto& g : want) irreducible = irreducible && is_irreducible(g) && check_invariance(g, A).has_value();
  expect(res, "listed polynomials irreducible and invariant", irreducible);

  expect(res, "stratum count", listing.k_count == 15, std::to_string(listing.k_count));
  std::map<std::uint32_t, std::size_t> classes;
  for (const auto& k : listing.k_all) {
    std::uint32_t rep = k.bits();
    for (unsigned i = 1; i < 5; ++i) rep = std::min(rep, k.frobenius(i).bits());
    ++classes[rep];
  }
  bool sizes = classes.size() == 3;
  for (const auto& [rep, n] : classes) sizes = sizes && n == 5;
  expect(res, "Frobenius classes", sizes, std::to_string(classes.size()) + " classes");

  const FieldCtx& F32 = listing.tower;
  const auto want_k = parse_elements(
      F32, "g^5, g^7, g^9, g^10, g^11, g^13, g^14, g^18, g^19, g^20, g^21, g^22, g^25, g^26, g^28");
  auto got_k = listing.k_all;
  std::sort(got_k.begin(), got_k.end(), FeLess{});
  expect(res, "k set", got_k == want_k, describe(F32, got_k));
  if (F32.modulus() != 0x25)
    res.notes.push_back("GF(32) modulus is 0x" + modulus_hex(F32.modulus()) + "; the k set assumes x^5+x^2+1");

  add_code(res, opts, "ex3_11/g1/extended", want[0], nontrivial_orbits(A, true), Variant::extended, A,
           {2, QcBlocks{2, 1}});
}

void run_ex3_12(Result& res, const Options& opts) {
  const FieldCtx F16 = make_field(4, 0x13);
  const Fe a = F16.one(), d = F16.gen_pow(5);
  const Mobius A = order3_map(F16, a, d);
  expect(res, "matrix", A == parse_mobius(F16, "[[1,0],[1,g^5]]"), format(A));

  const char* frob_k = "g^9, g^6, g^5, g, g^4";
  const char* frob2_k = "g^8, g^7, 1, g^2, g^13";
  const std::vector<const char*> frob_g{"x^3 + g^9*x^2 + g^4*x + g^14", "x^3 + g^6*x^2 + g*x + g^11",
                                        "x^3 + g^5*x^2 + x + g^10", "x^3 + g*x^2 + g^11*x + g^6",
                                        "x^3 + g^4*x^2 + g^14*x + g^9"};
  const std::vector<const char*> frob2_g{"x^3 + g^8*x^2 + g^3*x + g^13", "x^3 + g^7*x^2 + g^2*x + g^12",
                                         "x^3 + x^2 + g^10*x + g^5", "x^3 + g^2*x^2 + g^12*x + g^7",
                                         "x^3 + g^13*x^2 + g^8*x + g^3"};

  const auto [t1, t2] = t_sets_order3(F16, a, d);
  std::vector<Fe> uni = t1.members;
  uni.insert(uni.end(), t2.members.begin(), t2.members.end());
  std::sort(uni.begin(), uni.end(), FeLess{});
  std::vector<Fe> want_uni = parse_elements(F16, std::string(frob_k) + ", " + frob2_k);
  std::sort(want_uni.begin(), want_uni.end(), FeLess{});
  expect(res, "T1 and T2 union", uni == want_uni, describe(F16, uni));

  const auto listing = enum_order3_degree_3s(F16, a, d, 1);
  std::vector<Poly> got;
  for (const auto& p : listing.polys) got.push_back(p.g);
  auto want = parse_polys(F16, frob_g);
  for (const auto& p : parse_polys(F16, frob2_g)) want.push_back(p);
  expect_same_polys(res, "cubics", got, want);

  const auto check_group = [&](const char* ks, const std::vector<const char*>& gs, FrobeniusDirection dir,
                               unsigned u, const std::string& name) {
    std::string detail;
    const auto kv = split_list(ks);
    for (std::size_t i = 0; i < kv.size(); ++i) {
      const Fe k = parse_fe(F16, kv[i]);
      const Poly g = parse_poly(F16, gs[i]);
      const auto cls = classify_cubic(F16, a, d, k);
      if (cls.root_count != RootCount::none_in_field || cls.direction != dir)
        detail += " k=" + format(F16, k) + " classified otherwise;";
      if (!(g_k_order3(F16, a, d, k) == g)) detail += " k=" + format(F16, k) + " does not give " + gs[i] + ";";
      if (!frobenius_acts_as(g, A, u, 1)) detail += " " + std::string(gs[i]) + " fails the Frobenius test;";
    }
    expect(res, name, detail.empty(), detail.empty() ? "5/5" : detail);
  };
  check_group(frob_k, frob_g, FrobeniusDirection::A_is_frobenius, 1, "A acts as Frobenius");
  check_group(frob2_k, frob2_g, FrobeniusDirection::A2_is_frobenius, 2, "A^2 acts as Frobenius");
  expect(res, "T2 is the A group", t2.members == parse_elements(F16, frob_k), describe(F16, t2.members));
  expect(res, "T1 is the A^2 group", t1.members == parse_elements(F16, frob2_k), describe(F16, t1.members));

  const Poly g1 = want[0];
  add_code(res, opts, "ex3_12/g1/extended", g1, nontrivial_orbits(A, true), Variant::extended, A,
           {15, QcBlocks{3, 5}});
  add_code(res, opts, "ex3_12/g1/subcode", g1, nontrivial_orbits(A, false), Variant::parity_check_subcode, A,
           {12, QcBlocks{3, 4}});
}

// ---------------------------------------------------------------------------
// Examples over GF(64)

void run_prime_order_example(Result& res, const Options& opts, const std::string& id, const char* matrix,
                             const std::vector<const char*>& listed_orbits, const std::vector<const char*>& listed_g,
                             std::size_t l) {
  const FieldCtx F64 = make_field(6, 0x5b);
  const Mobius A = parse_mobius(F64, matrix);
  expect(res, "order of A", mobius_order(A) == l, std::to_string(mobius_order(A)));

  const auto orb = orbits(A, projective_line(F64));
  expect_orbits(res, F64, orb, listed_orbits);

  const auto listing = enum_invariant_prime_order(A, 1);
  std::vector<Poly> got;
  for (const auto& p : listing.polys) got.push_back(p.g);
  const auto want = parse_polys(F64, listed_g);
  expect_same_polys(res, "invariant polynomials with A as Frobenius", got, want);

  std::string bad;
  for (std::size_t i = 0; i < want.size(); ++i) {
    const Poly& g = want[i];
    if (!is_irreducible(g) || !check_invariance(g, A) || !frobenius_acts_as(g, A, 1, 1))
      bad += " g" + std::to_string(i + 1) + ";";
  }
  expect(res, "listed polynomials irreducible, invariant, A as Frobenius", bad.empty(), bad);

  const auto ext_blocks = nontrivial_orbits(A, true);
  const auto sub_blocks = nontrivial_orbits(A, false);
  for (std::size_t i = 0; i < want.size(); ++i) {
    const std::string base = id + "/g" + std::to_string(i + 1);
    add_code(res, opts, base + "/extended", want[i], ext_blocks, Variant::extended, A,
             {ext_blocks.size() * l, QcBlocks{l, ext_blocks.size()}});
    add_code(res, opts, base + "/subcode", want[i], sub_blocks, Variant::parity_check_subcode, A,
             {sub_blocks.size() * l, QcBlocks{l, sub_blocks.size()}});
  }
  const std::size_t ext_len = ext_blocks.size() * l, sub_len = sub_blocks.size() * l;
  expect(res, "extended length", ext_len == 63, std::to_string(ext_len));
  expect(res, "subcode length", sub_len == (l == 3 ? 60u : 56u), std::to_string(sub_len));
}

void run_ex4_5(Result& res, const Options& opts) {
  run_prime_order_example(
      res, opts, "ex4_5", "[[1,0],[1,g^21]]",
      {"(0)",
       "(g, g^6, g^29)",
       "(g^2, g^15, g^37)",
       "(g^3, g^9, g^11)",
       "(g^4, g^24, g^53)",
       "(g^5, g^49, g^59)",
       "(g^7, g^47, g^20)",
       "(g^8, g^60, g^22)",
       "(g^10, g^40, g^34)",
       "(g^12, g^36, g^44)",
       "(g^13, g^56, g^31)",
       "(g^14, g^55, g^19)",
       "(g^16, g^33, g^23)",
       "(g^17, g^28, g^62)",
       "(g^18, g^50, g^48)",
       "(g^25, g^32, g^51)",
       "(g^26, g^38, g^41)",
       "(g^27, g^43, g^39)",
       "(g^30, g^45, g^46)",
       "(g^35, g^61, g^52)",
       "(g^54, g^58, g^57)",
       "(g^21, inf, 1)",
       "(g^42)"},
      {"x^3 + g^28*x^2 + g^7*x + g^49",  "x^3 + g^17*x^2 + g^59*x + g^38", "x^3 + g^49*x^2 + g^28*x + g^7",
       "x^3 + g^43*x^2 + g^22*x + g",     "x^3 + g^59*x^2 + g^38*x + g^17", "x^3 + g^5*x^2 + g^47*x + g^26",
       "x^3 + g^27*x^2 + g^6*x + g^48",  "x^3 + g^7*x^2 + g^49*x + g^28",  "x^3 + g^62*x^2 + g^41*x + g^20",
       "x^3 + g^46*x^2 + g^25*x + g^4",  "x^3 + g^39*x^2 + g^18*x + g^60", "x^3 + g^30*x^2 + g^9*x + g^51",
       "x^3 + g^10*x^2 + g^52*x + g^31", "x^3 + g^54*x^2 + g^33*x + g^12", "x^3 + g^47*x^2 + g^26*x + g^5",
       "x^3 + g^58*x^2 + g^37*x + g^16", "x^3 + g^40*x^2 + g^19*x + g^61", "x^3 + g^57*x^2 + g^36*x + g^15",
       "x^3 + g^34*x^2 + g^13*x + g^55", "x^3 + g^45*x^2 + g^24*x + g^3",  "x^3 + g^20*x^2 + g^62*x + g^41"},
      3);
}

void run_ex4_6(Result& res, const Options& opts) {
  run_prime_order_example(
      res, opts, "ex4_6", "[[g^9,0],[1,1]]",
      {"(0)",
       "(g, g^17, g^50, g^6, g^52, g^49, g^56)",
       "(g^2, g^25, g^39, g^31, g^44, g^24, g^55)",
       "(g^3, g^62, g^16, g^11, g^60, g^59, g^37)",
       "(g^4, g^41, g^26, g^29, g^57, g^46, g^33)",
       "(g^5, g^47, g^58, g^42, g^30, g^34, g^28)",
       "(g^7, g^8, g^10, g^22, g^48, g^38, g^14)",
       "(g^12, g^32, g^13, g^19, g^43, g^15, g^53)",
       "(g^20, g^35, g^40, g^61, g^23, g^21, g^51)",
       "(g^9, g^54, g^45, g^18, g^36, 1, inf)",
       "(g^27)"},
      {"x^7 + g^35*x^6 + g^62*x^5 + g^26*x^4 + g^53*x^3 + g^17*x^2 + g^44*x + g^8",
       "x^7 + g*x^6 + g^28*x^5 + g^55*x^4 + g^19*x^3 + g^46*x^2 + g^10*x + g^37",
       "x^7 + g^28*x^6 + g^55*x^5 + g^19*x^4 + g^46*x^3 + g^10*x^2 + g^37*x + g",
       "x^7 + g^18*x^6 + g^45*x^5 + g^9*x^4 + g^36*x^3 + x^2 + g^27*x + g^54",
       "x^7 + g^24*x^6 + g^51*x^5 + g^15*x^4 + g^42*x^3 + g^6*x^2 + g^33*x + g^60",
       "x^7 + g^3*x^6 + g^30*x^5 + g^57*x^4 + g^21*x^3 + g^48*x^2 + g^12*x + g^39",
       "x^7 + g^12*x^6 + g^39*x^5 + g^3*x^4 + g^30*x^3 + g^57*x^2 + g^21*x + g^48",
       "x^7 + g^33*x^6 + g^60*x^5 + g^24*x^4 + g^51*x^3 + g^15*x^2 + g^42*x + g^6",
       "x^7 + g^8*x^6 + g^35*x^5 + g^62*x^4 + g^26*x^3 + g^53*x^2 + g^17*x + g^44"},
      7);
}

// ---------------------------------------------------------------------------
// Examples over GF(1024) with unit-group supports

struct UnitGroupCase {
  std::string id;
  const char* matrix;  // over GF(32)
  std::uint64_t n;
  std::size_t blocks;
  const char* listed_g;  // over GF(1024), w = the canonical generator
  std::vector<const char*> listed_orbits;
};

void run_unit_group(Result& res, const Options& opts, const UnitGroupCase& c) {
  const FieldCtx F32 = field_of_degree(5, opts.table);
  const FieldCtx F1024 = field_of_degree(10, opts.table);
  const TowerEmbedding emb = make_embedding(F32, F1024);
  const Mobius A32 = parse_mobius(F32, c.matrix);
  const Mobius A = embed(emb, A32);
  expect(res, "order of A", mobius_order(A) == 2, std::to_string(mobius_order(A)));

  const SupportSpec sup = unit_group_support(F1024, c.n, A);
  bool pairs = sup.blocks.size() == c.blocks;
  for (const auto& o : sup.blocks) pairs = pairs && o.size() == 2;
  expect(res, "U_" + std::to_string(c.n) + " blocks", pairs,
         std::to_string(sup.blocks.size()) + " blocks of size 2");
  const bool one_fixed = A.apply(ProjPoint::finite(F1024.one())) == ProjPoint::finite(F1024.one());
  expect(res, "fixed point 1 dropped", one_fixed && sup.length() == c.n - 1, "length " + std::to_string(sup.length()));

  // Structural choice: the smallest-encoding k of the trace set gives an invariant irreducible quadratic.
  const Fe a = A.a(), b = A.b();
  const TSet t = t_set_order2(F1024, a, b);
  const Poly g = g_k_order2(F1024, a, b, t.members.front());
  expect(res, "chosen g irreducible and invariant", is_irreducible(g) && check_invariance(g, A).has_value(),
         format(g));
  add_code(res, opts, res.id + "/min_k/subcode", g, sup.blocks, Variant::parity_check_subcode, A,
           {c.n - 1, QcBlocks{2, c.blocks}});

  if (!opts.strict) return;
  res.mode = MatchMode::bit_exact;
  if (F32.modulus() != 0x25 || F1024.modulus() != 0x46f)
    res.notes.push_back("moduli 0x" + modulus_hex(F32.modulus()) + "/0x" + modulus_hex(F1024.modulus()) +
                        " differ from the Conway choice; coefficient-exact checks are expected to fail");

  expect(res, "strict: xi embeds as w^33", emb.image_of_generator() == F1024.gen_pow(33),
         format(F1024, emb.image_of_generator()));

  const Poly pg = parse_poly(F1024, c.listed_g);
  const bool in_family = pg.degree() == 2 && pg.coeff(0) == a * pg.coeff(1) + b && t.contains(pg.coeff(1));
  expect(res, "strict: listed g is x^2 + kx + ak + b with k in the trace set", in_family, format(pg));
  expect(res, "strict: listed g irreducible and invariant", is_irreducible(pg) && check_invariance(pg, A).has_value(),
         format(pg));

  std::string missing;
  std::size_t matched = 0;
  for (const char* text : c.listed_orbits) {
    auto pts = parse_points(F1024, text);
    std::sort(pts.begin(), pts.end());
    const bool found = std::any_of(sup.blocks.begin(), sup.blocks.end(), [&](const Orbit& o) {
      auto q = o.points;
      std::sort(q.begin(), q.end());
      return q == pts;
    });
    if (found)
      ++matched;
    else
      missing += std::string(" ") + text;
  }
  if (c.id == "ex4_9") {
    // The listing repeats L6 and shifts its right column from there on; mismatches are notes.
    if (!missing.empty()) res.notes.push_back("listed pairs that are not orbits:" + missing);
    expect(res, "strict: consistent listed orbits match", matched >= 1,
           std::to_string(matched) + "/" + std::to_string(c.listed_orbits.size()) + " listed pairs are orbits");
  } else {
    expect(res, "strict: orbit memberships", missing.empty(),
           missing.empty() ? std::to_string(matched) + " orbits exact" : "not found:" + missing);
  }
  add_code(res, opts, res.id + "/listed_g/subcode", pg, sup.blocks, Variant::parity_check_subcode, A,
           {c.n - 1, QcBlocks{2, c.blocks}});
}

void run_ex4_8(Result& res, const Options& opts) {
  run_unit_group(res, opts,
                 {"ex4_8", "[[g,1],[1,g]]", 33, 16, "x^2 + w^459*x + w^321",
                  {"(w^31, w^837)", "(w^62, w^558)", "(w^93, w^806)", "(w^124, w^868)", "(w^155, w^899)",
                   "(w^186, w^992)", "(w^217, w^930)", "(w^248, w^341)", "(w^279, w^651)", "(w^310, w^496)",
                   "(w^372, w^744)", "(w^403, w^434)", "(w^465, w^961)", "(w^527, w^713)", "(w^589, w^620)",
                   "(w^682, w^775)"}});
}

void run_ex4_9(Result& res, const Options& opts) {
  run_unit_group(res, opts,
                 {"ex4_9", "[[0,1],[1,0]]", 31, 15, "x^2 + w^800*x + 1",
                  {"(w^33, w^990)", "(w^66, w^957)", "(w^99, w^924)", "(w^132, w^891)", "(w^165, w^858)",
                   "(w^198, w^825)", "(w^198, w^792)", "(w^231, w^759)", "(w^264, w^726)", "(w^297, w^693)",
                   "(w^330, w^660)", "(w^363, w^627)", "(w^396, w^594)", "(w^429, w^594)", "(w^462, w^561)",
                   "(w^495, w^528)"}});
}

}  // namespace

Result run(std::string_view id, const Options& opts) {
  Result res;
  res.id = std::string(id);
  res.mode = default_mode(id);
  const auto start = Clock::now();
  try {
    if (id == "ex3_10") run_ex3_10(res, opts);
    if (id == "ex3_11") run_ex3_11(res, opts);
    if (id == "ex3_12") run_ex3_12(res, opts);
    if (id == "ex4_5") run_ex4_5(res, opts);
    if (id == "ex4_6") run_ex4_6(res, opts);
    if (id == "ex4_8") run_ex4_8(res, opts);
    if (id == "ex4_9") run_ex4_9(res, opts);
  } catch (const std::exception& e) {
    expect(res, "fixture ran to completion", false, e.what());
  }
  res.seconds = std::chrono::duration<double>(Clock::now() - start).count();
  return res;
}

}  // namespace qcgoppa::fixtures
