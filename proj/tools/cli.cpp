#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <fstream>
#include <iostream>
#include <optional>

#include "qcgoppa/codes.hpp"
#include "qcgoppa/fixtures.hpp"
#include "qcgoppa/report.hpp"
#include "qcgoppa/text.hpp"

namespace qcgoppa::cli {

namespace {

using json = nlohmann::ordered_json;

/// A failure the CLI reports with a specific exit code.
struct Exit {
  int code;
  std::string message;
};

struct Globals {
  std::string field;
  std::string base;
  std::string matrix;
  std::vector<std::string> moduli;
  bool json = false;
  bool strict = false;
  unsigned threads = 1;
};

std::uint32_t parse_hex(std::string_view s, std::string_view what) {
  if (s.size() > 2 && s[0] == '0' && (s[1] == 'x' || s[1] == 'X')) s.remove_prefix(2);
  std::uint32_t v = 0;
  auto r = std::from_chars(s.data(), s.data() + s.size(), v, 16);
  if (s.empty() || r.ec != std::errc() || r.ptr != s.data() + s.size())
    throw Exit{kUsage, "bad hex in " + std::string(what) + ": '" + std::string(s) + "'"};
  return v;
}

unsigned parse_uint(std::string_view s, std::string_view what) {
  unsigned v = 0;
  auto r = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || r.ec != std::errc() || r.ptr != s.data() + s.size())
    throw Exit{kUsage, "bad number in " + std::string(what) + ": '" + std::string(s) + "'"};
  return v;
}

ModulusTable make_table(const Globals& g) {
  ModulusTable t = ModulusTable::builtin();
  for (const auto& m : g.moduli) {
    const auto colon = m.find(':');
    if (colon == std::string::npos) throw Exit{kUsage, "--modulus expects <degree>:<hex>, got '" + m + "'"};
    t.set(parse_uint(std::string_view(m).substr(0, colon), "--modulus"),
          parse_hex(std::string_view(m).substr(colon + 1), "--modulus"));
  }
  return t;
}

/// f8, f1024, "<degree>:<hex>", or "<degree>". Degree 1 always means GF(2) with modulus x + 1.
FieldCtx parse_field(const std::string& spec, const ModulusTable& table) {
  if (spec.empty()) throw Exit{kUsage, "--field is required"};
  if (spec[0] == 'f') {
    const unsigned size = parse_uint(std::string_view(spec).substr(1), "--field");
    unsigned m = 0;
    while (m < 25 && (1u << m) < size) ++m;
    if (m == 0 || m > 24 || (1u << m) != size) throw Exit{kUsage, "unknown field name '" + spec + "'"};
    return field_of_degree(m, table);
  }
  const auto colon = spec.find(':');
  const unsigned m = parse_uint(std::string_view(spec).substr(0, colon), "--field");
  if (m == 0 || m > 24) throw Exit{kUsage, "field degree must be in 1..24"};
  if (colon == std::string::npos) return field_of_degree(m, table);
  const std::uint32_t mod = parse_hex(std::string_view(spec).substr(colon + 1), "--field");
  if (m == 1 && (mod == 0x2 || mod == 0x3)) return make_field(1, 0x3);
  return make_field(m, mod);
}

struct Setup {
  ModulusTable table;
  FieldCtx ctx;
  std::optional<Mobius> A;
};

Setup setup(const Globals& g, bool need_matrix) {
  Setup s{make_table(g), {}, {}};
  s.ctx = parse_field(g.field, s.table);
  if (g.matrix.empty()) {
    if (need_matrix) throw Exit{kUsage, "--matrix is required"};
    return s;
  }
  if (g.base.empty()) {
    s.A = parse_mobius(s.ctx, g.matrix);
  } else {
    const FieldCtx base = parse_field(g.base, s.table);
    s.A = embed(make_embedding(base, s.ctx), parse_mobius(base, g.matrix));
  }
  return s;
}

std::string join_points(const FieldCtx& ctx, const std::vector<ProjPoint>& pts) { return format_points(ctx, pts); }

// ---------------------------------------------------------------------------

struct EnumArgs {
  unsigned deg = 0;
  std::optional<unsigned> power;
};

int cmd_enum(const Globals& g, const EnumArgs& a, std::ostream& out, std::ostream& err) {
  if (a.deg == 0) throw Exit{kUsage, "enum: --deg is required"};
  if (g.matrix.empty())
    throw Exit{kUsage, "enum: degree " + std::to_string(a.deg) +
                           " needs --matrix; closed forms exist only for maps of order 2 and 3, and degree-l "
                           "candidates for a supplied map of prime order l"};
  const Setup s = setup(g, true);
  const Mobius& A = *s.A;
  const auto l = mobius_order(A);
  InvariantListing listing = [&] {
    if (l == 2 || l == 3) {
      if (!A.c_is_one())
        throw Exit{kUsage, "enum: the order-" + std::to_string(l) + " families need c = 1 (A of the form ((a,b),(1,d)))"};
      if (a.deg % l != 0)
        throw Exit{kUsage, "enum: degree " + std::to_string(a.deg) + " is not a multiple of ord(A) = " + std::to_string(l)};
      const unsigned sdeg = static_cast<unsigned>(a.deg / l);
      return l == 2 ? enum_order2_degree_2s(s.ctx, A.a(), A.b(), sdeg) : enum_order3_degree_3s(s.ctx, A.a(), A.d(), sdeg);
    }
    if (l >= 5 && is_prime(l) && a.deg == l) return enum_invariant_prime_order(A, a.power);
    throw Exit{kUsage, "enum: no construction for degree " + std::to_string(a.deg) + " with ord(A) = " +
                           std::to_string(l) + " (order 2 and 3 families, or degree l for prime order l)"};
  }();
  if (a.power && (l == 2 || l == 3)) {
    std::erase_if(listing.polys, [&](const InvariantPoly& p) { return p.frobenius_power != *a.power; });
  }
  for (const auto& k : listing.degenerate) err << "excluded k = " << format(listing.tower, k) << "\n";
  if (g.json)
    out << listing_json(listing).dump(2) << "\n";
  else
    out << listing_lines(listing);
  return kOk;
}

// ---------------------------------------------------------------------------

struct BuildArgs {
  std::string g;
  std::string support;
  std::string variant;
  std::string generator_file;
  bool no_min_distance = false;
};

std::vector<std::size_t> parse_indices(std::string_view list, std::size_t n) {
  std::vector<std::size_t> out;
  std::size_t pos = 0;
  while (pos <= list.size()) {
    auto comma = list.find(',', pos);
    if (comma == std::string_view::npos) comma = list.size();
    const std::string_view item = list.substr(pos, comma - pos);
    const auto dash = item.find('-');
    const unsigned lo = parse_uint(item.substr(0, dash), "orbit range");
    const unsigned hi = dash == std::string_view::npos ? lo : parse_uint(item.substr(dash + 1), "orbit range");
    if (lo == 0 || hi < lo || hi > n)
      throw Exit{kUsage, "orbit index out of range 1.." + std::to_string(n) + ": '" + std::string(item) + "'"};
    for (unsigned i = lo; i <= hi; ++i) out.push_back(i - 1);
    pos = comma + 1;
  }
  return out;
}

SupportSpec parse_support(const Setup& s, const std::string& sel) {
  const auto colon = sel.find(':');
  const std::string kind = sel.substr(0, colon);
  const std::string arg = colon == std::string::npos ? "" : sel.substr(colon + 1);
  SupportSpec spec{s.ctx, {}, Variant::goppa};
  if (kind == "orbits") {
    if (!s.A) throw Exit{kUsage, "orbits: supports need --matrix"};
    if (arg == "nontrivial" || arg == "finite") {
      spec.blocks = nontrivial_orbits(*s.A, arg == "nontrivial");
    } else {
      const auto all = orbits(*s.A, projective_line(s.ctx));
      for (auto i : parse_indices(arg, all.size())) spec.blocks.push_back(all[i]);
    }
  } else if (kind == "unit-group") {
    if (!s.A) throw Exit{kUsage, "unit-group supports need --matrix"};
    spec = unit_group_support(s.ctx, parse_uint(arg, "unit-group"), *s.A);
  } else if (kind == "explicit") {
    std::vector<ProjPoint> pts;
    std::size_t pos = 0;
    while (pos <= arg.size()) {
      auto comma = arg.find(',', pos);
      if (comma == std::string::npos) comma = arg.size();
      pts.push_back(parse_point(s.ctx, arg.substr(pos, comma - pos)));
      pos = comma + 1;
    }
    if (s.A) {
      spec.blocks = orbits(*s.A, pts);
    } else {
      for (const auto& p : pts) spec.blocks.push_back(Orbit{{p}});
    }
  } else {
    throw Exit{kUsage, "support selector must be orbits:<list|nontrivial|finite>, unit-group:<n> or explicit:<points>"};
  }
  return spec;
}

int cmd_build(const Globals& g, const BuildArgs& a, std::ostream& out, std::ostream& err) {
  const Setup s = setup(g, false);
  GoppaSpec spec{parse_poly(s.ctx, a.g), parse_support(s, a.support), s.A};
  if (!a.variant.empty())
    spec.support.variant = parse_variant(a.variant);
  else if (spec.support.includes_infinity())
    spec.support.variant = Variant::extended;
  else
    spec.support.variant = s.A ? Variant::parity_check_subcode : Variant::goppa;

  if (s.A && !check_invariance(spec.g, *s.A))
    throw Exit{kQcFailed, "build: " + format(spec.g) + " is not invariant under " + format(*s.A)};

  const CodeReport r = build_code(spec, BuildOptions{!a.no_min_distance, g.threads});
  out << report_json(r).dump(2) << "\n";
  if (!a.generator_file.empty()) {
    std::ofstream f(a.generator_file);
    if (!f) throw Exit{kUsage, "cannot write " + a.generator_file};
    f << r.G.dump();
  }
  if (s.A && !r.automorphism_verified) {
    err << "build: the induced permutation is not an automorphism of the code\n";
    return kQcFailed;
  }
  return kOk;
}

// ---------------------------------------------------------------------------

int cmd_verify(const Globals& g, const std::string& which, std::ostream& out, std::ostream& err) {
  fixtures::Options opts;
  opts.strict = g.strict;
  opts.threads = g.threads;
  opts.table = make_table(g);
  std::vector<std::string> ids;
  if (which == "all") {
    ids = fixtures::ids();
  } else {
    fixtures::default_mode(which);
    ids.push_back(which);
  }

  bool all_ok = true;
  json doc = json::array();
  for (const auto& id : ids) {
    const auto res = fixtures::run(id, opts);
    all_ok = all_ok && res.passed();
    err << id << ": " << (res.passed() ? "PASS" : "FAIL") << " in " << res.seconds << " s\n";
    if (g.json) {
      json j;
      j["id"] = res.id;
      j["mode"] = std::string(fixtures::mode_name(res.mode));
      j["passed"] = res.passed();
      auto checks = json::array();
      for (const auto& c : res.checks) checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
      j["checks"] = std::move(checks);
      j["notes"] = res.notes;
      auto codes = json::array();
      for (const auto& c : res.codes) {
        json cj = report_json(c.report);
        cj["label"] = c.label;
        codes.push_back(std::move(cj));
      }
      j["codes"] = std::move(codes);
      doc.push_back(std::move(j));
      continue;
    }
    out << id << " [" << fixtures::mode_name(res.mode) << "] " << (res.passed() ? "PASS" : "FAIL") << " "
        << (res.checks.size() - res.failures()) << "/" << res.checks.size() << " checks\n";
    for (const auto& c : res.checks) {
      out << "  " << (c.passed ? "PASS " : "FAIL ") << c.name;
      if (!c.detail.empty()) out << ": " << c.detail;
      out << "\n";
    }
    for (const auto& n : res.notes) out << "  NOTE " << n << "\n";
  }
  if (g.json) out << doc.dump(2) << "\n";
  return all_ok ? kOk : kMismatch;
}

// ---------------------------------------------------------------------------

int cmd_orbits(const Globals& g, const std::string& domain, std::ostream& out) {
  const Setup s = setup(g, true);
  std::vector<Orbit> orb;
  if (domain.empty()) {
    orb = orbits(*s.A, projective_line(s.ctx));
  } else if (domain.rfind("unit-group:", 0) == 0) {
    const unsigned n = parse_uint(std::string_view(domain).substr(11), "--domain");
    const std::uint64_t order = s.ctx.size() - 1;
    if (n == 0 || order % n != 0) throw Exit{kUsage, std::to_string(n) + " does not divide " + std::to_string(order)};
    std::vector<ProjPoint> pts;
    const Fe z = s.ctx.gen_pow(static_cast<std::int64_t>(order / n));
    Fe y = s.ctx.one();
    for (unsigned i = 0; i < n; ++i, y *= z) pts.push_back(ProjPoint::finite(y));
    orb = orbits(*s.A, pts);
  } else {
    throw Exit{kUsage, "--domain must be unit-group:<n>"};
  }
  if (g.json) {
    json j = json::array();
    for (const auto& o : orb) {
      auto pts = json::array();
      for (const auto& p : o.points) pts.push_back(format(s.ctx, p));
      j.push_back(std::move(pts));
    }
    out << j.dump(2) << "\n";
    return kOk;
  }
  out << "order " << mobius_order(*s.A) << ", " << orb.size() << " orbits\n";
  for (std::size_t i = 0; i < orb.size(); ++i)
    out << "L" << i + 1 << " = " << join_points(s.ctx, orb[i].points) << "\n";
  return kOk;
}

int cmd_factor_h(const Globals& g, unsigned sdeg, const std::string& side, std::ostream& out) {
  const Setup s = setup(g, true);
  if (side != "a" && side != "d") throw Exit{kUsage, "--side must be a or d"};
  const auto f = factor_h(s.ctx, *s.A, sdeg, side == "a" ? HSide::a_side : HSide::d_side);
  if (g.json) {
    json j;
    j["h"] = format(f.h);
    auto fs = json::array();
    for (const auto& p : f.factors) fs.push_back(format(p));
    j["factors"] = std::move(fs);
    j["product_checked"] = f.product_checked;
    out << j.dump(2) << "\n";
    return kOk;
  }
  out << "h = " << format(f.h) << "\n";
  for (const auto& p : f.factors) out << "deg " << p.degree() << ": " << format(p) << "\n";
  out << (f.product_checked ? "product equals h\n" : "product not checked at this size\n");
  return kOk;
}

int cmd_nl_count(const Globals& g, unsigned order, const std::string& family, bool list, std::ostream& out) {
  const Setup s = setup(g, false);
  NlFilter filter = NlFilter::all;
  if (family == "a")
    filter = NlFilter::a_zero;
  else if (family == "d")
    filter = NlFilter::d_zero;
  else if (family == "b")
    filter = NlFilter::b_zero;
  else if (family != "all")
    throw Exit{kUsage, "--family must be all, a, d or b"};
  const auto ms = enum_order_l(s.ctx, order, filter);
  if (g.json) {
    json j;
    j["order"] = order;
    j["family"] = family;
    j["count"] = ms.size();
    if (list) {
      auto arr = json::array();
      for (const auto& m : ms) arr.push_back(format(m));
      j["matrices"] = std::move(arr);
    }
    out << j.dump(2) << "\n";
    return kOk;
  }
  out << ms.size() << "\n";
  if (list)
    for (const auto& m : ms) out << format(m) << "\n";
  return kOk;
}

int exit_code_for(Errc c) {
  switch (c) {
    case Errc::RootInSupport:
      return kRootInSupport;
    default:
      return kUsage;
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Projectively invariant Goppa polynomials and quasi-cyclic Goppa-type codes over GF(2^m)", "qcgoppa"};
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  app.add_option("--field", g.field, "f8, f16, f32, f64, f1024, <degree>:<hex modulus> or <degree>");
  app.add_option("--base", g.base, "field the matrix entries are written in; embedded into --field");
  app.add_option("--matrix", g.matrix, "[[a,b],[c,d]]");
  app.add_option("--modulus", g.moduli, "override a table modulus, <degree>:<hex> (repeatable)");
  app.add_flag("--json", g.json, "machine output as JSON");
  app.add_flag("--strict", g.strict, "coefficient-exact comparison for structural fixtures");
  app.add_option("--threads", g.threads, "worker threads")->check(CLI::Range(1u, 256u));

  EnumArgs ea;
  auto* en = app.add_subcommand("enum", "invariant irreducible polynomials of a given degree");
  en->add_option("--deg", ea.deg, "degree of the polynomials");
  en->add_option("--power", ea.power, "keep only Frobenius power u");

  BuildArgs ba;
  auto* bu = app.add_subcommand("build", "build a code and print its report");
  bu->add_option("--g", ba.g, "Goppa polynomial")->required();
  bu->add_option("--support", ba.support, "orbits:<list|nontrivial|finite>, unit-group:<n>, explicit:<points>")
      ->required();
  bu->add_option("--variant", ba.variant, "goppa, subcode or extended");
  bu->add_option("--generator", ba.generator_file, "write the generator matrix to a file");
  bu->add_flag("--no-min-distance", ba.no_min_distance, "skip the exhaustive minimum distance");

  std::string which;
  auto* ve = app.add_subcommand("verify", "run a worked-example fixture");
  ve->add_option("id", which, "fixture id or all")->required();

  std::string domain;
  auto* ob = app.add_subcommand("orbits", "orbits of the matrix on the projective line");
  ob->add_option("--domain", domain, "unit-group:<n> instead of the projective line");

  unsigned sdeg = 1;
  std::string side = "a";
  auto* fh = app.add_subcommand("factor-h", "factor x^(Q+1) + ... for a map of order 2 or 3");
  fh->add_option("--s", sdeg, "extension degree s, Q = q^s");
  fh->add_option("--side", side, "a or d (order 3)");

  unsigned order = 2;
  std::string family = "all";
  bool list = false;
  auto* nl = app.add_subcommand("nl-count", "count maps of order l with c = 1");
  nl->add_option("--order", order, "2 or 3");
  nl->add_option("--family", family, "all, a (a = 0), d (d = 0), b (b = 0)");
  nl->add_flag("--list", list, "print the matrices");

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return kUsage;
  }

  try {
    if (en->parsed()) return cmd_enum(g, ea, out, err);
    if (bu->parsed()) return cmd_build(g, ba, out, err);
    if (ve->parsed()) return cmd_verify(g, which, out, err);
    if (ob->parsed()) return cmd_orbits(g, domain, out);
    if (fh->parsed()) return cmd_factor_h(g, sdeg, side, out);
    if (nl->parsed()) return cmd_nl_count(g, order, family, list, out);
  } catch (const Exit& e) {
    err << e.message << "\n";
    return e.code;
  } catch (const Error& e) {
    err << e.what() << "\n";
    return exit_code_for(e.code());
  }
  return kUsage;
}

}  // namespace qcgoppa::cli
