#include "qcgoppa/text.hpp"

#include <charconv>

namespace qcgoppa {

namespace {

std::string strip(std::string_view s) {
  std::string out;
  for (char c : s)
    if (c != ' ' && c != '\t' && c != '\n' && c != '\r') out.push_back(c);
  return out;
}

[[noreturn]] void fail(std::string_view what, std::string_view text) {
  throw Error(Errc::ParseError, std::string(what) + ": '" + std::string(text) + "'");
}

std::int64_t parse_int(std::string_view s, std::string_view whole) {
  std::int64_t v = 0;
  auto r = std::from_chars(s.data(), s.data() + s.size(), v);
  if (r.ec != std::errc() || r.ptr != s.data() + s.size()) fail("bad integer", whole);
  return v;
}

}  // namespace

std::string format(const FieldCtx& ctx, const Fe& x) {
  ctx.require(x);
  if (x.is_zero()) return "0";
  if (x.is_one()) return "1";
  return "g^" + std::to_string(*ctx.log(x));
}

std::string format(const Poly& p) {
  if (p.is_zero()) return "0";
  const FieldCtx& ctx = p.ctx();
  std::string out;
  for (int i = p.degree(); i >= 0; --i) {
    const Fe& c = p.coeffs()[static_cast<std::size_t>(i)];
    if (c.is_zero()) continue;
    if (!out.empty()) out += " + ";
    std::string mono = i == 0 ? "" : (i == 1 ? "x" : "x^" + std::to_string(i));
    if (i == 0)
      out += format(ctx, c);
    else if (c.is_one())
      out += mono;
    else
      out += format(ctx, c) + "*" + mono;
  }
  return out;
}

std::string format(const FieldCtx& ctx, const ProjPoint& p) {
  return p.is_infinity() ? std::string("inf") : format(ctx, p.value());
}

std::string format(const Mobius& A) {
  const FieldCtx& ctx = A.ctx();
  return "[[" + format(ctx, A.a()) + "," + format(ctx, A.b()) + "],[" + format(ctx, A.c()) + "," +
         format(ctx, A.d()) + "]]";
}

std::string format_points(const FieldCtx& ctx, const std::vector<ProjPoint>& pts) {
  std::string out = "(";
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (i) out += ", ";
    out += format(ctx, pts[i]);
  }
  return out + ")";
}

Fe parse_fe(const FieldCtx& ctx, std::string_view text) {
  const std::string s = strip(text);
  if (s.empty()) fail("empty element", text);
  if (s.size() > 2 && s[0] == '0' && (s[1] == 'x' || s[1] == 'X')) {
    std::uint32_t v = 0;
    auto r = std::from_chars(s.data() + 2, s.data() + s.size(), v, 16);
    if (r.ec != std::errc() || r.ptr != s.data() + s.size()) fail("bad hex element", text);
    return ctx.elem(v);
  }
  if (s == "0") return ctx.zero();
  if (s == "1") return ctx.one();
  for (std::string_view name : {"g", "xi", "w", "omega"}) {
    if (s.compare(0, name.size(), name) != 0) continue;
    const std::string_view rest = std::string_view(s).substr(name.size());
    if (rest.empty()) return ctx.generator();
    if (rest[0] == '^') return ctx.gen_pow(parse_int(rest.substr(1), text));
  }
  fail("bad element", text);
}

Poly parse_poly(const FieldCtx& ctx, std::string_view text) {
  const std::string s = strip(text);
  if (s.empty()) fail("empty polynomial", text);
  Poly out(ctx);
  std::size_t pos = 0;
  while (pos <= s.size()) {
    std::size_t plus = s.find('+', pos);
    if (plus == std::string::npos) plus = s.size();
    const std::string term = s.substr(pos, plus - pos);
    if (term.empty()) fail("empty term in polynomial", text);
    std::string coef, mono;
    const auto star = term.find('*');
    if (star != std::string::npos) {
      coef = term.substr(0, star);
      mono = term.substr(star + 1);
    } else if (term[0] == 'x' && term.compare(0, 2, "xi") != 0) {
      coef = "1";
      mono = term;
    } else {
      coef = term;
    }
    unsigned deg = 0;
    if (!mono.empty()) {
      if (mono == "x") {
        deg = 1;
      } else if (mono.size() > 2 && mono[0] == 'x' && mono[1] == '^') {
        const auto e = parse_int(std::string_view(mono).substr(2), text);
        if (e < 0) fail("negative exponent", text);
        deg = static_cast<unsigned>(e);
      } else {
        fail("bad monomial", text);
      }
    }
    out += Poly::monomial(ctx, parse_fe(ctx, coef), deg);
    pos = plus + 1;
  }
  return out;
}

ProjPoint parse_point(const FieldCtx& ctx, std::string_view text) {
  const std::string s = strip(text);
  if (s == "inf" || s == "oo" || s == "∞") return ProjPoint::infinity();
  return ProjPoint::finite(parse_fe(ctx, s));
}

Mobius parse_mobius(const FieldCtx& ctx, std::string_view text) {
  std::string s;
  for (char c : strip(text))
    if (c != '[' && c != ']' && c != '(' && c != ')') s.push_back(c);
  std::vector<std::string> parts;
  std::size_t pos = 0;
  for (;;) {
    const auto comma = s.find(',', pos);
    parts.push_back(s.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  if (parts.size() != 4) fail("matrix needs four entries", text);
  return Mobius::make(ctx, parse_fe(ctx, parts[0]), parse_fe(ctx, parts[1]), parse_fe(ctx, parts[2]),
                      parse_fe(ctx, parts[3]));
}

}  // namespace qcgoppa
