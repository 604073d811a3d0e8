#pragma once

// Text forms shared by the CLI, fixtures and reports.
//
//   element     0 | 1 | g^k          (k = discrete log to the canonical generator)
//   polynomial  x^3 + g^9*x^2 + g^4*x + g^14
//   point       inf | element
//   map         [[a,b],[c,d]]
//
// Parsers also accept g, g^-k, 0x<hex> encodings, and spacing or '*' variations.

#include <string>
#include <string_view>
#include <vector>

#include "qcgoppa/polyring.hpp"
#include "qcgoppa/projline.hpp"

namespace qcgoppa {

std::string format(const FieldCtx& ctx, const Fe& x);
std::string format(const Poly& p);
std::string format(const FieldCtx& ctx, const ProjPoint& p);
std::string format(const Mobius& A);
std::string format_points(const FieldCtx& ctx, const std::vector<ProjPoint>& pts);

Fe parse_fe(const FieldCtx& ctx, std::string_view text);
Poly parse_poly(const FieldCtx& ctx, std::string_view text);
ProjPoint parse_point(const FieldCtx& ctx, std::string_view text);
Mobius parse_mobius(const FieldCtx& ctx, std::string_view text);

}  // namespace qcgoppa
