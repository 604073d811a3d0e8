#include "qcgoppa/report.hpp"

#include <cstdio>

#include "qcgoppa/text.hpp"

namespace qcgoppa {

std::string modulus_hex(std::uint32_t modulus) {
  char buf[16];
  std::snprintf(buf, sizeof buf, "%x", modulus);
  return buf;
}

nlohmann::ordered_json field_json(const FieldCtx& ctx) {
  return {{"degree", ctx.degree()}, {"modulus_hex", modulus_hex(ctx.modulus())}};
}

nlohmann::ordered_json report_json(const CodeReport& r) {
  nlohmann::ordered_json j;
  j["variant"] = std::string(variant_name(r.variant));
  j["length"] = r.length;
  j["dimension"] = r.dimension;
  if (r.qc)
    j["qc"] = {{"l", r.qc->l}, {"tau", r.qc->tau}};
  else
    j["qc"] = nullptr;
  j["automorphism_verified"] = r.automorphism_verified;
  if (r.min_distance)
    j["min_distance"] = *r.min_distance;
  else
    j["min_distance"] = nullptr;
  j["field"] = field_json(r.ctx);
  j["goppa_poly"] = format(r.g);
  auto support = nlohmann::ordered_json::array();
  for (const auto& p : r.support) support.push_back(format(r.ctx, p));
  j["support"] = std::move(support);
  return j;
}

nlohmann::ordered_json listing_json(const InvariantListing& listing) {
  nlohmann::ordered_json j;
  j["field"] = field_json(listing.base);
  j["k_field"] = field_json(listing.tower);
  j["matrix"] = format(listing.A);
  j["k_count"] = listing.k_count;
  auto polys = nlohmann::ordered_json::array();
  for (const auto& p : listing.polys) {
    polys.push_back({{"poly", format(p.g)},
                     {"k", format(listing.tower, p.k)},
                     {"stratum", p.level},
                     {"frobenius_power", p.frobenius_power},
                     {"origin", p.origin}});
  }
  j["polys"] = std::move(polys);
  auto degenerate = nlohmann::ordered_json::array();
  for (const auto& k : listing.degenerate) degenerate.push_back(format(listing.tower, k));
  j["degenerate"] = std::move(degenerate);
  return j;
}

std::string listing_lines(const InvariantListing& listing) {
  std::string out;
  const std::string a = format(listing.A);
  for (const auto& p : listing.polys) {
    out += format(p.g) + "\tA=" + a + "\tk=" + format(listing.tower, p.k) + "\tstratum=" + std::to_string(p.level) +
           "\tu=" + std::to_string(p.frobenius_power) + "\torigin=" + p.origin + "\n";
  }
  return out;
}

}  // namespace qcgoppa
