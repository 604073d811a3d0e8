#pragma once

// JSON documents for code reports and enumeration listings.

#include <json.hpp>

#include "qcgoppa/codes.hpp"
#include "qcgoppa/invariant.hpp"

namespace qcgoppa {

/// {degree, modulus_hex}
nlohmann::ordered_json field_json(const FieldCtx& ctx);

/// variant, length, dimension, qc {l, tau} or null, automorphism_verified, min_distance (nullable),
/// field, goppa_poly, support.
nlohmann::ordered_json report_json(const CodeReport& r);

nlohmann::ordered_json listing_json(const InvariantListing& listing);

/// One provenance line per polynomial: the polynomial, then tab-separated key=value fields.
std::string listing_lines(const InvariantListing& listing);

std::string modulus_hex(std::uint32_t modulus);

}  // namespace qcgoppa
