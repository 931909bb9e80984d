#pragma once

#include "motif/bigint.hpp"
#include "motif/closed_forms.hpp"
#include "motif/euler.hpp"
#include "motif/extraction.hpp"
#include "motif/fixed_point.hpp"
#include "motif/hom_basis.hpp"
#include "motif/properties.hpp"

#include <json.hpp>

#include <string>

namespace motif {

// Deterministic JSON: keys keep insertion order and every integer is a
// decimal string so that arbitrary precision survives.
using Json = nlohmann::ordered_json;

Json to_json(const BigInt& value);
Json to_json(const Rational& value);
Rational rational_from_json(const Json& j);

Json to_json(const AlternatingSumReport& report);
Json to_json(const MonotoneVerdict& verdict, int k, const std::string& property);
Json to_json(const ParityVerdict& verdict);
Json to_json(const FixedPointReport& report);
Json to_json(const HomBasis& basis);
Json to_json(const QueryLedger& ledger);
Json to_json(const WindowResult& window);

/// Restores k, property and the terms; members are not stored.
HomBasis basis_from_json(const Json& j);

/// Two-space indented text with a trailing newline.
std::string dump(const Json& j);

}  // namespace motif
