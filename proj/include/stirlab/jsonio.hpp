#pragma once

/*
 * JSON forms of the library values.  Every emitted document carries
 * "schema": "stirling-lab/1"; coefficients are always strings so consumers
 * never round them.
 */

#include "stirlab/identities.hpp"
#include "stirlab/poly.hpp"

#include <json.hpp>

namespace stirlab {

inline constexpr const char* kJsonSchema = "stirling-lab/1";

nlohmann::json poly_to_json(const Poly& p);
nlohmann::json report_to_json(const IdentityReport& r);

} // namespace stirlab
