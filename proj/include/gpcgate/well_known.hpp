#pragma once

#include <optional>
#include <string>
#include <string_view>

namespace gpcgate {

/// Fixed path of the support resource.
inline constexpr const char* kWellKnownPath = "/.well-known/gpc.json";

/// The support declaration a site publishes under /.well-known/gpc.json.
struct WellKnownRecord {
    bool gpc_supported = false;
    /// Raw ISO-8601 date or date-time text, kept verbatim for round-tripping.
    std::optional<std::string> last_update;

    bool operator==(const WellKnownRecord&) const = default;
};

/// Parses a fetched support resource body.
///
/// Tolerates a leading UTF-8 BOM and trailing newline; requires an object with
/// a boolean "gpc" member. "lastUpdate", when present, must be an ISO-8601
/// date or date-time string. Throws MalformedRecord otherwise.
WellKnownRecord parse_well_known(std::string_view body);

/// Canonical body text: '{"gpc":<bool>}' with "lastUpdate" appended when set.
/// parse_well_known(serialize_well_known(r)) == r for every valid record.
std::string serialize_well_known(const WellKnownRecord& record);

}  // namespace gpcgate
