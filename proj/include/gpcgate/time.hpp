#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace gpcgate {

/// Millisecond-precision UTC instant used throughout the ledger and audit log.
using Timestamp = std::chrono::time_point<std::chrono::system_clock, std::chrono::milliseconds>;

inline Timestamp timestamp_from_millis(std::int64_t ms) {
    return Timestamp(std::chrono::milliseconds(ms));
}

inline std::int64_t timestamp_to_millis(Timestamp t) {
    return t.time_since_epoch().count();
}

Timestamp now_utc();

/// Formats as RFC 3339 UTC, e.g. "2026-01-05T12:30:00Z".
/// Milliseconds are included only when nonzero: "...T12:30:00.250Z".
std::string rfc3339_format(Timestamp t);

/// Parses an RFC 3339 date-time. Accepts "Z" or a numeric UTC offset and an
/// optional fractional second part (truncated to milliseconds).
/// Returns nullopt when the text does not parse or fields are out of range.
std::optional<Timestamp> rfc3339_parse(std::string_view text);

/// True when `text` is an ISO-8601 calendar date ("2025-11-25") or date-time
/// ("2025-11-25T10:00:00Z", offset and fraction allowed) with in-range fields.
bool is_iso8601_date_or_datetime(std::string_view text);

}  // namespace gpcgate
