#pragma once

#include <string>
#include <utility>
#include <vector>

namespace gpcgate {

/// The request header field carrying the signal.
inline constexpr const char* kSignalFieldName = "Sec-GPC";
/// The only value that expresses the preference.
inline constexpr const char* kSignalOnValue = "1";

struct HeaderField {
    std::string name;
    std::string value;

    bool operator==(const HeaderField&) const = default;
};

using HeaderList = std::vector<HeaderField>;

enum class SignalKind { Active, Absent, Invalid };

/// Tri-state observation of the signal on one request.
///
/// Active carries no payload beyond its presence; Absent is the total absence
/// of the field (never an empty value); Invalid keeps the offending raw text
/// verbatim so the gateway can log it.
class SignalState {
public:
    static SignalState active() { return SignalState(SignalKind::Active, {}); }
    static SignalState absent() { return SignalState(SignalKind::Absent, {}); }
    static SignalState invalid(std::string raw) { return SignalState(SignalKind::Invalid, std::move(raw)); }

    SignalState() : kind_(SignalKind::Absent) {}

    SignalKind kind() const noexcept { return kind_; }
    bool is_active() const noexcept { return kind_ == SignalKind::Active; }
    bool is_absent() const noexcept { return kind_ == SignalKind::Absent; }
    bool is_invalid() const noexcept { return kind_ == SignalKind::Invalid; }

    /// Raw offending text; meaningful only for Invalid.
    const std::string& raw() const noexcept { return raw_; }

    bool operator==(const SignalState&) const = default;

private:
    SignalState(SignalKind kind, std::string raw) : kind_(kind), raw_(std::move(raw)) {}

    SignalKind kind_;
    std::string raw_;
};

std::string to_string(SignalKind kind);

/// Case-insensitive ASCII comparison for header field names.
bool header_name_equals(std::string_view a, std::string_view b);

/// Reads the signal off a complete set of request header fields.
///
/// Active iff the field is present with the exact value "1" (every occurrence,
/// when repeated). Absent iff the field is missing. Anything else is Invalid
/// with the raw occurrence values joined by ",". Never throws: malformed input
/// must not stop the gateway.
SignalState parse_signal(const HeaderList& request_fields);

/// Header fields to add for an outbound request. Active yields exactly
/// {"Sec-GPC": "1"}; Absent yields nothing. Throws EmitInvalid for Invalid,
/// which has no wire form.
HeaderList emit_signal(const SignalState& state);

}  // namespace gpcgate
