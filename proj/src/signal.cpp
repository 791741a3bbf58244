#include "gpcgate/signal.hpp"

#include <cctype>

#include "gpcgate/errors.hpp"

namespace gpcgate {

std::string to_string(SignalKind kind) {
    switch (kind) {
        case SignalKind::Active: return "Active";
        case SignalKind::Absent: return "Absent";
        case SignalKind::Invalid: return "Invalid";
    }
    return "Absent";
}

bool header_name_equals(std::string_view a, std::string_view b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (std::tolower(static_cast<unsigned char>(a[i])) !=
            std::tolower(static_cast<unsigned char>(b[i]))) {
            return false;
        }
    }
    return true;
}

SignalState parse_signal(const HeaderList& request_fields) {
    std::vector<const std::string*> occurrences;
    for (const auto& field : request_fields) {
        if (header_name_equals(field.name, kSignalFieldName)) {
            occurrences.push_back(&field.value);
        }
    }
    if (occurrences.empty()) return SignalState::absent();
    bool all_on = true;
    for (const auto* v : occurrences) {
        if (*v != kSignalOnValue) {
            all_on = false;
            break;
        }
    }
    if (all_on) return SignalState::active();
    std::string joined;
    for (std::size_t i = 0; i < occurrences.size(); ++i) {
        if (i > 0) joined += ',';
        joined += *occurrences[i];
    }
    return SignalState::invalid(std::move(joined));
}

HeaderList emit_signal(const SignalState& state) {
    switch (state.kind()) {
        case SignalKind::Active: return {{kSignalFieldName, kSignalOnValue}};
        case SignalKind::Absent: return {};
        case SignalKind::Invalid: break;
    }
    throw EmitInvalid("cannot emit an Invalid signal state (raw: \"" + state.raw() + "\")");
}

}  // namespace gpcgate
