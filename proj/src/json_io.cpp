#include "gpcgate/json_io.hpp"

#include "gpcgate/errors.hpp"

namespace gpcgate {

namespace {

Timestamp parse_at(const nlohmann::json& value, const char* field) {
    if (!value.contains(field) || !value[field].is_string()) {
        throw CorruptState(std::string("missing or non-string timestamp field \"") + field + "\"");
    }
    auto t = rfc3339_parse(value[field].get<std::string>());
    if (!t) throw CorruptState(std::string("unparsable timestamp in \"") + field + "\"");
    return *t;
}

}  // namespace

nlohmann::ordered_json signal_to_json(const SignalState& signal) {
    switch (signal.kind()) {
        case SignalKind::Active: return "active";
        case SignalKind::Absent: return "absent";
        case SignalKind::Invalid: return nlohmann::ordered_json{{"invalid", signal.raw()}};
    }
    return "absent";
}

SignalState signal_from_json(const nlohmann::json& value) {
    if (value.is_string()) {
        auto s = value.get<std::string>();
        if (s == "active") return SignalState::active();
        if (s == "absent") return SignalState::absent();
        throw CorruptState("unknown signal token \"" + s + "\"");
    }
    if (value.is_object() && value.contains("invalid") && value["invalid"].is_string()) {
        return SignalState::invalid(value["invalid"].get<std::string>());
    }
    throw CorruptState("unrecognizable signal value");
}

nlohmann::ordered_json key_to_json(const SubjectSiteKey& key) {
    return {{"subject_id", key.subject_id}, {"site_id", key.site_id}};
}

SubjectSiteKey key_from_json(const nlohmann::json& value) {
    if (!value.is_object() || !value.contains("subject_id") || !value.contains("site_id")) {
        throw CorruptState("key must carry subject_id and site_id");
    }
    return {value["subject_id"].get<std::string>(), value["site_id"].get<std::string>()};
}

nlohmann::ordered_json event_to_json(const SubjectSiteKey& key, const VisitEvent& event) {
    nlohmann::ordered_json doc;
    doc["key"] = key_to_json(key);
    doc["signal"] = signal_to_json(event.signal);
    if (event.consent_click) doc["consent_click"] = to_string(*event.consent_click);
    doc["at"] = rfc3339_format(event.at);
    return doc;
}

std::pair<SubjectSiteKey, VisitEvent> event_from_json(const nlohmann::json& value) {
    if (!value.is_object() || !value.contains("key") || !value.contains("signal")) {
        throw CorruptState("event line must carry key and signal");
    }
    VisitEvent event;
    event.signal = signal_from_json(value["signal"]);
    if (value.contains("consent_click")) {
        auto click = value["consent_click"].get<std::string>();
        if (click == "Accepted") {
            event.consent_click = ConsentClick::Accepted;
        } else if (click == "Rejected") {
            event.consent_click = ConsentClick::Rejected;
        } else {
            throw CorruptState("unknown consent_click token \"" + click + "\"");
        }
    }
    event.at = parse_at(value, "at");
    return {key_from_json(value["key"]), event};
}

nlohmann::ordered_json state_to_json(const SubjectSiteKey& key, const SubjectSiteState& state) {
    nlohmann::ordered_json doc;
    doc["key"] = key_to_json(key);
    doc["last_signal"] = signal_to_json(state.last_signal);
    nlohmann::ordered_json status;
    status["kind"] = to_string(state.consent_status.kind);
    if (state.consent_status.at) status["at"] = rfc3339_format(*state.consent_status.at);
    doc["consent_status"] = status;
    auto flags = nlohmann::ordered_json::array();
    for (auto flag : state.flags) flags.push_back(to_string(flag));
    doc["flags"] = flags;
    doc["visit_count"] = state.visit_count;
    doc["updated_at"] = rfc3339_format(state.updated_at);
    return doc;
}

std::pair<SubjectSiteKey, SubjectSiteState> state_from_json(const nlohmann::json& value) {
    if (!value.is_object() || !value.contains("key")) throw CorruptState("state line must carry a key");
    SubjectSiteState state;
    state.last_signal = signal_from_json(value.at("last_signal"));
    const auto& status = value.at("consent_status");
    auto kind = status.at("kind").get<std::string>();
    if (kind == "NeverAsked") {
        state.consent_status.kind = ConsentStatusKind::NeverAsked;
    } else if (kind == "Given") {
        state.consent_status.kind = ConsentStatusKind::Given;
    } else if (kind == "Withdrawn") {
        state.consent_status.kind = ConsentStatusKind::Withdrawn;
    } else if (kind == "RefusedByUser") {
        state.consent_status.kind = ConsentStatusKind::RefusedByUser;
    } else {
        throw CorruptState("unknown consent status \"" + kind + "\"");
    }
    if (status.contains("at")) state.consent_status.at = parse_at(status, "at");
    for (const auto& flag : value.at("flags")) {
        auto name = flag.get<std::string>();
        if (name == "WithdrawalIndicated") {
            state.flags.insert(LedgerFlag::WithdrawalIndicated);
        } else if (name == "AmbiguousConsent") {
            state.flags.insert(LedgerFlag::AmbiguousConsent);
        } else if (name == "MayRequestConsentAgain") {
            state.flags.insert(LedgerFlag::MayRequestConsentAgain);
        } else {
            throw CorruptState("unknown ledger flag \"" + name + "\"");
        }
    }
    state.visit_count = value.at("visit_count").get<std::uint64_t>();
    state.updated_at = parse_at(value, "updated_at");
    return {key_from_json(value["key"]), state};
}

}  // namespace gpcgate
