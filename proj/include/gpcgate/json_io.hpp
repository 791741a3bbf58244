#pragma once

#include <nlohmann/json.hpp>
#include <utility>

#include "gpcgate/ledger.hpp"
#include "gpcgate/signal.hpp"

namespace gpcgate {

/// Wire form of a signal observation: "active", "absent", or
/// {"invalid": "<raw text>"}.
nlohmann::ordered_json signal_to_json(const SignalState& signal);
SignalState signal_from_json(const nlohmann::json& value);

nlohmann::ordered_json key_to_json(const SubjectSiteKey& key);
SubjectSiteKey key_from_json(const nlohmann::json& value);

/// One event-log line: {key, signal, consent_click?, at}.
nlohmann::ordered_json event_to_json(const SubjectSiteKey& key, const VisitEvent& event);
std::pair<SubjectSiteKey, VisitEvent> event_from_json(const nlohmann::json& value);

/// One snapshot line mirroring SubjectSiteState.
nlohmann::ordered_json state_to_json(const SubjectSiteKey& key, const SubjectSiteState& state);
std::pair<SubjectSiteKey, SubjectSiteState> state_from_json(const nlohmann::json& value);

}  // namespace gpcgate
