#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>

#include "gpcgate/signal.hpp"
#include "gpcgate/time.hpp"

namespace gpcgate {

/// Per-site subject key. subject_id is a first-party-scoped identifier
/// supplied by the integrator (session or account id); this module never
/// mints cross-site identifiers.
struct SubjectSiteKey {
    std::string subject_id;
    std::string site_id;  // lower-cased registrable domain

    bool operator==(const SubjectSiteKey&) const = default;
    auto operator<=>(const SubjectSiteKey&) const = default;
};

enum class ConsentStatusKind { NeverAsked, Given, Withdrawn, RefusedByUser };

std::string to_string(ConsentStatusKind kind);

struct ConsentStatus {
    ConsentStatusKind kind = ConsentStatusKind::NeverAsked;
    std::optional<Timestamp> at;  // set for every kind except NeverAsked

    bool operator==(const ConsentStatus&) const = default;
};

enum class LedgerFlag { WithdrawalIndicated, AmbiguousConsent, MayRequestConsentAgain };

std::string to_string(LedgerFlag flag);

/// Derived state per (subject, site). Flags describe the most recent visit's
/// transition; they are recomputed on every event, never accumulated.
struct SubjectSiteState {
    SignalState last_signal = SignalState::absent();
    ConsentStatus consent_status;
    std::set<LedgerFlag> flags;
    std::uint64_t visit_count = 0;
    Timestamp updated_at = timestamp_from_millis(0);

    bool operator==(const SubjectSiteState&) const = default;
};

/// The zero state returned for keys with no history.
SubjectSiteState zero_state();

enum class ConsentClick { Accepted, Rejected };

std::string to_string(ConsentClick click);

struct VisitEvent {
    SignalState signal = SignalState::absent();
    std::optional<ConsentClick> consent_click;
    Timestamp at = timestamp_from_millis(0);

    bool operator==(const VisitEvent&) const = default;
};

/// The transition function. Pure: the stored state is always a fold of the
/// event sequence through this function, starting from zero_state().
///
/// Signal observations never produce consent. An active signal after recorded
/// consent withdraws it; an affirmative click while the signal is active is
/// recorded as ambiguous and resolves nothing; a signal that turns off only
/// opens the opportunity to ask again. A malformed signal drives transitions
/// exactly like an absent one, with the raw text preserved in last_signal.
///
/// Throws StaleEvent when event.at is not after prior.updated_at and
/// CorruptState when the prior state violates its invariants.
SubjectSiteState record_visit(const SubjectSiteKey& key, const SubjectSiteState& prior,
                              const VisitEvent& event);

}  // namespace gpcgate
