#include "gpcgate/ledger.hpp"

#include "gpcgate/errors.hpp"

namespace gpcgate {

std::string to_string(ConsentStatusKind kind) {
    switch (kind) {
        case ConsentStatusKind::NeverAsked: return "NeverAsked";
        case ConsentStatusKind::Given: return "Given";
        case ConsentStatusKind::Withdrawn: return "Withdrawn";
        case ConsentStatusKind::RefusedByUser: return "RefusedByUser";
    }
    return "NeverAsked";
}

std::string to_string(LedgerFlag flag) {
    switch (flag) {
        case LedgerFlag::WithdrawalIndicated: return "WithdrawalIndicated";
        case LedgerFlag::AmbiguousConsent: return "AmbiguousConsent";
        case LedgerFlag::MayRequestConsentAgain: return "MayRequestConsentAgain";
    }
    return "WithdrawalIndicated";
}

std::string to_string(ConsentClick click) {
    return click == ConsentClick::Accepted ? "Accepted" : "Rejected";
}

SubjectSiteState zero_state() { return SubjectSiteState{}; }

namespace {

void check_prior(const SubjectSiteKey& key, const SubjectSiteState& prior) {
    if (prior.consent_status.kind != ConsentStatusKind::NeverAsked && !prior.consent_status.at) {
        throw CorruptState("key (" + key.subject_id + ", " + key.site_id + "): consent status " +
                           to_string(prior.consent_status.kind) + " without a timestamp");
    }
    if (prior.consent_status.kind == ConsentStatusKind::NeverAsked && prior.consent_status.at) {
        throw CorruptState("key (" + key.subject_id + ", " + key.site_id +
                           "): NeverAsked carries a timestamp");
    }
    if (prior.visit_count == 0 && !prior.flags.empty()) {
        throw CorruptState("key (" + key.subject_id + ", " + key.site_id +
                           "): zero visits but flags present");
    }
    if (prior.flags.contains(LedgerFlag::WithdrawalIndicated) &&
        prior.consent_status.kind == ConsentStatusKind::NeverAsked) {
        throw CorruptState("key (" + key.subject_id + ", " + key.site_id +
                           "): withdrawal indicated but consent was never given");
    }
    if (prior.flags.contains(LedgerFlag::MayRequestConsentAgain) && prior.last_signal.is_active()) {
        throw CorruptState("key (" + key.subject_id + ", " + key.site_id +
                           "): re-ask flag requires the signal to have turned off");
    }
    if (prior.flags.contains(LedgerFlag::AmbiguousConsent) && !prior.last_signal.is_active()) {
        throw CorruptState("key (" + key.subject_id + ", " + key.site_id +
                           "): ambiguity flag requires an active signal");
    }
}

}  // namespace

SubjectSiteState record_visit(const SubjectSiteKey& key, const SubjectSiteState& prior,
                              const VisitEvent& event) {
    check_prior(key, prior);
    if (event.at <= prior.updated_at) {
        throw StaleEvent("event at " + rfc3339_format(event.at) + " is not after state at " +
                         rfc3339_format(prior.updated_at));
    }

    // A malformed signal must not manufacture a preference: it transitions
    // like Absent. The raw observation still lands in last_signal.
    const bool active = event.signal.is_active();
    const bool prior_active = prior.last_signal.is_active();

    SubjectSiteState next = prior;
    next.flags.clear();
    next.visit_count += 1;
    next.updated_at = event.at;

    // Signal observation first: it arrives before any content or popup.
    if (active && prior.consent_status.kind == ConsentStatusKind::Given) {
        next.consent_status = {ConsentStatusKind::Withdrawn, event.at};
        next.flags.insert(LedgerFlag::WithdrawalIndicated);
    }
    if (!active && prior_active) {
        // Turning the signal off is never consent, only an opening to ask.
        next.flags.insert(LedgerFlag::MayRequestConsentAgain);
    }

    if (event.consent_click == ConsentClick::Accepted) {
        if (active) {
            // Conflict between the automated signal and the click; recorded,
            // never resolved, and the status is left untouched.
            next.flags.insert(LedgerFlag::AmbiguousConsent);
        } else {
            next.consent_status = {ConsentStatusKind::Given, event.at};
        }
    } else if (event.consent_click == ConsentClick::Rejected) {
        next.consent_status = {ConsentStatusKind::RefusedByUser, event.at};
    }

    next.last_signal = event.signal;
    return next;
}

}  // namespace gpcgate
