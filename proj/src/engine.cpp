#include "gpcgate/engine.hpp"

#include <array>

#include "gpcgate/errors.hpp"

namespace gpcgate {

std::string to_string(LegalBasis basis) {
    switch (basis) {
        case LegalBasis::Consent: return "Consent";
        case LegalBasis::ContractPerformance: return "ContractPerformance";
        case LegalBasis::LegitimateInterests: return "LegitimateInterests";
        case LegalBasis::LegalObligation: return "LegalObligation";
        case LegalBasis::VitalInterests: return "VitalInterests";
        case LegalBasis::PublicInterestOrAuthority: return "PublicInterestOrAuthority";
    }
    return "Consent";
}

std::string to_string(ProcessingActivity activity) {
    switch (activity) {
        case ProcessingActivity::SellToThirdParty: return "SellToThirdParty";
        case ProcessingActivity::ShareWithThirdParty: return "ShareWithThirdParty";
        case ProcessingActivity::CrossContextAdTargeting: return "CrossContextAdTargeting";
        case ProcessingActivity::FirstPartyOwnProcessing: return "FirstPartyOwnProcessing";
        case ProcessingActivity::CollectionFromSubject: return "CollectionFromSubject";
    }
    return "ShareWithThirdParty";
}

LegalBasis legal_basis_from_string(std::string_view text) {
    if (text == "Consent") return LegalBasis::Consent;
    if (text == "ContractPerformance") return LegalBasis::ContractPerformance;
    if (text == "LegitimateInterests") return LegalBasis::LegitimateInterests;
    if (text == "LegalObligation") return LegalBasis::LegalObligation;
    if (text == "VitalInterests") return LegalBasis::VitalInterests;
    if (text == "PublicInterestOrAuthority") return LegalBasis::PublicInterestOrAuthority;
    throw InvalidInput("unknown legal basis: \"" + std::string(text) + "\"");
}

ProcessingActivity processing_activity_from_string(std::string_view text) {
    if (text == "SellToThirdParty") return ProcessingActivity::SellToThirdParty;
    if (text == "ShareWithThirdParty") return ProcessingActivity::ShareWithThirdParty;
    if (text == "CrossContextAdTargeting") return ProcessingActivity::CrossContextAdTargeting;
    if (text == "FirstPartyOwnProcessing") return ProcessingActivity::FirstPartyOwnProcessing;
    if (text == "CollectionFromSubject") return ProcessingActivity::CollectionFromSubject;
    throw InvalidInput("unknown processing activity: \"" + std::string(text) + "\"");
}

std::string to_string(Effect effect) {
    switch (effect) {
        case Effect::NoEffect: return "NoEffect";
        case Effect::HaltSharing_ConsentWithdrawal: return "HaltSharing_ConsentWithdrawal";
        case Effect::HaltSharing_Objection: return "HaltSharing_Objection";
        case Effect::ObjectionRefused_DemonstrationRequired: return "ObjectionRefused_DemonstrationRequired";
        case Effect::OutOfScope: return "OutOfScope";
    }
    return "NoEffect";
}

std::string to_string(DirectiveNote note) {
    switch (note) {
        case DirectiveNote::MayRequestConsentAgain: return "MayRequestConsentAgain";
        case DirectiveNote::AmbiguousConsentDetected: return "AmbiguousConsentDetected";
    }
    return "MayRequestConsentAgain";
}

Effect effect_from_string(std::string_view text) {
    if (text == "NoEffect") return Effect::NoEffect;
    if (text == "HaltSharing_ConsentWithdrawal") return Effect::HaltSharing_ConsentWithdrawal;
    if (text == "HaltSharing_Objection") return Effect::HaltSharing_Objection;
    if (text == "ObjectionRefused_DemonstrationRequired") return Effect::ObjectionRefused_DemonstrationRequired;
    if (text == "OutOfScope") return Effect::OutOfScope;
    throw InvalidInput("unknown effect: \"" + std::string(text) + "\"");
}

std::string to_string(BannerAction action) {
    return action == BannerAction::SuppressBanner ? "SuppressBanner" : "ShowBanner";
}

std::string to_string(GroundsVariant variant) {
    switch (variant) {
        case GroundsVariant::NotApplicable: return "";
        case GroundsVariant::NotCompelling: return "not_compelling";
        case GroundsVariant::Compelling: return "compelling";
    }
    return "";
}

bool in_gpc_scope(ProcessingActivity activity, PartyRole role) {
    if (role != PartyRole::ThirdParty) return false;
    switch (activity) {
        case ProcessingActivity::SellToThirdParty:
        case ProcessingActivity::ShareWithThirdParty:
        case ProcessingActivity::CrossContextAdTargeting:
            return true;
        case ProcessingActivity::FirstPartyOwnProcessing:
        case ProcessingActivity::CollectionFromSubject:
            return false;
    }
    return false;
}

namespace {

bool activity_covered(ProcessingActivity activity) {
    return activity == ProcessingActivity::SellToThirdParty ||
           activity == ProcessingActivity::ShareWithThirdParty ||
           activity == ProcessingActivity::CrossContextAdTargeting;
}

void validate(const DecisionInput& input) {
    if (input.grounds && input.basis != LegalBasis::LegitimateInterests) {
        throw InvalidInput("grounds assessment supplied with basis " + to_string(input.basis) +
                           "; only legitimate interests takes one");
    }
    if (input.grounds && input.grounds->compelling && input.grounds->demonstration.empty()) {
        throw InvalidInput("compelling grounds require a non-empty demonstration");
    }
}

}  // namespace

Directive decide(const DecisionInput& input) {
    validate(input);

    // An absent signal conveys zero preference bits; a malformed one must not
    // manufacture a preference either (the gateway logs it separately).
    if (!input.signal.is_active()) return {Effect::NoEffect, {}, {}};

    // Collection from the subject and a first party's own processing are not
    // in the signal's vocabulary at all, whoever is evaluated.
    if (!activity_covered(input.activity)) return {Effect::OutOfScope, {}, {}};

    // Sharing with an authorized processor involves no third party, so the
    // signal has no effect on it, whatever the basis.
    if (input.role == PartyRole::Processor) return {Effect::NoEffect, {}, {}};

    // A covered activity evaluated against the controller itself is the first
    // party's own flow.
    if (input.role == PartyRole::Controller) return {Effect::OutOfScope, {}, {}};

    switch (input.basis) {
        case LegalBasis::Consent:
            // A standing refusal received before any content; withdrawing
            // consent that was never given is harmlessly idempotent, so
            // prior_consent_on_record does not branch.
            return {Effect::HaltSharing_ConsentWithdrawal, {}, {}};
        case LegalBasis::ContractPerformance:
            return {Effect::NoEffect, {}, {}};
        case LegalBasis::LegitimateInterests:
            if (input.grounds && input.grounds->compelling) {
                return {Effect::ObjectionRefused_DemonstrationRequired, {}, input.grounds->demonstration};
            }
            return {Effect::HaltSharing_Objection, {}, {}};
        case LegalBasis::LegalObligation:
        case LegalBasis::VitalInterests:
        case LegalBasis::PublicInterestOrAuthority:
            return {Effect::NoEffect, {}, {}};
    }
    return {Effect::NoEffect, {}, {}};
}

std::map<std::string, BannerAction> banner_decision(const SignalState& signal,
                                                    const std::vector<PurposeSpec>& purposes,
                                                    bool confirm_withdrawal_popup) {
    if (purposes.empty()) throw InvalidInput("banner_decision needs at least one purpose");
    std::map<std::string, BannerAction> actions;
    for (const auto& purpose : purposes) {
        DecisionInput input{signal, purpose.role, purpose.basis, purpose.activity, false, purpose.grounds};
        Directive directive = decide(input);
        bool choice_already_made = directive.effect == Effect::HaltSharing_ConsentWithdrawal ||
                                   directive.effect == Effect::HaltSharing_Objection;
        if (confirm_withdrawal_popup && directive.effect == Effect::HaltSharing_ConsentWithdrawal) {
            // Site prefers to confirm the withdrawal with the subject.
            choice_already_made = false;
        }
        actions.emplace(purpose.id, signal.is_active() && choice_already_made
                                        ? BannerAction::SuppressBanner
                                        : BannerAction::ShowBanner);
    }
    return actions;
}

std::optional<DirectiveNote> detect_consent_conflict(const SignalState& signal, bool consent_click) {
    if (signal.is_active() && consent_click) return DirectiveNote::AmbiguousConsentDetected;
    return std::nullopt;
}

std::vector<DecisionTableRow> enumerate_decision_table() {
    static constexpr std::array<SignalKind, 2> signals = {SignalKind::Active, SignalKind::Absent};
    static constexpr std::array<PartyRole, 3> roles = {PartyRole::Controller, PartyRole::Processor,
                                                       PartyRole::ThirdParty};
    static constexpr std::array<LegalBasis, 6> bases = {
        LegalBasis::Consent,           LegalBasis::ContractPerformance,
        LegalBasis::LegitimateInterests, LegalBasis::LegalObligation,
        LegalBasis::VitalInterests,    LegalBasis::PublicInterestOrAuthority};
    static constexpr std::array<ProcessingActivity, 5> activities = {
        ProcessingActivity::SellToThirdParty, ProcessingActivity::ShareWithThirdParty,
        ProcessingActivity::CrossContextAdTargeting, ProcessingActivity::FirstPartyOwnProcessing,
        ProcessingActivity::CollectionFromSubject};

    std::vector<DecisionTableRow> table;
    table.reserve(240);
    for (auto signal_kind : signals) {
        SignalState signal = signal_kind == SignalKind::Active ? SignalState::active() : SignalState::absent();
        for (auto role : roles) {
            for (auto basis : bases) {
                std::vector<GroundsVariant> variants;
                if (basis == LegalBasis::LegitimateInterests) {
                    variants = {GroundsVariant::NotApplicable, GroundsVariant::NotCompelling,
                                GroundsVariant::Compelling};
                } else {
                    variants = {GroundsVariant::NotApplicable};
                }
                for (auto variant : variants) {
                    for (auto activity : activities) {
                        DecisionInput input{signal, role, basis, activity, false, std::nullopt};
                        if (variant == GroundsVariant::NotCompelling) {
                            input.grounds = GroundsAssessment{false, {}};
                        } else if (variant == GroundsVariant::Compelling) {
                            input.grounds = GroundsAssessment{true, kTableDemonstration};
                        }
                        table.push_back({input, variant, decide(input)});
                    }
                }
            }
        }
    }
    return table;
}

std::string decision_table_csv() {
    std::string csv = "signal,role,basis,activity,grounds,effect,notes\n";
    for (const auto& row : enumerate_decision_table()) {
        csv += to_string(row.input.signal.kind());
        csv += ',';
        csv += to_string(row.input.role);
        csv += ',';
        csv += to_string(row.input.basis);
        csv += ',';
        csv += to_string(row.input.activity);
        csv += ',';
        csv += to_string(row.grounds_variant);
        csv += ',';
        csv += to_string(row.directive.effect);
        csv += ',';
        for (std::size_t i = 0; i < row.directive.notes.size(); ++i) {
            if (i > 0) csv += ';';
            csv += to_string(row.directive.notes[i]);
        }
        csv += '\n';
    }
    return csv;
}

}  // namespace gpcgate
