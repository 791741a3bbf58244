#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gpcgate/roles.hpp"
#include "gpcgate/signal.hpp"

namespace gpcgate {

/// The single legal basis a controller has determined for an evaluated flow.
enum class LegalBasis {
    Consent,
    ContractPerformance,
    LegitimateInterests,
    LegalObligation,
    VitalInterests,
    PublicInterestOrAuthority,
};

/// Label of the evaluated data flow. Collection from the subject and a
/// first party's own processing are modeled so the decision table covers
/// them explicitly instead of omitting them.
enum class ProcessingActivity {
    SellToThirdParty,
    ShareWithThirdParty,
    CrossContextAdTargeting,
    FirstPartyOwnProcessing,
    CollectionFromSubject,
};

std::string to_string(LegalBasis basis);
std::string to_string(ProcessingActivity activity);
LegalBasis legal_basis_from_string(std::string_view text);
ProcessingActivity processing_activity_from_string(std::string_view text);

/// Outcome of the legitimate-interests balancing judgment, supplied as an
/// input. The engine enforces its consequences; it never computes the test.
struct GroundsAssessment {
    bool compelling = false;
    std::string demonstration;  // required non-empty when compelling

    bool operator==(const GroundsAssessment&) const = default;
};

struct DecisionInput {
    SignalState signal;
    PartyRole role = PartyRole::ThirdParty;
    LegalBasis basis = LegalBasis::Consent;
    ProcessingActivity activity = ProcessingActivity::ShareWithThirdParty;
    bool prior_consent_on_record = false;  // kept for audit; never branches
    std::optional<GroundsAssessment> grounds;  // only with LegitimateInterests

    bool operator==(const DecisionInput&) const = default;
};

/// Effect tokens double as the wire vocabulary of the decision header and the
/// CSV export, so their spellings are fixed.
enum class Effect {
    NoEffect,
    HaltSharing_ConsentWithdrawal,
    HaltSharing_Objection,
    ObjectionRefused_DemonstrationRequired,
    OutOfScope,
};

enum class DirectiveNote { MayRequestConsentAgain, AmbiguousConsentDetected };

std::string to_string(Effect effect);
std::string to_string(DirectiveNote note);
Effect effect_from_string(std::string_view text);

struct Directive {
    Effect effect = Effect::NoEffect;
    std::vector<DirectiveNote> notes;
    /// Grounds text shown to the subject; set only with
    /// ObjectionRefused_DemonstrationRequired.
    std::string demonstration;

    bool operator==(const Directive&) const = default;
};

enum class BannerAction { SuppressBanner, ShowBanner };

std::string to_string(BannerAction action);

/// One declared purpose to evaluate: the flow, the counterparty's role for
/// it, and the legal basis the controller determined.
struct PurposeSpec {
    std::string id;
    ProcessingActivity activity = ProcessingActivity::ShareWithThirdParty;
    PartyRole role = PartyRole::ThirdParty;
    LegalBasis basis = LegalBasis::Consent;
    std::optional<GroundsAssessment> grounds;

    bool operator==(const PurposeSpec&) const = default;
};

/// True iff the signal reaches this flow at all: a sell/share/cross-context
/// activity evaluated against a third-party counterparty. A first party's own
/// processing and collection from the subject are never covered, and neither
/// is any activity evaluated against a processor.
bool in_gpc_scope(ProcessingActivity activity, PartyRole role);

/// The decision core. Pure and deterministic; an absent or invalid signal is
/// never a permission and never consent, and the returned directive governs
/// only the evaluated future flow.
Directive decide(const DecisionInput& input);

/// Per-purpose banner verdicts. A purpose's banner is suppressed iff the
/// signal already made the choice for it (a halt directive); everything
/// else, including consent purposes the signal does not reach, still shows.
/// With `confirm_withdrawal_popup` the site asks the subject to confirm a
/// consent withdrawal instead of suppressing that banner.
std::map<std::string, BannerAction> banner_decision(const SignalState& signal,
                                                    const std::vector<PurposeSpec>& purposes,
                                                    bool confirm_withdrawal_popup = false);

/// Flags the unresolved conflict between an affirmative popup click and a
/// simultaneously active signal. Never resolves it in either direction.
std::optional<DirectiveNote> detect_consent_conflict(const SignalState& signal, bool consent_click);

/// How the legitimate-interests grounds input is toggled in the canonical
/// decision table.
enum class GroundsVariant { NotApplicable, NotCompelling, Compelling };

std::string to_string(GroundsVariant variant);

struct DecisionTableRow {
    DecisionInput input;
    GroundsVariant grounds_variant = GroundsVariant::NotApplicable;
    Directive directive;

    bool operator==(const DecisionTableRow&) const = default;
};

/// Demonstration text used for the Compelling rows of the canonical table.
inline constexpr const char* kTableDemonstration = "demonstrated compelling grounds";

/// Every canonical input combination with its directive, in a stable order:
/// signal (Active, Absent), role, basis (grounds toggled for legitimate
/// interests only), activity. 240 rows.
std::vector<DecisionTableRow> enumerate_decision_table();

/// The table as CSV, header row fixed, byte-stable across runs:
/// signal,role,basis,activity,grounds,effect,notes
std::string decision_table_csv();

}  // namespace gpcgate
