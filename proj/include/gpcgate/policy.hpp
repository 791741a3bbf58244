#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "gpcgate/engine.hpp"
#include "gpcgate/roles.hpp"

namespace gpcgate {

/// One declared purpose of a site: the evaluated flow, the counterparty it
/// involves, and the legal basis the controller determined for it. The
/// counterparty's role comes from the bindings, keyed by (entity, purpose_id).
struct PolicyPurpose {
    std::string purpose_id;
    ProcessingActivity activity = ProcessingActivity::ShareWithThirdParty;
    std::string counterparty_entity;
    LegalBasis basis = LegalBasis::Consent;
    std::optional<GroundsAssessment> grounds;

    bool operator==(const PolicyPurpose&) const = default;
};

struct PolicyOptions {
    bool confirm_withdrawal_popup = false;

    bool operator==(const PolicyOptions&) const = default;
};

/// Declarative per-site policy document, one file per site.
struct SitePolicy {
    std::string policy_version;  // echoed into every audit record
    std::vector<PolicyPurpose> purposes;
    std::vector<EntityActivityBinding> bindings;
    PolicyOptions options;

    /// Role of a purpose's counterparty, resolved through the bindings.
    PartyRole role_for(const PolicyPurpose& purpose) const;

    /// Purposes projected into the engine's evaluation tuples.
    std::vector<PurposeSpec> purpose_specs() const;
};

/// Validates invariants: unique purpose ids, grounds only on
/// legitimate-interests purposes, consistent bindings covering every
/// counterparty's purposes. Throws PolicyInvalid.
void validate_policy(const SitePolicy& policy);

/// Parses a policy document. Throws PolicyInvalid on structural or semantic
/// problems.
SitePolicy parse_policy(const std::string& text);
SitePolicy load_policy(const std::filesystem::path& path);

std::string serialize_policy(const SitePolicy& policy);

}  // namespace gpcgate
