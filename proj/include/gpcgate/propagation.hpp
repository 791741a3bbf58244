#pragma once

#include <string>
#include <vector>

#include "gpcgate/engine.hpp"
#include "gpcgate/signal.hpp"
#include "gpcgate/time.hpp"

namespace gpcgate {

/// Machine-readable restriction carried with every record shared beyond the
/// user's session, so downstream recipients cannot unknowingly process it
/// against the user's expressed preference.
///
/// The signal is single-valued and indivisible, so the three restrictions are
/// all-or-nothing: an active origin sets all of them, no origin sets none.
struct RestrictionTag {
    enum class Origin { GpcActive, None };

    bool no_sell = false;
    bool no_share = false;
    bool no_cross_context_ads = false;
    Origin origin_signal = Origin::None;
    Timestamp issued_at = timestamp_from_millis(0);

    bool operator==(const RestrictionTag&) const = default;
};

std::string to_string(RestrictionTag::Origin origin);

struct TaggedRecord {
    std::string payload;            // opaque bytes
    RestrictionTag tag;             // immutable after issuance
    std::vector<std::string> provenance;  // entity hops, oldest first
    std::string integrity;          // hex digest binding payload and tag

    bool operator==(const TaggedRecord&) const = default;
};

enum class EnforcementOutcome { Allow, Deny };

struct EnforcementDecision {
    EnforcementOutcome outcome = EnforcementOutcome::Allow;
    std::string reason;  // set when denied

    bool allowed() const noexcept { return outcome == EnforcementOutcome::Allow; }
    bool operator==(const EnforcementDecision&) const = default;
};

/// Issues the restriction tag for an outbound record at the session boundary.
/// An active signal restricts everything; an absent or malformed one
/// preserves the status quo. Provenance starts at the sender.
TaggedRecord tag_outbound(std::string payload, const SignalState& signal, const std::string& sender,
                          Timestamp issued_at);

/// True when the record's integrity digest still matches its payload and tag.
bool verify_integrity(const TaggedRecord& record);

/// Hands the record to the next hop: payload and tag byte-identical,
/// provenance extended. Throws TagStripped when the tag or payload no longer
/// matches the integrity digest.
TaggedRecord forward(const TaggedRecord& record, const std::string& next_hop);

/// Gatekeeper at a downstream boundary: denies a requested activity the tag
/// restricts, allows everything else (a recipient's own first-party-style
/// processing is never the tag's business).
EnforcementDecision enforce_downstream(const TaggedRecord& record, ProcessingActivity requested);

/// Serialized interchange form:
/// {payload_b64, tag:{...}, provenance:[...], integrity}.
std::string serialize_tagged_record(const TaggedRecord& record);
TaggedRecord parse_tagged_record(const std::string& text);

/// Translation seam toward external downstream frameworks. Currently emits
/// the canonical interchange bytes; adapters for specific frameworks plug in
/// behind this signature.
std::string to_external(const RestrictionTag& tag);

}  // namespace gpcgate
