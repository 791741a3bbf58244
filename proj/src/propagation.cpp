#include "gpcgate/propagation.hpp"

#include <nlohmann/json.hpp>

#include "gpcgate/codec_util.hpp"
#include "gpcgate/errors.hpp"

namespace gpcgate {

std::string to_string(RestrictionTag::Origin origin) {
    return origin == RestrictionTag::Origin::GpcActive ? "GpcActive" : "None";
}

namespace {

nlohmann::ordered_json tag_to_json(const RestrictionTag& tag) {
    nlohmann::ordered_json doc;
    doc["no_sell"] = tag.no_sell;
    doc["no_share"] = tag.no_share;
    doc["no_cross_context_ads"] = tag.no_cross_context_ads;
    doc["origin_signal"] = to_string(tag.origin_signal);
    doc["issued_at"] = rfc3339_format(tag.issued_at);
    return doc;
}

RestrictionTag tag_from_json(const nlohmann::json& doc) {
    RestrictionTag tag;
    tag.no_sell = doc.at("no_sell").get<bool>();
    tag.no_share = doc.at("no_share").get<bool>();
    tag.no_cross_context_ads = doc.at("no_cross_context_ads").get<bool>();
    auto origin = doc.at("origin_signal").get<std::string>();
    if (origin == "GpcActive") {
        tag.origin_signal = RestrictionTag::Origin::GpcActive;
    } else if (origin == "None") {
        tag.origin_signal = RestrictionTag::Origin::None;
    } else {
        throw TagStripped("unknown origin_signal token \"" + origin + "\"");
    }
    auto at = rfc3339_parse(doc.at("issued_at").get<std::string>());
    if (!at) throw TagStripped("unparsable issued_at");
    tag.issued_at = *at;
    // The signal is indivisible, so a mixed restriction pattern can only be
    // the product of tampering.
    bool expect = tag.origin_signal == RestrictionTag::Origin::GpcActive;
    if (tag.no_sell != expect || tag.no_share != expect || tag.no_cross_context_ads != expect) {
        throw TagStripped("mixed restriction pattern");
    }
    return tag;
}

// Digest binds the payload to the tag at issuance time. Provenance is
// excluded: it grows per hop while the tag must stay byte-identical.
std::string integrity_digest(const std::string& payload, const RestrictionTag& tag) {
    return detail::sha256_hex(payload + "\n" + tag_to_json(tag).dump());
}

}  // namespace

TaggedRecord tag_outbound(std::string payload, const SignalState& signal, const std::string& sender,
                          Timestamp issued_at) {
    if (payload.empty()) throw InvalidInput("cannot tag an empty payload");
    TaggedRecord record;
    record.payload = std::move(payload);
    if (signal.is_active()) {
        record.tag = {true, true, true, RestrictionTag::Origin::GpcActive, issued_at};
    } else {
        record.tag = {false, false, false, RestrictionTag::Origin::None, issued_at};
    }
    record.provenance = {sender};
    record.integrity = integrity_digest(record.payload, record.tag);
    return record;
}

bool verify_integrity(const TaggedRecord& record) {
    return record.integrity == integrity_digest(record.payload, record.tag);
}

TaggedRecord forward(const TaggedRecord& record, const std::string& next_hop) {
    if (!verify_integrity(record)) {
        throw TagStripped("record tag or payload does not match its integrity digest");
    }
    TaggedRecord next = record;
    next.provenance.push_back(next_hop);
    return next;
}

EnforcementDecision enforce_downstream(const TaggedRecord& record, ProcessingActivity requested) {
    switch (requested) {
        case ProcessingActivity::SellToThirdParty:
            if (record.tag.no_sell) return {EnforcementOutcome::Deny, "tag forbids selling"};
            break;
        case ProcessingActivity::ShareWithThirdParty:
            if (record.tag.no_share) return {EnforcementOutcome::Deny, "tag forbids sharing"};
            break;
        case ProcessingActivity::CrossContextAdTargeting:
            if (record.tag.no_cross_context_ads) {
                return {EnforcementOutcome::Deny, "tag forbids cross-context ad targeting"};
            }
            break;
        case ProcessingActivity::FirstPartyOwnProcessing:
        case ProcessingActivity::CollectionFromSubject:
            break;
    }
    return {EnforcementOutcome::Allow, {}};
}

std::string serialize_tagged_record(const TaggedRecord& record) {
    nlohmann::ordered_json doc;
    doc["payload_b64"] = detail::base64_encode(record.payload);
    doc["tag"] = tag_to_json(record.tag);
    doc["provenance"] = record.provenance;
    doc["integrity"] = record.integrity;
    return doc.dump();
}

TaggedRecord parse_tagged_record(const std::string& text) {
    nlohmann::json doc = nlohmann::json::parse(text, nullptr, false);
    if (doc.is_discarded() || !doc.is_object()) throw TagStripped("undecodable tagged record");
    TaggedRecord record;
    auto payload = detail::base64_decode(doc.at("payload_b64").get<std::string>());
    if (!payload) throw TagStripped("payload_b64 is not valid base64");
    record.payload = std::move(*payload);
    record.tag = tag_from_json(doc.at("tag"));
    record.provenance = doc.at("provenance").get<std::vector<std::string>>();
    record.integrity = doc.at("integrity").get<std::string>();
    if (!verify_integrity(record)) throw TagStripped("integrity digest mismatch after decode");
    return record;
}

std::string to_external(const RestrictionTag& tag) {
    return tag_to_json(tag).dump();
}

}  // namespace gpcgate
