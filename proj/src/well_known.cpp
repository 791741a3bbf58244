#include "gpcgate/well_known.hpp"

#include <nlohmann/json.hpp>

#include "gpcgate/errors.hpp"
#include "gpcgate/time.hpp"

namespace gpcgate {

namespace {

std::string_view strip_envelope(std::string_view body) {
    constexpr std::string_view bom = "\xEF\xBB\xBF";
    if (body.substr(0, bom.size()) == bom) body.remove_prefix(bom.size());
    while (!body.empty() && (body.back() == '\n' || body.back() == '\r')) body.remove_suffix(1);
    return body;
}

}  // namespace

WellKnownRecord parse_well_known(std::string_view body) {
    auto text = strip_envelope(body);
    nlohmann::json doc = nlohmann::json::parse(text, nullptr, false);
    if (doc.is_discarded()) throw MalformedRecord("undecodable body");
    if (!doc.is_object()) throw MalformedRecord("not an object");
    auto gpc = doc.find("gpc");
    if (gpc == doc.end()) throw MalformedRecord("gpc missing");
    if (!gpc->is_boolean()) throw MalformedRecord("gpc not boolean");
    WellKnownRecord record;
    record.gpc_supported = gpc->get<bool>();
    auto last = doc.find("lastUpdate");
    if (last != doc.end()) {
        if (!last->is_string()) throw MalformedRecord("lastUpdate not a string");
        auto text_value = last->get<std::string>();
        if (!is_iso8601_date_or_datetime(text_value)) {
            throw MalformedRecord("lastUpdate not an ISO-8601 date or date-time");
        }
        record.last_update = std::move(text_value);
    }
    return record;
}

std::string serialize_well_known(const WellKnownRecord& record) {
    nlohmann::ordered_json doc;
    doc["gpc"] = record.gpc_supported;
    if (record.last_update) doc["lastUpdate"] = *record.last_update;
    return doc.dump();
}

}  // namespace gpcgate
