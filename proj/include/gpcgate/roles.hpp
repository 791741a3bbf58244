#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace gpcgate {

/// GDPR actor role of one entity for one processing activity.
/// ThirdParty is defined by exclusion: neither controller nor processor.
enum class PartyRole { Controller, Processor, ThirdParty };

std::string to_string(PartyRole role);
PartyRole party_role_from_string(std::string_view text);

/// Declared role facts for one (entity, activity) pair, supplied by the
/// integrator in the site policy. Role is a legal fact, not observable on
/// the wire.
struct EntityActivityBinding {
    std::string entity_id;
    std::string activity_id;
    bool determines_purposes_and_means = false;
    bool acts_on_behalf_of_controller = false;
    bool is_intended_interaction_target = false;

    bool operator==(const EntityActivityBinding&) const = default;
};

/// Controller if the entity determines purposes and means, Processor if it
/// acts on a controller's behalf, ThirdParty otherwise. Throws
/// InconsistentBinding when both flags are set.
PartyRole classify(const EntityActivityBinding& binding);

/// Classifies each activity of one entity independently; a single entity can
/// be Processor for one activity and ThirdParty for another. Throws
/// DuplicateActivity on two bindings for the same activity and
/// InconsistentBinding when a binding belongs to a different entity.
std::map<std::string, PartyRole> split_roles(const std::string& entity_id,
                                             const std::vector<EntityActivityBinding>& bindings);

}  // namespace gpcgate
