#include "gpcgate/roles.hpp"

#include "gpcgate/errors.hpp"

namespace gpcgate {

std::string to_string(PartyRole role) {
    switch (role) {
        case PartyRole::Controller: return "Controller";
        case PartyRole::Processor: return "Processor";
        case PartyRole::ThirdParty: return "ThirdParty";
    }
    return "ThirdParty";
}

PartyRole party_role_from_string(std::string_view text) {
    if (text == "Controller") return PartyRole::Controller;
    if (text == "Processor") return PartyRole::Processor;
    if (text == "ThirdParty") return PartyRole::ThirdParty;
    throw InvalidInput("unknown party role: \"" + std::string(text) + "\"");
}

PartyRole classify(const EntityActivityBinding& binding) {
    if (binding.determines_purposes_and_means && binding.acts_on_behalf_of_controller) {
        throw InconsistentBinding("entity \"" + binding.entity_id + "\" activity \"" +
                                  binding.activity_id +
                                  "\" claims to both determine purposes and act on behalf of a controller");
    }
    if (binding.determines_purposes_and_means) return PartyRole::Controller;
    if (binding.acts_on_behalf_of_controller) return PartyRole::Processor;
    return PartyRole::ThirdParty;
}

std::map<std::string, PartyRole> split_roles(const std::string& entity_id,
                                             const std::vector<EntityActivityBinding>& bindings) {
    std::map<std::string, PartyRole> roles;
    for (const auto& binding : bindings) {
        if (binding.entity_id != entity_id) {
            throw InconsistentBinding("binding for entity \"" + binding.entity_id +
                                      "\" passed to split_roles for \"" + entity_id + "\"");
        }
        auto [it, inserted] = roles.emplace(binding.activity_id, classify(binding));
        if (!inserted) {
            throw DuplicateActivity("entity \"" + entity_id + "\" has two bindings for activity \"" +
                                    binding.activity_id + "\"");
        }
    }
    return roles;
}

}  // namespace gpcgate
