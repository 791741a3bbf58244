#include "gpcgate/ledger_store.hpp"

#include <string>
#include <vector>

#include "gpcgate/errors.hpp"
#include "gpcgate/json_io.hpp"

namespace gpcgate {

LedgerStore::LedgerStore(std::filesystem::path dir) : dir_(std::move(dir)) {
    std::error_code ec;
    std::filesystem::create_directories(dir_, ec);
    if (ec) throw StorageUnavailable("cannot create ledger directory " + dir_.string() + ": " + ec.message());

    auto log_path = dir_ / kEventLogName;
    if (std::filesystem::exists(log_path)) {
        std::ifstream in(log_path);
        if (!in) throw StorageUnavailable("cannot read event log " + log_path.string());
        std::vector<std::string> lines;
        std::string line;
        while (std::getline(in, line)) lines.push_back(line);
        for (std::size_t i = 0; i < lines.size(); ++i) {
            if (lines[i].empty()) continue;
            nlohmann::json doc = nlohmann::json::parse(lines[i], nullptr, false);
            if (doc.is_discarded()) {
                // A torn final line means an interrupted append; anything
                // earlier is corruption.
                if (i + 1 == lines.size()) break;
                throw StorageUnavailable("corrupt event log line " + std::to_string(i + 1) + " in " +
                                         log_path.string());
            }
            auto [key, event] = event_from_json(doc);
            auto it = states_.find(key);
            const SubjectSiteState& prior = it == states_.end() ? zero_state() : it->second;
            states_[key] = record_visit(key, prior, event);
        }
    }

    log_.open(log_path, std::ios::app);
    if (!log_) throw StorageUnavailable("cannot open event log for append: " + log_path.string());
}

SubjectSiteState LedgerStore::record(const SubjectSiteKey& key, const VisitEvent& event) {
    std::unique_lock lock(mutex_);
    auto it = states_.find(key);
    const SubjectSiteState& prior = it == states_.end() ? zero_state() : it->second;
    SubjectSiteState next = record_visit(key, prior, event);  // may throw; nothing written then
    log_ << event_to_json(key, event).dump() << '\n';
    log_.flush();
    if (!log_) throw StorageUnavailable("event log append failed in " + dir_.string());
    states_[key] = next;
    return next;
}

SubjectSiteState LedgerStore::current_status(const SubjectSiteKey& key) const {
    std::shared_lock lock(mutex_);
    auto it = states_.find(key);
    return it == states_.end() ? zero_state() : it->second;
}

std::size_t LedgerStore::key_count() const {
    std::shared_lock lock(mutex_);
    return states_.size();
}

void LedgerStore::write_snapshots() const {
    std::shared_lock lock(mutex_);
    auto path = dir_ / kSnapshotName;
    std::ofstream out(path, std::ios::trunc);
    if (!out) throw StorageUnavailable("cannot write snapshots: " + path.string());
    for (const auto& [key, state] : states_) {
        out << state_to_json(key, state).dump() << '\n';
    }
    out.flush();
    if (!out) throw StorageUnavailable("snapshot write failed: " + path.string());
}

}  // namespace gpcgate
