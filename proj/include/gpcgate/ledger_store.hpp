#pragma once

#include <filesystem>
#include <fstream>
#include <map>
#include <shared_mutex>

#include "gpcgate/ledger.hpp"

namespace gpcgate {

/// File-backed ledger. The append-only event log is the source of truth;
/// per-key states are rebuilt from it on open and kept in memory. Snapshots
/// are a derived artifact written on demand.
///
/// Concurrency contract: updates are serialized (single writer at a time,
/// which subsumes the required single-writer-per-key ordering); reads take a
/// shared lock and may run concurrently with each other.
class LedgerStore {
public:
    /// Opens or creates the store under `dir`, replaying the event log.
    /// Throws StorageUnavailable when the directory or log cannot be used.
    explicit LedgerStore(std::filesystem::path dir);

    LedgerStore(const LedgerStore&) = delete;
    LedgerStore& operator=(const LedgerStore&) = delete;

    /// Folds the event into the key's state, appends it to the log (flushed
    /// before returning) and returns the new state. Propagates StaleEvent.
    SubjectSiteState record(const SubjectSiteKey& key, const VisitEvent& event);

    /// Latest state for the key, or the zero state when unrecorded.
    SubjectSiteState current_status(const SubjectSiteKey& key) const;

    std::size_t key_count() const;

    /// Writes snapshots.ndjson, one state object per key, stable key order.
    void write_snapshots() const;

    const std::filesystem::path& directory() const noexcept { return dir_; }

    static constexpr const char* kEventLogName = "events.ndjson";
    static constexpr const char* kSnapshotName = "snapshots.ndjson";

private:
    std::filesystem::path dir_;
    std::ofstream log_;
    std::map<SubjectSiteKey, SubjectSiteState> states_;
    mutable std::shared_mutex mutex_;
};

}  // namespace gpcgate
