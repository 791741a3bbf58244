#pragma once

#include <stdexcept>
#include <string>

namespace gpcgate {

/// Base class for all gpcgate errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Caller attempted to emit an Invalid signal state.
class EmitInvalid : public Error {
public:
    explicit EmitInvalid(const std::string& what) : Error(what) {}
};

/// A well-known support record failed to parse. Carries the reason.
class MalformedRecord : public Error {
public:
    explicit MalformedRecord(std::string reason)
        : Error("malformed well-known record: " + reason), reason_(std::move(reason)) {}
    const std::string& reason() const noexcept { return reason_; }

private:
    std::string reason_;
};

/// An entity/activity binding claims to both determine purposes and act on behalf.
class InconsistentBinding : public Error {
public:
    explicit InconsistentBinding(const std::string& what) : Error(what) {}
};

/// Two bindings supplied for the same activity of one entity.
class DuplicateActivity : public Error {
public:
    explicit DuplicateActivity(const std::string& what) : Error(what) {}
};

/// A decision input violates its invariants.
class InvalidInput : public Error {
public:
    explicit InvalidInput(const std::string& what) : Error(what) {}
};

/// A visit event is not strictly newer than the stored state.
class StaleEvent : public Error {
public:
    explicit StaleEvent(const std::string& what) : Error(what) {}
};

/// A persisted ledger state violates its invariants.
class CorruptState : public Error {
public:
    explicit CorruptState(const std::string& what) : Error(what) {}
};

/// The ledger backing store cannot be read or written.
class StorageUnavailable : public Error {
public:
    explicit StorageUnavailable(const std::string& what) : Error(what) {}
};

/// A tagged record's restriction tag no longer matches its integrity digest.
class TagStripped : public Error {
public:
    explicit TagStripped(const std::string& what) : Error(what) {}
};

/// A site policy document is structurally or semantically invalid.
class PolicyInvalid : public Error {
public:
    explicit PolicyInvalid(const std::string& what) : Error(what) {}
};

/// A file could not be written.
class IoFailure : public Error {
public:
    explicit IoFailure(const std::string& what) : Error(what) {}
};

/// Bad operation arguments (scanner flags and similar).
class InvalidArgs : public Error {
public:
    explicit InvalidArgs(const std::string& what) : Error(what) {}
};

}  // namespace gpcgate
