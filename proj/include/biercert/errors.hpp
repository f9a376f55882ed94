#pragma once

#include <stdexcept>
#include <string>

namespace bier {

/// Invalid argument values or malformed input: bad vertex labels, a complex
/// of the wrong kind, out-of-range degrees, unparsable files.
class InputError : public std::runtime_error {
public:
    explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

/// An exhaustive-enumeration cap was exceeded. Operations refuse instead of
/// approximating or sampling.
class ResourceLimitError : public std::runtime_error {
public:
    explicit ResourceLimitError(const std::string& what) : std::runtime_error(what) {}
};

/// A capability that is intentionally not implemented; signalled, never
/// silently approximated.
class UnsupportedError : public std::runtime_error {
public:
    explicit UnsupportedError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace bier
