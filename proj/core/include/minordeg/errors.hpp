#pragma once

#include <stdexcept>
#include <string>

namespace minordeg {

// Domain-level failure. `name()` is the stable identifier the CLI prints
// before exiting with status 1; the message carries context for humans.
class DomainError : public std::runtime_error {
public:
    DomainError(std::string name, const std::string& message)
        : std::runtime_error(name + ": " + message), name_(std::move(name)) {}

    const std::string& name() const { return name_; }

private:
    std::string name_;
};

[[noreturn]] inline void fail(const std::string& name, const std::string& message) {
    throw DomainError(name, message);
}

inline void require(bool ok, const std::string& name, const std::string& message) {
    if (!ok) fail(name, message);
}

} // namespace minordeg
