#pragma once

#include <stdexcept>
#include <string>

namespace tsir {

/// Failure categories, mapped to CLI exit codes (input → 2, guard/overflow → 3,
/// everything else → 1).
enum class ErrorKind {
    Input,          // malformed vectors, configs, parameters
    Guard,          // support/window larger than the configured enumeration guard
    Overflow,       // fast-growing hierarchy magnitude or step cap
    Certificate,    // structural invariant violated while verifying
    Stabilization,  // iterate failed to stabilize at m = |supp x| (engine bug, not user error)
    Construction,   // witness search could not produce the required blocks
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(message), kind_(kind) {}

    ErrorKind kind() const { return kind_; }

    static Error input(const std::string& m) { return {ErrorKind::Input, m}; }
    static Error guard(const std::string& m) { return {ErrorKind::Guard, m}; }
    static Error overflow(const std::string& m) { return {ErrorKind::Overflow, m}; }
    static Error certificate(const std::string& m) { return {ErrorKind::Certificate, m}; }
    static Error stabilization(const std::string& m) { return {ErrorKind::Stabilization, m}; }
    static Error construction(const std::string& m) { return {ErrorKind::Construction, m}; }

private:
    ErrorKind kind_;
};

}  // namespace tsir
