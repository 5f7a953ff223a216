#pragma once

#include <stdexcept>
#include <string>

namespace blowup {

/// Raised on precondition violations and malformed input.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& message) : std::runtime_error(message) {}
};

}  // namespace blowup
