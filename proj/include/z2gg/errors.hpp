#pragma once

#include <stdexcept>
#include <string>

namespace z2gg {

// Every domain failure carries a short stable name (EmptyInput, TooLarge, ...)
// that the CLI surfaces verbatim, plus a human-readable message.
class Error : public std::runtime_error {
public:
    Error(std::string name, const std::string& message)
        : std::runtime_error(name + ": " + message), name_(std::move(name)) {}

    const std::string& name() const { return name_; }

private:
    std::string name_;
};

}  // namespace z2gg
