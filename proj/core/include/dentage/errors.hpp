#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace dentage {

// Single exception type for the whole engine. `kind` drives process exit
// codes (io/parse -> 1, domain -> 2); `code` is the machine-readable token
// callers and tests match on.
class Error : public std::runtime_error {
public:
    enum class Kind { io, parse, domain };

    Error(Kind kind, std::string module, std::string code, const std::string& message)
        : std::runtime_error(module + "/" + code + ": " + message),
          kind_(kind),
          module_(std::move(module)),
          code_(std::move(code)) {}

    Kind kind() const { return kind_; }
    const std::string& module() const { return module_; }
    const std::string& code() const { return code_; }
    std::string qualified_code() const { return module_ + "/" + code_; }

    static Error io(std::string module, std::string code, const std::string& message) {
        return Error(Kind::io, std::move(module), std::move(code), message);
    }
    static Error parse(std::string module, std::string code, const std::string& message) {
        return Error(Kind::parse, std::move(module), std::move(code), message);
    }
    static Error domain(std::string module, std::string code, const std::string& message) {
        return Error(Kind::domain, std::move(module), std::move(code), message);
    }

private:
    Kind kind_;
    std::string module_;
    std::string code_;
};

}  // namespace dentage
