#pragma once

#include <stdexcept>
#include <string>

namespace stokes2p {

// Every thrown error carries a stable machine-readable category token;
// the CLI prints it verbatim and maps it to an exit code.
class Error : public std::runtime_error {
public:
    Error(std::string category, const std::string& message)
        : std::runtime_error(message), category_(std::move(category)) {}

    const std::string& category() const noexcept { return category_; }

private:
    std::string category_;
};

namespace errcat {
inline constexpr const char* invalid_dimension = "invalid-dimension";
inline constexpr const char* non_hermitian = "non-hermitian";
inline constexpr const char* validation = "validation";
inline constexpr const char* range = "range";
inline constexpr const char* normalization = "normalization";
inline constexpr const char* degenerate_state = "degenerate-state";
inline constexpr const char* degenerate_normalization = "degenerate-normalization";
inline constexpr const char* precondition = "precondition";
inline constexpr const char* spec = "spec";
inline constexpr const char* singular_scheme = "singular-scheme";
inline constexpr const char* argument = "argument";
inline constexpr const char* parse = "parse";
inline constexpr const char* io = "io";
inline constexpr const char* convergence = "convergence";
}  // namespace errcat

}  // namespace stokes2p
