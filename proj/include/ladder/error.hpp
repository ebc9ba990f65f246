#pragma once

#include <stdexcept>
#include <string>

namespace ladder {

enum class errc {
    invalid_partition,
    invalid_modulus,
    box_not_in_diagram,
    invalid_hook,
    overlapping_hooks,
    modulus_too_small,
    not_jm,
    invalid_decomposition,
    not_a_core,
    not_regular,
    parse_error,
    internal,
};

const char* to_string(errc code) noexcept;

// Every recoverable failure in the library is reported through this type;
// code() lets callers (the CLI in particular) branch without string matching.
class error : public std::runtime_error {
public:
    error(errc code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what)
        , code_(code)
    {}

    errc code() const noexcept { return code_; }

private:
    errc code_;
};

} // namespace ladder
