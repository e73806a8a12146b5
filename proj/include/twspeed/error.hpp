#pragma once

#include <stdexcept>
#include <string>

namespace twspeed {

// Mirrors tws_status in the C header; keep the numbering in sync.
enum class Errc {
    ok = 0,
    invalid_input = 1,
    out_of_domain = 2,
    numerical_failure = 3,
    no_convergence = 4,
    estimation_failure = 5,
    singular = 6,
};

const char* errc_name(Errc e) noexcept;

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

}  // namespace twspeed
