#pragma once

#include <stdexcept>
#include <string>

namespace sqf {

// Mirrors the status codes of the public C API one to one.
enum class errc {
    ok = 0,
    verify_failed = 1,
    usage = 2,
    budget_exceeded = 3,
    not_coprime = 4,
    even_modulus = 5,
    bad_modulus = 6,
    not_prime = 7,
    bad_range = 8,
    corrupt_cache = 9,
    degenerate_fit = 10,
    io = 11,
    internal = 12,
};

class error : public std::runtime_error {
public:
    error(errc code, const std::string& msg) : std::runtime_error(msg), code_(code) {}
    errc code() const { return code_; }

private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& msg) { throw error(code, msg); }

} // namespace sqf
