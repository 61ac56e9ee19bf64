#pragma once

// Deterministic serialization helpers: reals rendered with 12 significant
// digits, integers exact, field order fixed by the caller. Two runs over the
// same data produce byte-identical output.

#include <string>
#include <string_view>
#include <vector>

#include "arith.hpp"

namespace sqf {

std::string jreal(double v);
std::string jint(i64 v);
std::string jbool(bool v);
std::string jstr(std::string_view s); // quoted + escaped

// Members are emitted in insertion order.
class JsonObject {
public:
    JsonObject& raw(std::string_view key, std::string_view value);
    JsonObject& real(std::string_view key, double v) { return raw(key, jreal(v)); }
    JsonObject& integer(std::string_view key, i64 v) { return raw(key, jint(v)); }
    JsonObject& boolean(std::string_view key, bool v) { return raw(key, jbool(v)); }
    JsonObject& str(std::string_view key, std::string_view v) { return raw(key, jstr(v)); }
    std::string build() const;

private:
    std::vector<std::pair<std::string, std::string>> members_;
};

std::string jarray(const std::vector<std::string>& items);

std::string csv_line(const std::vector<std::string>& fields);

} // namespace sqf
