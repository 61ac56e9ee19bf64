#include "emit.hpp"

#include <cmath>
#include <cstdio>

namespace sqf {

std::string jreal(double v) {
    if (!std::isfinite(v))
        return "null";
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

std::string jint(i64 v) {
    char buf[24];
    std::snprintf(buf, sizeof(buf), "%lld", static_cast<long long>(v));
    return buf;
}

std::string jbool(bool v) { return v ? "true" : "false"; }

std::string jstr(std::string_view s) {
    std::string out;
    out.reserve(s.size() + 2);
    out.push_back('"');
    for (char c : s) {
        switch (c) {
        case '"': out += "\\\""; break;
        case '\\': out += "\\\\"; break;
        case '\n': out += "\\n"; break;
        case '\t': out += "\\t"; break;
        case '\r': out += "\\r"; break;
        default:
            if (static_cast<unsigned char>(c) < 0x20) {
                char buf[8];
                std::snprintf(buf, sizeof(buf), "\\u%04x", c);
                out += buf;
            } else {
                out.push_back(c);
            }
        }
    }
    out.push_back('"');
    return out;
}

JsonObject& JsonObject::raw(std::string_view key, std::string_view value) {
    members_.emplace_back(std::string(key), std::string(value));
    return *this;
}

std::string JsonObject::build() const {
    std::string out = "{";
    bool first = true;
    for (const auto& [k, v] : members_) {
        if (!first)
            out.push_back(',');
        first = false;
        out += jstr(k);
        out.push_back(':');
        out += v;
    }
    out.push_back('}');
    return out;
}

std::string jarray(const std::vector<std::string>& items) {
    std::string out = "[";
    for (size_t i = 0; i < items.size(); ++i) {
        if (i)
            out.push_back(',');
        out += items[i];
    }
    out.push_back(']');
    return out;
}

std::string csv_line(const std::vector<std::string>& fields) {
    std::string out;
    for (size_t i = 0; i < fields.size(); ++i) {
        if (i)
            out.push_back(',');
        out += fields[i];
    }
    out.push_back('\n');
    return out;
}

} // namespace sqf
