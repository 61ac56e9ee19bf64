#pragma once

#include <map>
#include <string>
#include <vector>

#include "arith.hpp"

namespace sqf {

// Flat key=value configuration, keys namespaced per module. Every sweep
// range the suites use has an entry here, so bigger machines can widen the
// defaults without a code change.
class Config {
public:
    Config();

    void set(const std::string& key, const std::string& value); // throws usage on unknown key
    void load_file(const std::string& path);                    // throws io / usage

    const std::string& get(const std::string& key) const;
    i64 get_int(const std::string& key) const;
    double get_real(const std::string& key) const;
    std::vector<i64> get_int_list(const std::string& key) const;

    int threads() const { return static_cast<int>(get_int("threads")); }
    i64 budget() const { return get_int("budget"); }

    const std::map<std::string, std::string>& entries() const { return values_; }

private:
    std::map<std::string, std::string> values_;
};

} // namespace sqf
