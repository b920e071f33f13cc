// Copyright 2026 The lzgate Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Strict JSON config access: every key must be consumed or the run is
// rejected.

#pragma once

#include <cmath>
#include <cstdio>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

namespace lzgate::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitConfig = 2;
inline constexpr int kExitIo = 3;

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

class ConfigReader {
   public:
    ConfigReader(const nlohmann::json &doc, std::string context)
        : doc_(doc), context_(std::move(context)) {
        if (!doc_.is_object()) {
            throw ConfigError(context_ + ": expected a JSON object");
        }
    }

    [[nodiscard]] bool has(const std::string &key) const {
        return doc_.contains(key);
    }

    /// Marks a key as known without reading it.
    void skip(const std::string &key) { used_.insert(key); }

    double number(const std::string &key, double fallback) {
        used_.insert(key);
        if (!doc_.contains(key)) return fallback;
        return as_number(doc_.at(key), key);
    }

    double number(const std::string &key) {
        require_key(key);
        return number(key, 0.0);
    }

    long integer(const std::string &key, long fallback) {
        used_.insert(key);
        if (!doc_.contains(key)) return fallback;
        const auto &v = doc_.at(key);
        if (!v.is_number_integer()) {
            throw ConfigError(where(key) + " must be an integer");
        }
        return v.get<long>();
    }

    std::string string(const std::string &key, const std::string &fallback) {
        used_.insert(key);
        if (!doc_.contains(key)) return fallback;
        const auto &v = doc_.at(key);
        if (!v.is_string()) throw ConfigError(where(key) + " must be a string");
        return v.get<std::string>();
    }

    std::vector<double> numbers(const std::string &key,
                                const std::vector<double> &fallback) {
        used_.insert(key);
        if (!doc_.contains(key)) return fallback;
        const auto &v = doc_.at(key);
        if (!v.is_array()) throw ConfigError(where(key) + " must be an array");
        std::vector<double> out;
        for (const auto &x : v) out.push_back(as_number(x, key));
        return out;
    }

    /// Nested object reader; an absent key yields an empty object.
    ConfigReader object(const std::string &key) {
        used_.insert(key);
        static const nlohmann::json empty = nlohmann::json::object();
        return ConfigReader(doc_.contains(key) ? doc_.at(key) : empty,
                            where(key));
    }

    /// Throws on any key that was never read or skipped.
    void finish() const {
        for (const auto &item : doc_.items()) {
            if (!used_.contains(item.key())) {
                throw ConfigError(context_ + ": unknown key '" + item.key() +
                                  "'");
            }
        }
    }

   private:
    [[nodiscard]] std::string where(const std::string &key) const {
        return context_ + "." + key;
    }

    void require_key(const std::string &key) const {
        if (!doc_.contains(key)) {
            throw ConfigError(where(key) + " is required");
        }
    }

    double as_number(const nlohmann::json &v, const std::string &key) const {
        if (!v.is_number()) throw ConfigError(where(key) + " must be a number");
        const double x = v.get<double>();
        if (!std::isfinite(x)) throw ConfigError(where(key) + " must be finite");
        return x;
    }

    const nlohmann::json &doc_;
    std::string context_;
    std::set<std::string> used_;
};

/// Fixed 17-significant-digit formatting, independent of locale.
inline std::string format_number(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

}  // namespace lzgate::cli
