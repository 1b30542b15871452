// Copyright 2026 The vavqe developers

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
/**
 * @file config.hpp
 * Flat "key = value" config text with [section] headers. Keys address as
 * "section.key"; keys before any header have no prefix. A fully-defaulted
 * run needs no file at all.
 */
#pragma once

#include <istream>
#include <map>
#include <set>
#include <string>

namespace vavqe {

class ConfigMap {
  public:
    ConfigMap() = default;

    /// Throws std::runtime_error with the line number on malformed input
    /// or duplicate keys.
    static ConfigMap parse(std::istream &in);
    static ConfigMap parse(const std::string &text);
    static ConfigMap load(const std::string &path);

    bool has(const std::string &key) const;

    /// Getters mark the key consumed; missing keys yield the fallback.
    /// Value errors name the key.
    std::string get_string(const std::string &key,
                           const std::string &fallback) const;
    double get_double(const std::string &key, double fallback) const;
    int get_int(const std::string &key, int fallback) const;
    long long get_int64(const std::string &key, long long fallback) const;
    /// Accepts on/off, true/false, yes/no, 1/0.
    bool get_bool(const std::string &key, bool fallback) const;

    /// Unknown keys are contract violations: throws if any key was never
    /// consumed by a getter.
    void ensure_fully_consumed() const;

    const std::map<std::string, std::string> &entries() const {
        return entries_;
    }

  private:
    std::map<std::string, std::string> entries_;
    mutable std::set<std::string> consumed_;
};

} // namespace vavqe
