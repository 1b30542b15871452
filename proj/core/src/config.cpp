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

#include "vavqe/config.hpp"

#include <algorithm>
#include <cctype>
#include <climits>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace vavqe {

namespace {

std::string trim(const std::string &s) {
    size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos)
        return "";
    size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

[[noreturn]] void fail(int line, const std::string &what) {
    throw std::runtime_error("config line " + std::to_string(line) + ": " +
                             what);
}

} // namespace

ConfigMap ConfigMap::parse(std::istream &in) {
    ConfigMap cm;
    std::string line, section;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (size_t h = line.find('#'); h != std::string::npos)
            line.erase(h);
        line = trim(line);
        if (line.empty())
            continue;
        if (line.front() == '[') {
            if (line.back() != ']')
                fail(lineno, "unterminated section header");
            section = trim(line.substr(1, line.size() - 2));
            if (section.empty())
                fail(lineno, "empty section name");
            continue;
        }
        size_t eq = line.find('=');
        if (eq == std::string::npos)
            fail(lineno, "expected key = value");
        std::string key = trim(line.substr(0, eq));
        std::string value = trim(line.substr(eq + 1));
        if (key.empty())
            fail(lineno, "empty key");
        if (!section.empty())
            key = section + "." + key;
        if (!cm.entries_.emplace(key, value).second)
            fail(lineno, "duplicate key '" + key + "'");
    }
    return cm;
}

ConfigMap ConfigMap::parse(const std::string &text) {
    std::istringstream in(text);
    return parse(in);
}

ConfigMap ConfigMap::load(const std::string &path) {
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open config file: " + path);
    return parse(in);
}

bool ConfigMap::has(const std::string &key) const {
    return entries_.count(key) != 0;
}

std::string ConfigMap::get_string(const std::string &key,
                                  const std::string &fallback) const {
    auto it = entries_.find(key);
    if (it == entries_.end())
        return fallback;
    consumed_.insert(key);
    return it->second;
}

double ConfigMap::get_double(const std::string &key, double fallback) const {
    auto it = entries_.find(key);
    if (it == entries_.end())
        return fallback;
    consumed_.insert(key);
    try {
        size_t pos = 0;
        double v = std::stod(it->second, &pos);
        if (pos != it->second.size())
            throw std::invalid_argument("");
        return v;
    } catch (const std::exception &) {
        throw std::runtime_error("config key '" + key +
                                 "': not a real number: " + it->second);
    }
}

long long ConfigMap::get_int64(const std::string &key,
                               long long fallback) const {
    auto it = entries_.find(key);
    if (it == entries_.end())
        return fallback;
    consumed_.insert(key);
    try {
        size_t pos = 0;
        long long v = std::stoll(it->second, &pos);
        if (pos != it->second.size())
            throw std::invalid_argument("");
        return v;
    } catch (const std::exception &) {
        throw std::runtime_error("config key '" + key +
                                 "': not an integer: " + it->second);
    }
}

int ConfigMap::get_int(const std::string &key, int fallback) const {
    long long v = get_int64(key, fallback);
    if (v < INT_MIN || v > INT_MAX)
        throw std::runtime_error("config key '" + key + "': out of range");
    return static_cast<int>(v);
}

bool ConfigMap::get_bool(const std::string &key, bool fallback) const {
    auto it = entries_.find(key);
    if (it == entries_.end())
        return fallback;
    consumed_.insert(key);
    std::string v = it->second;
    std::transform(v.begin(), v.end(), v.begin(),
                   [](unsigned char c) { return std::tolower(c); });
    if (v == "on" || v == "true" || v == "yes" || v == "1")
        return true;
    if (v == "off" || v == "false" || v == "no" || v == "0")
        return false;
    throw std::runtime_error("config key '" + key +
                             "': not a boolean: " + it->second);
}

void ConfigMap::ensure_fully_consumed() const {
    std::string unknown;
    for (const auto &[key, value] : entries_)
        if (!consumed_.count(key))
            unknown += (unknown.empty() ? "" : ", ") + key;
    if (!unknown.empty())
        throw std::runtime_error("unknown config keys: " + unknown);
}

} // namespace vavqe
