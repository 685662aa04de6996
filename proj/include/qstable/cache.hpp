#pragma once

#include <unistd.h>

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>

#include <json.hpp>

#include "qstable/version.hpp"

namespace qstab {

// 64-bit FNV-1a over raw bytes, rendered as 16 hex digits. Used both as the
// content-address of cached results and as the input-file fingerprint in run
// manifests. Not cryptographic; collisions at desk scale are not a concern.
inline std::string content_hash(std::string_view bytes) {
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ull;
    }
    static const char* digits = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[static_cast<std::size_t>(i)] = digits[h & 0xf];
        h >>= 4;
    }
    return out;
}

// Content-addressed store for computed results, keyed by the hash of the
// input artifact. Every entry is wrapped in an envelope that repeats the key
// and a checksum of the payload; lookups that fail to parse or fail the
// checksum are treated as misses (with a warning), never as errors, so a
// damaged cache can only cost time. Writes go through a temp file and a
// rename, so concurrent runs never observe half-written entries.
class ResultCache {
public:
    explicit ResultCache(std::string directory) : dir_(std::move(directory)) {}

    bool enabled() const { return !dir_.empty(); }

    std::optional<std::string> lookup(const std::string& key) const {
        if (!enabled()) return std::nullopt;
        const std::filesystem::path path = entry_path(key);
        std::ifstream in(path, std::ios::binary);
        if (!in) return std::nullopt;
        std::ostringstream buffer;
        buffer << in.rdbuf();
        try {
            const nlohmann::json envelope = nlohmann::json::parse(buffer.str());
            const std::string payload = envelope.at("payload").get<std::string>();
            if (envelope.at("key").get<std::string>() != key ||
                envelope.at("checksum").get<std::string>() != content_hash(payload)) {
                std::cerr << "cache warning: entry " << path.string()
                          << " failed integrity check, recomputing\n";
                return std::nullopt;
            }
            return payload;
        } catch (const std::exception&) {
            std::cerr << "cache warning: entry " << path.string()
                      << " is corrupt, recomputing\n";
            return std::nullopt;
        }
    }

    void store(const std::string& key, const std::string& payload) const {
        if (!enabled()) return;
        try {
            std::filesystem::create_directories(dir_);
            nlohmann::json envelope;
            envelope["version"] = kFormatVersion;
            envelope["key"] = key;
            envelope["checksum"] = content_hash(payload);
            envelope["payload"] = payload;
            const std::filesystem::path final_path = entry_path(key);
            const std::filesystem::path temp_path =
                final_path.string() + ".tmp" + std::to_string(::getpid());
            {
                std::ofstream out(temp_path, std::ios::binary);
                if (!out) throw std::runtime_error("cannot open " + temp_path.string());
                out << envelope.dump();
                if (!out) throw std::runtime_error("short write to " + temp_path.string());
            }
            std::filesystem::rename(temp_path, final_path);
        } catch (const std::exception& e) {
            std::cerr << "cache warning: cannot store entry (" << e.what()
                      << "), continuing uncached\n";
        }
    }

private:
    std::filesystem::path entry_path(const std::string& key) const {
        return std::filesystem::path(dir_) / (key + ".json");
    }

    std::string dir_;
};

}  // namespace qstab
