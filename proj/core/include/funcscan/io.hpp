#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace funcscan {

using json = nlohmann::json;

/// FNV-1a 64-bit over a byte sequence. Offset basis 14695981039346656037,
/// prime 1099511628211. This is the stable hash used everywhere a
/// reproducible fingerprint is needed (feature hashing, content caching).
inline std::uint64_t fnv1a64(std::string_view bytes,
                             std::uint64_t h = 14695981039346656037ULL) {
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

/// Seeded variant: the 8 little-endian bytes of `seed` are hashed before
/// the payload, so distinct seeds yield unrelated hash streams.
std::uint64_t fnv1a64_seeded(std::string_view bytes, std::uint64_t seed);

/// True iff `bytes` is well-formed UTF-8.
bool is_valid_utf8(std::string_view bytes);

/// Reads a whole file; throws Error on I/O failure.
std::string read_file(const std::filesystem::path& path);

/// Writes atomically: temp file in the same directory, then rename.
void write_file_atomic(const std::filesystem::path& path,
                       std::string_view content);

/// Hex fingerprint of a file's content (fnv1a64). Throws on I/O failure.
std::string content_hash(const std::filesystem::path& path);

/// Hex fingerprint of an in-memory buffer.
std::string content_hash_bytes(std::string_view bytes);

/// Calls `fn(line_number, line)` for every line of a file. Line numbers are
/// 1-based; a trailing '\r' is stripped. Throws Error if the file cannot be
/// opened.
void for_each_line(const std::filesystem::path& path,
                   const std::function<void(std::size_t, std::string_view)>& fn);

/// One JSON object per line; no trailing blank line handling needed.
void write_jsonl(const std::filesystem::path& path,
                 const std::vector<json>& rows);

/// Canonical float formatting for CSV output (shortest round-trip form).
std::string format_double(double v);

}  // namespace funcscan
