#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <string>
#include <vector>

namespace scing {

/// Shortest decimal form that round-trips a double ("%.17g" fallback).
std::string format_double(double v);

/// FNV-1a over a byte buffer; used for checkpoint ids and dataset hashing.
std::uint64_t fnv1a(const void* data, std::size_t n);
std::uint64_t fnv1a_file(const std::filesystem::path& path);
std::string hex64(std::uint64_t v);

/// Worker-thread cap from SCING_THREADS (default 1 for determinism).
int thread_count();

/// Runs fn(i) for i in [0, n). Results must go to independent slots; the
/// partition across threads never affects output. Serial when threads == 1.
void parallel_for(std::int64_t n, const std::function<void(std::int64_t)>& fn);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, const std::string& content);

/// Split on a delimiter, keeping empty fields.
std::vector<std::string> split(const std::string& s, char delim);
std::string trim(const std::string& s);

namespace warnings {
/// Lightweight warning event channel (stderr + counters), used where an
/// operation degrades instead of failing.
void emit(const std::string& message);
std::int64_t count();
void reset();
std::string last();
}  // namespace warnings

}  // namespace scing
