#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace webmine {

/// Shortest decimal representation that round-trips the exact double.
std::string fmt_double(double v);
double parse_double(std::string_view s);
long long parse_int(std::string_view s);

std::string to_lower(std::string_view s);
bool icontains(std::string_view haystack, std::string_view needle);
std::string trim(std::string_view s);
std::vector<std::string> split(std::string_view line, char delim);
std::string join(const std::vector<std::string>& parts, char delim);

std::vector<std::string> read_lines(const std::string& path);
std::string read_text(const std::string& path);
void write_text(const std::string& path, std::string_view content);

// "key = value" report files, one pair per line, order preserved.
using KvPairs = std::vector<std::pair<std::string, std::string>>;
void write_kv(const std::string& path, const KvPairs& pairs);
KvPairs read_kv(const std::string& path);
std::string kv_get(const KvPairs& pairs, const std::string& key);

}  // namespace webmine
