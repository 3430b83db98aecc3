#pragma once

#include <nlohmann/json_fwd.hpp>
#include <string>
#include <vector>

namespace dtslice::io {

// Canonical JSON writing: sorted keys (nlohmann default), two-space indent,
// trailing newline. Two writes of equal documents are byte-identical.
void write_json_file(const std::string &path, const nlohmann::json &j);
nlohmann::json read_json_file(const std::string &path);

void write_text_file(const std::string &path, const std::string &content);
std::string read_text_file(const std::string &path);

// One compact JSON document per line.
void write_jsonl_file(const std::string &path, const std::vector<nlohmann::json> &rows);
std::vector<nlohmann::json> read_jsonl_file(const std::string &path);

void ensure_directory(const std::string &path);

} // namespace dtslice::io
