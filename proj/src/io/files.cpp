#include "dtslice/io/files.hpp"

#include "dtslice/errors.hpp"

#include <nlohmann/json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

namespace dtslice::io {

using nlohmann::json;

void write_text_file(const std::string &path, const std::string &content) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw ParseError("cannot open '" + path + "' for writing");
    out << content;
}

std::string read_text_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw ParseError("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_json_file(const std::string &path, const json &j) { write_text_file(path, j.dump(2) + "\n"); }

json read_json_file(const std::string &path) {
    const std::string text = read_text_file(path);
    try {
        return json::parse(text);
    } catch (const json::parse_error &e) {
        throw ParseError("'" + path + "': " + e.what(), e.byte);
    }
}

void write_jsonl_file(const std::string &path, const std::vector<json> &rows) {
    std::string out;
    for (const json &row : rows) {
        out += row.dump();
        out += '\n';
    }
    write_text_file(path, out);
}

std::vector<json> read_jsonl_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw ParseError("cannot open '" + path + "'");
    std::vector<json> rows;
    std::string line;
    std::size_t offset = 0;
    while (std::getline(in, line)) {
        if (!line.empty()) {
            try {
                rows.push_back(json::parse(line));
            } catch (const json::parse_error &e) {
                throw ParseError("'" + path + "': " + e.what(), offset + e.byte);
            }
        }
        offset += line.size() + 1;
    }
    return rows;
}

void ensure_directory(const std::string &path) {
    std::error_code ec;
    std::filesystem::create_directories(path, ec);
    if (ec)
        throw ParseError("cannot create directory '" + path + "': " + ec.message());
}

} // namespace dtslice::io
