// io.cpp — deterministic CSV/JSON artifact writers.
#include "rwre/io.hpp"

#include <cstdio>
#include <fstream>
#include <stdexcept>
#include <nlohmann/json.hpp>

namespace rwre {

uint64_t fnv1a64(const std::string& bytes) {
    uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

std::string fmt_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

namespace {

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

} // namespace

void write_csv(const std::string& path, const std::vector<std::string>& header,
               const std::vector<std::vector<std::string>>& rows) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("write_csv: cannot open " + path);
    for (size_t i = 0; i < header.size(); ++i)
        f << (i ? "," : "") << csv_escape(header[i]);
    f << '\n';
    for (const auto& row : rows) {
        if (row.size() != header.size())
            throw std::invalid_argument("write_csv: row width mismatch");
        for (size_t i = 0; i < row.size(); ++i)
            f << (i ? "," : "") << csv_escape(row[i]);
        f << '\n';
    }
}

uint64_t config_hash(const nlohmann::json& config) {
    return fnv1a64(config.dump());   // nlohmann objects serialize key-sorted
}

void write_verdict(const std::string& path, nlohmann::json doc) {
    if (doc.contains("config")) {
        char buf[20];
        std::snprintf(buf, sizeof(buf), "%016llx",
                      static_cast<unsigned long long>(config_hash(doc["config"])));
        doc["config_hash"] = buf;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("write_verdict: cannot open " + path);
    f << doc.dump(2) << '\n';
}

} // namespace rwre
