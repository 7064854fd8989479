// io.hpp
// Artifact plumbing: UTF-8 CSV dumps with a header row, JSON verdict files
// carrying a config hash, and the FNV-1a hash itself. All writers are
// deterministic so a rerun reproduces identical bytes.
#pragma once

#include <cstdint>
#include <string>
#include <vector>
#include <nlohmann/json_fwd.hpp>

namespace rwre {

// FNV-1a 64-bit over the bytes of a canonical string.
uint64_t fnv1a64(const std::string& bytes);

// Fixed-format double (17 significant digits, round-trip exact).
std::string fmt_double(double v);

// Write rows as CSV; header first. Fields containing commas/quotes are
// quoted per RFC 4180.
void write_csv(const std::string& path, const std::vector<std::string>& header,
               const std::vector<std::vector<std::string>>& rows);

// Serialize a verdict JSON (sorted keys, 2-space indent, trailing newline)
// after stamping "config_hash" computed over the "config" subobject.
void write_verdict(const std::string& path, nlohmann::json doc);

// Hash of a JSON document's canonical dump (sorted keys).
uint64_t config_hash(const nlohmann::json& config);

} // namespace rwre
