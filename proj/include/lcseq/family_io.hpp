#pragma once

#include <string>
#include <vector>

#include "lcseq/construct.hpp"
#include "lcseq/correlate.hpp"

namespace lcseq::io {

inline constexpr int schema_version = 1;

/// Deterministic JSON encoding of a family; identical input always yields
/// identical bytes. See docs/format.md for the frozen schema.
std::string family_to_json(const construct::Family& fam);

struct LoadedFamily {
    gf::Field field;
    construct::Family family;
};

/// Parses and validates a family file; MalformedFile on any schema or
/// dimension violation.
LoadedFamily family_from_json(const std::string& text);

/// CSV: one sequence per row, entries "1"/"-1" comma-separated.
std::string family_to_csv(const construct::Family& fam);
std::vector<construct::BinSeq> sequences_from_csv(const std::string& text);

void write_file(const std::string& path, const std::string& content);
std::string read_file(const std::string& path);

std::string report_to_json(const correlate::CorrelationReport& rep);

} // namespace lcseq::io
