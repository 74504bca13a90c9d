// JSON serialization of rules, fitted chains and run reports, plus the file
// fingerprint used for provenance. Formats are documented in docs/formats.md.
#pragma once

#include <cstdint>
#include <filesystem>
#include <string>

#include <json.hpp>

#include "gram/discretize.hpp"
#include "gram/miner.hpp"

namespace gram {

using Json = nlohmann::ordered_json;

Json fraction_to_json(const Fraction& f);
Json value_to_json(const AttributeValue& v);
AttributeValue value_from_json(const Json& j);

Json chain_to_json(const FittedAttribute& fitted);
FittedAttribute chain_from_json(const Json& j);

Json rule_to_json(const GranularRule& rule, const InformationSystem& source,
                  const InformationSystem& target);

// One JSON object per line, rules in canonical order.
void write_rules_jsonl(const std::filesystem::path& path, const MiningResult& result,
                       const InformationSystem& source, const InformationSystem& target);

// FNV-1a 64-bit over the raw file bytes, rendered as "0x...." hex.
std::string file_fingerprint(const std::filesystem::path& path);

void write_json_file(const std::filesystem::path& path, const Json& j);
Json read_json_file(const std::filesystem::path& path);

}  // namespace gram
