// JSON forms of values, chains, rules and reports, and the FNV-1a file
// fingerprint stamped into run reports.
#include "gram/serialize.hpp"

#include <cstddef>
#include <fstream>
#include <string>
#include <variant>
#include <vector>

#include "gram/errors.hpp"

namespace gram {

Json fraction_to_json(const Fraction& f) {
    return Json{{"n", f.num()}, {"d", f.den()}, {"value", f.value()}};
}

Json value_to_json(const AttributeValue& v) {
    if (const auto* n = std::get_if<Nominal>(&v)) return Json{{"kind", "nominal"}, {"label", n->label}};
    if (const auto* num = std::get_if<Numeric>(&v))
        return Json{{"kind", "numeric"}, {"value", num->value}};
    const Interval& iv = std::get<Interval>(v);
    return Json{{"kind", "interval"}, {"lo", iv.lo}, {"hi", iv.hi}, {"hi_closed", iv.hi_closed}};
}

AttributeValue value_from_json(const Json& j) {
    try {
        const std::string kind = j.at("kind").get<std::string>();
        if (kind == "nominal") return Nominal{j.at("label").get<std::string>()};
        if (kind == "numeric") return Numeric{j.at("value").get<double>()};
        if (kind == "interval")
            return Interval{j.at("lo").get<double>(), j.at("hi").get<double>(),
                            j.at("hi_closed").get<bool>()};
        throw DataError("unknown value kind: " + kind);
    } catch (const Json::exception& e) {
        throw DataError(std::string("bad value record: ") + e.what());
    }
}

Json chain_to_json(const FittedAttribute& fitted) {
    Json boundaries = Json::array();
    for (double b : fitted.chain.boundaries) boundaries.push_back(b);
    Json warnings = Json::array();
    for (const std::string& w : fitted.warnings) warnings.push_back(w);
    return Json{{"attribute", fitted.attribute},
                {"method", method_name(fitted.method)},
                {"k", fitted.requested_k},
                {"boundaries", std::move(boundaries)},
                {"warnings", std::move(warnings)}};
}

FittedAttribute chain_from_json(const Json& j) {
    try {
        FittedAttribute fitted;
        fitted.attribute = j.at("attribute").get<std::string>();
        fitted.method = method_from_name(j.at("method").get<std::string>());
        fitted.requested_k = j.at("k").get<std::size_t>();
        fitted.chain = BoundaryChain::manual(j.at("boundaries").get<std::vector<double>>());
        for (const Json& w : j.at("warnings")) fitted.warnings.push_back(w.get<std::string>());
        return fitted;
    } catch (const Json::exception& e) {
        throw DataError(std::string("bad chain record: ") + e.what());
    }
}

namespace {

Json side_to_json(const Granule& granule, const InformationSystem& is) {
    Json descriptors = Json::array();
    for (const Descriptor& d : granule.intension)
        descriptors.push_back(Json{{"attribute", is.attribute(d.attribute).name},
                                   {"value", value_to_json(d.value)}});
    return Json{{"text", intension_to_string(is, granule.intension)},
                {"descriptors", std::move(descriptors)},
                {"objects", granule.extension.count()}};
}

}  // namespace

Json rule_to_json(const GranularRule& rule, const InformationSystem& source,
                  const InformationSystem& target) {
    return Json{{"lhs", side_to_json(rule.lhs, source)},
                {"rhs", side_to_json(rule.rhs, target)},
                {"measures", Json{{"scoverage", fraction_to_json(rule.measures.scoverage)},
                                  {"tcoverage", fraction_to_json(rule.measures.tcoverage)},
                                  {"sconfidence", fraction_to_json(rule.measures.sconfidence)},
                                  {"tconfidence", fraction_to_json(rule.measures.tconfidence)}}},
                {"min_common_targets", rule.measures.min_common_targets},
                {"rank_clamped", rule.measures.rank_clamped}};
}

void write_rules_jsonl(const std::filesystem::path& path, const MiningResult& result,
                       const InformationSystem& source, const InformationSystem& target) {
    std::ofstream out(path);
    if (!out) throw DataError("cannot write " + path.string());
    for (const GranularRule& rule : result.rules)
        out << rule_to_json(rule, source, target).dump() << '\n';
    if (!out) throw DataError("cannot write " + path.string());
}

std::string file_fingerprint(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DataError("cannot open " + path.string());
    std::uint64_t hash = 14695981039346656037ULL;
    char buffer[1 << 16];
    while (in.read(buffer, sizeof buffer) || in.gcount() > 0) {
        const std::streamsize got = in.gcount();
        for (std::streamsize i = 0; i < got; ++i) {
            hash ^= static_cast<unsigned char>(buffer[i]);
            hash *= 1099511628211ULL;
        }
        if (!in) break;
    }
    char hex[17];
    for (int i = 15; i >= 0; --i) {
        hex[i] = "0123456789abcdef"[hash & 0xF];
        hash >>= 4;
    }
    hex[16] = '\0';
    return std::string("0x") + hex;
}

void write_json_file(const std::filesystem::path& path, const Json& j) {
    std::ofstream out(path);
    if (!out) throw DataError("cannot write " + path.string());
    out << j.dump(2) << '\n';
    if (!out) throw DataError("cannot write " + path.string());
}

Json read_json_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw DataError("cannot open " + path.string());
    try {
        return Json::parse(in);
    } catch (const Json::exception& e) {
        throw DataError(path.string() + ": " + e.what());
    }
}

}  // namespace gram
