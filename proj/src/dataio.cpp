// Delimited two-table loading/writing and the JSON schema file describing a
// dataset's layout.
#include "gram/dataio.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstddef>
#include <fstream>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include <json.hpp>

#include "gram/errors.hpp"

namespace gram {

namespace {

using Json = nlohmann::ordered_json;

std::string location(const std::filesystem::path& path, std::size_t line) {
    return path.filename().string() + ":" + std::to_string(line);
}

std::vector<std::string> split_line(const std::string& line, char delim) {
    std::vector<std::string> fields;
    std::size_t start = 0;
    while (true) {
        const std::size_t pos = line.find(delim, start);
        if (pos == std::string::npos) {
            fields.push_back(line.substr(start));
            return fields;
        }
        fields.push_back(line.substr(start, pos - start));
        start = pos + 1;
    }
}

struct DelimitedFile {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
    std::vector<std::size_t> line_numbers;  // 1-based, parallel to rows
};

DelimitedFile read_delimited(const std::filesystem::path& path, char delim) {
    std::ifstream in(path);
    if (!in) throw DataError("cannot open " + path.string());
    DelimitedFile file;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        std::vector<std::string> fields = split_line(line, delim);
        if (file.header.empty()) {
            file.header = std::move(fields);
            continue;
        }
        if (fields.size() != file.header.size())
            throw DataError(location(path, line_no) + ": expected " +
                            std::to_string(file.header.size()) + " fields, got " +
                            std::to_string(fields.size()));
        file.rows.push_back(std::move(fields));
        file.line_numbers.push_back(line_no);
    }
    if (file.header.empty()) throw DataError(path.string() + " has no header line");
    return file;
}

double parse_double(std::string_view token, const std::string& where) {
    double value = 0.0;
    const char* first = token.data();
    const char* last = first + token.size();
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last || !std::isfinite(value))
        throw DataError(where + ": bad numeric value '" + std::string(token) + "'");
    return value;
}

AttributeValue parse_interval(std::string_view token, const std::string& where) {
    const auto bad = [&] {
        return DataError(where + ": bad interval literal '" + std::string(token) + "'");
    };
    if (token.size() < 5 || token.front() != '[' || (token.back() != ')' && token.back() != ']'))
        throw bad();
    const std::size_t comma = token.find(',');
    if (comma == std::string_view::npos) throw bad();
    const double lo = parse_double(token.substr(1, comma - 1), where);
    const double hi = parse_double(token.substr(comma + 1, token.size() - comma - 2), where);
    const bool closed = token.back() == ']';
    if (hi < lo || (lo == hi && !closed)) throw bad();
    return Interval{lo, hi, closed};
}

std::string render_interval(const Interval& iv) {
    return "[" + format_double(iv.lo) + "," + format_double(iv.hi) + (iv.hi_closed ? "]" : ")");
}

std::string render_cell(const AttributeValue& v, char delim) {
    std::string text;
    if (const auto* n = std::get_if<Nominal>(&v))
        text = n->label;
    else if (const auto* num = std::get_if<Numeric>(&v))
        text = format_double(num->value);
    else
        text = render_interval(std::get<Interval>(v));
    if (text.find(delim) != std::string::npos || text.find('\n') != std::string::npos)
        throw DataError("cell value '" + text + "' contains the delimiter");
    return text;
}

std::size_t single_id_column(const TableConfig& config) {
    std::size_t id_col = config.columns.size();
    for (std::size_t j = 0; j < config.columns.size(); ++j) {
        if (config.columns[j].role != ColumnRole::id) continue;
        if (id_col != config.columns.size())
            throw SchemaError(config.path.string() + ": more than one id column");
        id_col = j;
    }
    if (id_col == config.columns.size())
        throw SchemaError(config.path.string() + ": no id column");
    return id_col;
}

InformationSystem load_table(const TableConfig& config) {
    const std::size_t id_col = single_id_column(config);
    const DelimitedFile file = read_delimited(config.path, config.delimiter);
    if (file.header.size() != config.columns.size())
        throw SchemaError(config.path.string() + ": schema lists " +
                          std::to_string(config.columns.size()) + " columns, file has " +
                          std::to_string(file.header.size()));
    for (std::size_t j = 0; j < config.columns.size(); ++j)
        if (file.header[j] != config.columns[j].name)
            throw SchemaError(config.path.string() + ": column " + std::to_string(j + 1) +
                              " is named '" + file.header[j] + "', schema says '" +
                              config.columns[j].name + "'");

    std::vector<std::string> ids;
    ids.reserve(file.rows.size());
    std::map<std::string, std::size_t> seen;
    for (std::size_t i = 0; i < file.rows.size(); ++i) {
        const std::string& id = file.rows[i][id_col];
        if (id.empty())
            throw DataError(location(config.path, file.line_numbers[i]) + ": empty id");
        if (!seen.emplace(id, file.line_numbers[i]).second)
            throw DataError(location(config.path, file.line_numbers[i]) + ": duplicate id '" +
                            id + "' (first at line " + std::to_string(seen[id]) + ")");
        ids.push_back(id);
    }

    std::vector<Attribute> attributes;
    std::vector<std::vector<AttributeValue>> columns;
    for (std::size_t j = 0; j < config.columns.size(); ++j) {
        const ColumnSpec& spec = config.columns[j];
        if (spec.role == ColumnRole::id || spec.role == ColumnRole::ignore) continue;
        attributes.push_back(Attribute{
            spec.name, spec.role == ColumnRole::nominal ? AttrKind::nominal : AttrKind::numeric});
        std::vector<AttributeValue> column;
        column.reserve(file.rows.size());
        for (std::size_t i = 0; i < file.rows.size(); ++i) {
            const std::string& token = file.rows[i][j];
            const std::string where =
                location(config.path, file.line_numbers[i]) + ", column " + spec.name;
            if (spec.role == ColumnRole::nominal) {
                if (token.empty()) throw DataError(where + ": empty value");
                column.emplace_back(Nominal{token});
            } else if (spec.role == ColumnRole::numeric) {
                column.emplace_back(Numeric{parse_double(token, where)});
            } else {
                column.push_back(parse_interval(token, where));
            }
        }
        columns.push_back(std::move(column));
    }
    return InformationSystem(std::move(ids), std::move(attributes), std::move(columns));
}

std::size_t header_index(const DelimitedFile& file, const std::string& name,
                         const std::filesystem::path& path) {
    const auto it = std::find(file.header.begin(), file.header.end(), name);
    if (it == file.header.end())
        throw SchemaError(path.string() + ": no column named '" + name + "'");
    return static_cast<std::size_t>(it - file.header.begin());
}

BinaryRelation load_relation(const RelationConfig& config, const InformationSystem& source,
                             const InformationSystem& target) {
    const DelimitedFile file = read_delimited(config.path, config.delimiter);
    const std::size_t src_col = header_index(file, config.source_id_column, config.path);
    const std::size_t tgt_col = header_index(file, config.target_id_column, config.path);

    std::map<std::string, std::size_t> src_index, tgt_index;
    for (std::size_t i = 0; i < source.object_count(); ++i) src_index[source.object_ids()[i]] = i;
    for (std::size_t j = 0; j < target.object_count(); ++j) tgt_index[target.object_ids()[j]] = j;

    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    pairs.reserve(file.rows.size());
    for (std::size_t i = 0; i < file.rows.size(); ++i) {
        const auto src = src_index.find(file.rows[i][src_col]);
        if (src == src_index.end())
            throw DataError(location(config.path, file.line_numbers[i]) + ": unknown source id '" +
                            file.rows[i][src_col] + "'");
        const auto tgt = tgt_index.find(file.rows[i][tgt_col]);
        if (tgt == tgt_index.end())
            throw DataError(location(config.path, file.line_numbers[i]) + ": unknown target id '" +
                            file.rows[i][tgt_col] + "'");
        pairs.emplace_back(src->second, tgt->second);
    }
    return BinaryRelation(source.object_count(), target.object_count(), pairs);
}

char parse_delimiter(const Json& j, const std::string& context) {
    if (!j.contains("delimiter")) return '\t';
    const std::string d = j.at("delimiter").get<std::string>();
    if (d.size() != 1)
        throw SchemaError(context + ": delimiter must be a single character");
    return d.front();
}

std::filesystem::path resolve(const std::string& raw, const std::filesystem::path& base) {
    std::filesystem::path p(raw);
    return p.is_relative() ? base / p : p;
}

TableConfig table_from_json(const Json& j, const std::filesystem::path& base,
                            const std::string& context) {
    TableConfig config;
    config.path = resolve(j.at("path").get<std::string>(), base);
    config.delimiter = parse_delimiter(j, context);
    for (const Json& c : j.at("columns"))
        config.columns.push_back(ColumnSpec{c.at("name").get<std::string>(),
                                            role_from_name(c.at("role").get<std::string>())});
    return config;
}

Json table_to_json(const TableConfig& config) {
    Json columns = Json::array();
    for (const ColumnSpec& c : config.columns)
        columns.push_back(Json{{"name", c.name}, {"role", role_name(c.role)}});
    return Json{{"path", config.path.generic_string()},
                {"delimiter", std::string(1, config.delimiter)},
                {"columns", std::move(columns)}};
}

// Same layout as `like`, columns rebuilt from the actual cell kinds.
TableConfig derive_table_config(const InformationSystem& is, const TableConfig& like,
                                const char* fallback_name) {
    TableConfig config;
    config.path = like.path.has_filename() ? like.path.filename() : std::filesystem::path(fallback_name);
    config.delimiter = like.delimiter;
    std::string id_name = "id";
    for (const ColumnSpec& c : like.columns)
        if (c.role == ColumnRole::id) {
            id_name = c.name;
            break;
        }
    config.columns.push_back(ColumnSpec{id_name, ColumnRole::id});
    for (std::size_t j = 0; j < is.attribute_count(); ++j) {
        ColumnRole role = ColumnRole::nominal;
        switch (is.column_cell_kind(j)) {
            case CellKind::nominal: role = ColumnRole::nominal; break;
            case CellKind::numeric: role = ColumnRole::numeric; break;
            case CellKind::interval: role = ColumnRole::interval; break;
        }
        config.columns.push_back(ColumnSpec{is.attribute(j).name, role});
    }
    return config;
}

void write_table(const InformationSystem& is, const std::filesystem::path& path,
                 const TableConfig& config) {
    std::ofstream out(path);
    if (!out) throw DataError("cannot write " + path.string());
    for (std::size_t j = 0; j < config.columns.size(); ++j) {
        if (j) out << config.delimiter;
        out << config.columns[j].name;
    }
    out << '\n';
    for (std::size_t i = 0; i < is.object_count(); ++i) {
        out << is.object_ids()[i];
        for (std::size_t j = 0; j < is.attribute_count(); ++j)
            out << config.delimiter << render_cell(is.cell(i, j), config.delimiter);
        out << '\n';
    }
    if (!out) throw DataError("cannot write " + path.string());
}

}  // namespace

std::string role_name(ColumnRole role) {
    switch (role) {
        case ColumnRole::id: return "id";
        case ColumnRole::nominal: return "nominal";
        case ColumnRole::numeric: return "numeric";
        case ColumnRole::interval: return "interval";
        case ColumnRole::ignore: return "ignore";
    }
    throw ParamError("unknown column role");
}

ColumnRole role_from_name(std::string_view name) {
    if (name == "id") return ColumnRole::id;
    if (name == "nominal") return ColumnRole::nominal;
    if (name == "numeric") return ColumnRole::numeric;
    if (name == "interval") return ColumnRole::interval;
    if (name == "ignore") return ColumnRole::ignore;
    throw ParamError("unknown column role: " + std::string(name));
}

SchemaConfig SchemaConfig::load(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw DataError("cannot open " + path.string());
    Json j;
    try {
        j = Json::parse(in);
    } catch (const Json::exception& e) {
        throw DataError("schema " + path.string() + ": " + e.what());
    }
    try {
        const std::filesystem::path base =
            path.has_parent_path() ? path.parent_path() : std::filesystem::path(".");
        SchemaConfig config;
        config.source = table_from_json(j.at("source"), base, path.string() + " source");
        config.target = table_from_json(j.at("target"), base, path.string() + " target");
        const Json& r = j.at("relation");
        config.relation.path = resolve(r.at("path").get<std::string>(), base);
        config.relation.delimiter = parse_delimiter(r, path.string() + " relation");
        config.relation.source_id_column = r.at("source_id").get<std::string>();
        config.relation.target_id_column = r.at("target_id").get<std::string>();
        return config;
    } catch (const Json::exception& e) {
        throw SchemaError("schema " + path.string() + ": " + e.what());
    } catch (const ParamError& e) {
        throw SchemaError("schema " + path.string() + ": " + e.what());
    }
}

void SchemaConfig::save(const std::filesystem::path& path) const {
    Json j{{"source", table_to_json(source)},
           {"target", table_to_json(target)},
           {"relation", Json{{"path", relation.path.generic_string()},
                             {"delimiter", std::string(1, relation.delimiter)},
                             {"source_id", relation.source_id_column},
                             {"target_id", relation.target_id_column}}}};
    std::ofstream out(path);
    if (!out) throw DataError("cannot write " + path.string());
    out << j.dump(2) << '\n';
    if (!out) throw DataError("cannot write " + path.string());
}

Mmer load_mmer(const SchemaConfig& config) {
    InformationSystem source = load_table(config.source);
    InformationSystem target = load_table(config.target);
    BinaryRelation relation = load_relation(config.relation, source, target);
    return Mmer(std::move(source), std::move(target), std::move(relation));
}

std::filesystem::path write_mmer(const Mmer& mmer, const std::filesystem::path& dir,
                                 const SchemaConfig& like) {
    std::filesystem::create_directories(dir);
    const TableConfig source_config = derive_table_config(mmer.source, like.source, "source.tsv");
    const TableConfig target_config = derive_table_config(mmer.target, like.target, "target.tsv");
    write_table(mmer.source, dir / source_config.path, source_config);
    write_table(mmer.target, dir / target_config.path, target_config);

    RelationConfig relation_config = like.relation;
    relation_config.path = like.relation.path.has_filename() ? like.relation.path.filename()
                                                             : std::filesystem::path("relation.tsv");
    {
        const std::filesystem::path rel_path = dir / relation_config.path;
        std::ofstream out(rel_path);
        if (!out) throw DataError("cannot write " + rel_path.string());
        out << relation_config.source_id_column << relation_config.delimiter
            << relation_config.target_id_column << '\n';
        for (std::size_t i = 0; i < mmer.relation.source_size(); ++i)
            for (std::size_t j : mmer.relation.neighbors(i).indices())
                out << mmer.source.object_ids()[i] << relation_config.delimiter
                    << mmer.target.object_ids()[j] << '\n';
        if (!out) throw DataError("cannot write " + rel_path.string());
    }

    SchemaConfig written;
    written.source = source_config;
    written.target = target_config;
    written.relation = relation_config;
    written.save(dir / "schema.json");
    return dir / "schema.json";
}

SchemaConfig default_schema_layout() {
    SchemaConfig config;
    config.source = TableConfig{"source.tsv", '\t', {ColumnSpec{"id", ColumnRole::id}}};
    config.target = TableConfig{"target.tsv", '\t', {ColumnSpec{"id", ColumnRole::id}}};
    config.relation = RelationConfig{"relation.tsv", '\t', "source_id", "target_id"};
    return config;
}

}  // namespace gram
