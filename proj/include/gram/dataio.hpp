// Loading and writing two-table datasets in the generic delimited format.
// See docs/formats.md for the file layout.
#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "gram/model.hpp"

namespace gram {

enum class ColumnRole { id, nominal, numeric, interval, ignore };

std::string role_name(ColumnRole role);
ColumnRole role_from_name(std::string_view name);  // ParamError on unknown

struct ColumnSpec {
    std::string name;
    ColumnRole role;
};

struct TableConfig {
    std::filesystem::path path;
    char delimiter = '\t';
    std::vector<ColumnSpec> columns;  // exactly one id column
};

struct RelationConfig {
    std::filesystem::path path;
    char delimiter = '\t';
    std::string source_id_column;
    std::string target_id_column;
    // every other column in the relation file is ignored
};

struct SchemaConfig {
    TableConfig source;
    TableConfig target;
    RelationConfig relation;

    // JSON file; relative table paths resolve against the schema's directory.
    static SchemaConfig load(const std::filesystem::path& path);
    void save(const std::filesystem::path& path) const;
};

// Loads both tables and the relation. Numeric columns stay numeric
// (discretization is a separate step). Duplicate ids, dangling relation
// references and malformed cells raise DataError with the offending location.
Mmer load_mmer(const SchemaConfig& config);

// Writes source/target/relation files plus a schema.json into `dir` so the
// result can be re-loaded with load_mmer. Column roles are derived from the
// actual cell kinds; id column names and delimiters come from `like`.
// Returns the written schema path.
std::filesystem::path write_mmer(const Mmer& mmer, const std::filesystem::path& dir,
                                 const SchemaConfig& like);

// A default schema layout (tab delimiters, id columns named "id") for writing
// systems that were not loaded from files.
SchemaConfig default_schema_layout();

}  // namespace gram
