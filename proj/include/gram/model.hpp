// Core data model: information systems, binary relations, the two-table
// entity-relationship system, and granules (attribute-value concepts with
// their matching object sets).
#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "gram/errors.hpp"
#include "gram/fraction.hpp"
#include "gram/index_set.hpp"

namespace gram {

enum class AttrKind { nominal, numeric };
enum class CellKind { nominal, numeric, interval };
enum class Side { source, target };

struct Nominal {
    std::string label;
};

struct Numeric {
    double value;
};

// Half-open [lo, hi) except the last interval of a chain, which is closed.
// lo == hi only for the degenerate single-interval chain over a constant
// column; such an interval is always closed.
struct Interval {
    double lo;
    double hi;
    bool hi_closed;
};

using AttributeValue = std::variant<Nominal, Numeric, Interval>;

bool value_equal(const AttributeValue& a, const AttributeValue& b);
// Total order within one alternative; used for canonical candidate and rule
// ordering. Comparing across alternatives is a TypeError.
bool value_less(const AttributeValue& a, const AttributeValue& b);
CellKind value_kind(const AttributeValue& v);
std::string value_to_string(const AttributeValue& v);

// Shortest decimal that parses back to the identical double.
std::string format_double(double v);

struct Attribute {
    std::string name;
    AttrKind kind;
};

struct Descriptor {
    std::size_t attribute;
    AttributeValue value;
};

class InformationSystem {
  public:
    // Columns are column-major: columns[j][i] is the value of object i on
    // attribute j. Validates unique ids/names, kind consistency per column
    // and finiteness of numeric cells.
    InformationSystem(std::vector<std::string> object_ids,
                      std::vector<Attribute> attributes,
                      std::vector<std::vector<AttributeValue>> columns);

    std::size_t object_count() const { return object_ids_.size(); }
    std::size_t attribute_count() const { return attributes_.size(); }

    const std::vector<std::string>& object_ids() const { return object_ids_; }
    const std::vector<Attribute>& attributes() const { return attributes_; }
    const Attribute& attribute(std::size_t j) const;

    // SchemaError if the name is unknown.
    std::size_t attribute_index(std::string_view name) const;

    const AttributeValue& cell(std::size_t object, std::size_t attr) const;
    const std::vector<AttributeValue>& column(std::size_t attr) const;

    // nominal, numeric or interval; an empty system reports the declared kind.
    CellKind column_cell_kind(std::size_t attr) const;

    friend bool operator==(const InformationSystem& a, const InformationSystem& b);

  private:
    std::vector<std::string> object_ids_;
    std::vector<Attribute> attributes_;
    std::vector<std::vector<AttributeValue>> columns_;
};

// Objects whose cells equal every descriptor value. The empty descriptor set
// yields the full universe. Interval descriptors match structurally
// (lo, hi, hi_closed).
IndexSet block(const InformationSystem& is, std::span<const Descriptor> descriptors);

// Name-based convenience for I/O boundaries and tests.
IndexSet block(const InformationSystem& is,
               const std::vector<std::pair<std::string, AttributeValue>>& descriptors);

// |extension| / universe_size as an exact rational. universe_size = 0 is a
// ParamError.
Fraction support(const IndexSet& extension, std::size_t universe_size);

// Copy without numeric (undiscretized) columns; nominal and interval columns
// pass through.
InformationSystem drop_numeric_attributes(const InformationSystem& is);

class BinaryRelation {
  public:
    // pairs are (source index, target index); duplicates collapse.
    BinaryRelation(std::size_t source_size, std::size_t target_size,
                   const std::vector<std::pair<std::size_t, std::size_t>>& pairs);

    std::size_t source_size() const { return source_size_; }
    std::size_t target_size() const { return target_size_; }
    std::size_t pair_count() const { return pair_count_; }

    // The stored neighbor set; no copy.
    const IndexSet& neighbors(std::size_t source_index) const;
    const IndexSet& inverse_neighbors(std::size_t target_index) const;

    friend bool operator==(const BinaryRelation& a, const BinaryRelation& b);

  private:
    std::size_t source_size_;
    std::size_t target_size_;
    std::size_t pair_count_;
    std::vector<IndexSet> rows_;  // per source object, over the target universe
    std::vector<IndexSet> cols_;  // per target object, over the source universe
};

// Two information systems joined by a relation between their universes.
struct Mmer {
    InformationSystem source;
    InformationSystem target;
    BinaryRelation relation;

    // DataError if the relation does not span exactly the two universes.
    Mmer(InformationSystem src, InformationSystem tgt, BinaryRelation rel);
};

// A concept: conjunction of descriptors (at most one per attribute, non-empty)
// plus the set of matching objects.
struct Granule {
    Side side;
    std::vector<Descriptor> intension;  // sorted by attribute index
    IndexSet extension;
};

// Builds the granule and computes its extension. Rejects empty intensions and
// repeated attributes.
Granule make_granule(const InformationSystem& is, Side side, std::vector<Descriptor> intension);

bool intension_less(const std::vector<Descriptor>& a, const std::vector<Descriptor>& b);
bool intension_equal(const std::vector<Descriptor>& a, const std::vector<Descriptor>& b);

std::string intension_to_string(const InformationSystem& is, const std::vector<Descriptor>& intension);

}  // namespace gram
