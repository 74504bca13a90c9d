#include "gram/model.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

namespace gram {

namespace {

const char* kind_label(CellKind k) {
    switch (k) {
        case CellKind::nominal: return "nominal";
        case CellKind::numeric: return "numeric";
        case CellKind::interval: return "interval";
    }
    return "?";
}

}  // namespace

bool value_equal(const AttributeValue& a, const AttributeValue& b) {
    if (a.index() != b.index()) return false;
    if (const auto* n = std::get_if<Nominal>(&a)) return n->label == std::get<Nominal>(b).label;
    if (const auto* x = std::get_if<Numeric>(&a)) return x->value == std::get<Numeric>(b).value;
    const auto& ia = std::get<Interval>(a);
    const auto& ib = std::get<Interval>(b);
    return ia.lo == ib.lo && ia.hi == ib.hi && ia.hi_closed == ib.hi_closed;
}

bool value_less(const AttributeValue& a, const AttributeValue& b) {
    if (a.index() != b.index())
        throw TypeError("cannot order values of different kinds");
    if (const auto* n = std::get_if<Nominal>(&a)) return n->label < std::get<Nominal>(b).label;
    if (const auto* x = std::get_if<Numeric>(&a)) return x->value < std::get<Numeric>(b).value;
    const auto& ia = std::get<Interval>(a);
    const auto& ib = std::get<Interval>(b);
    if (ia.lo != ib.lo) return ia.lo < ib.lo;
    if (ia.hi != ib.hi) return ia.hi < ib.hi;
    return ia.hi_closed < ib.hi_closed;
}

CellKind value_kind(const AttributeValue& v) {
    switch (v.index()) {
        case 0: return CellKind::nominal;
        case 1: return CellKind::numeric;
        default: return CellKind::interval;
    }
}

std::string format_double(double v) {
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

std::string value_to_string(const AttributeValue& v) {
    if (const auto* n = std::get_if<Nominal>(&v)) return n->label;
    if (const auto* x = std::get_if<Numeric>(&v)) return format_double(x->value);
    const auto& iv = std::get<Interval>(v);
    return "[" + format_double(iv.lo) + "," + format_double(iv.hi) + (iv.hi_closed ? "]" : ")");
}

InformationSystem::InformationSystem(std::vector<std::string> object_ids,
                                     std::vector<Attribute> attributes,
                                     std::vector<std::vector<AttributeValue>> columns)
    : object_ids_(std::move(object_ids)),
      attributes_(std::move(attributes)),
      columns_(std::move(columns)) {
    if (columns_.size() != attributes_.size())
        throw SchemaError("column count does not match attribute count");

    std::unordered_set<std::string> seen_ids;
    for (const auto& id : object_ids_)
        if (!seen_ids.insert(id).second) throw DataError("duplicate object id: " + id);

    std::unordered_set<std::string> seen_names;
    for (const auto& attr : attributes_)
        if (!seen_names.insert(attr.name).second)
            throw SchemaError("duplicate attribute name: " + attr.name);

    for (std::size_t j = 0; j < columns_.size(); ++j) {
        const auto& col = columns_[j];
        const auto& attr = attributes_[j];
        if (col.size() != object_ids_.size())
            throw SchemaError("column " + attr.name + " has wrong length");
        if (col.empty()) continue;
        const CellKind kind = value_kind(col.front());
        for (const auto& v : col) {
            if (value_kind(v) != kind)
                throw TypeError("mixed value kinds in column " + attr.name);
            if (const auto* x = std::get_if<Numeric>(&v); x && !std::isfinite(x->value))
                throw DataError("non-finite numeric value in column " + attr.name);
            if (const auto* iv = std::get_if<Interval>(&v)) {
                if (!std::isfinite(iv->lo) || !std::isfinite(iv->hi) || iv->lo > iv->hi ||
                    (iv->lo == iv->hi && !iv->hi_closed))
                    throw DataError("malformed interval in column " + attr.name);
            }
        }
        if (attr.kind == AttrKind::nominal && kind != CellKind::nominal)
            throw TypeError("non-nominal values in nominal column " + attr.name);
        if (attr.kind == AttrKind::numeric && kind == CellKind::nominal)
            throw TypeError("nominal values in numeric column " + attr.name);
    }
}

const Attribute& InformationSystem::attribute(std::size_t j) const {
    if (j >= attributes_.size()) throw std::out_of_range("attribute index out of range");
    return attributes_[j];
}

std::size_t InformationSystem::attribute_index(std::string_view name) const {
    for (std::size_t j = 0; j < attributes_.size(); ++j)
        if (attributes_[j].name == name) return j;
    throw SchemaError("unknown attribute: " + std::string(name));
}

const AttributeValue& InformationSystem::cell(std::size_t object, std::size_t attr) const {
    if (attr >= columns_.size()) throw std::out_of_range("attribute index out of range");
    if (object >= object_ids_.size()) throw std::out_of_range("object index out of range");
    return columns_[attr][object];
}

const std::vector<AttributeValue>& InformationSystem::column(std::size_t attr) const {
    if (attr >= columns_.size()) throw std::out_of_range("attribute index out of range");
    return columns_[attr];
}

CellKind InformationSystem::column_cell_kind(std::size_t attr) const {
    const auto& col = column(attr);
    if (col.empty())
        return attributes_[attr].kind == AttrKind::nominal ? CellKind::nominal : CellKind::numeric;
    return value_kind(col.front());
}

bool operator==(const InformationSystem& a, const InformationSystem& b) {
    if (a.object_ids_ != b.object_ids_) return false;
    if (a.attributes_.size() != b.attributes_.size()) return false;
    for (std::size_t j = 0; j < a.attributes_.size(); ++j) {
        if (a.attributes_[j].name != b.attributes_[j].name ||
            a.attributes_[j].kind != b.attributes_[j].kind)
            return false;
        for (std::size_t i = 0; i < a.object_ids_.size(); ++i)
            if (!value_equal(a.columns_[j][i], b.columns_[j][i])) return false;
    }
    return true;
}

IndexSet block(const InformationSystem& is, std::span<const Descriptor> descriptors) {
    for (const auto& d : descriptors) {
        if (d.attribute >= is.attribute_count())
            throw SchemaError("descriptor references attribute index " +
                              std::to_string(d.attribute) + " of a system with " +
                              std::to_string(is.attribute_count()) + " attributes");
        const CellKind column_kind = is.column_cell_kind(d.attribute);
        if (value_kind(d.value) != column_kind)
            throw TypeError("descriptor value kind does not match " +
                            std::string(kind_label(column_kind)) + " column " +
                            is.attribute(d.attribute).name);
    }
    IndexSet out(is.object_count());
    for (std::size_t i = 0; i < is.object_count(); ++i) {
        bool match = true;
        for (const auto& d : descriptors) {
            if (!value_equal(is.cell(i, d.attribute), d.value)) {
                match = false;
                break;
            }
        }
        if (match) out.set(i);
    }
    return out;
}

IndexSet block(const InformationSystem& is,
               const std::vector<std::pair<std::string, AttributeValue>>& descriptors) {
    std::vector<Descriptor> resolved;
    resolved.reserve(descriptors.size());
    for (const auto& [name, value] : descriptors)
        resolved.push_back({is.attribute_index(name), value});
    return block(is, resolved);
}

Fraction support(const IndexSet& extension, std::size_t universe_size) {
    if (universe_size == 0) throw ParamError("support over an empty universe");
    if (extension.count() > universe_size) throw ParamError("extension larger than universe");
    return Fraction::ratio(extension.count(), universe_size);
}

InformationSystem drop_numeric_attributes(const InformationSystem& is) {
    std::vector<Attribute> attrs;
    std::vector<std::vector<AttributeValue>> cols;
    for (std::size_t j = 0; j < is.attribute_count(); ++j) {
        if (is.column_cell_kind(j) == CellKind::numeric) continue;
        attrs.push_back(is.attribute(j));
        cols.push_back(is.column(j));
    }
    return InformationSystem(is.object_ids(), std::move(attrs), std::move(cols));
}

BinaryRelation::BinaryRelation(std::size_t source_size, std::size_t target_size,
                               const std::vector<std::pair<std::size_t, std::size_t>>& pairs)
    : source_size_(source_size), target_size_(target_size), pair_count_(0) {
    rows_.assign(source_size_, IndexSet(target_size_));
    cols_.assign(target_size_, IndexSet(source_size_));
    for (const auto& [s, t] : pairs) {
        if (s >= source_size_ || t >= target_size_)
            throw std::out_of_range("relation pair (" + std::to_string(s) + "," +
                                    std::to_string(t) + ") out of range");
        rows_[s].set(t);
        cols_[t].set(s);
    }
    for (const auto& row : rows_) pair_count_ += row.count();
}

const IndexSet& BinaryRelation::neighbors(std::size_t source_index) const {
    if (source_index >= source_size_) throw std::out_of_range("source index out of range");
    return rows_[source_index];
}

const IndexSet& BinaryRelation::inverse_neighbors(std::size_t target_index) const {
    if (target_index >= target_size_) throw std::out_of_range("target index out of range");
    return cols_[target_index];
}

bool operator==(const BinaryRelation& a, const BinaryRelation& b) {
    return a.source_size_ == b.source_size_ && a.target_size_ == b.target_size_ &&
           a.rows_ == b.rows_;
}

Mmer::Mmer(InformationSystem src, InformationSystem tgt, BinaryRelation rel)
    : source(std::move(src)), target(std::move(tgt)), relation(std::move(rel)) {
    if (relation.source_size() != source.object_count() ||
        relation.target_size() != target.object_count())
        throw DataError("relation dimensions do not match the two universes");
}

Granule make_granule(const InformationSystem& is, Side side, std::vector<Descriptor> intension) {
    if (intension.empty()) throw ParamError("granule intension must be non-empty");
    std::sort(intension.begin(), intension.end(),
              [](const Descriptor& a, const Descriptor& b) { return a.attribute < b.attribute; });
    for (std::size_t i = 1; i < intension.size(); ++i)
        if (intension[i].attribute == intension[i - 1].attribute)
            throw ParamError("granule intension repeats attribute " +
                             is.attribute(intension[i].attribute).name);
    IndexSet extension = block(is, intension);
    return Granule{side, std::move(intension), std::move(extension)};
}

bool intension_less(const std::vector<Descriptor>& a, const std::vector<Descriptor>& b) {
    const std::size_t n = std::min(a.size(), b.size());
    for (std::size_t i = 0; i < n; ++i) {
        if (a[i].attribute != b[i].attribute) return a[i].attribute < b[i].attribute;
        if (!value_equal(a[i].value, b[i].value)) return value_less(a[i].value, b[i].value);
    }
    return a.size() < b.size();
}

bool intension_equal(const std::vector<Descriptor>& a, const std::vector<Descriptor>& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i].attribute != b[i].attribute || !value_equal(a[i].value, b[i].value)) return false;
    return true;
}

std::string intension_to_string(const InformationSystem& is,
                                const std::vector<Descriptor>& intension) {
    std::ostringstream out;
    for (std::size_t i = 0; i < intension.size(); ++i) {
        if (i) out << " & ";
        out << "(" << is.attribute(intension[i].attribute).name << ": "
            << value_to_string(intension[i].value) << ")";
    }
    return out.str();
}

}  // namespace gram
