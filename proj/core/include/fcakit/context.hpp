#pragma once

#include "fcakit/bitset.hpp"
#include "fcakit/errors.hpp"

#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace fcakit {

using ObjectSet = Bitset;
using AttributeSet = Bitset;

// Immutable binary incidence over named objects and attributes.
// Rows (object intents) and columns (attribute extents) are both materialised.
class FormalContext {
 public:
  FormalContext(std::vector<std::string> objects, std::vector<std::string> attributes,
                std::vector<AttributeSet> rows);

  // Rows given as cross strings over {'X','x','.'}, one per object.
  static FormalContext from_crosses(std::vector<std::string> objects,
                                    std::vector<std::string> attributes,
                                    const std::vector<std::string>& crosses);

  std::size_t object_count() const { return objects_.size(); }
  std::size_t attribute_count() const { return attributes_.size(); }

  const std::vector<std::string>& object_names() const { return objects_; }
  const std::vector<std::string>& attribute_names() const { return attributes_; }
  const std::string& object_name(std::size_t g) const { return objects_[g]; }
  const std::string& attribute_name(std::size_t m) const { return attributes_[m]; }

  std::size_t object_index(std::string_view name) const;
  std::size_t attribute_index(std::string_view name) const;
  bool has_object(std::string_view name) const { return object_idx_.count(std::string(name)) > 0; }
  bool has_attribute(std::string_view name) const {
    return attribute_idx_.count(std::string(name)) > 0;
  }

  const AttributeSet& row(std::size_t g) const { return rows_[g]; }
  const ObjectSet& column(std::size_t m) const { return cols_[m]; }
  bool incidence(std::size_t g, std::size_t m) const { return rows_[g].test(m); }

  ObjectSet no_objects() const { return ObjectSet(object_count()); }
  ObjectSet all_objects() const { return ObjectSet::full(object_count()); }
  AttributeSet no_attributes() const { return AttributeSet(attribute_count()); }
  AttributeSet all_attributes() const { return AttributeSet::full(attribute_count()); }

  AttributeSet attribute_set(const std::vector<std::string>& names) const;
  ObjectSet object_set(const std::vector<std::string>& names) const;
  std::vector<std::string> attribute_names_of(const AttributeSet& s) const;
  std::vector<std::string> object_names_of(const ObjectSet& s) const;

 private:
  std::vector<std::string> objects_;
  std::vector<std::string> attributes_;
  std::vector<AttributeSet> rows_;
  std::vector<ObjectSet> cols_;
  std::unordered_map<std::string, std::size_t> object_idx_;
  std::unordered_map<std::string, std::size_t> attribute_idx_;
};

// Galois derivation operators. Empty input derives to the full dual set.
AttributeSet derive_objects(const FormalContext& ctx, const ObjectSet& objects);
ObjectSet derive_attributes(const FormalContext& ctx, const AttributeSet& attributes);
AttributeSet close_attributes(const FormalContext& ctx, const AttributeSet& attributes);
ObjectSet close_objects(const FormalContext& ctx, const ObjectSet& objects);

bool is_clarified(const FormalContext& ctx);

// Removed-name -> kept-name, for objects and attributes separately.
struct MergeReport {
  std::vector<std::pair<std::string, std::string>> objects;
  std::vector<std::pair<std::string, std::string>> attributes;
};

// Merges duplicate rows and columns. The representative of a duplicate group is
// the lexicographically smallest name; it keeps the group's first position.
std::pair<FormalContext, MergeReport> clarify(const FormalContext& ctx);

struct RemovalReport {
  std::vector<std::string> objects;
  std::vector<std::string> attributes;
};

// Drops attributes expressible as combinations of others, and dually objects.
// Requires a clarified context.
std::pair<FormalContext, RemovalReport> reduce(const FormalContext& ctx);

// Sub- and derived contexts used by jsm / generalize.
FormalContext restrict_objects(const FormalContext& ctx, const ObjectSet& keep);
FormalContext drop_attributes(const FormalContext& ctx, const AttributeSet& drop);

}  // namespace fcakit
