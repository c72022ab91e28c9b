#include "fcakit/context.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>

namespace fcakit {

namespace {

void check_unique(const std::vector<std::string>& names, const char* kind) {
  std::unordered_map<std::string, std::size_t> seen;
  for (const auto& n : names) {
    if (!seen.emplace(n, 0).second)
      throw ValidationError(std::string("duplicate ") + kind + " name: '" + n + "'");
  }
}

void check_universe(std::size_t got, std::size_t want, const char* kind) {
  if (got != want)
    throw PreconditionError(std::string(kind) + " set universe mismatch: " +
                            std::to_string(got) + " vs context " + std::to_string(want));
}

}  // namespace

FormalContext::FormalContext(std::vector<std::string> objects,
                             std::vector<std::string> attributes,
                             std::vector<AttributeSet> rows)
    : objects_(std::move(objects)), attributes_(std::move(attributes)), rows_(std::move(rows)) {
  check_unique(objects_, "object");
  check_unique(attributes_, "attribute");
  if (rows_.size() != objects_.size())
    throw ValidationError("row count " + std::to_string(rows_.size()) + " does not match " +
                          std::to_string(objects_.size()) + " objects");
  for (const auto& r : rows_)
    if (r.universe() != attributes_.size())
      throw ValidationError("incidence row width does not match attribute count");
  cols_.assign(attributes_.size(), ObjectSet(objects_.size()));
  for (std::size_t g = 0; g < rows_.size(); ++g)
    rows_[g].for_each([&](std::size_t m) { cols_[m].set(g); });
  for (std::size_t g = 0; g < objects_.size(); ++g) object_idx_[objects_[g]] = g;
  for (std::size_t m = 0; m < attributes_.size(); ++m) attribute_idx_[attributes_[m]] = m;
}

FormalContext FormalContext::from_crosses(std::vector<std::string> objects,
                                          std::vector<std::string> attributes,
                                          const std::vector<std::string>& crosses) {
  std::vector<AttributeSet> rows;
  rows.reserve(crosses.size());
  for (const auto& line : crosses) {
    AttributeSet r(attributes.size());
    if (line.size() != attributes.size())
      throw ValidationError("cross row '" + line + "' has wrong length");
    for (std::size_t m = 0; m < line.size(); ++m) {
      if (line[m] == 'X' || line[m] == 'x')
        r.set(m);
      else if (line[m] != '.')
        throw ValidationError(std::string("bad incidence character '") + line[m] + "'");
    }
    rows.push_back(std::move(r));
  }
  return FormalContext(std::move(objects), std::move(attributes), std::move(rows));
}

std::size_t FormalContext::object_index(std::string_view name) const {
  auto it = object_idx_.find(std::string(name));
  if (it == object_idx_.end()) throw ValidationError("unknown object: '" + std::string(name) + "'");
  return it->second;
}

std::size_t FormalContext::attribute_index(std::string_view name) const {
  auto it = attribute_idx_.find(std::string(name));
  if (it == attribute_idx_.end())
    throw ValidationError("unknown attribute: '" + std::string(name) + "'");
  return it->second;
}

AttributeSet FormalContext::attribute_set(const std::vector<std::string>& names) const {
  AttributeSet s(attribute_count());
  for (const auto& n : names) s.set(attribute_index(n));
  return s;
}

ObjectSet FormalContext::object_set(const std::vector<std::string>& names) const {
  ObjectSet s(object_count());
  for (const auto& n : names) s.set(object_index(n));
  return s;
}

std::vector<std::string> FormalContext::attribute_names_of(const AttributeSet& s) const {
  check_universe(s.universe(), attribute_count(), "attribute");
  std::vector<std::string> out;
  s.for_each([&](std::size_t m) { out.push_back(attributes_[m]); });
  return out;
}

std::vector<std::string> FormalContext::object_names_of(const ObjectSet& s) const {
  check_universe(s.universe(), object_count(), "object");
  std::vector<std::string> out;
  s.for_each([&](std::size_t g) { out.push_back(objects_[g]); });
  return out;
}

AttributeSet derive_objects(const FormalContext& ctx, const ObjectSet& objects) {
  check_universe(objects.universe(), ctx.object_count(), "object");
  AttributeSet out = ctx.all_attributes();
  objects.for_each([&](std::size_t g) { out &= ctx.row(g); });
  return out;
}

ObjectSet derive_attributes(const FormalContext& ctx, const AttributeSet& attributes) {
  check_universe(attributes.universe(), ctx.attribute_count(), "attribute");
  ObjectSet out = ctx.all_objects();
  attributes.for_each([&](std::size_t m) { out &= ctx.column(m); });
  return out;
}

AttributeSet close_attributes(const FormalContext& ctx, const AttributeSet& attributes) {
  return derive_objects(ctx, derive_attributes(ctx, attributes));
}

ObjectSet close_objects(const FormalContext& ctx, const ObjectSet& objects) {
  return derive_attributes(ctx, derive_objects(ctx, objects));
}

bool is_clarified(const FormalContext& ctx) {
  for (std::size_t g = 0; g + 1 < ctx.object_count(); ++g)
    for (std::size_t h = g + 1; h < ctx.object_count(); ++h)
      if (ctx.row(g) == ctx.row(h)) return false;
  for (std::size_t m = 0; m + 1 < ctx.attribute_count(); ++m)
    for (std::size_t n = m + 1; n < ctx.attribute_count(); ++n)
      if (ctx.column(m) == ctx.column(n)) return false;
  return true;
}

namespace {

// Representative index per duplicate group: the lexicographically smallest name,
// positioned where the group first occurs.
template <class GetSet>
std::pair<std::vector<std::size_t>, std::vector<std::pair<std::string, std::string>>>
dedupe(std::size_t n, const std::vector<std::string>& names, GetSet get) {
  std::vector<std::size_t> keep_order;
  std::vector<std::pair<std::string, std::string>> merges;
  std::vector<std::vector<std::size_t>> groups;
  std::unordered_map<Bitset, std::size_t, BitsetHash> first;
  for (std::size_t i = 0; i < n; ++i) {
    auto [it, inserted] = first.emplace(get(i), groups.size());
    if (inserted)
      groups.push_back({i});
    else
      groups[it->second].push_back(i);
  }
  for (const auto& grp : groups) {
    std::size_t rep = grp[0];
    for (std::size_t i : grp)
      if (names[i] < names[rep]) rep = i;
    keep_order.push_back(rep);
    for (std::size_t i : grp)
      if (i != rep) merges.emplace_back(names[i], names[rep]);
  }
  return {keep_order, merges};
}

FormalContext select(const FormalContext& ctx, const std::vector<std::size_t>& objs,
                     const std::vector<std::size_t>& attrs) {
  std::vector<std::string> onames, anames;
  onames.reserve(objs.size());
  anames.reserve(attrs.size());
  for (auto g : objs) onames.push_back(ctx.object_name(g));
  for (auto m : attrs) anames.push_back(ctx.attribute_name(m));
  std::vector<AttributeSet> rows;
  rows.reserve(objs.size());
  for (auto g : objs) {
    AttributeSet r(attrs.size());
    for (std::size_t j = 0; j < attrs.size(); ++j)
      if (ctx.incidence(g, attrs[j])) r.set(j);
    rows.push_back(std::move(r));
  }
  return FormalContext(std::move(onames), std::move(anames), std::move(rows));
}

}  // namespace

std::pair<FormalContext, MergeReport> clarify(const FormalContext& ctx) {
  auto [keep_obj, obj_merges] =
      dedupe(ctx.object_count(), ctx.object_names(), [&](std::size_t g) { return ctx.row(g); });
  auto [keep_att, att_merges] = dedupe(ctx.attribute_count(), ctx.attribute_names(),
                                       [&](std::size_t m) { return ctx.column(m); });
  MergeReport report{std::move(obj_merges), std::move(att_merges)};
  return {select(ctx, keep_obj, keep_att), std::move(report)};
}

namespace {

// m is reducible iff its extent equals the intersection of the other extents containing it.
template <class GetSet>
std::vector<bool> reducible(std::size_t n, std::size_t universe, GetSet get) {
  std::vector<bool> out(n, false);
  for (std::size_t m = 0; m < n; ++m) {
    Bitset inter = Bitset::full(universe);
    for (std::size_t k = 0; k < n; ++k) {
      if (k == m) continue;
      if (get(m).subset_of(get(k))) inter &= get(k);
    }
    out[m] = inter == get(m);
  }
  return out;
}

}  // namespace

std::pair<FormalContext, RemovalReport> reduce(const FormalContext& ctx) {
  if (!is_clarified(ctx)) throw PreconditionError("reduce requires a clarified context");
  RemovalReport report;

  auto att_red = reducible(ctx.attribute_count(), ctx.object_count(),
                           [&](std::size_t m) -> const ObjectSet& { return ctx.column(m); });
  std::vector<std::size_t> keep_att;
  for (std::size_t m = 0; m < ctx.attribute_count(); ++m) {
    if (att_red[m])
      report.attributes.push_back(ctx.attribute_name(m));
    else
      keep_att.push_back(m);
  }
  std::vector<std::size_t> all_obj(ctx.object_count());
  for (std::size_t g = 0; g < all_obj.size(); ++g) all_obj[g] = g;
  FormalContext att_reduced = select(ctx, all_obj, keep_att);

  auto obj_red = reducible(att_reduced.object_count(), att_reduced.attribute_count(),
                           [&](std::size_t g) -> const AttributeSet& { return att_reduced.row(g); });
  std::vector<std::size_t> keep_obj;
  for (std::size_t g = 0; g < att_reduced.object_count(); ++g) {
    if (obj_red[g])
      report.objects.push_back(att_reduced.object_name(g));
    else
      keep_obj.push_back(g);
  }
  std::vector<std::size_t> all_att(att_reduced.attribute_count());
  for (std::size_t m = 0; m < all_att.size(); ++m) all_att[m] = m;
  return {select(att_reduced, keep_obj, all_att), std::move(report)};
}

FormalContext restrict_objects(const FormalContext& ctx, const ObjectSet& keep) {
  std::vector<std::size_t> objs = keep.to_indices();
  std::vector<std::size_t> attrs(ctx.attribute_count());
  for (std::size_t m = 0; m < attrs.size(); ++m) attrs[m] = m;
  return select(ctx, objs, attrs);
}

FormalContext drop_attributes(const FormalContext& ctx, const AttributeSet& drop) {
  std::vector<std::size_t> objs(ctx.object_count());
  for (std::size_t g = 0; g < objs.size(); ++g) objs[g] = g;
  std::vector<std::size_t> attrs;
  for (std::size_t m = 0; m < ctx.attribute_count(); ++m)
    if (!drop.test(m)) attrs.push_back(m);
  return select(ctx, objs, attrs);
}

}  // namespace fcakit
