#include "fcakit/concepts.hpp"

#include <algorithm>
#include <string>

namespace fcakit {

bool is_concept(const FormalContext& ctx, const Concept& c) {
  if (c.extent.universe() != ctx.object_count() || c.intent.universe() != ctx.attribute_count())
    return false;
  return derive_objects(ctx, c.extent) == c.intent && derive_attributes(ctx, c.intent) == c.extent;
}

std::optional<AttributeSet> next_intent(const FormalContext& ctx, const AttributeSet& intent) {
  const std::size_t m = ctx.attribute_count();
  for (std::size_t i = m; i-- > 0;) {
    if (intent.test(i)) continue;
    AttributeSet candidate(m);
    for (std::size_t j = intent.find_first(); j != Bitset::npos && j < i;
         j = intent.find_next(j))
      candidate.set(j);
    candidate.set(i);
    AttributeSet closed = close_attributes(ctx, candidate);
    // canonical iff closing added no attribute below i
    if (closed.equal_below(candidate, i)) return closed;
  }
  return std::nullopt;
}

std::vector<Concept> enumerate_concepts(const FormalContext& ctx, const EnumerationCaps& caps) {
  if (ctx.attribute_count() > caps.max_attributes)
    throw ResourceCapError("concept enumeration refused: " +
                           std::to_string(ctx.attribute_count()) + " attributes exceed cap " +
                           std::to_string(caps.max_attributes));
  std::vector<Concept> out;
  AttributeSet intent = close_attributes(ctx, ctx.no_attributes());
  while (true) {
    out.push_back({derive_attributes(ctx, intent), intent});
    auto next = next_intent(ctx, intent);
    if (!next) break;
    intent = std::move(*next);
  }
  return out;
}

std::size_t count_concepts(const FormalContext& ctx, const EnumerationCaps& caps) {
  return enumerate_concepts(ctx, caps).size();
}

namespace {

void check_generator_input(const FormalContext& ctx, const AttributeSet& closed,
                           const GeneratorCaps& caps) {
  if (closed.universe() != ctx.attribute_count())
    throw PreconditionError("attribute set universe mismatch");
  if (close_attributes(ctx, closed) != closed)
    throw PreconditionError("generator enumeration requires a closed attribute set");
  if (closed.count() > caps.max_intent)
    throw ResourceCapError("generator enumeration refused: intent size " +
                           std::to_string(closed.count()) + " exceeds cap " +
                           std::to_string(caps.max_intent));
}

struct GeneratorScan {
  const FormalContext& ctx;
  std::vector<std::size_t> members;
  std::vector<ObjectSet> columns;
  std::vector<ObjectSet> tails;  // tails[i] = intersection of columns i..end
  ObjectSet target;

  GeneratorScan(const FormalContext& c, const AttributeSet& closed) : ctx(c) {
    members = closed.to_indices();
    for (auto m : members) columns.push_back(ctx.column(m));
    tails.assign(members.size() + 1, ctx.all_objects());
    for (std::size_t i = members.size(); i-- > 0;) tails[i] = tails[i + 1] & columns[i];
    target = derive_attributes(ctx, closed);
  }
};

}  // namespace

std::vector<std::uint64_t> generator_counts_by_size(const FormalContext& ctx,
                                                    const AttributeSet& closed,
                                                    const GeneratorCaps& caps) {
  check_generator_input(ctx, closed, caps);
  GeneratorScan scan(ctx, closed);
  const std::size_t n = scan.members.size();
  std::vector<std::uint64_t> counts(n + 1, 0);
  // C(remaining, j) lookup for the all-completions shortcut
  std::vector<std::vector<std::uint64_t>> choose(n + 1, std::vector<std::uint64_t>(n + 1, 0));
  for (std::size_t i = 0; i <= n; ++i) {
    choose[i][0] = 1;
    for (std::size_t j = 1; j <= i; ++j)
      choose[i][j] = choose[i - 1][j - 1] + (j <= i - 1 ? choose[i - 1][j] : 0);
  }

  auto rec = [&](auto&& self, std::size_t i, const ObjectSet& extent,
                 std::size_t chosen) -> void {
    if (extent == scan.target) {
      const std::size_t rem = n - i;
      for (std::size_t j = 0; j <= rem; ++j) counts[chosen + j] += choose[rem][j];
      return;
    }
    if (i == n) return;
    if (!(extent & scan.tails[i]).subset_of(scan.target) ||
        !scan.target.subset_of(extent & scan.tails[i])) {
      // even taking every remaining attribute cannot reach the target extent
      return;
    }
    self(self, i + 1, extent & scan.columns[i], chosen + 1);
    self(self, i + 1, extent, chosen);
  };
  rec(rec, 0, ctx.all_objects(), 0);
  return counts;
}

std::vector<AttributeSet> generators(const FormalContext& ctx, const AttributeSet& closed,
                                     const GeneratorCaps& caps) {
  check_generator_input(ctx, closed, caps);
  GeneratorScan scan(ctx, closed);
  const std::size_t n = scan.members.size();
  std::vector<AttributeSet> out;
  AttributeSet current(ctx.attribute_count());

  auto rec = [&](auto&& self, std::size_t i, const ObjectSet& extent) -> void {
    if (i == n) {
      if (extent == scan.target) out.push_back(current);
      return;
    }
    if ((extent & scan.tails[i]) != scan.target) return;
    current.set(scan.members[i]);
    self(self, i + 1, extent & scan.columns[i]);
    current.reset(scan.members[i]);
    self(self, i + 1, extent);
  };
  rec(rec, 0, ctx.all_objects());
  return out;
}

std::vector<AttributeSet> minimal_generators(const FormalContext& ctx, const AttributeSet& closed,
                                             const GeneratorCaps& caps) {
  check_generator_input(ctx, closed, caps);
  GeneratorScan scan(ctx, closed);
  const std::size_t n = scan.members.size();
  std::vector<AttributeSet> out;
  std::vector<std::size_t> chosen;

  auto necessary = [&](std::size_t skip) {
    // dropping member `chosen[skip]` must strictly enlarge the extent
    ObjectSet e = ctx.all_objects();
    for (std::size_t k = 0; k < chosen.size(); ++k)
      if (k != skip) e &= scan.columns[chosen[k]];
    return e != scan.target;
  };

  auto rec = [&](auto&& self, std::size_t i, const ObjectSet& extent) -> void {
    if (extent == scan.target) {
      for (std::size_t k = 0; k < chosen.size(); ++k)
        if (!necessary(k)) return;
      AttributeSet gen(ctx.attribute_count());
      for (auto k : chosen) gen.set(scan.members[k]);
      out.push_back(std::move(gen));
      return;
    }
    if (i == n) return;
    if ((extent & scan.tails[i]) != scan.target) return;
    chosen.push_back(i);
    self(self, i + 1, extent & scan.columns[i]);
    chosen.pop_back();
    self(self, i + 1, extent);
  };
  rec(rec, 0, ctx.all_objects());
  std::sort(out.begin(), out.end(), [](const AttributeSet& a, const AttributeSet& b) {
    return a.count() < b.count();
  });
  return out;
}

}  // namespace fcakit
