#pragma once

#include "fcakit/context.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace fcakit {

struct Concept {
  ObjectSet extent;
  AttributeSet intent;

  bool operator==(const Concept& o) const = default;
};

bool is_concept(const FormalContext& ctx, const Concept& c);

struct EnumerationCaps {
  std::size_t max_attributes = 256;
};

// All concepts, intents in ascending lectic order (NextClosure). The position in
// the returned list is the concept's stable identifier.
std::vector<Concept> enumerate_concepts(const FormalContext& ctx, const EnumerationCaps& caps = {});

std::size_t count_concepts(const FormalContext& ctx, const EnumerationCaps& caps = {});

// Lectic successor of a closed intent; nullopt after the last intent (M).
std::optional<AttributeSet> next_intent(const FormalContext& ctx, const AttributeSet& intent);

struct GeneratorCaps {
  std::size_t max_intent = 25;
};

// All Y subseteq B with Y'' = B, the empty set included when it closes to B.
// Requires B closed.
std::vector<AttributeSet> generators(const FormalContext& ctx, const AttributeSet& closed,
                                     const GeneratorCaps& caps = {});

// counts[k] = |{Y subseteq B : |Y| = k, Y'' = B}|, k = 0..|B|.
std::vector<std::uint64_t> generator_counts_by_size(const FormalContext& ctx,
                                                    const AttributeSet& closed,
                                                    const GeneratorCaps& caps = {});

// Subset-minimal generators; {} alone when the empty set already closes to B.
std::vector<AttributeSet> minimal_generators(const FormalContext& ctx, const AttributeSet& closed,
                                             const GeneratorCaps& caps = {});

}  // namespace fcakit
