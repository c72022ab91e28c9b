#pragma once

#include "fcakit/concepts.hpp"
#include "fcakit/rational.hpp"

#include <vector>

namespace fcakit {

struct StabilityReport {
  Concept concept_;
  std::size_t lectic_index = 0;
  Rational sigma_e;
  std::vector<Rational> levels;  // levels[k] = J_k, k = 0..|intent|
};

// |gen(B)| / 2^|B|.
Rational stability_extensional(const FormalContext& ctx, const Concept& c,
                               const GeneratorCaps& caps = {});

// J_k = |{Y subseteq B : |Y| = k, Y'' = B}| / C(|B|, k).
Rational stability_level(const FormalContext& ctx, const Concept& c, std::size_t k,
                         const GeneratorCaps& caps = {});

std::vector<Rational> stability_levels(const FormalContext& ctx, const Concept& c,
                                       const GeneratorCaps& caps = {});

// Reports for every concept, descending sigma_e, ties by lectic intent order.
// top_n = 0 means all.
std::vector<StabilityReport> rank_concepts_by_stability(const FormalContext& ctx,
                                                        std::size_t top_n,
                                                        const EnumerationCaps& ecaps = {},
                                                        const GeneratorCaps& gcaps = {});

}  // namespace fcakit
