#include "fcakit/stability.hpp"

#include <algorithm>
#include <string>

namespace fcakit {

namespace {

void require_concept(const FormalContext& ctx, const Concept& c) {
  if (!is_concept(ctx, c)) throw PreconditionError("not a concept of this context");
}

Rational sigma_from_counts(const std::vector<std::uint64_t>& counts) {
  BigInt total = 0;
  for (auto c : counts) total += c;
  BigInt denom = BigInt(1) << (counts.size() - 1);
  return Rational(total, denom);
}

}  // namespace

Rational stability_extensional(const FormalContext& ctx, const Concept& c,
                               const GeneratorCaps& caps) {
  require_concept(ctx, c);
  return sigma_from_counts(generator_counts_by_size(ctx, c.intent, caps));
}

Rational stability_level(const FormalContext& ctx, const Concept& c, std::size_t k,
                         const GeneratorCaps& caps) {
  require_concept(ctx, c);
  const std::size_t b = c.intent.count();
  if (k > b)
    throw PreconditionError("level " + std::to_string(k) + " out of range for intent of size " +
                            std::to_string(b));
  auto counts = generator_counts_by_size(ctx, c.intent, caps);
  return Rational(BigInt(counts[k]), binomial(static_cast<unsigned>(b), static_cast<unsigned>(k)));
}

std::vector<Rational> stability_levels(const FormalContext& ctx, const Concept& c,
                                       const GeneratorCaps& caps) {
  require_concept(ctx, c);
  auto counts = generator_counts_by_size(ctx, c.intent, caps);
  const unsigned b = static_cast<unsigned>(c.intent.count());
  std::vector<Rational> levels(b + 1);
  for (unsigned k = 0; k <= b; ++k)
    levels[k] = Rational(BigInt(counts[k]), binomial(b, k));
  return levels;
}

std::vector<StabilityReport> rank_concepts_by_stability(const FormalContext& ctx,
                                                        std::size_t top_n,
                                                        const EnumerationCaps& ecaps,
                                                        const GeneratorCaps& gcaps) {
  auto concepts = enumerate_concepts(ctx, ecaps);
  std::vector<StabilityReport> reports;
  reports.reserve(concepts.size());
  for (std::size_t i = 0; i < concepts.size(); ++i) {
    auto counts = generator_counts_by_size(ctx, concepts[i].intent, gcaps);
    StabilityReport r;
    r.concept_ = concepts[i];
    r.lectic_index = i;
    r.sigma_e = sigma_from_counts(counts);
    const unsigned b = static_cast<unsigned>(concepts[i].intent.count());
    r.levels.resize(b + 1);
    for (unsigned k = 0; k <= b; ++k)
      r.levels[k] = Rational(BigInt(counts[k]), binomial(b, k));
    reports.push_back(std::move(r));
  }
  std::stable_sort(reports.begin(), reports.end(), [](const auto& a, const auto& b) {
    if (a.sigma_e != b.sigma_e) return a.sigma_e > b.sigma_e;
    return a.lectic_index < b.lectic_index;
  });
  if (top_n > 0 && reports.size() > top_n) reports.resize(top_n);
  return reports;
}

}  // namespace fcakit
