#pragma once

#include "fcakit/concepts.hpp"
#include "fcakit/context.hpp"

#include <map>
#include <string>
#include <vector>

namespace fcakit {

enum class Label { Positive, Negative, Tau };
enum class Verdict { Positive, Negative, Contradictory, Undetermined };

const char* to_string(Label l);
const char* to_string(Verdict v);

// A context over M (no target column) whose objects carry +/-/tau marks
// with respect to a target attribute outside M.
struct ClassificationContext {
  FormalContext base;
  std::vector<Label> labels;  // one per object
  std::string target_name;

  ClassificationContext(FormalContext b, std::vector<Label> l, std::string target);

  ObjectSet objects_with(Label l) const;
};

enum class Sign { Positive, Negative };

struct Hypothesis {
  AttributeSet attrs;
  Sign sign;
};

// Minimal hypotheses per sign; each list is an antichain under inclusion.
struct HypothesisSet {
  std::vector<Hypothesis> positive;
  std::vector<Hypothesis> negative;
};

// Minimal non-empty intents of the sign subcontext whose extent avoids the
// opposite class (falsified generalisations are excluded).
HypothesisSet learn_hypotheses(const ClassificationContext& cc, const EnumerationCaps& caps = {});

Verdict classify(const HypothesisSet& hyps, const AttributeSet& intent);

// Verdict for every tau-labelled object, keyed by object name.
std::map<std::string, Verdict> classify_all(const ClassificationContext& cc,
                                            const HypothesisSet& hyps);

}  // namespace fcakit
