#pragma once

#include <map>
#include <string>

#include "credalkit/errors.hpp"

namespace credalkit {

/// Embedded golden reports for the built-in reproductions. The pipeline
/// regenerates every table from raw model inputs on each run; nothing here
/// is consumed as an intermediate value.
inline const std::string& golden_report(const std::string& id) {
  static const std::map<std::string, std::string> goldens = {
      {"table1",
       R"GOLD(Dempster's die: opposite faces paired, each pair with belief 0 and plausibility 0.5
Event   1   2   3   12  13  23  S
Bel(.)  0   0   0   .5  .5  .5  1
Pl(.)   .5  .5  .5  1   1   1   1
m(.)    0   0   0   .5  .5  .5  -.5
)GOLD"},
      {"table2",
       R"GOLD(Two flips of one coin biased for heads (t in [0.5, 1])
Event   1    2    3    4    12   13   14   23  24  34  123  124  134  234  S
Bel(.)  .25  0    0    0    .5   .5   .5   0   0   0   .75  .75  .75  0    1
Pl(.)   1    .25  .25  .25  1    1    1    .5  .5  .5  1    1    1    .75  1
m(.)    .25  0    0    0    .25  .25  .25  0   0   0   0    0    0    0    0
)GOLD"},
      {"table3",
       R"GOLD(Two flips of different coins, each biased for heads
Event   1    2   3   4    12   13   14   23  24  34  123  124   134   234  S
Bel(.)  .25  0   0   0    .5   .5   .5   0   0   0   .75  .5    .5    0    1
Pl(.)   1    .5  .5  .25  1    1    1    .5  .5  .5  1    1     1     .75  1
m(.)    .25  0   0   0    .25  .25  .25  0   0   0   0    -.25  -.25  0    (.5)
)GOLD"},
      {"table4",
       R"GOLD(Mixture: flip a fair coin twice, or a two-headed coin twice
Event   1    2    3    4    12   13   14   23  24  34  123  124  134  234  S
Bel(.)  .25  0    0    0    .5   .5   .5   0   0   0   .75  .75  .75  0    1
Pl(.)   1    .25  .25  .25  1    1    1    .5  .5  .5  1    1    1    .75  1
m(.)    .25  0    0    0    .25  .25  .25  0   0   0   0    0    0    0    0
)GOLD"},
      {"eq24",
       R"GOLD(2-monotone violated: Bel(124)=0.5 < 0.75, witness {12},{14}
)GOLD"},
      {"zadeh",
       R"GOLD(witness 1: A: 0.99, B: 0.01
witness 2: B: 0.01, C: 0.99
combined: B: 1
conflict: 0.9999 (exceeds warning threshold 0.95)
)GOLD"},
      {"identical",
       R"GOLD(assessment: H: 0.25, T: 0.75
self-combination: H: 0.1, T: 0.9
conflict: 0.375
)GOLD"},
      {"bayes",
       R"GOLD(prior: A: 0.5, B: 0.25, C: 0.25
evidence: {AB}
Bayes conditioning: A: 2/3, B: 1/3
combine with [AB: 1] -> A: 2/3, B: 1/3 (matches Bayes: yes)
combine with [A: 0.2, B: 0.2, AB: 0.6] -> A: 2/3, B: 1/3 (matches Bayes: yes)
combine with [A: 0.3, B: 0.1, AB: 0.6] -> A: 0.72, B: 0.28 (matches Bayes: no)
)GOLD"},
      {"refinement",
       R"GOLD(single flip: H: 0.5, S: 0.5
refined twice and combined: 1: 0.25, 12: 0.25, 13: 0.25, S: 0.25 (conflict 0)
two-flip credal mass: 1: 0.25, 12: 0.25, 13: 0.25, 14: 0.25
mass differs at: {14}, {S}
Bel(1): combination 0.25, credal 0.25
Bel(14): combination 0.25, credal 0.5
)GOLD"},
      {"decision",
       R"GOLD(epsilon: 0.25
gamble: <-0.25, 1, 1, -2>
family A (iid coin): eu in [-0.25, 2/17], argmax t = 0.705882356
family C (mixture): eu in [-0.25, -0.0625]
envelopes equal: yes; A favourable: yes; C favourable: no
)GOLD"},
  };
  auto it = goldens.find(id);
  if (it == goldens.end()) throw ValidationError("no golden report for \"" + id + "\"");
  return it->second;
}

}  // namespace credalkit
