#pragma once

#include <string>

namespace acceptance {

struct Outcome {
  bool pass = false;
  std::string detail;
};

Outcome kfold_suite();
Outcome symmetric_lift_oracle();
Outcome enrichment_soundness();
Outcome tower_recursion();
Outcome underlying_equivalence();
Outcome change_of_base();
Outcome kcell_calculus();
Outcome determinism();

}  // namespace acceptance
