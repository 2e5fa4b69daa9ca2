#pragma once

#include "minrep/model.hpp"

namespace minrep::testing {

/// Built once per process; model construction dominates small tests.
inline const GradedModel& model(ModelFamily f, int n) {
  static const GradedModel o2 = build_model(ModelFamily::O2n2n, 2);
  static const GradedModel o3 = build_model(ModelFamily::O2n2n, 3);
  static const GradedModel g2 = build_model(ModelFamily::GL2n, 2);
  static const GradedModel g3 = build_model(ModelFamily::GL2n, 3);
  if (f == ModelFamily::O2n2n) return n == 2 ? o2 : o3;
  return n == 2 ? g2 : g3;
}

inline const GradedModel& o44() { return model(ModelFamily::O2n2n, 2); }
inline const GradedModel& gl4() { return model(ModelFamily::GL2n, 2); }

}  // namespace minrep::testing
