#include "momapf/joint.hpp"

#include <stdexcept>

namespace momapf {

AgentSet psi(const JointVertex& u, const JointVertex& v) {
  if (u.size() != v.size())
    throw std::invalid_argument("psi: joint vertices of different lengths");
  const int n = static_cast<int>(u.size());
  AgentSet out;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const bool vertex_conflict = v[i] == v[j];
      const bool swap_conflict = u[i] == v[j] && u[j] == v[i] && u[i] != u[j];
      if (vertex_conflict || swap_conflict) {
        out.add(i);
        out.add(j);
      }
    }
  }
  return out;
}

}  // namespace momapf
