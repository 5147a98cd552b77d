#include "pf/div/tv.hpp"

#include <cmath>
#include <stdexcept>

namespace pf {

double tv_discrete(const DiscretePmf& p, const DiscretePmf& q) {
  if (p.size() != q.size()) {
    throw std::invalid_argument("tv_discrete: alphabet size mismatch");
  }
  double sum = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) sum += std::abs(p[i] - q[i]);
  return 0.5 * sum;
}

}  // namespace pf
