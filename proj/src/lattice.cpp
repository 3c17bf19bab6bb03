#include "fideal/lattice.hpp"

#include <algorithm>

namespace fideal {

AntichainWalker::AntichainWalker(std::vector<Mask> elements) : elements_(std::move(elements)) {
  if (elements_.size() > 64) {
    fail(ErrorCode::invalid_argument, "antichain walks are limited to 64 elements");
  }
  comparable_.assign(elements_.size(), 0);
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    for (std::size_t j = i + 1; j < elements_.size(); ++j) {
      const Mask a = elements_[i], b = elements_[j];
      if ((a & ~b) == 0 || (b & ~a) == 0) comparable_[i] |= std::uint64_t{1} << j;
    }
  }
}

std::vector<Mask> nonempty_subsets(int n) {
  check_ambient(n);
  std::vector<Mask> out;
  for (int d = 1; d <= n; ++d) {
    auto layer = masks_of_degree(n, d);
    out.insert(out.end(), layer.begin(), layer.end());
  }
  return out;
}

}  // namespace fideal
