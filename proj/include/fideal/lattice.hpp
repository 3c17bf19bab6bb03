#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "fideal/monomial.hpp"

namespace fideal {

/// Depth-first walk over every antichain (under inclusion) drawn from
/// `elements`, which must be distinct, canonically ordered and at most 64
/// long. Antichains are visited in lexicographic order of their index
/// sequences; the empty antichain is not visited. `visit` receives the chosen
/// masks and returns false to stop the walk. Returns false if stopped.
class AntichainWalker {
 public:
  explicit AntichainWalker(std::vector<Mask> elements);

  template <class Visit>
  bool walk(Visit&& visit) {
    chosen_.clear();
    return descend(0, 0, visit);
  }

  const std::vector<Mask>& elements() const noexcept { return elements_; }

 private:
  template <class Visit>
  bool descend(std::size_t start, std::uint64_t blocked, Visit& visit) {
    for (std::size_t i = start; i < elements_.size(); ++i) {
      if ((blocked >> i) & 1u) continue;
      chosen_.push_back(elements_[i]);
      if (!visit(std::span<const Mask>(chosen_))) return false;
      if (!descend(i + 1, blocked | comparable_[i], visit)) return false;
      chosen_.pop_back();
    }
    return true;
  }

  std::vector<Mask> elements_;
  std::vector<std::uint64_t> comparable_;  // later indices comparable to i
  std::vector<Mask> chosen_;
};

/// Nonempty subsets of {1..n} in canonical order.
std::vector<Mask> nonempty_subsets(int n);

}  // namespace fideal
