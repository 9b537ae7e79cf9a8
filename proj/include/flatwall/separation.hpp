#pragma once
// Exhaustive separation streaming for small graphs: every (A,B) with
// A ∪ B = V, no edge between A∖B and B∖A, and |A ∩ B| bounded.

#include <cstddef>
#include <optional>
#include <vector>

#include "flatwall/multigraph.hpp"

namespace flatwall {

// One orientation per unordered pair {A,B}.  Deterministic order: interface
// size ascending, then lexicographic, then component assignment.
class SeparationEnumerator {
 public:
  SeparationEnumerator(Multigraph g, std::size_t max_interface);
  std::optional<Separation> next();

 private:
  Multigraph g_;
  std::size_t bound_;
  std::size_t size_ = 0;              // current interface size
  std::vector<std::size_t> comb_;     // index combination into vertices()
  std::vector<std::vector<VertexId>> comps_;  // components of g - S
  std::uint64_t assign_ = 0;          // side bits for comps_[1..]
  bool comb_live_ = false;
  bool done_ = false;

  bool advance_comb();
  void load_components();
};

}  // namespace flatwall
