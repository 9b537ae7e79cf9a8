#include "flatwall/separation.hpp"

#include <algorithm>

namespace flatwall {

SeparationEnumerator::SeparationEnumerator(Multigraph g, std::size_t max_interface)
    : g_(std::move(g)), bound_(std::min(max_interface, g_.vertex_count())) {}

// next k-combination of vertex indices in lexicographic order; grows k when
// the current size is exhausted
bool SeparationEnumerator::advance_comb() {
  std::size_t n = g_.vertex_count();
  if (!comb_live_) {
    comb_.resize(size_);
    for (std::size_t i = 0; i < size_; ++i) comb_[i] = i;
    comb_live_ = size_ <= n;
    return comb_live_;
  }
  std::size_t k = size_;
  std::size_t i = k;
  while (i > 0) {
    --i;
    if (comb_[i] + (k - i) < n) {
      ++comb_[i];
      for (std::size_t j = i + 1; j < k; ++j) comb_[j] = comb_[j - 1] + 1;
      return true;
    }
  }
  comb_live_ = false;
  return false;
}

void SeparationEnumerator::load_components() {
  std::vector<VertexId> s;
  for (std::size_t i : comb_) s.push_back(g_.vertices()[i]);
  comps_ = connected_components(induced(g_, set_minus(g_.vertices(), s)));
  assign_ = 0;
}

std::optional<Separation> SeparationEnumerator::next() {
  while (!done_) {
    if (!comb_live_) {
      if (size_ > bound_) {
        done_ = true;
        break;
      }
      if (!advance_comb()) {
        ++size_;
        continue;
      }
      load_components();
    }
    std::uint64_t limit =
        comps_.empty() ? 1 : (std::uint64_t{1} << (comps_.size() - 1));
    if (assign_ >= limit) {
      if (!advance_comb()) {
        ++size_;
        continue;
      }
      load_components();
      continue;
    }
    std::vector<VertexId> s;
    for (std::size_t i : comb_) s.push_back(g_.vertices()[i]);
    Separation sep;
    sep.a = s;
    sep.b = s;
    for (std::size_t c = 0; c < comps_.size(); ++c) {
      bool to_b = c > 0 && (assign_ >> (c - 1)) & 1;
      auto& side = to_b ? sep.b : sep.a;
      side = set_union(side, comps_[c]);
    }
    ++assign_;
    return sep;
  }
  return std::nullopt;
}

}  // namespace flatwall
