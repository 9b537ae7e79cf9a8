#pragma once
// Minor containment search.  Three-valued: a budgeted branch-and-bound either
// finds a model, exhausts the search space, or runs out of budget.

#include <cstdint>
#include <optional>
#include <vector>

#include "flatwall/multigraph.hpp"

namespace flatwall {

enum class SearchStatus { Found, AbsentExhaustive, UnknownBudget };

struct MinorModel {
  // one branch set per pattern vertex, in pattern vertex order
  std::vector<std::vector<VertexId>> branch_sets;
};

struct MinorSearch {
  SearchStatus status = SearchStatus::UnknownBudget;
  std::optional<MinorModel> model;
  std::uint64_t steps = 0;  // search steps actually spent
};

Multigraph complete_graph(unsigned n);  // vertices 0..n-1

// Branch sets nonempty, disjoint, connected in host, and joined by a host
// edge for every pattern edge.
bool verify_minor_model(const Multigraph& host, const Multigraph& pattern,
                        const MinorModel& m);

// budget == 0 means unlimited.
MinorSearch find_minor(const Multigraph& host, const Multigraph& pattern,
                       std::uint64_t budget = 0);

}  // namespace flatwall
