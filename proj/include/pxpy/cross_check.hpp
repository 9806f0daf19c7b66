#pragma once

#include <algorithm>
#include <iterator>
#include <vector>

#include "pxpy/classifier.hpp"
#include "pxpy/oracle.hpp"

namespace pxpy {

struct CrossCheckResult {
  EquationInstance instance;
  SearchBox box;
  std::vector<SolutionTriple> searched;        // brute force
  std::vector<SolutionTriple> predicted;       // family members inside the box
  std::vector<SolutionTriple> only_searched;   // solutions the families miss
  std::vector<SolutionTriple> only_predicted;  // family members the search did not find
  std::uint64_t pairs_checked = 0;

  bool consistent() const { return only_searched.empty() && only_predicted.empty(); }
};

inline CrossCheckResult cross_check(const EquationInstance& instance, const SearchBox& box,
                                    unsigned workers = default_workers()) {
  SearchReport report = brute_force(instance, box, workers);

  // Enumerate up to the larger side, then clip, so non-square boxes are
  // covered too.
  std::vector<SolutionTriple> predicted;
  for (SolutionTriple& t : enumerate(instance, std::max(box.x_max, box.y_max)))
    if (box.contains(t.x, t.y)) predicted.push_back(std::move(t));

  CrossCheckResult out{instance, box, std::move(report.solutions), std::move(predicted), {}, {}, report.pairs_checked};
  std::set_difference(out.searched.begin(), out.searched.end(), out.predicted.begin(), out.predicted.end(),
                      std::back_inserter(out.only_searched));
  std::set_difference(out.predicted.begin(), out.predicted.end(), out.searched.begin(), out.searched.end(),
                      std::back_inserter(out.only_predicted));
  return out;
}

}  // namespace pxpy
