#pragma once

// Data-parallel inner loops. Each kernel has an OpenMP version and a serial
// reference with the same contract; tests check they agree exactly and the
// benchmark target compares their throughput.

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "qmono/geometry.hpp"
#include "qmono/group.hpp"
#include "qmono/representation.hpp"

namespace qmono::kernels {

// Images of every frontier point under every map, sorted and deduplicated.
std::vector<LatticePoint> expand_frontier(std::span<const LatticePoint> frontier,
                                          std::span<const MonodromyMatrix> maps);
std::vector<LatticePoint> expand_frontier_serial(
    std::span<const LatticePoint> frontier,
    std::span<const MonodromyMatrix> maps);

std::vector<MonodromyMatrix> batch_matrix_of(std::span<const GroupWord> words,
                                             Parity p);
std::vector<MonodromyMatrix> batch_matrix_of_serial(
    std::span<const GroupWord> words, Parity p);

struct SampleScan {
  std::vector<cplx> q;          // quad_form of each normalized sample
  double min_margin = 0.0;      // min discriminant_margin over samples
  // First index that fails in_general_position, if any.
  std::optional<std::size_t> first_bad;
  bool first_bad_asymptotic = false;

  friend bool operator==(const SampleScan&, const SampleScan&) = default;
};

// Samples must be normalized (|c| = 1).
SampleScan scan_samples(std::span<const Hyperplane> samples, double tol);
SampleScan scan_samples_serial(std::span<const Hyperplane> samples, double tol);

}  // namespace qmono::kernels
