#include "qmono/kernels.hpp"

#include <algorithm>
#include <exception>
#include <limits>

namespace qmono::kernels {

namespace {

void sort_unique(std::vector<LatticePoint>& pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
}

struct SampleInfo {
  cplx q;
  double margin;
  bool tangent;
  bool asymptotic;
};

SampleInfo inspect(const Hyperplane& h, double tol) {
  const cplx q = quad_form(h.c());
  const cplx d2 = h.d() * h.d();
  const double scale = std::max({std::abs(d2), std::abs(q), 1.0});
  return {q, std::min(std::abs(d2 - q), std::abs(q)),
          std::abs(d2 - q) <= tol * scale, std::abs(q) <= tol};
}

}  // namespace

std::vector<LatticePoint> expand_frontier_serial(
    std::span<const LatticePoint> frontier,
    std::span<const MonodromyMatrix> maps) {
  std::vector<LatticePoint> out;
  out.reserve(frontier.size() * maps.size());
  for (const LatticePoint& x : frontier) {
    for (const MonodromyMatrix& m : maps) out.push_back(m * x);
  }
  sort_unique(out);
  return out;
}

std::vector<LatticePoint> expand_frontier(std::span<const LatticePoint> frontier,
                                          std::span<const MonodromyMatrix> maps) {
  const std::size_t k = maps.size();
  std::vector<LatticePoint> out(frontier.size() * k);
  std::exception_ptr failure;
  const auto count = static_cast<std::ptrdiff_t>(frontier.size());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < count; ++i) {
    try {
      for (std::size_t j = 0; j < k; ++j) {
        out[static_cast<std::size_t>(i) * k + j] = maps[j] * frontier[i];
      }
    } catch (...) {
#pragma omp critical(qmono_expand_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  sort_unique(out);
  return out;
}

std::vector<MonodromyMatrix> batch_matrix_of_serial(
    std::span<const GroupWord> words, Parity p) {
  std::vector<MonodromyMatrix> out;
  out.reserve(words.size());
  for (const GroupWord& g : words) out.push_back(matrix_of(g, p));
  return out;
}

std::vector<MonodromyMatrix> batch_matrix_of(std::span<const GroupWord> words,
                                             Parity p) {
  std::vector<MonodromyMatrix> out(words.size());
  std::exception_ptr failure;
  const auto count = static_cast<std::ptrdiff_t>(words.size());
#pragma omp parallel for schedule(dynamic, 64)
  for (std::ptrdiff_t i = 0; i < count; ++i) {
    try {
      out[i] = matrix_of(words[i], p);
    } catch (...) {
#pragma omp critical(qmono_batch_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  return out;
}

SampleScan scan_samples_serial(std::span<const Hyperplane> samples, double tol) {
  SampleScan scan;
  scan.q.reserve(samples.size());
  scan.min_margin = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const SampleInfo info = inspect(samples[i], tol);
    scan.q.push_back(info.q);
    scan.min_margin = std::min(scan.min_margin, info.margin);
    if (!scan.first_bad && (info.tangent || info.asymptotic)) {
      scan.first_bad = i;
      scan.first_bad_asymptotic = info.asymptotic;
    }
  }
  return scan;
}

SampleScan scan_samples(std::span<const Hyperplane> samples, double tol) {
  const auto count = static_cast<std::ptrdiff_t>(samples.size());
  std::vector<SampleInfo> info(samples.size());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < count; ++i) info[i] = inspect(samples[i], tol);

  // The reductions are order-independent (min, first index), so the result
  // matches the serial scan bit for bit.
  SampleScan scan;
  scan.q.resize(samples.size());
  scan.min_margin = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < info.size(); ++i) {
    scan.q[i] = info[i].q;
    scan.min_margin = std::min(scan.min_margin, info[i].margin);
    if (!scan.first_bad && (info[i].tangent || info[i].asymptotic)) {
      scan.first_bad = i;
      scan.first_bad_asymptotic = info[i].asymptotic;
    }
  }
  return scan;
}

}  // namespace qmono::kernels
