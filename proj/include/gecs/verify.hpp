#pragma once

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <exception>
#include <mutex>
#include <optional>
#include <ostream>
#include <span>
#include <stdexcept>
#include <thread>
#include <vector>

#include "gecs/bitmatrix.hpp"
#include "gecs/bitvec.hpp"
#include "gecs/constructions.hpp"
#include "gecs/generic_set.hpp"
#include "gecs/subsets.hpp"

namespace gecs {

/// Outcome of certifying a candidate set against the rank-m covering
/// criterion: for every r x m matrix M of rank m some member a must have
/// wt(aM) = 1. Column sets stand in for matrices; a counterexample is the
/// canonically smallest failing column set unless `deterministic` is false.
struct VerificationReport {
  unsigned r = 0, m = 0;
  bool pass = false;
  std::uint64_t matrices_checked = 0;
  std::optional<std::vector<BitVec>> counterexample;
  std::chrono::duration<double, std::milli> elapsed{0};
  bool deterministic = true;

  bool failed() const { return !pass; }
};

struct VerifyOptions {
  unsigned jobs = 0;    // 0 = hardware concurrency
  bool fail_fast = false;
};

/// True iff the members of `set` span F_2^r.
inline bool spans(const GenericSet& set, unsigned r) {
  if (set.dimension() != r)
    throw std::invalid_argument("spans: set dimension != r");
  if (set.empty()) return false;
  return rank(set.members()) == r;
}

namespace detail {

inline bool covers_subset(std::span<const std::uint32_t> candidates,
                          std::span<const std::uint32_t> columns) {
  for (std::uint32_t a : candidates) {
    unsigned hits = 0;
    for (std::uint32_t c : columns) {
      hits += std::popcount(a & c) & 1;
      if (hits > 1) break;
    }
    if (hits == 1) return true;
  }
  return false;
}

struct ChunkResult {
  std::uint64_t checked = 0;
  bool failed = false;
  std::vector<std::uint32_t> fail_subset;
};

inline ChunkResult scan_chunk(unsigned r, unsigned m, std::uint32_t lead_lo,
                              std::uint32_t lead_hi,
                              std::span<const std::uint32_t> candidates,
                              const std::atomic<bool>* abort) {
  ChunkResult result;
  IndependentSubsetStream stream(r, m, lead_lo, lead_hi);
  std::vector<std::uint32_t> subset;
  while (stream.next(subset)) {
    ++result.checked;
    if (!covers_subset(candidates, subset)) {
      result.failed = true;
      result.fail_subset = subset;
      return result;
    }
    if (abort && (result.checked & 1023) == 0 &&
        abort->load(std::memory_order_relaxed))
      return result;
  }
  return result;
}

/// Smallest (by encoding) nonzero vector orthogonal to every member.
inline std::uint32_t smallest_orthogonal(const GenericSet& set, unsigned r) {
  const auto members = set.encodings();
  for (std::uint32_t v = 1; v < (std::uint32_t{1} << r); ++v) {
    bool ok = true;
    for (std::uint32_t a : members)
      if (std::popcount(v & a) & 1) {
        ok = false;
        break;
      }
    if (ok) return v;
  }
  throw std::logic_error("smallest_orthogonal: set spans the space");
}

}  // namespace detail

/// Certifies `set` as generic (r,m)-erasure correcting by exhausting the
/// canonical rank-m column sets. Non-spanning sets fail immediately with the
/// parity-pattern certificate. The scan may be split across `jobs` workers;
/// the report is independent of the worker count unless fail_fast is set.
inline VerificationReport verify_generic(const GenericSet& set, unsigned r,
                                         unsigned m, VerifyOptions opt = {}) {
  const auto t0 = std::chrono::steady_clock::now();
  if (m < 1 || m > r)
    throw std::invalid_argument("verify_generic: need 1 <= m <= r");
  if (set.dimension() != r)
    throw std::invalid_argument("verify_generic: set dimension != r");
  if (r > kMaxStreamDimension)
    throw std::invalid_argument("verify_generic: r beyond desk scale");

  VerificationReport report;
  report.r = r;
  report.m = m;
  report.deterministic = !opt.fail_fast;
  const auto finish = [&]() {
    report.elapsed = std::chrono::steady_clock::now() - t0;
    return report;
  };

  if (!spans(set, r)) {
    const std::uint32_t v = detail::smallest_orthogonal(set, r);
    const BitMatrix certificate = parity_pattern_matrix(to_bitvec(v, r), m);
    std::vector<BitVec> columns;
    for (unsigned j = 0; j < m; ++j) columns.push_back(certificate.column(j));
    std::sort(columns.begin(), columns.end());
    report.pass = false;
    report.counterexample = std::move(columns);
    return finish();
  }

  const std::vector<std::uint32_t> candidates = set.encodings();
  const std::uint32_t max_lead = IndependentSubsetStream::max_lead(r, m);

  unsigned jobs = opt.jobs ? opt.jobs
                           : std::max(1u, std::thread::hardware_concurrency());
  jobs = std::min<std::uint64_t>(jobs, max_lead);

  std::vector<detail::ChunkResult> chunks;
  if (jobs <= 1) {
    chunks.push_back(detail::scan_chunk(r, m, 1, max_lead + 1, candidates, nullptr));
  } else {
    const std::uint32_t num_chunks =
        std::min<std::uint32_t>(max_lead, jobs * 32);
    const std::uint32_t width = (max_lead + num_chunks - 1) / num_chunks;
    chunks.resize(num_chunks);
    std::atomic<std::uint32_t> next{0};
    std::atomic<bool> abort{false};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto worker = [&]() {
      try {
        for (;;) {
          const std::uint32_t i = next.fetch_add(1);
          if (i >= num_chunks) return;
          const std::uint32_t lo = 1 + i * width;
          const std::uint32_t hi =
              std::min<std::uint64_t>(std::uint64_t{lo} + width, max_lead + 1);
          chunks[i] = detail::scan_chunk(r, m, lo, hi, candidates,
                                         opt.fail_fast ? &abort : nullptr);
          if (chunks[i].failed && opt.fail_fast)
            abort.store(true, std::memory_order_relaxed);
        }
      } catch (...) {
        const std::lock_guard<std::mutex> lock(error_mutex);
        if (!error) error = std::current_exception();
      }
    };
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    if (error) std::rethrow_exception(error);
  }

  report.pass = true;
  for (const auto& chunk : chunks) {
    report.matrices_checked += chunk.checked;
    if (chunk.failed) {
      report.pass = false;
      std::vector<BitVec> columns;
      for (std::uint32_t c : chunk.fail_subset)
        columns.push_back(to_bitvec(c, r));
      report.counterexample = std::move(columns);
      break;
    }
  }
  return finish();
}

/// |{a in F_2^r : wt(aM) = 1}| by exhaustive scan; equals m 2^(r-m) for any
/// rank-m M.
inline std::uint64_t count_good_vectors(const BitMatrix& m) {
  const std::size_t r = m.row_count();
  const unsigned cols = static_cast<unsigned>(m.col_count());
  if (r > kMaxStreamDimension)
    throw std::invalid_argument("count_good_vectors: r beyond desk scale");
  if (rank(m) != cols)
    throw std::invalid_argument("count_good_vectors: matrix must have full column rank");
  std::vector<std::uint32_t> columns;
  for (unsigned j = 0; j < cols; ++j)
    columns.push_back(static_cast<std::uint32_t>(m.column(j).to_uint()));
  std::uint64_t good = 0;
  for (std::uint32_t a = 0; a < (std::uint32_t{1} << r); ++a) {
    unsigned hits = 0;
    for (std::uint32_t c : columns) {
      hits += std::popcount(a & c) & 1;
      if (hits > 1) break;
    }
    good += hits == 1;
  }
  return good;
}

/// Smallest N for which the expected number of uncovered rank-m column sets
/// among N uniform draws falls below one:
///   N > log2 |M_{m,r}| / (-log2(1 - m 2^-m)).
/// With exact_count the number of rank-m matrices is prod_{i<m}(2^r - 2^i);
/// otherwise the crude bound 2^(mr) is used.
inline std::uint64_t required_size_bound(unsigned r, unsigned m,
                                         bool exact_count = true) {
  if (m < 1 || m > r)
    throw std::invalid_argument("required_size_bound: need 1 <= m <= r");
  double log2_matrices = 0.0;
  if (exact_count) {
    for (unsigned i = 0; i < m; ++i)
      log2_matrices +=
          std::log2(std::exp2(static_cast<double>(r)) - std::exp2(static_cast<double>(i)));
  } else {
    log2_matrices = static_cast<double>(m) * r;
  }
  const double divisor = -std::log2(1.0 - m * std::exp2(-static_cast<double>(m)));
  const double threshold = log2_matrices / divisor;
  return static_cast<std::uint64_t>(std::floor(threshold)) + 1;
}

/// Line-oriented report rendering shared by the CLI.
inline void write_report(std::ostream& out, const VerificationReport& report) {
  out << "status: " << (report.pass ? "PASS" : "FAIL") << '\n';
  out << "matrices_checked: " << report.matrices_checked << '\n';
  out << "elapsed_ms: "
      << static_cast<long long>(std::llround(report.elapsed.count())) << '\n';
  if (report.counterexample) {
    out << "counterexample:";
    for (const auto& v : *report.counterexample) out << ' ' << v.to_string();
    out << '\n';
  }
}

}  // namespace gecs
