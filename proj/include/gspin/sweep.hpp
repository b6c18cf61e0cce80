#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <vector>

#include "gspin/sparse.hpp"

namespace gspin {

struct SweepOptions {
  std::uint64_t seed = 1;
  // Grids up to this many tuples run exhaustively; larger ones are sampled.
  std::int64_t max_cases = 2'000'000;
  int samples = 1000;
};

// Cartesian grid sweep that degrades to seeded sampling on large grids.
// The sample set is fixed up front, so results do not depend on scheduling.
class Sweep {
 public:
  Sweep(const SweepOptions& opt, std::vector<Index> dims) : dims_(std::move(dims)) {
    std::int64_t total = 1;
    for (Index d : dims_) {
      if (d <= 0) {
        total = 0;
        break;
      }
      if (total > opt.max_cases / d + 1) total = opt.max_cases + 1;
      else total *= d;
    }
    exhaustive_ = total <= opt.max_cases;
    if (!exhaustive_) {
      std::mt19937_64 rng(opt.seed);
      tuples_.reserve(opt.samples);
      for (int s = 0; s < opt.samples; ++s) {
        std::vector<Index> t(dims_.size());
        for (size_t k = 0; k < dims_.size(); ++k)
          t[k] = static_cast<Index>(rng() % static_cast<std::uint64_t>(dims_[k]));
        tuples_.push_back(std::move(t));
      }
    }
  }

  bool exhaustive() const { return exhaustive_; }
  const char* mode() const { return exhaustive_ ? "exact" : "sampled"; }

  // f returns true when the case passes; the first failing tuple is returned.
  std::optional<std::vector<Index>> run(
      const std::function<bool(const std::vector<Index>&)>& f) const {
    if (exhaustive_) {
      std::vector<Index> t(dims_.size(), 0);
      if (dims_.empty()) return std::nullopt;
      for (Index d : dims_)
        if (d == 0) return std::nullopt;
      while (true) {
        if (!f(t)) return t;
        size_t k = dims_.size();
        while (k > 0) {
          --k;
          if (++t[k] < dims_[k]) break;
          t[k] = 0;
          if (k == 0) return std::nullopt;
        }
      }
    }
    for (const auto& t : tuples_)
      if (!f(t)) return t;
    return std::nullopt;
  }

 private:
  std::vector<Index> dims_;
  bool exhaustive_ = true;
  std::vector<std::vector<Index>> tuples_;
};

}  // namespace gspin
