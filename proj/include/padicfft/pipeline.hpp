#pragma once

#include "padicfft/cz_tower.hpp"
#include "padicfft/fft.hpp"
#include "padicfft/hensel.hpp"
#include "padicfft/planner.hpp"

namespace padicfft {

inline constexpr u64 kDefaultSeed = 0x5eed;
inline constexpr unsigned kDefaultPrecision = 32;

struct PipelineOptions {
  u64 seed = kDefaultSeed;
  /// Run the transform in (Z/p^K)[X]/f~ for the expanded lifted factor f~
  /// instead of directly in (Z/p^K)[X]/F.
  bool expand_factor = false;
  /// Counts the tower and lift work.
  OpCounter* setup_counter = nullptr;
};

/// Everything needed to transform at length s over Z/p^K.
struct Pipeline {
  RootOfUnity root;
  LiftResult lift;
  FFTPlan plan;
};

Pipeline build_pipeline(u64 p, const FactoredOrder& s, unsigned precision, const PipelineOptions& options = {});

/// Product over Z/p^K with s chosen by the planner for N = deg f + deg g.
ZPoly poly_multiply(const ZPoly& f, const ZPoly& g, u64 p, unsigned precision, const PipelineOptions& options = {});

}  // namespace padicfft
