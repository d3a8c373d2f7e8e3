#pragma once

// Data-parallel kernels behind `label_states` and `generate_partition`.
// Each kernel has an OpenMP version and a serial reference; the two must
// agree exactly (tests/test_model.cpp, bench/bench_kernels.cpp).

#include "mak/eval.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace mak::kernels {

inline constexpr std::size_t parallel_threshold = 512;

/// Bottom-up labeling. Common knowledge is a backward worklist search from
/// the violating states.
[[nodiscard]] StateLabels label_serial(const KripkeStructure& m, const Formula& f);

/// Same result; per-state loops are split across threads and common knowledge
/// is a Jacobi-style fixpoint of parallel sweeps.
[[nodiscard]] StateLabels label_parallel(const KripkeStructure& m, const Formula& f);

using Adjacency = std::vector<std::vector<std::size_t>>;

/// succ[s] = { t | keys[t] == keys[s] }, by pairwise comparison.
[[nodiscard]] Adjacency equal_key_successors_serial(std::span<const std::int64_t> keys);

/// Same relation via hash buckets, with successor lists emitted in parallel.
[[nodiscard]] Adjacency equal_key_successors_parallel(std::span<const std::int64_t> keys);

} // namespace mak::kernels
