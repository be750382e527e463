#pragma once

#include <cstdint>
#include <string>

#include "cyclo/sparse_matrix.hpp"

namespace cyclo::gf2 {

using Word = std::uint64_t;

enum class Kernel { scalar, avx2, neon };

/// Reference kernel: dst ^= src, word by word.
void xor_words_scalar(Word* dst, const Word* src, std::size_t count);

/// dst ^= src through the active kernel.
void xor_words(Word* dst, const Word* src, std::size_t count);

bool kernel_available(Kernel k);
Kernel active_kernel();
std::string kernel_name(Kernel k);

/// Pin the kernel (tests, CYCLO_SIMD). Throws when unavailable on this CPU.
void force_kernel(Kernel k);
/// Back to automatic selection (CYCLO_SIMD respected, then best available).
void reset_kernel();

/// Rank of the matrix over GF(2). Reduces the mod-2 image, so entries like
/// +-2 vanish.
std::int64_t rank(const SparseIntMatrix& m);

} // namespace cyclo::gf2
