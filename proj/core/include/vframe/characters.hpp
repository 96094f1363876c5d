#pragma once

// Graded dimensions of the Ising modules, frame modules, code VOAs and
// explicit frame decompositions. All series are graded dimensions without
// the q^(-c/24) prefactor unless `with_vacuum_prefactor` is applied.

#include <cstdint>

#include "vframe/gf2.hpp"
#include "vframe/labels.hpp"
#include "vframe/qseries.hpp"

namespace vframe {

// Character of L(1/2, h) through exponent `truncation`, computed from the
// free-fermion products
//   ch_0 + ch_1/2 = prod_{k>=1} (1 + q^(k-1/2)),
//   ch_0 - ch_1/2 = prod_{k>=1} (1 - q^(k-1/2)),
//   ch_1/16       = q^(1/16) prod_{k>=1} (1 + q^k).
// Results are memoised per (h, truncation); safe to call concurrently.
QSeries ising_character(IsingLabel h, std::int64_t truncation = kDefaultTruncation);

// Product of the coordinate characters.
QSeries frame_module_character(const FrameModuleLabel& m,
                               std::int64_t truncation = kDefaultTruncation);

// Character of the code VOA M_C: sum over codewords alpha of
// prod_i ch_{alpha_i/2}, grouped by weight as
// sum_w A_w(C) ch_1/2^w ch_0^(n-w). ValidationError if C is not even.
QSeries code_voa_character(const LinearCode& c, std::int64_t truncation = kDefaultTruncation);

// Sum of multiplicity * frame_module_character over the entries.
QSeries frame_decomposition_character(const FrameDecomposition& d,
                                      std::int64_t truncation = kDefaultTruncation);

// Multiplies by q^(-c/24) with c = n/2, i.e. shifts exponents by -n/48.
QSeries with_vacuum_prefactor(const QSeries& s, std::size_t frame_length);

}  // namespace vframe
