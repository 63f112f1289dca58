#pragma once

// Local monodromy blocks for rigid cones, assembly of the integral global
// monodromy of Sol(L_f) at t = 0, recovery of the singularity content from
// a matrix, and exact eigenvalue multisets.

#include "fanolab/cones.hpp"
#include "fanolab/polygon.hpp"
#include "fanolab/rational.hpp"

#include <optional>
#include <string>
#include <vector>

namespace fanolab {

using RatMatrix = std::vector<std::vector<Rat>>;  // cols[j][i]: column j = image of basis j

struct MonodromyMatrix {
    std::vector<std::string> basis;  // "alpha", "beta", then block cycles
    RatMatrix cols;

    int size() const { return static_cast<int>(basis.size()); }
    const Rat& entry(int row, int col) const { return cols[static_cast<size_t>(col)][static_cast<size_t>(row)]; }
};

struct LocalBlock {
    RConeData type;
    i64 power = 0;                 // p with A(sigma) + 1 - 2p/h integral
    i64 cycles = 0;                // 2g = (h-1)w
    RatMatrix action;              // on (beta, c_1..c_cycles); column 0 = beta
    Rat alpha_beta;                // beta-coefficient of omega^p(alpha) - alpha
    std::vector<Rat> alpha_cycles; // cycle part (determinate candidate)
    std::vector<std::vector<Rat>> ambiguity_set;  // all candidate cycle parts
};

// Unified chain-model block for a rigid cone of height h and width w
// (h odd if w = 1); raised to the given power.
LocalBlock block_chain(i64 h, i64 w, i64 power, const RConeData& type);

LocalBlock block_one_third();                   // 1/3(1,1), h=3, w=1
LocalBlock block_one_quarter();                 // 1/4(1,1), h=2, w=2 (printed matrix)
LocalBlock block_width1(i64 r, i64 power);      // odd r >= 3, w=1
LocalBlock block_general(i64 h, i64 w, const std::vector<int>& labeling, i64 power);

// All admissible second-polygon edge labelings for w >= 2; each sequence
// lists the labels (1-based indices) in anticlockwise position order.
std::vector<std::vector<int>> enumerate_labelings(i64 h, i64 w);

MonodromyMatrix assemble_monodromy(const FanoPolygon& p);
MonodromyMatrix assemble_monodromy(i64 k_total, const std::vector<RConeData>& basket);

// Reads block sizes, orders and powers back off an assembled matrix. When
// two cone types share height, width and selected power their blocks
// coincide (first case: 1/8(1,1) vs 1/8(1,5)) and the matrix only
// determines the content up to that aliasing; the smallest matching a is
// reported, with k shifted consistently.
SingularityContent recover_content(const MonodromyMatrix& m);

// (order of the root of unity, multiplicity per primitive root); order 1 is
// the eigenvalue 1.
std::vector<std::pair<i64, i64>> eigenvalue_multiset(const MonodromyMatrix& m);

// Exact characteristic polynomial, ascending coefficients.
std::vector<Rat> characteristic_polynomial(const MonodromyMatrix& m);

} // namespace fanolab
