#pragma once

// Hirzebruch-Jung continued fractions, the s/t/d sequences, exceptional
// multiplicities, vertex monodromy contributions, the degree correction
// A(sigma), power selection and the integer corrections m(sigma).

#include "fanolab/cones.hpp"
#include "fanolab/lattice.hpp"
#include "fanolab/rational.hpp"

#include <vector>

namespace fanolab {

struct HJData {
    i64 r = 0;
    i64 a = 0;
    std::vector<i64> b;  // [b1..bk], all >= 2, continued fraction of r/a
    std::vector<i64> s;  // s0..s_{k+1}, s0 = 0, s1 = 1, s_{k+1} = r
    std::vector<i64> t;  // t0..t_{k+1}, t0 = r, tk = 1, t_{k+1} = 0
    std::vector<Rat> d;  // d1..dk, d_i = (s_i + t_i)/r - 1
};

// Unique all->=2 expansion of r/a; requires 0 < a < r, gcd(r,a) = 1.
std::vector<i64> hj_expand(i64 r, i64 a);

HJData hj_data(i64 r, i64 a);

// Exceptional multiplicities m_0..m_{k+1} for adjacent edge heights m0 and
// mk1: m_i = (t_i m0 + s_i mk1)/r, which must be integral for geometrically
// consistent input.
std::vector<i64> multiplicities(i64 m0, i64 mk1, const HJData& hj);
std::vector<Rat> multiplicities_exact(const Rat& m0, const Rat& mk1, const HJData& hj);

// r/(h_left*h_right): the beta-coefficient a vertex subtracts from alpha.
Rat vertex_contribution(i64 h_left, i64 h_right, i64 r);

// A(sigma) = k + 1 - sum d_i^2 b_i + 2 sum d_i d_{i+1}.
Rat A_sigma(i64 r, i64 a);

// 12 - k - sum A(sigma); equals the anticanonical degree.
Rat degree_via_content(const SingularityContent& content);

// Smallest p in [1, h-1] with A(sigma) + 1 - 2p/h an integer; h is the block
// order (the cone height; h = r for width-one cones).
i64 power_selection(i64 r, i64 a, i64 h);

// A(sigma) + 1 - 2p/h at the selected power; always an integer.
Int m_sigma(i64 r, i64 a);

} // namespace fanolab
