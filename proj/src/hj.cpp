#include "fanolab/hj.hpp"

#include "fanolab/error.hpp"

namespace fanolab {

std::vector<i64> hj_expand(i64 r, i64 a) {
    if (!(0 < a && a < r) || gcd_i64(r, a) != 1)
        throw Error(ErrorCode::INVALID_ARGUMENT, "hj_expand needs 0 < a < r coprime");
    std::vector<i64> b;
    while (a != 0) {
        i64 q = (r + a - 1) / a;  // ceil(r/a)
        b.push_back(q);
        i64 next_r = a;
        i64 next_a = q * a - r;
        r = next_r;
        a = next_a;
    }
    return b;
}

HJData hj_data(i64 r, i64 a) {
    HJData hj;
    hj.r = r;
    hj.a = a;
    if (r == 1) {  // smooth: empty chain, boundary values only
        hj.s = {0, 1};
        hj.t = {1, 0};
        return hj;
    }
    hj.b = hj_expand(r, a);
    const size_t k = hj.b.size();
    hj.s.assign(k + 2, 0);
    hj.t.assign(k + 2, 0);
    hj.s[0] = 0;
    hj.s[1] = 1;
    for (size_t i = 1; i <= k; ++i)
        hj.s[i + 1] = hj.b[i - 1] * hj.s[i] - hj.s[i - 1];
    hj.t[k + 1] = 0;
    hj.t[k] = 1;
    for (size_t i = k; i >= 1; --i)
        hj.t[i - 1] = hj.b[i - 1] * hj.t[i] - hj.t[i + 1];
    if (hj.s[k + 1] != r || hj.t[0] != r)
        throw Error(ErrorCode::INVALID_ARGUMENT, "HJ boundary identity failed");
    hj.d.reserve(k);
    for (size_t i = 1; i <= k; ++i)
        hj.d.push_back(make_rat(Int(hj.s[i] + hj.t[i]), Int(r)));
    for (auto& di : hj.d) di -= 1;
    return hj;
}

std::vector<Rat> multiplicities_exact(const Rat& m0, const Rat& mk1, const HJData& hj) {
    std::vector<Rat> m;
    m.reserve(hj.s.size());
    for (size_t i = 0; i < hj.s.size(); ++i) {
        Rat v = (Rat(static_cast<long>(hj.t[i])) * m0 + Rat(static_cast<long>(hj.s[i])) * mk1) /
                Rat(static_cast<long>(hj.r));
        m.push_back(v);
    }
    return m;
}

std::vector<i64> multiplicities(i64 m0, i64 mk1, const HJData& hj) {
    auto exact = multiplicities_exact(Rat(static_cast<long>(m0)), Rat(static_cast<long>(mk1)), hj);
    std::vector<i64> m;
    m.reserve(exact.size());
    for (const Rat& v : exact) {
        if (!is_integer(v))
            throw Error(ErrorCode::NON_INTEGRAL,
                        "non-integer exceptional multiplicity (heights inconsistent with cone type)");
        m.push_back(to_i64(v.get_num()));
    }
    return m;
}

Rat vertex_contribution(i64 h_left, i64 h_right, i64 r) {
    if (h_left <= 0 || h_right <= 0 || r <= 0)
        throw Error(ErrorCode::INVALID_ARGUMENT, "vertex_contribution needs positive inputs");
    return make_rat(Int(r), Int(h_left) * Int(h_right));
}

Rat A_sigma(i64 r, i64 a) {
    if (r == 1) return Rat(1);
    HJData hj = hj_data(r, a);
    const size_t k = hj.b.size();
    Rat acc(static_cast<long>(k + 1));
    for (size_t i = 0; i < k; ++i)
        acc -= hj.d[i] * hj.d[i] * Rat(static_cast<long>(hj.b[i]));
    for (size_t i = 0; i + 1 < k; ++i)
        acc += Rat(2) * hj.d[i] * hj.d[i + 1];
    return acc;
}

Rat degree_via_content(const SingularityContent& content) {
    Rat acc(12);
    acc -= Rat(static_cast<long>(content.k_total));
    for (const RConeData& rc : content.basket)
        acc -= A_sigma(rc.r, rc.a);
    return acc;
}

i64 power_selection(i64 r, i64 a, i64 h) {
    Rat base = A_sigma(r, a) + 1;
    for (i64 p = 1; p < h; ++p) {
        Rat val = base - make_rat(Int(2 * p), Int(h));
        if (is_integer(val)) return p;
    }
    throw Error(ErrorCode::UNSUPPORTED_CONE,
                "no power in [1, h-1] makes A(sigma)+1-2p/h integral");
}

Int m_sigma(i64 r, i64 a) {
    ConeType t{r, a};
    i64 h = cone_type_height(t);
    i64 p = power_selection(r, a, h);
    Rat val = A_sigma(r, a) + 1 - make_rat(Int(2 * p), Int(h));
    if (!is_integer(val))
        throw Error(ErrorCode::NON_INTEGRAL, "m(sigma) failed to be an integer");
    return val.get_num();
}

} // namespace fanolab
