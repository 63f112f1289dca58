#include "fanolab/monodromy.hpp"

#include "fanolab/error.hpp"
#include "fanolab/hj.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace fanolab {

namespace {

RatMatrix identity(int n) {
    RatMatrix m(static_cast<size_t>(n), std::vector<Rat>(static_cast<size_t>(n), Rat(0)));
    for (int i = 0; i < n; ++i) m[static_cast<size_t>(i)][static_cast<size_t>(i)] = 1;
    return m;
}

RatMatrix mat_mult(const RatMatrix& a, const RatMatrix& b) {
    const size_t n = a.size();
    RatMatrix out(b.size(), std::vector<Rat>(n, Rat(0)));
    for (size_t j = 0; j < b.size(); ++j)
        for (size_t k = 0; k < n; ++k) {
            if (b[j][k] == 0) continue;
            for (size_t i = 0; i < n; ++i) {
                if (a[k][i] == 0) continue;
                out[j][i] += a[k][i] * b[j][k];
            }
        }
    return out;
}

RatMatrix mat_pow(RatMatrix base, i64 e) {
    RatMatrix acc = identity(static_cast<int>(base.size()));
    while (e > 0) {
        if (e & 1) acc = mat_mult(base, acc);
        base = mat_mult(base, base);
        e >>= 1;
    }
    return acc;
}

bool mat_equal(const RatMatrix& a, const RatMatrix& b) { return a == b; }

// Exact solve of (columns = basis vectors) * x = rhs; empty on no solution.
std::optional<std::vector<Rat>> solve_coordinates(const std::vector<std::vector<Rat>>& basis,
                                                  std::vector<Rat> rhs) {
    const size_t dim = rhs.size();
    const size_t nb = basis.size();
    std::vector<std::vector<Rat>> a(dim, std::vector<Rat>(nb, Rat(0)));
    for (size_t j = 0; j < nb; ++j)
        for (size_t i = 0; i < dim; ++i) a[i][j] = basis[j][i];
    std::vector<int> pivot_col(dim, -1);
    size_t row = 0;
    for (size_t col = 0; col < nb && row < dim; ++col) {
        size_t sel = row;
        while (sel < dim && a[sel][col] == 0) ++sel;
        if (sel == dim) continue;
        std::swap(a[sel], a[row]);
        std::swap(rhs[sel], rhs[row]);
        Rat inv = Rat(1) / a[row][col];
        for (size_t j = col; j < nb; ++j) a[row][j] *= inv;
        rhs[row] *= inv;
        for (size_t i = 0; i < dim; ++i) {
            if (i == row || a[i][col] == 0) continue;
            Rat f = a[i][col];
            for (size_t j = col; j < nb; ++j) a[i][j] -= f * a[row][j];
            rhs[i] -= f * rhs[row];
        }
        pivot_col[row] = static_cast<int>(col);
        ++row;
    }
    for (size_t i = row; i < dim; ++i)
        if (rhs[i] != 0) return std::nullopt;
    std::vector<Rat> x(nb, Rat(0));
    for (size_t i = 0; i < row; ++i) x[static_cast<size_t>(pivot_col[i])] = rhs[i];
    return x;
}

} // namespace

LocalBlock block_chain(i64 h, i64 w, i64 power, const RConeData& type) {
    if (h < 2 || w < 1 || power < 1 || power >= h)
        throw Error(ErrorCode::INVALID_ARGUMENT, "block_chain needs h >= 2, w >= 1, 0 < power < h");
    const i64 hw = h * w;
    const i64 nc = (h - 1) * w;
    auto cyc = [&](i64 i) { return ((i - 1) % hw + hw) % hw; };  // 1-based -> 0-based

    // Chain model: two glued hw-gons, edges c_1..c_hw, rotation c_i -> c_{i+w};
    // homology basis beta = sum c_i, e_j = c_j + ... + c_{j+w-1}.
    std::vector<std::vector<Rat>> basis;  // in c-coordinates
    {
        std::vector<Rat> beta(static_cast<size_t>(hw), Rat(1));
        basis.push_back(beta);
        for (i64 j = 1; j <= nc; ++j) {
            std::vector<Rat> e(static_cast<size_t>(hw), Rat(0));
            for (i64 k = 0; k < w; ++k) e[static_cast<size_t>(cyc(j + k))] += 1;
            basis.push_back(e);
        }
    }
    auto rotated = [&](const std::vector<Rat>& v) {
        std::vector<Rat> out(v.size());
        for (i64 i = 0; i < hw; ++i) out[static_cast<size_t>((i + w) % hw)] = v[static_cast<size_t>(i)];
        return out;
    };

    // One-step action on (beta, e_1..e_nc).
    RatMatrix step(static_cast<size_t>(nc + 1));
    for (i64 j = 0; j <= nc; ++j) {
        auto x = solve_coordinates(basis, rotated(basis[static_cast<size_t>(j)]));
        if (!x)
            throw Error(ErrorCode::UNSUPPORTED_CONE, "chain model basis not rotation-stable");
        step[static_cast<size_t>(j)] = *x;
    }

    // alpha crosses c_hw; omega(alpha) - alpha + (2/h) beta is homologous to
    // c_w + c_hw + sum_{i<w} c_i + sum_{i<w} c_{i + k_i w}, one k_i per i.
    std::vector<std::pair<Rat, std::vector<Rat>>> candidates;  // (beta coeff, cycle part)
    {
        std::vector<i64> k_tuple(static_cast<size_t>(w > 0 ? w - 1 : 0), 0);
        auto emit = [&]() {
            std::vector<Rat> v(static_cast<size_t>(hw), Rat(0));
            v[static_cast<size_t>(cyc(w))] += 1;
            v[static_cast<size_t>(cyc(hw))] += 1;
            for (i64 i = 1; i < w; ++i) v[static_cast<size_t>(cyc(i))] += 1;
            for (i64 i = 1; i < w; ++i)
                v[static_cast<size_t>(cyc(i + k_tuple[static_cast<size_t>(i - 1)] * w))] += 1;
            auto x = solve_coordinates(basis, v);
            if (!x) return;
            Rat beta_coeff = (*x)[0] - make_rat(Int(2), Int(h));
            std::vector<Rat> cycles((*x).begin() + 1, (*x).end());
            candidates.emplace_back(beta_coeff, std::move(cycles));
        };
        // enumerate k tuples, k_i = 1 first so the determinate display choice leads
        std::vector<i64> order;
        order.push_back(1);
        for (i64 k = 0; k < h; ++k)
            if (k != 1) order.push_back(k);
        const i64 choices = w - 1;
        std::vector<size_t> idx(static_cast<size_t>(choices), 0);
        if (choices == 0) {
            emit();
        } else {
            while (true) {
                for (i64 i = 0; i < choices; ++i)
                    k_tuple[static_cast<size_t>(i)] = order[idx[static_cast<size_t>(i)]];
                emit();
                i64 pos = choices - 1;
                while (pos >= 0) {
                    if (++idx[static_cast<size_t>(pos)] < order.size()) break;
                    idx[static_cast<size_t>(pos)] = 0;
                    --pos;
                }
                if (pos < 0) break;
            }
        }
    }
    if (candidates.empty())
        throw Error(ErrorCode::UNSUPPORTED_CONE, "no admissible alpha image in the chain model");
    for (const auto& [bc, cyc_part] : candidates)
        if (bc != candidates[0].first)
            throw Error(ErrorCode::UNSUPPORTED_CONE, "ambiguous beta coefficient in chain model");

    // Full matrix on (alpha, beta, e_1..e_nc) for one step, per candidate;
    // then raise to the requested power.
    LocalBlock blk;
    blk.type = type;
    blk.power = power;
    blk.cycles = nc;
    std::set<std::vector<Rat>> seen;
    bool first_candidate = true;
    for (const auto& [beta_coeff, cycle_part] : candidates) {
        RatMatrix full(static_cast<size_t>(nc + 2), std::vector<Rat>(static_cast<size_t>(nc + 2), Rat(0)));
        full[0][0] = 1;
        full[0][1] = beta_coeff;
        for (i64 j = 0; j < nc; ++j) full[0][static_cast<size_t>(j + 2)] = cycle_part[static_cast<size_t>(j)];
        for (i64 j = 0; j <= nc; ++j)
            for (i64 i = 0; i <= nc; ++i)
                full[static_cast<size_t>(j + 1)][static_cast<size_t>(i + 1)] =
                    step[static_cast<size_t>(j)][static_cast<size_t>(i)];
        RatMatrix powered = mat_pow(full, power);
        std::vector<Rat> alpha_cycles(static_cast<size_t>(nc));
        for (i64 i = 0; i < nc; ++i) alpha_cycles[static_cast<size_t>(i)] = powered[0][static_cast<size_t>(i + 2)];
        if (first_candidate) {
            blk.alpha_beta = powered[0][1];
            blk.alpha_cycles = alpha_cycles;
            blk.action.assign(static_cast<size_t>(nc + 1), std::vector<Rat>(static_cast<size_t>(nc + 1), Rat(0)));
            for (i64 j = 0; j <= nc; ++j)
                for (i64 i = 0; i <= nc; ++i)
                    blk.action[static_cast<size_t>(j)][static_cast<size_t>(i)] =
                        powered[static_cast<size_t>(j + 1)][static_cast<size_t>(i + 1)];
            first_candidate = false;
        }
        if (!seen.count(alpha_cycles)) {
            seen.insert(alpha_cycles);
            blk.ambiguity_set.push_back(std::move(alpha_cycles));
        }
    }
    return blk;
}

LocalBlock block_width1(i64 r, i64 power) {
    if (r < 3 || r % 2 == 0)
        throw Error(ErrorCode::INVALID_ARGUMENT, "width-one blocks need odd r >= 3");
    return block_chain(r, 1, power, RConeData{r, 1, r, 1});
}

LocalBlock block_one_third() {
    return block_chain(3, 1, 1, RConeData{3, 1, 3, 1});
}

LocalBlock block_one_quarter() {
    // Printed 1/4(1,1) matrix: omega(alpha) = alpha + beta - a1 - a2,
    // omega(beta) = beta, omega(a_i) = -a_i.
    LocalBlock blk;
    blk.type = RConeData{4, 1, 2, 2};
    blk.power = 1;
    blk.cycles = 2;
    blk.action = identity(3);
    blk.action[1][1] = -1;
    blk.action[2][2] = -1;
    blk.alpha_beta = 1;
    blk.alpha_cycles = {Rat(-1), Rat(-1)};
    blk.ambiguity_set = {blk.alpha_cycles};
    return blk;
}

std::vector<std::vector<int>> enumerate_labelings(i64 h, i64 w) {
    if (w < 2)
        throw Error(ErrorCode::INVALID_ARGUMENT, "labelings are defined for w >= 2");
    if (h < 2)
        throw Error(ErrorCode::INVALID_ARGUMENT, "labelings need h >= 2");
    const i64 hw = h * w;
    auto wrap = [&](i64 t) { return ((t - 1) % hw + hw) % hw + 1; };  // into [1, hw]

    // Second polygon runs the q's clockwise; in anticlockwise position order
    // vertex t is q_{w - (t mod w)} (value w when t = 0 mod w). Position t
    // hosts the label class j with q_j = vertex(t) and q_{j+1} = vertex(t-1).
    auto vertex_q = [&](i64 t) {
        i64 m = ((t % w) + w) % w;
        return w - m == 0 ? w : w - m;
    };
    std::vector<i64> class_at_residue(static_cast<size_t>(w));  // residue of t mod w -> class
    for (i64 t = 1; t <= w; ++t) {
        i64 j = vertex_q(t);
        i64 jn = j % w + 1;
        if (vertex_q(t - 1) != jn)
            throw Error(ErrorCode::INVALID_ARGUMENT, "labeling vertex pattern inconsistent");
        class_at_residue[static_cast<size_t>(t % w)] = j;
    }
    std::vector<i64> residue_of_class(static_cast<size_t>(w + 1));
    for (i64 rres = 0; rres < w; ++rres)
        residue_of_class[static_cast<size_t>(class_at_residue[static_cast<size_t>(rres)])] = rres;

    auto slots = [&](i64 cls) {
        std::vector<i64> out;
        for (i64 t = 1; t <= hw; ++t)
            if (t % w == residue_of_class[static_cast<size_t>(cls)]) out.push_back(t);
        return out;
    };

    // Class w is pinned by rotation: pos(c_hw) = hw, so pos(c_w) = w.
    std::vector<std::vector<int>> out;
    std::vector<i64> offset(static_cast<size_t>(w + 1), 0);
    offset[static_cast<size_t>(w)] = w;

    // Sequential choice of offsets for classes 1..w-1; the predecessor rule
    // pos(c_{j+1}) != pos(c_j) - 1 excludes one slot per step, and the final
    // class is additionally constrained against the pinned class. When its
    // two exclusions coincide the largest remaining slot is dropped, which
    // keeps the count at (h-1)^{w-2}(h-2) and reproduces the printed h=w=3
    // pair.
    auto emit = [&]() {
        std::vector<int> seq(static_cast<size_t>(hw), 0);
        for (i64 j = 1; j <= w; ++j)
            for (i64 m = 0; m < h; ++m) {
                i64 label = j + m * w;
                i64 pos = wrap(offset[static_cast<size_t>(j)] + m * w);
                seq[static_cast<size_t>(pos - 1)] = static_cast<int>(label);
            }
        out.push_back(std::move(seq));
    };

    std::vector<i64> chosen;
    auto rec = [&](auto&& self, i64 cls) -> void {
        if (cls == w) {
            emit();
            return;
        }
        std::vector<i64> cand = slots(cls);
        std::vector<i64> excl;
        if (cls == 1)
            excl.push_back(wrap(offset[static_cast<size_t>(w)] - 1 - w));
        else
            excl.push_back(wrap(offset[static_cast<size_t>(cls - 1)] - 1));
        if (cls == w - 1) excl.push_back(wrap(offset[static_cast<size_t>(w)] + 1));
        std::vector<i64> remaining;
        for (i64 s : cand)
            if (std::find(excl.begin(), excl.end(), s) == excl.end()) remaining.push_back(s);
        if (cls == w - 1 && excl.size() == 2 && excl[0] == excl[1] && !remaining.empty())
            remaining.pop_back();  // drop the largest remaining slot
        for (i64 s : remaining) {
            offset[static_cast<size_t>(cls)] = s;
            self(self, cls + 1);
        }
    };
    if (w == 2) {
        // single class to choose, constrained from both sides
        std::vector<i64> cand = slots(1);
        std::vector<i64> excl{wrap(offset[2] - 1 - w), wrap(offset[2] + 1)};
        for (i64 s : cand) {
            if (std::find(excl.begin(), excl.end(), s) != excl.end()) continue;
            offset[1] = s;
            emit();
        }
    } else {
        rec(rec, 1);
    }
    return out;
}

LocalBlock block_general(i64 h, i64 w, const std::vector<int>& labeling, i64 power) {
    if (w < 2)
        throw Error(ErrorCode::INVALID_ARGUMENT, "block_general needs w >= 2");
    auto all = enumerate_labelings(h, w);
    if (std::find(all.begin(), all.end(), labeling) == all.end())
        throw Error(ErrorCode::INVALID_ARGUMENT, "labeling is not admissible for (h, w)");
    // The induced action on (beta, e_*) is labeling-independent; the
    // labeling ambiguity shows up only in the alpha candidates, which the
    // chain model enumerates in full.
    return block_chain(h, w, power, RConeData{h * w, 0, h, w});
}

namespace {

struct BlockSpec {
    RConeData data;
    int edge_index = 0;
};

LocalBlock build_block(const RConeData& rc) {
    if (rc.r == 4 && rc.a == 1) return block_one_quarter();
    i64 h = rc.height, w = rc.width;
    if (h < 2)
        throw Error(ErrorCode::UNSUPPORTED_CONE, "rigid cone of height < 2 has no block");
    i64 p = power_selection(rc.r, rc.a, h);
    return block_chain(h, w, p, rc);
}

} // namespace

MonodromyMatrix assemble_monodromy(i64 k_total, const std::vector<RConeData>& basket) {
    SingularityContent content{k_total, basket};
    const Rat k2 = degree_via_content(content);
    std::vector<BlockSpec> specs;
    for (int i = 0; i < static_cast<int>(basket.size()); ++i)
        specs.push_back({basket[static_cast<size_t>(i)], i});
    std::sort(specs.begin(), specs.end(), [](const BlockSpec& a, const BlockSpec& b) {
        auto ka = std::tuple(a.data.height, a.data.width, a.data.r, a.data.a, a.edge_index);
        auto kb = std::tuple(b.data.height, b.data.width, b.data.r, b.data.a, b.edge_index);
        return ka < kb;
    });

    std::vector<LocalBlock> blocks;
    Rat beta_of_alpha = -k2;
    for (const BlockSpec& s : specs) {
        LocalBlock b = build_block(s.data);
        // Per-cone integer identity: A(sigma) + local beta coefficient in Z.
        Rat m_corr = A_sigma(s.data.r, s.data.a) + b.alpha_beta;
        if (!is_integer(m_corr))
            throw Error(ErrorCode::NON_INTEGRAL, "per-cone correction is not an integer");
        beta_of_alpha += b.alpha_beta;
        blocks.push_back(std::move(b));
    }
    if (!is_integer(beta_of_alpha))
        throw Error(ErrorCode::NON_INTEGRAL, "assembled beta coefficient is not an integer");

    int n = 2;
    for (const auto& b : blocks) n += static_cast<int>(b.cycles);
    MonodromyMatrix m;
    m.basis.push_back("alpha");
    m.basis.push_back("beta");
    {
        int bi = 1;
        for (const auto& b : blocks) {
            for (i64 j = 1; j <= b.cycles; ++j)
                m.basis.push_back("c" + std::to_string(j) + "#" + std::to_string(bi));
            ++bi;
        }
    }
    m.cols.assign(static_cast<size_t>(n), std::vector<Rat>(static_cast<size_t>(n), Rat(0)));
    // beta column
    m.cols[1][1] = 1;
    // alpha column
    m.cols[0][0] = 1;
    m.cols[0][1] = beta_of_alpha;
    {
        int base = 2;
        for (const auto& b : blocks) {
            for (i64 j = 0; j < b.cycles; ++j)
                m.cols[0][static_cast<size_t>(base + j)] = b.alpha_cycles[static_cast<size_t>(j)];
            base += static_cast<int>(b.cycles);
        }
    }
    // block columns
    {
        int base = 2;
        for (const auto& b : blocks) {
            for (i64 j = 1; j <= b.cycles; ++j) {
                std::vector<Rat>& col = m.cols[static_cast<size_t>(base + j - 1)];
                col[1] = b.action[static_cast<size_t>(j)][0];
                for (i64 i = 1; i <= b.cycles; ++i)
                    col[static_cast<size_t>(base + i - 1)] = b.action[static_cast<size_t>(j)][static_cast<size_t>(i)];
            }
            base += static_cast<int>(b.cycles);
        }
    }
    for (const auto& col : m.cols)
        for (const Rat& v : col)
            if (!is_integer(v))
                throw Error(ErrorCode::NON_INTEGRAL, "assembled matrix has a non-integer entry");
    return m;
}

MonodromyMatrix assemble_monodromy(const FanoPolygon& p) {
    SingularityContent content = singularity_content(p);
    Rat k2 = p.anticanonical_degree();
    if (k2 != degree_via_content(content) || k2 != p.dual_volume())
        throw Error(ErrorCode::NON_INTEGRAL, "degree cross-check failed");
    return assemble_monodromy(content.k_total, content.basket);
}

SingularityContent recover_content(const MonodromyMatrix& m) {
    const int n = m.size();
    if (n < 2 || m.entry(0, 0) != 1)
        throw Error(ErrorCode::UNRECOGNIZED_BLOCK, "matrix is not in the assembled basis layout");
    for (int i = 0; i < n; ++i)
        if (m.entry(i, 1) != (i == 1 ? Rat(1) : Rat(0)))
            throw Error(ErrorCode::UNRECOGNIZED_BLOCK, "beta column is not fixed");

    // Partition cycle indices into consecutive diagonal blocks.
    std::vector<std::pair<int, int>> ranges;
    int start = 2;
    while (start < n) {
        int end = start;
        bool grew = true;
        while (grew) {
            grew = false;
            for (int j = start; j <= end; ++j)
                for (int i = 2; i < n; ++i)
                    if (m.entry(i, j) != 0 && i > end) end = i, grew = true;
            for (int j = end + 1; j < n; ++j)
                for (int i = start; i <= end; ++i)
                    if (m.entry(i, j) != 0 && j > end) { end = j; grew = true; }
        }
        ranges.push_back({start, end});
        start = end + 1;
    }

    SingularityContent content;
    Rat m_sum(0);
    for (auto [lo, hi] : ranges) {
        int sz = hi - lo + 1;  // 2g
        // restricted action on (beta, cycles)
        RatMatrix bm(static_cast<size_t>(sz + 1), std::vector<Rat>(static_cast<size_t>(sz + 1), Rat(0)));
        bm[0][0] = 1;
        for (int j = 0; j < sz; ++j) {
            bm[static_cast<size_t>(j + 1)][0] = m.entry(1, lo + j);
            for (int i = 0; i < sz; ++i)
                bm[static_cast<size_t>(j + 1)][static_cast<size_t>(i + 1)] = m.entry(lo + i, lo + j);
        }
        i64 order = 0;
        RatMatrix acc = identity(sz + 1);
        for (i64 h = 1; h <= sz + 1; ++h) {
            acc = mat_mult(bm, acc);
            if (mat_equal(acc, identity(sz + 1))) {
                order = h;
                break;
            }
        }
        if (order < 2 || (2LL * (sz / 2)) != sz || sz % (order - 1) != 0)
            throw Error(ErrorCode::UNRECOGNIZED_BLOCK, "block has no admissible order");
        i64 h = order;
        i64 w = sz / (h - 1);
        i64 r = h * w;
        bool matched = false;
        for (i64 a = 1; a < r && !matched; ++a) {
            if (gcd_i64(a, r) != 1) continue;
            ConeType t{r, a};
            // normalized representative only
            {
                i64 a_inv = 0;
                for (i64 x = 1; x < r; ++x)
                    if ((a * x) % r == 1) { a_inv = x; break; }
                if (a_inv < a) continue;
            }
            if (cone_type_width(t) != w) continue;
            RConeData rc{r, a, h, w};
            LocalBlock blk;
            try {
                blk = build_block(rc);
            } catch (const Error&) {
                continue;
            }
            // Candidate matches when its (beta, cycles) action equals the block.
            if (blk.action == bm) {
                content.basket.push_back(rc);
                m_sum += A_sigma(r, a) + blk.alpha_beta;
                matched = true;
            }
        }
        if (!matched)
            throw Error(ErrorCode::UNRECOGNIZED_BLOCK, "no rigid-cone block matches");
    }
    Rat b = m.entry(1, 0);
    Rat k = Rat(12) + b - m_sum;
    if (!is_integer(k) || k < 0)
        throw Error(ErrorCode::UNRECOGNIZED_BLOCK, "recovered k is not a nonnegative integer");
    content.k_total = to_i64(k.get_num());
    std::sort(content.basket.begin(), content.basket.end());
    return content;
}

std::vector<Rat> characteristic_polynomial(const MonodromyMatrix& m) {
    // Faddeev-LeVerrier: exact, ascending-coefficient output.
    const int n = m.size();
    RatMatrix a = m.cols;
    RatMatrix mk = identity(n);
    std::vector<Rat> c(static_cast<size_t>(n + 1), Rat(0));
    c[static_cast<size_t>(n)] = 1;  // lambda^n
    for (int k = 1; k <= n; ++k) {
        mk = mat_mult(a, mk);
        Rat tr(0);
        for (int i = 0; i < n; ++i) tr += mk[static_cast<size_t>(i)][static_cast<size_t>(i)];
        Rat ck = -tr / Rat(k);
        c[static_cast<size_t>(n - k)] = ck;
        for (int i = 0; i < n; ++i) mk[static_cast<size_t>(i)][static_cast<size_t>(i)] += ck;
    }
    return c;
}

namespace {

std::vector<Rat> poly_divide_exact(const std::vector<Rat>& num, const std::vector<Rat>& den,
                                   bool* ok) {
    std::vector<Rat> rem = num;
    const size_t dn = den.size() - 1;
    if (rem.size() <= dn) {
        *ok = false;
        return {};
    }
    std::vector<Rat> q(rem.size() - dn, Rat(0));
    for (size_t i = rem.size(); i-- > dn;) {
        Rat f = rem[i] / den[dn];
        q[i - dn] = f;
        if (f == 0) continue;
        for (size_t j = 0; j <= dn; ++j) rem[i - dn + j] -= f * den[j];
    }
    for (const Rat& v : rem)
        if (v != 0) {
            *ok = false;
            return {};
        }
    *ok = true;
    return q;
}

std::vector<Rat> cyclotomic(i64 d, std::map<i64, std::vector<Rat>>& memo) {
    auto it = memo.find(d);
    if (it != memo.end()) return it->second;
    std::vector<Rat> poly(static_cast<size_t>(d + 1), Rat(0));
    poly[0] = -1;
    poly[static_cast<size_t>(d)] = 1;  // x^d - 1
    for (i64 e = 1; e < d; ++e) {
        if (d % e != 0) continue;
        bool ok = false;
        poly = poly_divide_exact(poly, cyclotomic(e, memo), &ok);
        if (!ok)
            throw Error(ErrorCode::INVALID_ARGUMENT, "cyclotomic factorization failed");
    }
    memo[d] = poly;
    return poly;
}

} // namespace

std::vector<std::pair<i64, i64>> eigenvalue_multiset(const MonodromyMatrix& m) {
    std::vector<Rat> cp = characteristic_polynomial(m);
    std::map<i64, std::vector<Rat>> memo;
    std::vector<std::pair<i64, i64>> out;
    const i64 max_order = 2 * m.size() + 2;
    for (i64 d = 1; d <= max_order; ++d) {
        if (cp.size() <= 1) break;
        std::vector<Rat> phi = cyclotomic(d, memo);
        i64 mult = 0;
        while (cp.size() >= phi.size()) {
            bool ok = false;
            std::vector<Rat> q = poly_divide_exact(cp, phi, &ok);
            if (!ok) break;
            cp = q;
            ++mult;
        }
        if (mult > 0) out.push_back({d, mult});
    }
    if (cp.size() > 1)
        throw Error(ErrorCode::UNRECOGNIZED_BLOCK, "eigenvalues are not all roots of unity");
    return out;
}

} // namespace fanolab
