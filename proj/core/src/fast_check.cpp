#include "geomcolor/fast_check.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "geomcolor/predicates.hpp"

namespace geomcolor {
namespace {

std::vector<std::size_t> by_x(const std::vector<Point>& pts) {
    std::vector<std::size_t> order(pts.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return pts[a].x < pts[b].x; });
    return order;
}

std::vector<std::size_t> by_y(const std::vector<Point>& pts) {
    std::vector<std::size_t> order(pts.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return pts[a].y < pts[b].y; });
    return order;
}

// Orientation sign with an int64 fast path when every coordinate is a
// moderate integer (the generator emits such instances); exact rational
// arithmetic otherwise.
struct Orienter {
    const std::vector<Point>* pts;
    bool fast = false;
    std::vector<long long> xs, ys;

    explicit Orienter(const std::vector<Point>& p) : pts(&p) {
        const long long cap = 1LL << 40;
        fast = true;
        xs.reserve(p.size());
        ys.reserve(p.size());
        for (const auto& pt : p) {
            if (rat_den(pt.x) != 1 || rat_den(pt.y) != 1 ||
                abs(rat_num(pt.x)) >= cap || abs(rat_num(pt.y)) >= cap) {
                fast = false;
                break;
            }
            xs.push_back(rat_num(pt.x).convert_to<long long>());
            ys.push_back(rat_num(pt.y).convert_to<long long>());
        }
    }

    int sign(std::size_t a, std::size_t b, std::size_t c) const {
        if (fast) {
            __int128 det = static_cast<__int128>(xs[b] - xs[a]) * (ys[c] - ys[a]) -
                           static_cast<__int128>(xs[c] - xs[a]) * (ys[b] - ys[a]);
            return det > 0 ? 1 : det < 0 ? -1 : 0;
        }
        return orient_sign((*pts)[a], (*pts)[b], (*pts)[c]);
    }
};

Verdict violation(std::vector<std::size_t> edge, std::string reason) {
    std::sort(edge.begin(), edge.end());
    return Verdict{false, std::move(edge), std::move(reason)};
}

// ---- bottomless, k-proper ----

Verdict kproper_bottomless(const std::vector<Point>& pts, const std::vector<int>& col, int k) {
    const auto order = by_x(pts);
    const std::size_t n = pts.size();
    std::vector<std::size_t> heap;  // max-heap by y: the k lowest points of the window
    auto higher = [&](std::size_t a, std::size_t b) { return pts[a].y < pts[b].y; };
    for (std::size_t i = 0; i < n; ++i) {
        heap.clear();
        for (std::size_t j = i; j < n; ++j) {
            std::size_t v = order[j];
            bool changed = false;
            if (heap.size() < static_cast<std::size_t>(k)) {
                heap.push_back(v);
                std::push_heap(heap.begin(), heap.end(), higher);
                changed = true;
            } else if (pts[v].y < pts[heap.front()].y) {
                std::pop_heap(heap.begin(), heap.end(), higher);
                heap.back() = v;
                std::push_heap(heap.begin(), heap.end(), higher);
                changed = true;
            }
            if (!changed || heap.size() < static_cast<std::size_t>(k)) continue;
            int c = col[heap[0]];
            if (std::all_of(heap.begin(), heap.end(),
                            [&](std::size_t u) { return col[u] == c; })) {
                return violation(heap, "monochromatic bottomless hyperedge of size " +
                                           std::to_string(k));
            }
        }
    }
    return {};
}

// ---- base-line rectangles over points, k-proper ----

Verdict kproper_baseline(const std::vector<Point>& pts, const std::vector<int>& col, int k) {
    const auto order = by_x(pts);
    const std::size_t n = pts.size();
    const auto kk = static_cast<std::size_t>(k);
    // Above the line the k points nearest to it are the lowest; below, the
    // highest. Any monochromatic edge of size >= k shrinks to a split
    // s + (k-s) drawn from these two candidate pools.
    auto lower = [&](std::size_t a, std::size_t b) { return pts[a].y < pts[b].y; };
    auto higher = [&](std::size_t a, std::size_t b) { return pts[b].y < pts[a].y; };
    std::vector<std::size_t> above, below, av, bv;
    for (std::size_t i = 0; i < n; ++i) {
        above.clear();
        below.clear();
        for (std::size_t j = i; j < n; ++j) {
            std::size_t v = order[j];
            bool changed = false;
            auto& pool = pts[v].y > 0 ? above : below;
            auto cmp_ab = [&](std::size_t a, std::size_t b) {
                return pts[v].y > 0 ? lower(a, b) : higher(a, b);
            };
            if (pool.size() < kk) {
                pool.push_back(v);
                std::push_heap(pool.begin(), pool.end(), cmp_ab);
                changed = true;
            } else if (cmp_ab(v, pool.front())) {
                std::pop_heap(pool.begin(), pool.end(), cmp_ab);
                pool.back() = v;
                std::push_heap(pool.begin(), pool.end(), cmp_ab);
                changed = true;
            }
            if (!changed || above.size() + below.size() < kk) continue;
            av = above;
            std::sort(av.begin(), av.end(), lower);  // nearest-to-line first
            bv = below;
            std::sort(bv.begin(), bv.end(), higher);
            // mono_color[s] = common color of the s nearest, or -1
            auto mono_prefix = [&](const std::vector<std::size_t>& side) {
                std::vector<int> m(side.size() + 1, -1);
                for (std::size_t s = 1; s <= side.size(); ++s) {
                    int c = col[side[s - 1]];
                    if (s == 1 || m[s - 1] == c) m[s] = c;
                    else break;
                }
                return m;
            };
            auto ma = mono_prefix(av), mb = mono_prefix(bv);
            for (std::size_t s = 0; s <= kk; ++s) {
                if (s > av.size() || kk - s > bv.size()) continue;
                bool aok = s == 0 || ma[s] >= 0;
                bool bok = kk - s == 0 || mb[kk - s] >= 0;
                bool match = s == 0 || kk - s == 0 || ma[s] == mb[kk - s];
                if (aok && bok && match) {
                    std::vector<std::size_t> e(av.begin(), av.begin() + s);
                    e.insert(e.end(), bv.begin(), bv.begin() + (kk - s));
                    return violation(std::move(e),
                                     "monochromatic base-line hyperedge of size " +
                                         std::to_string(k));
                }
            }
        }
    }
    return {};
}

// ---- half-planes over points, k-proper ----

Verdict kproper_halfplane(const std::vector<Point>& pts, const std::vector<int>& col, int k) {
    const std::size_t n = pts.size();
    Orienter orient(pts);
    auto collect = [&](std::size_t p, std::size_t q, int side, bool tp, bool tq) {
        std::vector<std::size_t> e;
        for (std::size_t r = 0; r < n; ++r) {
            if (r != p && r != q && orient.sign(p, q, r) == side) e.push_back(r);
        }
        if (tp) e.push_back(p);
        if (tq) e.push_back(q);
        return e;
    };
    for (std::size_t p = 0; p < n; ++p) {
        for (std::size_t q = p + 1; q < n; ++q) {
            // (count, common color or -1 when mixed) per side of line pq
            struct Side {
                long count = 0;
                int color = -1;
                bool mixed = false;
            } sides[2];
            for (std::size_t r = 0; r < n; ++r) {
                if (r == p || r == q) continue;
                int s = orient.sign(p, q, r);
                Side& sd = sides[s > 0 ? 0 : 1];
                if (sd.count == 0) sd.color = col[r];
                else if (sd.color != col[r]) sd.mixed = true;
                ++sd.count;
            }
            for (int si = 0; si < 2; ++si) {
                const Side& sd = sides[si];
                if (sd.mixed) continue;
                for (int tp = 0; tp <= 1; ++tp) {
                    for (int tq = 0; tq <= 1; ++tq) {
                        long size = sd.count + tp + tq;
                        if (size < k) continue;
                        bool mono;
                        if (sd.count > 0) {
                            mono = (!tp || col[p] == sd.color) && (!tq || col[q] == sd.color);
                        } else {
                            mono = !(tp && tq) || col[p] == col[q];
                        }
                        if (mono) {
                            return violation(
                                collect(p, q, si == 0 ? 1 : -1, tp, tq),
                                "monochromatic half-plane hyperedge of size " +
                                    std::to_string(size));
                        }
                    }
                }
            }
        }
    }
    if (n >= static_cast<std::size_t>(k)) {
        if (std::all_of(col.begin(), col.end(), [&](int c) { return c == col[0]; })) {
            std::vector<std::size_t> all(n);
            std::iota(all.begin(), all.end(), 0);
            return violation(std::move(all), "whole point set is monochromatic");
        }
    }
    return {};
}

// ---- bottomless, conflict-free ----

Verdict cf_bottomless(const std::vector<Point>& pts, const Coloring& col, int k) {
    const std::size_t n = pts.size();
    const auto yorder = by_y(pts);
    std::vector<std::size_t> xsorted;
    xsorted.reserve(n);
    std::vector<int> counts(std::max(col.palette_size, 1), 0);
    int good = 0;  // colors whose count in the current window is in [1, k]
    auto add = [&](std::size_t v) {
        int& t = counts[col.colors[v]];
        if (t == 0) ++good;
        else if (t == k) --good;
        ++t;
    };
    auto rem = [&](std::size_t v) {
        int& t = counts[col.colors[v]];
        --t;
        if (t == 0) --good;
        else if (t == k) ++good;
    };
    // Process thresholds bottom-up; each step only creates the x-contiguous
    // windows that contain the new point.
    for (std::size_t m = 0; m < n; ++m) {
        std::size_t v = yorder[m];
        auto it = std::lower_bound(xsorted.begin(), xsorted.end(), v,
                                   [&](std::size_t a, std::size_t b) {
                                       return pts[a].x < pts[b].x;
                                   });
        std::size_t pos = static_cast<std::size_t>(it - xsorted.begin());
        xsorted.insert(it, v);
        const std::size_t sz = xsorted.size();
        for (std::size_t a = pos + 1; a-- > 0;) {
            add(xsorted[a]);
            if (good == 0) {
                return violation({xsorted.begin() + a, xsorted.begin() + pos + 1},
                                 "no rare color in a bottomless hyperedge");
            }
            for (std::size_t b = pos + 1; b < sz; ++b) {
                add(xsorted[b]);
                if (good == 0) {
                    return violation({xsorted.begin() + a, xsorted.begin() + b + 1},
                                     "no rare color in a bottomless hyperedge");
                }
            }
            for (std::size_t b = pos + 1; b < sz; ++b) rem(xsorted[b]);
        }
        for (std::size_t a = 0; a <= pos; ++a) rem(xsorted[a]);
    }
    return {};
}

// ---- half-planes, conflict-free ----

Verdict cf_halfplane(const std::vector<Point>& pts, const Coloring& col, int k) {
    const std::size_t n = pts.size();
    const int pal = std::max(col.palette_size, 1);
    Orienter orient(pts);
    auto in_range = [&](int c) { return c >= 1 && c <= k; };
    auto collect = [&](std::size_t p, std::size_t q, int side, bool tp, bool tq) {
        std::vector<std::size_t> e;
        for (std::size_t r = 0; r < n; ++r) {
            if (r != p && r != q && orient.sign(p, q, r) == side) e.push_back(r);
        }
        if (tp) e.push_back(p);
        if (tq) e.push_back(q);
        return e;
    };
    std::vector<int> counts[2] = {std::vector<int>(pal, 0), std::vector<int>(pal, 0)};
    int goodc[2];
    for (std::size_t p = 0; p < n; ++p) {
        for (std::size_t q = p + 1; q < n; ++q) {
            std::fill(counts[0].begin(), counts[0].end(), 0);
            std::fill(counts[1].begin(), counts[1].end(), 0);
            goodc[0] = goodc[1] = 0;
            long totals[2] = {0, 0};
            for (std::size_t r = 0; r < n; ++r) {
                if (r == p || r == q) continue;
                int si = orient.sign(p, q, r) > 0 ? 0 : 1;
                int& t = counts[si][col.colors[r]];
                if (t == 0) ++goodc[si];
                else if (t == k) --goodc[si];
                ++t;
                ++totals[si];
            }
            int cp = col.colors[p], cq = col.colors[q];
            for (int si = 0; si < 2; ++si) {
                const auto& cnt = counts[si];
                int good_other = goodc[si] - (in_range(cnt[cp]) ? 1 : 0) -
                                 (cq != cp && in_range(cnt[cq]) ? 1 : 0);
                for (int tp = 0; tp <= 1; ++tp) {
                    for (int tq = 0; tq <= 1; ++tq) {
                        if (totals[si] + tp + tq == 0) continue;
                        bool ok = good_other > 0;
                        if (!ok) {
                            int mp = cnt[cp] + tp + (cp == cq ? tq : 0);
                            ok = in_range(mp) || (cp != cq && in_range(cnt[cq] + tq));
                        }
                        if (!ok) {
                            return violation(collect(p, q, si == 0 ? 1 : -1, tp, tq),
                                             "no rare color in a half-plane hyperedge");
                        }
                    }
                }
            }
        }
    }
    // the whole set is a hyperedge too
    std::vector<int> total(pal, 0);
    for (std::size_t r = 0; r < n; ++r) ++total[col.colors[r]];
    if (n > 0 && std::none_of(total.begin(), total.end(), in_range)) {
        std::vector<std::size_t> all(n);
        std::iota(all.begin(), all.end(), 0);
        return violation(std::move(all), "no rare color in the full point set");
    }
    return {};
}

void check_sizes(const Instance& inst, const Coloring& col) {
    if (col.colors.size() != inst.size()) {
        throw std::invalid_argument("coloring length does not match instance size");
    }
}

}  // namespace

Verdict fast_verify_kproper(const Instance& inst, const Coloring& col, int k) {
    check_sizes(inst, col);
    switch (inst.family) {
        case Family::b_points: return kproper_bottomless(inst.points, col.colors, k);
        case Family::h_points: return kproper_halfplane(inst.points, col.colors, k);
        case Family::bprime_points: return kproper_baseline(inst.points, col.colors, k);
        default:
            throw std::invalid_argument("fast_verify_kproper: unsupported family " +
                                        family_name(inst.family));
    }
}

Verdict fast_verify_cf(const Instance& inst, const Coloring& col, int k) {
    check_sizes(inst, col);
    switch (inst.family) {
        case Family::b_points: return cf_bottomless(inst.points, col, k);
        case Family::h_points: return cf_halfplane(inst.points, col, k);
        default:
            throw std::invalid_argument("fast_verify_cf: unsupported family " +
                                        family_name(inst.family));
    }
}

}  // namespace geomcolor
