#include "geomcolor/bottomless_dual.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>

#include "geomcolor/general_position.hpp"

namespace geomcolor {
namespace {

constexpr int red = 0, blue = 1, green = 2;

void require_rects(const std::vector<BottomlessRect>& rects) {
    if (rects.empty()) throw std::invalid_argument("empty rectangle family");
    Instance inst;
    inst.family = Family::b_rects;
    inst.rects = rects;
    require_general_position(inst);
}

// One maximal piece of the base-line between consecutive edge coordinates,
// with its covering rectangles (indices into the caller's array).
struct BaseInterval {
    Rat left, right;
    std::vector<std::size_t> owners;  // only retained while depth <= 2

    std::size_t depth = 0;
    Rat mid() const { return (left + right) / 2; }
};

// Bounded elementary intervals of the base-line arrangement, left to right.
std::vector<BaseInterval> base_intervals(const std::vector<BottomlessRect>& rects,
                                         const std::vector<std::size_t>& idx) {
    std::vector<std::pair<Rat, std::pair<int, std::size_t>>> events;  // x -> (+1/-1, rect)
    for (std::size_t i : idx) {
        events.push_back({rects[i].a, {+1, i}});
        events.push_back({rects[i].b, {-1, i}});
    }
    std::sort(events.begin(), events.end(),
              [](const auto& u, const auto& v) { return u.first < v.first; });
    std::vector<BaseInterval> out;
    std::set<std::size_t> active;
    for (std::size_t e = 0; e + 1 < events.size(); ++e) {
        if (events[e].second.first > 0) active.insert(events[e].second.second);
        else active.erase(events[e].second.second);
        BaseInterval iv;
        iv.left = events[e].first;
        iv.right = events[e + 1].first;
        iv.depth = active.size();
        if (active.size() <= 2) iv.owners.assign(active.begin(), active.end());
        out.push_back(std::move(iv));
    }
    return out;
}

// ---- 3 colors, divide and color ----

Coloring k2_impl(const std::vector<BottomlessRect>& rects) {
    const std::size_t n = rects.size();
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](std::size_t u, std::size_t v) { return rects[u].c > rects[v].c; });

    std::vector<int> colors(n, red);
    colors[order[0]] = blue;  // the highest rectangle

    std::vector<std::size_t> active;
    active.push_back(order[0]);
    for (std::size_t t = 1; t < n; ++t) {
        std::size_t bidx = order[t];
        colors[bidx] = red;
        active.push_back(bidx);
        auto ivs = base_intervals(rects, active);

        // A base-line point covered only by the new rectangle?
        std::optional<Rat> q;
        for (const auto& iv : ivs) {
            if (iv.depth == 1 && iv.owners[0] == bidx) {
                q = iv.mid();
                break;
            }
        }
        if (!q) continue;

        auto swap_where = [&](int c1, int c2, auto&& pred) {
            for (std::size_t i : active) {
                if (!pred(rects[i])) continue;
                if (colors[i] == c1) colors[i] = c2;
                else if (colors[i] == c2) colors[i] = c1;
            }
        };
        // Eliminate green single-covered intervals on one side of q; the
        // final global green/red swap then restores "no red singles".
        auto fix_side = [&](bool left_side) {
            std::vector<const BaseInterval*> singles;
            for (const auto& iv : ivs) {
                if (iv.depth != 1 || iv.owners[0] == bidx) continue;
                if (left_side ? iv.right <= *q : iv.left >= *q) singles.push_back(&iv);
            }
            bool any_green = std::any_of(singles.begin(), singles.end(), [&](const auto* s) {
                return colors[s->owners[0]] == green;
            });
            if (!any_green) return;
            const BaseInterval* closest = left_side ? singles.back() : singles.front();
            auto side_of_q = [&](const BottomlessRect& r) {
                return left_side ? r.b <= *q : r.a >= *q;
            };
            if (colors[closest->owners[0]] == green) swap_where(blue, green, side_of_q);
            Rat s = closest->mid();
            swap_where(red, green, [&](const BottomlessRect& r) {
                return left_side ? r.b <= s : r.a >= s;
            });
        };
        fix_side(true);
        fix_side(false);
        swap_where(green, red, [](const BottomlessRect&) { return true; });
    }
    return Coloring{3, std::move(colors)};
}

// ---- 2 colors, recursive case analysis ----

struct K3Solver {
    const std::vector<BottomlessRect>& rects;
    std::vector<int> colors;

    explicit K3Solver(const std::vector<BottomlessRect>& r) : rects(r), colors(r.size(), -1) {}

    void flip(const std::vector<std::size_t>& idx) {
        for (std::size_t i : idx) colors[i] = 1 - colors[i];
    }

    static std::vector<std::size_t> minus(const std::vector<std::size_t>& idx,
                                          std::initializer_list<std::size_t> drop) {
        std::vector<std::size_t> out;
        for (std::size_t i : idx) {
            if (std::find(drop.begin(), drop.end(), i) == drop.end()) out.push_back(i);
        }
        return out;
    }

    bool contains(std::size_t r, const BaseInterval& iv) const {
        return rects[r].a <= iv.left && iv.right <= rects[r].b;
    }

    // Colors colors[i] for every i in idx.
    void solve(const std::vector<std::size_t>& idx) {
        if (idx.empty()) return;
        if (idx.size() == 1) {
            colors[idx[0]] = red;
            return;
        }
        auto ivs = base_intervals(rects, idx);

        // b-coordinates / a-coordinates for "strictly left/right of" counts
        std::vector<Rat> bs, as;
        for (std::size_t i : idx) {
            bs.push_back(rects[i].b);
            as.push_back(rects[i].a);
        }
        std::sort(bs.begin(), bs.end());
        std::sort(as.begin(), as.end());
        auto n_left = [&](const Rat& x) {
            return std::upper_bound(bs.begin(), bs.end(), x) - bs.begin();
        };
        auto n_right = [&](const Rat& x) {
            return as.end() - std::lower_bound(as.begin(), as.end(), x);
        };

        // Cases 1-3: first base-line interval of depth <= 2 with rectangles
        // strictly on both sides splits the family.
        for (const auto& iv : ivs) {
            if (iv.depth > 2) continue;
            if (n_left(iv.left) == 0 || n_right(iv.right) == 0) continue;
            Rat q = iv.mid();
            std::vector<std::size_t> left, right;
            for (std::size_t i : idx) {
                if (rects[i].b <= q) left.push_back(i);
                else if (rects[i].a >= q) right.push_back(i);
            }
            if (iv.depth == 0) {
                solve(left);
                solve(right);
                return;
            }
            if (iv.depth == 1) {
                std::size_t b = iv.owners[0];
                left.push_back(b);
                right.push_back(b);
                solve(left);
                if (colors[b] != red) flip(left);
                int keep = colors[b];
                solve(right);
                if (colors[b] != keep) flip(right);
                colors[b] = keep;
                return;
            }
            std::size_t b1 = iv.owners[0], b2 = iv.owners[1];
            for (auto* side : {&left, &right}) {
                side->push_back(b1);
                side->push_back(b2);
            }
            solve(left);
            if (colors[b1] == colors[b2]) {
                throw std::logic_error("depth-2 base-line point got one color");
            }
            if (colors[b1] != red) flip(left);
            solve(right);
            if (colors[b1] == colors[b2]) {
                throw std::logic_error("depth-2 base-line point got one color");
            }
            if (colors[b1] != red) flip(right);
            colors[b1] = red;
            colors[b2] = blue;
            return;
        }

        // Case 4: single-covered base-line points live only in the extreme
        // intervals L1/R1, double-covered only in L2/R2.
        const BaseInterval& l1 = ivs.front();
        const BaseInterval& l2 = ivs[1];
        const BaseInterval& r1 = ivs.back();
        const BaseInterval& r2 = ivs[ivs.size() - 2];
        std::size_t b = idx[0], b2_rect = idx[0];
        for (std::size_t i : idx) {
            if (rects[i].c < rects[b].c) b = i;
        }
        Rat second = 0;
        bool have2 = false;
        for (std::size_t i : idx) {
            if (i == b) continue;
            if (!have2 || rects[i].c < second) {
                second = rects[i].c;
                b2_rect = i;
                have2 = true;
            }
        }

        auto other_owner = [&](const BaseInterval& iv,
                               std::size_t besides) -> std::optional<std::size_t> {
            if (iv.depth != 2) {
                throw std::logic_error("expected a double-covered extreme interval");
            }
            return iv.owners[0] == besides ? iv.owners[1] : iv.owners[0];
        };

        bool covers_left = contains(b, l1) || contains(b, l2);
        bool covers_right = contains(b, r1) || contains(b, r2);
        if (!covers_left && !covers_right) {  // 4a
            solve(minus(idx, {b}));
            colors[b] = red;
            return;
        }
        if (covers_left != covers_right) {  // 4b / 4c
            const BaseInterval& second_iv = covers_left ? l2 : r2;
            solve(minus(idx, {b}));
            if (contains(b, second_iv)) {
                colors[b] = 1 - colors[*other_owner(second_iv, b)];
            } else {
                colors[b] = red;
            }
            return;
        }
        // B spans from the left marks to the right marks, hence contains
        // both L2 and R2.
        bool b2_marks = contains(b2_rect, l1) || contains(b2_rect, l2) ||
                        contains(b2_rect, r1) || contains(b2_rect, r2);
        if (!b2_marks) {  // 4d
            solve(minus(idx, {b2_rect}));
            colors[b2_rect] = colors[b];
            return;
        }
        // 4e: drop both lowest rectangles; constrain B by the far-side
        // double-covered interval.
        solve(minus(idx, {b, b2_rect}));
        const BaseInterval& target =
            contains(b2_rect, l1) || contains(b2_rect, l2) ? r2 : l2;
        std::size_t third = *other_owner(target, b);
        colors[b] = third == b2_rect ? red : 1 - colors[third];
        colors[b2_rect] = 1 - colors[b];
    }
};

}  // namespace

Coloring color_rects_b_k2(const std::vector<BottomlessRect>& rects) {
    require_rects(rects);
    return k2_impl(rects);
}

Coloring color_rects_b_k3(const std::vector<BottomlessRect>& rects) {
    require_rects(rects);
    K3Solver solver(rects);
    std::vector<std::size_t> idx(rects.size());
    std::iota(idx.begin(), idx.end(), 0);
    solver.solve(idx);
    return Coloring{2, std::move(solver.colors)};
}

}  // namespace geomcolor
