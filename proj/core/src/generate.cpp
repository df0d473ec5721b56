#include "geomcolor/generate.hpp"

#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace geomcolor {
namespace {

struct Budget {
    std::size_t left;
    std::uint64_t seed;

    void spend() {
        if (left-- == 0) {
            throw std::runtime_error("instance generation exhausted retries (seed " +
                                     std::to_string(seed) + ")");
        }
    }
};

// Modulo draw: implementation-independent determinism matters more here
// than the negligible bias.
std::int64_t draw(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

// Incremental no-three-collinear tracker: one direction set per point.
class CollinearGuard {
  public:
    // True iff p duplicates a point or completes a collinear triple;
    // otherwise records p.
    bool reject(const Point& p) {
        std::vector<std::pair<bool, Rat>> dirs;
        dirs.reserve(pts_.size());
        for (std::size_t i = 0; i < pts_.size(); ++i) {
            if (pts_[i] == p) return true;
            Rat dx = p.x - pts_[i].x;
            auto dir = dx == 0 ? std::make_pair(true, Rat(0))
                               : std::make_pair(false, Rat((p.y - pts_[i].y) / dx));
            if (seen_[i].count(dir)) return true;
            dirs.push_back(std::move(dir));
        }
        for (std::size_t i = 0; i < pts_.size(); ++i) seen_[i].insert(dirs[i]);
        pts_.push_back(p);
        seen_.emplace_back();
        return false;
    }

  private:
    std::vector<Point> pts_;
    std::vector<std::set<std::pair<bool, Rat>>> seen_;
};

std::vector<Point> gen_points(std::size_t n, std::int64_t range, std::mt19937_64& rng,
                              Budget& budget, bool distinct_coords, bool split_y,
                              bool no_collinear) {
    std::vector<Point> pts;
    std::set<std::int64_t> used_x, used_y;
    CollinearGuard guard;
    while (pts.size() < n) {
        budget.spend();
        std::int64_t x = draw(rng, 0, range);
        std::int64_t y = split_y ? draw(rng, -range, range) : draw(rng, 0, range);
        if (split_y && y == 0) continue;
        if (distinct_coords && (used_x.count(x) || used_y.count(y))) continue;
        if (no_collinear && guard.reject(Point{x, y})) continue;
        used_x.insert(x);
        used_y.insert(y);
        pts.push_back({x, y});
    }
    return pts;
}

// Draws a value not yet in `used` and records it.
std::int64_t fresh(std::mt19937_64& rng, Budget& budget, std::int64_t lo, std::int64_t hi,
                   std::set<std::int64_t>& used) {
    for (;;) {
        budget.spend();
        std::int64_t v = draw(rng, lo, hi);
        if (used.insert(v).second) return v;
    }
}

}  // namespace

Instance generate_instance(Family family, std::size_t n, std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("n must be positive");
    const auto range = static_cast<std::int64_t>(10 * n * n);
    std::mt19937_64 rng(seed);
    Budget budget{200 * n + 10000, seed};

    Instance inst;
    inst.family = family;
    switch (family) {
        case Family::b_points:
            inst.points = gen_points(n, range, rng, budget, true, false, false);
            break;
        case Family::bprime_points:
            inst.points = gen_points(n, range, rng, budget, true, true, false);
            break;
        case Family::h_points:
            inst.points = gen_points(n, range, rng, budget, false, false, true);
            break;
        case Family::b_rects: {
            std::set<std::int64_t> edges, tops;
            while (inst.rects.size() < n) {
                budget.spend();
                std::int64_t a = fresh(rng, budget, 0, range, edges);
                std::int64_t b = fresh(rng, budget, 0, range, edges);
                if (a > b) std::swap(a, b);
                inst.rects.push_back({a, b, fresh(rng, budget, 0, range, tops)});
            }
            break;
        }
        case Family::bprime_rects: {
            std::set<std::int64_t> edges, tops, bottoms;
            while (inst.baseline_rects.size() < n) {
                budget.spend();
                std::int64_t a = fresh(rng, budget, 0, range, edges);
                std::int64_t b = fresh(rng, budget, 0, range, edges);
                if (a > b) std::swap(a, b);
                inst.baseline_rects.push_back({a, b, fresh(rng, budget, -range, -1, bottoms),
                                               fresh(rng, budget, 1, range, tops)});
            }
            break;
        }
        case Family::h_rects: {
            CollinearGuard guard;
            while (inst.halfplanes.size() < n) {
                budget.spend();
                std::int64_t slope = draw(rng, 0, range);
                std::int64_t intercept = draw(rng, 0, range);
                if (guard.reject(Point{slope, intercept})) continue;
                inst.halfplanes.push_back({slope, intercept,
                                           rng() % 2 == 0 ? HalfPlaneRegion::above
                                                          : HalfPlaneRegion::below});
            }
            break;
        }
    }
    return inst;
}

}  // namespace geomcolor
