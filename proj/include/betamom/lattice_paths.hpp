#pragma once

#include "betamom/rational.hpp"

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace betamom {

/// Weight labels for the four step roles used by the moment recurrences.
enum class StepLabel { A1, A2, A3, A4 };

inline const char* to_string(StepLabel l) {
    switch (l) {
        case StepLabel::A1: return "A1";
        case StepLabel::A2: return "A2";
        case StepLabel::A3: return "A3";
        case StepLabel::A4: return "A4";
    }
    return "?";
}

/// One allowed move. Only the four displacements (0,1), (1,1), (1,0), (1,-1)
/// occur in any of the path models.
struct Step {
    int dx;
    int dy;
    Rational weight;
    StepLabel label;

    Step(int dx_, int dy_, Rational w, StepLabel l)
        : dx(dx_), dy(dy_), weight(std::move(w)), label(l) {
        const bool ok = (dx == 0 && dy == 1) || (dx == 1 && dy == 1) ||
                        (dx == 1 && dy == 0) || (dx == 1 && dy == -1);
        if (!ok) throw std::invalid_argument("step displacement must be (0,1), (1,1), (1,0) or (1,-1)");
    }

    /// Letter by geometry: U rise, D fall, H horizontal, V vertical.
    char letter() const {
        if (dx == 0) return 'V';
        if (dy == 1) return 'U';
        if (dy == -1) return 'D';
        return 'H';
    }
};

/// A weighted path-counting problem: which steps are allowed, the height
/// floor paths may not drop below, fixed endpoints, and the total required
/// displacement in the x direction.
struct PathModel {
    std::vector<Step> steps;
    int floor = 0;
    int start_height = 0;
    int end_height = 0;
    std::size_t horizontal_length = 0;

    void validate() const {
        if (steps.empty()) throw std::invalid_argument("path model needs at least one step");
        for (std::size_t i = 0; i < steps.size(); ++i)
            for (std::size_t j = i + 1; j < steps.size(); ++j)
                if (steps[i].dx == steps[j].dx && steps[i].dy == steps[j].dy)
                    throw std::invalid_argument("duplicate step displacement in path model");
        if (start_height < floor || end_height < floor)
            throw std::invalid_argument("endpoints must lie at or above the floor");
        // The DP bounds the number of vertical steps by the falls available
        // to compensate them; a model with verticals but no falls is outside
        // that contract.
        bool has_vertical = false, has_fall = false;
        for (const auto& s : steps) {
            if (s.dx == 0) has_vertical = true;
            if (s.dy == -1) has_fall = true;
        }
        if (has_vertical && !has_fall) throw std::invalid_argument("divergent model");
    }

    bool has_step(int dx, int dy) const {
        for (const auto& s : steps)
            if (s.dx == dx && s.dy == dy) return true;
        return false;
    }
};

/// A concrete admissible path: the ordered steps taken.
struct Path {
    std::vector<Step> steps;

    /// Serialization over the alphabet {U, D, H, V}.
    std::string letters() const {
        std::string s;
        s.reserve(steps.size());
        for (const auto& st : steps) s.push_back(st.letter());
        return s;
    }
};

namespace detail {

/// Every vertical step must be undone by a fall before the path can reach
/// its endpoint, and falls consume x displacement, so the vertical budget is
/// bounded by horizontal_length plus any net height gain at the endpoint.
inline std::size_t vertical_budget(const PathModel& m) {
    if (!m.has_step(0, 1)) return 0;
    std::size_t budget = m.horizontal_length;
    if (m.end_height > m.start_height)
        budget += static_cast<std::size_t>(m.end_height - m.start_height);
    return budget;
}

inline std::size_t max_height(const PathModel& m) {
    // Rises and verticals can each raise the height at most once per unit of
    // their respective budgets.
    std::size_t h = static_cast<std::size_t>(m.start_height - m.floor);
    h += m.horizontal_length;  // at most one rise per unit of dx
    h += vertical_budget(m);
    return h;
}

}  // namespace detail

/// Sum over all admissible paths of the product of step weights.
///
/// Dynamic programming over (x consumed, height, vertical steps used); the
/// intermediate table also yields the totals for every smaller x, which
/// count_weighted_prefix_totals exposes for callers that need a whole row
/// of path counts at once.
///
/// A path in state (x, h, v) has taken exactly x + v steps, so a common
/// denominator of the step weights can be pulled out of the whole table and
/// the DP itself runs on big integers; the exact rational totals are
/// reassembled at extraction.
inline std::vector<Rational> count_weighted_prefix_totals(const PathModel& model) {
    model.validate();
    const std::size_t L = model.horizontal_length;
    const std::size_t vmax = detail::vertical_budget(model);
    const std::size_t hmax = detail::max_height(model);
    const std::size_t heights = hmax + 1;  // index = height - floor

    BigInt denom(1);
    for (const auto& s : model.steps)
        denom = boost::multiprecision::lcm(denom, s.weight.den());
    struct ScaledStep {
        int dx, dy;
        BigInt num;  // weight * denom
    };
    std::vector<ScaledStep> steps;
    for (const auto& s : model.steps)
        steps.push_back({s.dx, s.dy, s.weight.num() * (denom / s.weight.den())});

    std::vector<BigInt> denom_pow(L + vmax + 1);
    denom_pow[0] = 1;
    for (std::size_t k = 1; k < denom_pow.size(); ++k) denom_pow[k] = denom_pow[k - 1] * denom;

    // state[h][v] = scaled total weight of partial paths at the current x
    using Slice = std::vector<std::vector<BigInt>>;
    Slice cur(heights, std::vector<BigInt>(vmax + 1));
    const std::size_t start = static_cast<std::size_t>(model.start_height - model.floor);
    const std::size_t end = static_cast<std::size_t>(model.end_height - model.floor);
    cur[start][0] = 1;

    std::vector<Rational> totals(L + 1);

    for (std::size_t x = 0; x <= L; ++x) {
        // Close the slice under vertical steps. Height strictly increases, so
        // one ascending pass reaches a fixed point.
        for (const auto& s : steps) {
            if (s.dx != 0) continue;
            for (std::size_t h = 0; h + 1 < heights; ++h)
                for (std::size_t v = 0; v < vmax; ++v)
                    if (cur[h][v] != 0) cur[h + 1][v + 1] += s.num * cur[h][v];
        }

        for (std::size_t v = 0; v <= vmax; ++v)
            if (cur[end][v] != 0) totals[x] += Rational(cur[end][v], denom_pow[x + v]);

        if (x == L) break;
        Slice next(heights, std::vector<BigInt>(vmax + 1));
        for (std::size_t h = 0; h < heights; ++h)
            for (std::size_t v = 0; v <= vmax; ++v) {
                if (cur[h][v] == 0) continue;
                for (const auto& s : steps) {
                    if (s.dx != 1) continue;
                    const long nh = static_cast<long>(h) + s.dy;
                    if (nh < 0 || nh >= static_cast<long>(heights)) continue;
                    next[static_cast<std::size_t>(nh)][v] += s.num * cur[h][v];
                }
            }
        cur = std::move(next);
    }
    return totals;
}

inline Rational count_weighted_paths(const PathModel& model) {
    return count_weighted_prefix_totals(model).back();
}

/// Exhaustive enumeration of the admissible paths, for use as an oracle
/// against the DP and for the CLI's --enumerate mode. Refuses to run beyond
/// max_steps = 20.
inline std::vector<Path> enumerate_paths(const PathModel& model, std::size_t max_steps) {
    if (max_steps > 20) throw std::invalid_argument("enumeration bound");
    model.validate();
    std::vector<Path> out;
    std::vector<Step> stack;

    const auto vmax = detail::vertical_budget(model);

    auto dfs = [&](auto&& self, std::size_t x, long h, std::size_t v) -> void {
        if (x == model.horizontal_length && h == model.end_height)
            out.push_back(Path{stack});
        if (stack.size() == max_steps) return;
        for (const auto& s : model.steps) {
            const std::size_t nx = x + static_cast<std::size_t>(s.dx);
            const long nh = h + s.dy;
            if (nx > model.horizontal_length || nh < model.floor) continue;
            const std::size_t nv = v + (s.dx == 0 ? 1 : 0);
            if (nv > vmax) continue;
            stack.push_back(s);
            self(self, nx, nh, nv);
            stack.pop_back();
        }
    };
    dfs(dfs, 0, model.start_height, 0);
    return out;
}

// ---- Model factories ------------------------------------------------------
//
// The weights default to the roles the moment recurrences assign: rises and
// verticals to A1 (A4 for the rise of the four-step model), falls to A2,
// horizontals to A3. Callers that want pure counts pass weight 1 everywhere.

/// Steps (1,1) and (1,-1); paths of 2*pairs steps from height 0 back to 0.
inline PathModel dyck_model(Rational rise_w, Rational fall_w, std::size_t pairs) {
    PathModel m;
    m.steps = {Step(1, 1, std::move(rise_w), StepLabel::A1),
               Step(1, -1, std::move(fall_w), StepLabel::A2)};
    m.horizontal_length = 2 * pairs;
    return m;
}

/// Steps (1,1), (1,0), (1,-1); paths of `length` steps.
inline PathModel motzkin_model(Rational rise_w, Rational fall_w, Rational horiz_w,
                               std::size_t length) {
    PathModel m;
    m.steps = {Step(1, 1, std::move(rise_w), StepLabel::A1),
               Step(1, 0, std::move(horiz_w), StepLabel::A3),
               Step(1, -1, std::move(fall_w), StepLabel::A2)};
    m.horizontal_length = length;
    return m;
}

/// Steps (0,1), (1,0), (1,-1) with total x displacement `length`; the
/// delay-time walk. Its unit-weight counts are the large Schroeder numbers
/// (see schroder_bijection below).
inline PathModel schroder_like_model(Rational vert_w, Rational fall_w, Rational horiz_w,
                                     std::size_t length) {
    PathModel m;
    m.steps = {Step(0, 1, std::move(vert_w), StepLabel::A1),
               Step(1, 0, std::move(horiz_w), StepLabel::A3),
               Step(1, -1, std::move(fall_w), StepLabel::A2)};
    m.horizontal_length = length;
    return m;
}

/// All four steps (0,1), (1,1), (1,0), (1,-1).
inline PathModel four_step_model(Rational vert_w, Rational rise_w, Rational fall_w,
                                 Rational horiz_w, std::size_t length) {
    PathModel m;
    m.steps = {Step(0, 1, std::move(vert_w), StepLabel::A1),
               Step(1, 1, std::move(rise_w), StepLabel::A4),
               Step(1, 0, std::move(horiz_w), StepLabel::A3),
               Step(1, -1, std::move(fall_w), StepLabel::A2)};
    m.horizontal_length = length;
    return m;
}

/// Steps (0,1), (1,1), (1,-1): the general-Jacobi walk with the horizontal
/// positions factored out into a binomial prefactor (see moments.hpp).
inline PathModel vertical_rise_fall_model(Rational vert_w, Rational rise_w, Rational fall_w,
                                          std::size_t length) {
    PathModel m;
    m.steps = {Step(0, 1, std::move(vert_w), StepLabel::A1),
               Step(1, 1, std::move(rise_w), StepLabel::A4),
               Step(1, -1, std::move(fall_w), StepLabel::A2)};
    m.horizontal_length = length;
    return m;
}

// ---- Schroeder paths -------------------------------------------------------

/// A Schroeder path over steps (1,1) 'U', (1,-1) 'D', (2,0) 'H', from (0,0)
/// to (2n,0), never below the x axis. Note H here spans two x units.
struct SchroderPath {
    std::string steps;

    bool valid() const {
        long h = 0;
        for (char c : steps) {
            if (c == 'U') ++h;
            else if (c == 'D') --h;
            else if (c != 'H') return false;
            if (h < 0) return false;
        }
        return h == 0;
    }

    std::size_t width() const {
        std::size_t w = 0;
        for (char c : steps) w += (c == 'H') ? 2 : 1;
        return w;
    }
};

/// Bijection from the schroder_like_model walks onto Schroeder paths: every
/// vertical step becomes a rise and every horizontal step is doubled to
/// (2,0). A walk with x displacement m maps to a Schroeder path of width 2m,
/// so the unit-weight walk counts are exactly schroder(m).
inline SchroderPath schroder_bijection(const Path& p) {
    long h = 0;
    SchroderPath out;
    out.steps.reserve(p.steps.size());
    for (const auto& s : p.steps) {
        if (s.dx == 0 && s.dy == 1) {
            out.steps.push_back('U');
            ++h;
        } else if (s.dx == 1 && s.dy == 0) {
            out.steps.push_back('H');
        } else if (s.dx == 1 && s.dy == -1) {
            out.steps.push_back('D');
            --h;
        } else {
            throw std::invalid_argument("path is not admissible in the vertical/horizontal/fall model");
        }
        if (h < 0) throw std::invalid_argument("path drops below its starting level");
    }
    if (h != 0) throw std::invalid_argument("path does not return to its starting level");
    return out;
}

/// All Schroeder paths of width 2n, lexicographic in (U, D, H) step order.
inline std::vector<SchroderPath> enumerate_schroder_paths(std::size_t n) {
    if (n > 10) throw std::invalid_argument("enumeration bound");
    std::vector<SchroderPath> out;
    std::string stack;
    auto dfs = [&](auto&& self, std::size_t x, long h) -> void {
        if (x == 2 * n && h == 0) {
            out.push_back(SchroderPath{stack});
            return;
        }
        if (x + 1 <= 2 * n) {
            stack.push_back('U');
            self(self, x + 1, h + 1);
            stack.pop_back();
            if (h > 0) {
                stack.push_back('D');
                self(self, x + 1, h - 1);
                stack.pop_back();
            }
        }
        if (x + 2 <= 2 * n) {
            stack.push_back('H');
            self(self, x + 2, h);
            stack.pop_back();
        }
    };
    dfs(dfs, 0, 0);
    return out;
}

}  // namespace betamom
