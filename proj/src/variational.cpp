#include "uptail/variational.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <stdexcept>

#include "uptail/matching.hpp"

namespace uptail {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double powi(double base, int e) {
    double r = 1.0;
    for (; e > 0; --e) r *= base;
    return r;
}

// A polynomial restricted to one boundary family (y2 = 1 or y1 = 1). The
// remaining y exponent folds the min factor in, which is valid on 0 <= y <= 1.
// deg is the total x-degree; t_exp_* give the exponent of the ratio t once
// the x variables are written as (t u, u) or (u, t u).
struct SliceTerm {
    double coeff;
    int deg;
    int t_exp_x1_smaller;  // region x1 <= x2: x1 = t u, x3 = t u
    int t_exp_x2_smaller;  // region x2 <= x1
    int y_exp;
};

std::vector<SliceTerm> make_slice(const TailPolynomial& p, Family fam) {
    std::vector<SliceTerm> out;
    for (const auto& t : p.terms) {
        SliceTerm s;
        s.coeff = static_cast<double>(t.coeff);
        s.deg = t.x1 + t.x2 + t.x3;
        s.t_exp_x1_smaller = t.x1 + t.x3;
        s.t_exp_x2_smaller = t.x2 + t.x3;
        s.y_exp = fam == Family::Y2One ? t.y1 + t.y3 : t.y2 + t.y3;
        auto same = [&](const SliceTerm& o) {
            return o.deg == s.deg && o.t_exp_x1_smaller == s.t_exp_x1_smaller &&
                   o.t_exp_x2_smaller == s.t_exp_x2_smaller && o.y_exp == s.y_exp;
        };
        bool merged = false;
        for (auto& o : out)
            if (same(o)) {
                o.coeff += s.coeff;
                merged = true;
                break;
            }
        if (!merged) out.push_back(s);
    }
    return out;
}

// Level solver along one ray: fix (y, t, region), collapse the slice to a
// univariate polynomial in the larger x and bisect. All coefficients are
// nonnegative, so the polynomial is nondecreasing; the constant term is the
// empty-set 1.
class RaySolver {
  public:
    RaySolver(const std::vector<SliceTerm>& slice, double target)
        : slice_(slice), target_(target) {
        int deg = 0;
        for (const auto& t : slice) deg = std::max(deg, t.deg);
        cu_.assign(deg + 1, 0.0);
    }

    // Largest-x coordinate solving the level equation, or -1 when this ray
    // never reaches the target.
    double level_u(double y, double t, Region region) {
        std::fill(cu_.begin(), cu_.end(), 0.0);
        for (const auto& s : slice_) {
            int te = region == Region::X1LeX2 ? s.t_exp_x1_smaller : s.t_exp_x2_smaller;
            cu_[s.deg] += s.coeff * powi(t, te) * powi(y, s.y_exp);
        }
        double nonconst = 0.0;
        for (std::size_t d = 1; d < cu_.size(); ++d) nonconst += cu_[d];
        if (!(nonconst > 0.0)) return -1.0;

        auto value = [&](double u) {
            double acc = 0.0;
            for (std::size_t d = cu_.size(); d-- > 0;) acc = acc * u + cu_[d];
            return acc;
        };
        double lo = 0.0, hi = 1.0;
        int doublings = 0;
        while (value(hi) < target_) {
            lo = hi;
            hi *= 2.0;
            if (++doublings > 1100) return -1.0;
        }
        // All coefficients are nonnegative, so the polynomial is convex and
        // increasing on u >= 0: Newton from the feasible end never undershoots
        // the root and converges quadratically.
        double u = hi;
        for (int i = 0; i < 100; ++i) {
            double val = 0.0, der = 0.0;
            for (std::size_t d = cu_.size(); d-- > 0;) {
                der = der * u + val;
                val = val * u + cu_[d];
            }
            if (!(der > 0.0)) break;
            double step = (val - target_) / der;
            u -= step;
            if (step <= 1e-15 * u) return u;
        }
        // derivative underflow or slow contraction: finish with bisection
        for (int i = 0; i < 90; ++i) {
            double mid = 0.5 * (lo + hi);
            if (mid <= lo || mid >= hi) break;
            if (value(mid) < target_) lo = mid;
            else hi = mid;
            if (hi - lo <= 1e-13 * hi) break;
        }
        return 0.5 * (lo + hi);
    }

  private:
    const std::vector<SliceTerm>& slice_;
    double target_;
    std::vector<double> cu_;
};

double objective_factor(Family fam, Region region, double y, double t) {
    // x1 y1 + x2 y2 divided by the larger x coordinate.
    if (fam == Family::Y2One) return region == Region::X1LeX2 ? t * y + 1.0 : y + t;
    return region == Region::X1LeX2 ? t + y : 1.0 + t * y;
}

double golden_min(const std::function<double(double)>& fn, double a, double b, int iters) {
    const double inv_phi = 0.6180339887498949;
    double c = b - inv_phi * (b - a), d = a + inv_phi * (b - a);
    double fc = fn(c), fd = fn(d);
    for (int i = 0; i < iters; ++i) {
        if (fc < fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - inv_phi * (b - a);
            fc = fn(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + inv_phi * (b - a);
            fd = fn(d);
        }
    }
    return 0.5 * (a + b);
}

struct FamilyOutcome {
    double value = kInf;
    double y = 0.0, t = 1.0;
    Region region = Region::XEqual;
};

}  // namespace

double solve_level_x(const TailPolynomial& p, double y1, double y2, double target,
                     double level_tol) {
    if (target < 1.0) throw std::invalid_argument("level target below the constant term");
    // Diagonal x1 = x2 = x: every x factor collapses onto one exponent.
    std::vector<SliceTerm> slice;
    for (const auto& t : p.terms) {
        SliceTerm s;
        s.coeff = static_cast<double>(t.coeff) * powi(y1, t.y1) * powi(y2, t.y2) *
                  powi(std::min(y1, y2), t.y3);
        s.deg = t.x1 + t.x2 + t.x3;
        s.t_exp_x1_smaller = 0;
        s.t_exp_x2_smaller = 0;
        s.y_exp = 0;
        slice.push_back(s);
    }
    RaySolver ray(slice, target);
    double u = ray.level_u(1.0, 1.0, Region::X1LeX2);
    if (u < 0.0)
        throw InfeasibleError("level slice is constant below the target at this y");
    (void)level_tol;  // bisection stops at 1e-13 relative width, below any sane tol
    return u;
}

VariationalResult solve_G(const TailPolynomial& g, double delta, const SolverConfig& cfg) {
    double target = 1.0 + delta;
    VariationalResult res;
    res.tol = cfg.tol;
    res.region = Region::XEqual;

    double family_best[2] = {kInf, kInf};
    double family_y[2] = {1.0, 1.0};

    for (Family fam : {Family::Y2One, Family::Y1One}) {
        auto slice = make_slice(g, fam);
        RaySolver ray(slice, target);
        auto obj = [&](double y) {
            double u = ray.level_u(y, 1.0, Region::X1LeX2);
            if (u < 0.0) return kInf;
            return u * (1.0 + y);
        };
        int n = cfg.g_grid;
        struct Pt {
            double v;
            int i;
        };
        std::vector<Pt> pts;
        for (int i = 0; i <= n; ++i) {
            double v = obj(static_cast<double>(i) / n);
            if (std::isfinite(v)) pts.push_back({v, i});
        }
        int fi = fam == Family::Y2One ? 0 : 1;
        if (pts.empty()) continue;
        std::sort(pts.begin(), pts.end(), [](const Pt& a, const Pt& b) { return a.v < b.v; });
        std::vector<int> picked;
        for (const auto& p : pts) {
            bool near = false;
            for (int q : picked)
                if (std::abs(q - p.i) <= 3) near = true;
            if (!near) picked.push_back(p.i);
            if (picked.size() >= 3) break;
        }
        for (int i0 : picked) {
            double y0 = static_cast<double>(i0) / n;
            double a = std::max(0.0, y0 - 1.0 / n), b = std::min(1.0, y0 + 1.0 / n);
            double y = golden_min(obj, a, b, 70);
            double v = obj(y);
            // golden section can drift off a boundary minimum by a hair
            if (obj(y0) < v) {
                y = y0;
                v = obj(y0);
            }
            if (v < family_best[fi]) {
                family_best[fi] = v;
                family_y[fi] = y;
            }
        }
    }

    res.family_value_y2_one = family_best[0];
    res.family_value_y1_one = family_best[1];
    int win = family_best[0] <= family_best[1] ? 0 : 1;
    if (!std::isfinite(family_best[win])) {
        res.feasible = false;
        res.value = kInf;
        return res;
    }
    res.feasible = true;
    res.value = family_best[win];
    res.family = win == 0 ? Family::Y2One : Family::Y1One;
    double y = family_y[win];
    res.y1 = win == 0 ? y : 1.0;
    res.y2 = win == 0 ? 1.0 : y;
    res.x1 = res.x2 = solve_level_x(g, res.y1, res.y2, target, cfg.level_tol);
    return res;
}

VariationalResult solve_F(const TailPolynomial& f, double delta, const SolverConfig& cfg) {
    double target = 1.0 + delta;
    VariationalResult res;
    res.tol = cfg.tol;

    // Per family: stage-1 grid over (y, t), a few well-separated candidates,
    // nested zoom grids, then coordinate-wise golden section.
    FamilyOutcome fam_out[2];
    for (Family fam : {Family::Y2One, Family::Y1One}) {
        auto slice = make_slice(f, fam);
        FamilyOutcome out;
        RaySolver ray(slice, target);
        for (Region region : {Region::X1LeX2, Region::X2LeX1}) {
            auto obj = [&](double y, double t) {
                double u = ray.level_u(y, t, region);
                if (u < 0.0) return kInf;
                return u * objective_factor(fam, region, y, t);
            };
            struct Cell {
                double v;
                int i, j;
            };
            int n = cfg.f_grid;
            std::vector<Cell> cells;
            for (int i = 0; i <= n; ++i)
                for (int j = 0; j <= n; ++j) {
                    double v = obj(static_cast<double>(i) / n, static_cast<double>(j) / n);
                    if (std::isfinite(v)) cells.push_back({v, i, j});
                }
            if (cells.empty()) continue;
            std::sort(cells.begin(), cells.end(),
                      [](const Cell& a, const Cell& b) { return a.v < b.v; });
            std::vector<Cell> picked;
            for (const auto& c : cells) {
                bool near = false;
                for (const auto& p : picked)
                    if (std::abs(p.i - c.i) <= 3 && std::abs(p.j - c.j) <= 3) near = true;
                if (!near) picked.push_back(c);
                if (static_cast<int>(picked.size()) >= cfg.f_candidates) break;
            }
            for (const auto& cand : picked) {
                double y = static_cast<double>(cand.i) / n;
                double t = static_cast<double>(cand.j) / n;
                double half = 1.5 / n;
                for (int level = 0; level < cfg.f_zoom_levels; ++level) {
                    double ylo = std::max(0.0, y - half), yhi = std::min(1.0, y + half);
                    double tlo = std::max(0.0, t - half), thi = std::min(1.0, t + half);
                    int zn = cfg.f_zoom_grid;
                    double bestv = kInf, besty = y, bestt = t;
                    for (int i = 0; i <= zn; ++i)
                        for (int j = 0; j <= zn; ++j) {
                            double yy = ylo + (yhi - ylo) * i / zn;
                            double tt = tlo + (thi - tlo) * j / zn;
                            double v = obj(yy, tt);
                            if (v < bestv) {
                                bestv = v;
                                besty = yy;
                                bestt = tt;
                            }
                        }
                    y = besty;
                    t = bestt;
                    half = 1.5 * std::max(yhi - ylo, thi - tlo) / zn;
                }
                double keep_y = y, keep_t = t;  // zoom-stage point, kept if polish drifts
                for (int sweep = 0; sweep < cfg.polish_sweeps; ++sweep) {
                    double yl = std::max(0.0, y - half), yh = std::min(1.0, y + half);
                    y = golden_min([&](double yy) { return obj(yy, t); }, yl, yh, 45);
                    double tl = std::max(0.0, t - half), th = std::min(1.0, t + half);
                    t = golden_min([&](double tt) { return obj(y, tt); }, tl, th, 45);
                    half *= 0.5;
                }
                if (obj(keep_y, keep_t) < obj(y, t)) {
                    y = keep_y;
                    t = keep_t;
                }
                double v = obj(y, t);
                if (v < out.value) {
                    out.value = v;
                    out.y = y;
                    out.t = t;
                    out.region = region;
                }
            }
        }
        fam_out[fam == Family::Y2One ? 0 : 1] = out;
    }

    res.family_value_y2_one = fam_out[0].value;
    res.family_value_y1_one = fam_out[1].value;
    int win = fam_out[0].value <= fam_out[1].value ? 0 : 1;
    if (!std::isfinite(fam_out[win].value)) {
        res.feasible = false;
        res.value = kInf;
        return res;
    }
    const FamilyOutcome& o = fam_out[win];
    res.feasible = true;
    res.value = o.value;
    res.family = win == 0 ? Family::Y2One : Family::Y1One;
    res.region = o.region;
    res.y1 = win == 0 ? o.y : 1.0;
    res.y2 = win == 0 ? 1.0 : o.y;
    auto slice = make_slice(f, res.family);
    RaySolver ray(slice, target);
    double u = ray.level_u(o.y, o.t, o.region);
    if (o.region == Region::X1LeX2) {
        res.x1 = o.t * u;
        res.x2 = u;
    } else {
        res.x1 = u;
        res.x2 = o.t * u;
    }
    return res;
}

Certificates tightness_certificates(const Digraph& g, const VariationalResult& lower, int cap) {
    Certificates c;
    c.half_weight_a = c.half_weight_b = true;
    c.a_matches_out_neighborhood = c.b_matches_in_neighborhood = true;
    for (const auto& s : enumerate_independent_sets(g, cap)) {
        if (s.empty()) continue;
        auto pr = set_profile(g, s);
        auto db = directional_bounds(g, s);
        int size = static_cast<int>(s.size());
        if (2 * db.a_weight < size) c.half_weight_a = false;
        if (2 * db.b_weight < size) c.half_weight_b = false;
        if (db.a_weight != pr.a_count) c.a_matches_out_neighborhood = false;
        if (db.b_weight != pr.b_count) c.b_matches_in_neighborhood = false;
    }
    c.both_half_weights = c.half_weight_a && c.half_weight_b;
    c.f_equals_g = build_f(g, cap) == build_g(g, cap);

    double scale = std::max(1.0, std::abs(lower.value));
    bool y2_at_argmin =
        lower.feasible && lower.family_value_y2_one <= lower.value + 1e-9 * scale;
    bool y1_at_argmin =
        lower.feasible && lower.family_value_y1_one <= lower.value + 1e-9 * scale;

    if (c.both_half_weights)
        c.fired.push_back("both half-weight conditions hold: argmin at y1 = y2 = 1");
    if (c.a_matches_out_neighborhood && y2_at_argmin)
        c.fired.push_back("a_S = |N+(S)| for every S and y2 = 1 at the argmin");
    if (c.b_matches_in_neighborhood && y1_at_argmin)
        c.fired.push_back("b_S = |N-(S)| for every S and y1 = 1 at the argmin");
    if (c.f_equals_g) c.fired.push_back("f and g coincide term by term");
    return c;
}

std::string to_string(Tightness t) {
    switch (t) {
        case Tightness::TightCertified: return "TIGHT_CERTIFIED";
        case Tightness::TightNumerical: return "TIGHT_NUMERICAL";
        case Tightness::Gap: return "GAP";
        case Tightness::Unknown: return "UNKNOWN";
    }
    return "UNKNOWN";
}

BoundsReport assemble_bounds(const Digraph& g, double delta, const SolverConfig& cfg) {
    if (g.m() == 0) throw InfeasibleError("digraph has no edges; nothing to bound");
    if (delta <= 0.0) throw std::invalid_argument("delta must be positive");

    BoundsReport r;
    r.delta = delta;
    auto f = build_f(g, cfg.core_cap);
    auto gg = build_g(g, cfg.core_cap);
    r.upper_variational = solve_F(f, delta, cfg);
    r.lower_variational = solve_G(gg, delta, cfg);

    auto cls = classify(g);
    auto deg = degrees(g);
    r.clique_branch = cls.weakly_connected && cls.regular;
    if (r.clique_branch) r.clique_value = std::pow(delta, 2.0 / g.n);

    r.upper = r.upper_variational.value;
    r.lower = r.lower_variational.value;
    if (r.clique_branch) {
        r.upper = std::min(r.upper, r.clique_value);
        r.lower = std::min(r.lower, r.clique_value);
    }

    r.certificates = tightness_certificates(g, r.lower_variational, cfg.core_cap);

    if (!r.upper_variational.feasible || !r.lower_variational.feasible) {
        r.tightness = Tightness::Unknown;
    } else if (!r.certificates.fired.empty()) {
        r.tightness = Tightness::TightCertified;
    } else if (std::abs(r.upper - r.lower) <= 10.0 * cfg.tol) {
        r.tightness = Tightness::TightNumerical;
    } else {
        r.tightness = Tightness::Gap;
    }

    if (deg.max_degree < 2)
        r.warnings.push_back("max degree below 2: lower-bound theory inapplicable");
    if (!cls.weakly_connected)
        r.warnings.push_back("digraph is not weakly connected: the bound guarantees assume connectivity");
    if (!cls.oriented)
        r.warnings.push_back(
            "digraph contains opposite edge pairs: the polynomial upper bound is only "
            "guaranteed for oriented digraphs");
    return r;
}

ClosedForm closed_form(const Digraph& g, double delta) {
    ClosedForm cf;
    auto cls = classify(g);
    auto deg = degrees(g);
    if (cls.is_star) {
        int center = 0;
        for (int v = 0; v < g.n; ++v)
            if (deg.total[v] == deg.max_degree) center = v;
        if (deg.in[center] == 0 || deg.out[center] == 0) {
            cf.known = true;
            cf.value = delta;
            cf.description = "one-way star: bound delta";
        } else {
            cf.known = true;
            cf.value = 2.0 * delta;
            cf.description = "mixed star: bound 2*delta";
        }
        return cf;
    }
    if (g.n == 3 && g.m() == 3) {
        bool tournament = true;
        for (int u = 0; u < 3 && tournament; ++u)
            for (int v = u + 1; v < 3; ++v) {
                int count = (g.has_edge(u, v) ? 1 : 0) + (g.has_edge(v, u) ? 1 : 0);
                if (count != 1) tournament = false;
            }
        if (tournament) {
            cf.known = true;
            cf.value = std::min(std::pow(delta, 2.0 / 3.0), 2.0 * delta / 3.0);
            cf.description = "triangle: bound min(delta^(2/3), 2*delta/3)";
            return cf;
        }
    }
    return cf;
}

}  // namespace uptail
