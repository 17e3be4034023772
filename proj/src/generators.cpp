#include "dsep/generators.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "dsep/graph.hpp"
#include "dsep/rng.hpp"

namespace dsep {

namespace {

constexpr double kPi = std::numbers::pi;

void check_ring_window(int n, std::int64_t m) {
    if (n < 1) throw input_error("ring family: n must be positive");
    const std::int64_t lo = 9LL * n;
    const std::int64_t hi = static_cast<std::int64_t>(n) * n / 6;
    if (m < lo || m > hi)
        throw input_error("ring family: requires 9*n <= m <= floor(n^2/6), got n=" +
                          std::to_string(n) + " m=" + std::to_string(m));
}

}  // namespace

Instance gen_random(int n, double L, std::uint64_t seed, bool require_connected,
                    int max_rejects) {
    if (n < 1) throw input_error("gen_random: n must be >= 1");
    if (!(L > 0.0) || !std::isfinite(L)) throw input_error("gen_random: L must be positive");
    if (max_rejects < 0) throw input_error("gen_random: max_rejects must be >= 0");

    SplitMix64 rng(seed);
    int rejects = 0;
    for (;;) {
        Instance inst;
        inst.disks.reserve(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) {
            const double x = rng.u01() * L;
            const double y = rng.u01() * L;
            inst.disks.push_back({i, x, y, 1.0});
        }
        if (!require_connected || is_connected(build_graph(inst))) {
            inst.provenance = "random n=" + std::to_string(n) + " L=" + std::to_string(L) +
                              " seed=" + std::to_string(seed) +
                              " connected=" + (require_connected ? "1" : "0");
            return inst;
        }
        if (++rejects > max_rejects)
            throw input_error("gen_random: no connected instance after " +
                              std::to_string(rejects - 1) + " rejections");
    }
}

Instance gen_snake(int q) {
    if (q < 3 || q % 2 == 0) throw input_error("gen_snake: q must be odd and >= 3");
    const double radius = 2.0 / 3.0;
    Instance inst;
    inst.disks.reserve(static_cast<std::size_t>((q * q - 1) / 2 + q));
    int id = 0;
    // full columns at odd abscissas
    for (int i = 1; i <= (q + 1) / 2; ++i)
        for (int j = 1; j <= q; ++j)
            inst.disks.push_back({id++, static_cast<double>(2 * i - 1),
                                  static_cast<double>(j), radius});
    // connectors at even abscissas, alternating top (odd i) and bottom
    for (int i = 1; i <= (q - 1) / 2; ++i) {
        const int y = (i % 2 == 1) ? q : 1;
        inst.disks.push_back({id++, static_cast<double>(2 * i), static_cast<double>(y),
                              radius});
    }
    inst.provenance = "snake q=" + std::to_string(q);
    return inst;
}

int choose_ring_count(int n, std::int64_t m) {
    check_ring_window(n, m);
    for (int k = 1; k <= n; ++k) {
        const double bound =
            std::sqrt(6.0 * static_cast<double>(m) /
                      (1.0 + std::log(static_cast<double>(n) / static_cast<double>(k))));
        if (static_cast<double>(k) >= bound) return k;
    }
    throw internal_error("choose_ring_count: no k <= n satisfied the recurrence");
}

double default_ring_eps() { return 1.0 / (4.0 * kPi); }

std::pair<Instance, RingFamilyParams> gen_rings(int n, std::int64_t m, double eps) {
    check_ring_window(n, m);
    if (!(eps > 0.0) || eps > default_ring_eps() + 1e-15)
        throw input_error("gen_rings: eps must lie in (0, 1/(4*pi)]");

    RingFamilyParams p;
    p.n_requested = n;
    p.m_requested = m;
    p.eps = eps;
    p.k = choose_ring_count(n, m);
    p.layers = (n + p.k - 1) / p.k;

    Instance inst;
    inst.disks.reserve(static_cast<std::size_t>(p.k) * static_cast<std::size_t>(p.layers));
    int id = 0;
    for (int i = 1; i <= p.layers; ++i) {
        const double radius = 2.0 * i * (1.0 + eps);
        // arc spanned by two touching unit disks on this ring; must stay in
        // (2, 2pi/3) for the family's intersection-count bounds to hold
        const double gamma =
            4.0 * i * (1.0 + eps) * std::asin(1.0 / (2.0 * i * (1.0 + eps)));
        if (!(gamma > 2.0 && gamma < 2.0 * kPi / 3.0))
            throw internal_error("gen_rings: ring arc constant out of range");
        for (int j = 0; j < p.k; ++j) {
            const double a = 2.0 * kPi * j / p.k;
            inst.disks.push_back({id++, radius * std::cos(a), radius * std::sin(a), 1.0});
        }
    }
    p.n_built = inst.n();
    if (p.n_built < n || p.n_built > 2 * n)
        throw internal_error("gen_rings: built disk count outside [n, 2n]");

    p.m_built = build_graph(inst).m();
    const std::int64_t m_lo = (m + 8) / 9;
    const std::int64_t m_hi = 6 * m;
    if (p.m_built < m_lo || p.m_built > m_hi)
        throw internal_error("gen_rings: built edge count outside [ceil(m/9), 6m]");

    inst.provenance = "rings n=" + std::to_string(n) + " m=" + std::to_string(m) +
                      " eps=" + std::to_string(eps) + " k=" + std::to_string(p.k) +
                      " layers=" + std::to_string(p.layers);
    return {std::move(inst), p};
}

std::pair<Instance, RingFamilyParams> gen_rings(int n, std::int64_t m) {
    return gen_rings(n, m, default_ring_eps());
}

Instance gen_nested_disks(int levels, double eps) {
    if (levels < 1) throw input_error("gen_nested_disks: levels must be >= 1");
    if (!(eps > 0.0 && eps < 0.5)) throw input_error("gen_nested_disks: eps must be in (0, 1/2)");

    const double shrink = 1.0 - eps;
    Instance inst;
    inst.disks.reserve(1 + 6 * static_cast<std::size_t>(levels - 1));
    inst.disks.push_back({0, 0.0, 0.0, shrink});
    int id = 1;
    double enclosing = 1.0;  // nominal radius of the disk covering all prior levels
    for (int lvl = 2; lvl <= levels; ++lvl) {
        const double rho = enclosing;
        // six touching disks around the enclosing disk; alternate the phase
        // by 30 degrees so their tangency points avoid the previous ring
        const double phase = (lvl % 2 == 0) ? 0.0 : kPi / 6.0;
        for (int j = 0; j < 6; ++j) {
            const double a = phase + j * kPi / 3.0;
            inst.disks.push_back(
                {id++, 2.0 * rho * std::cos(a), 2.0 * rho * std::sin(a), rho * shrink});
        }
        // ring disks reach out to 3*rho from the origin
        enclosing = 3.0 * rho;
        if (std::abs(enclosing - std::pow(3.0, lvl - 1)) > 1e-9 * enclosing)
            throw internal_error("gen_nested_disks: enclosing radius recurrence broke");
    }
    inst.provenance =
        "nested levels=" + std::to_string(levels) + " eps=" + std::to_string(eps);
    return inst;
}

}  // namespace dsep
