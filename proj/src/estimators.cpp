#include "rcm/estimators.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "rcm/quadrature.hpp"

namespace rcm {

namespace {

constexpr int kBatches = 32;

// Replicates are partitioned into 32 fixed batches; threads pick whole
// batches, and partial results merge in batch order, so the output does not
// depend on the thread count or schedule. The batch structure doubles as the
// batch-means error estimator.
template <typename PerReplicate>
void run_batches(long long replicates, int threads, PerReplicate&& body) {
    std::atomic<int> next{0};
    auto worker = [&]() {
        for (;;) {
            const int b = next.fetch_add(1);
            if (b >= kBatches) return;
            const long long lo = b * replicates / kBatches;
            const long long hi = (b + 1) * replicates / kBatches;
            for (long long r = lo; r < hi; ++r) body(b, r);
        }
    };
    std::vector<std::thread> pool;
    const int nt = std::max(1, threads);
    for (int t = 0; t < nt; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
}

std::vector<double> box_center(const BoxGeometry& box) {
    return std::vector<double>(box.dimension, 0.5 * box.side_length);
}

std::vector<double> pin_at_offset(const BoxGeometry& box, const std::vector<double>& x) {
    auto p = box_center(box);
    for (int a = 0; a < box.dimension; ++a) {
        p[a] += x[a];
        if (box.boundary == Boundary::periodic) {
            p[a] = std::fmod(p[a], box.side_length);
            if (p[a] < 0.0) p[a] += box.side_length;
        }
    }
    if (!box.contains(p)) throw std::invalid_argument("displacement outside box");
    return p;
}

double binomial_se(double p, long long n) {
    return n > 0 ? std::sqrt(std::max(0.0, p * (1.0 - p)) / static_cast<double>(n)) : 0.0;
}

struct BatchMeans {
    double sums[kBatches] = {0};
    long long counts[kBatches] = {0};

    void add(int b, double v) {
        sums[b] += v;
        counts[b] += 1;
    }
    double mean() const {
        double s = 0.0;
        long long n = 0;
        for (int b = 0; b < kBatches; ++b) {
            s += sums[b];
            n += counts[b];
        }
        return n ? s / static_cast<double>(n) : 0.0;
    }
    // standard error of the mean from the spread of batch means
    double std_error() const {
        const double m = mean();
        double ss = 0.0;
        int nb = 0;
        for (int b = 0; b < kBatches; ++b) {
            if (counts[b] == 0) continue;
            const double bm = sums[b] / static_cast<double>(counts[b]);
            ss += (bm - m) * (bm - m);
            ++nb;
        }
        if (nb < 2) return 0.0;
        return std::sqrt(ss / static_cast<double>(nb) / static_cast<double>(nb - 1));
    }
    long long total() const {
        long long n = 0;
        for (int b = 0; b < kBatches; ++b) n += counts[b];
        return n;
    }
};

// Diagnostic: does the cluster reach the box boundary (free) or span half
// the period (periodic, detected from unwrapped BFS coordinates)?
bool cluster_touches_boundary(const RcmSample& s, const std::vector<std::uint32_t>& cluster,
                              const BoxGeometry& box, double rt) {
    const int d = box.dimension;
    if (box.boundary == Boundary::free) {
        for (std::uint32_t v : cluster) {
            const auto p = s.point(v);
            for (int a = 0; a < d; ++a)
                if (p[a] < rt || p[a] > box.side_length - rt) return true;
        }
        return false;
    }
    // periodic: unwrap coordinates along a BFS spanning tree and check extent
    if (cluster.empty()) return false;
    std::vector<double> lo(d, 0.0), hi(d, 0.0);
    std::vector<int> order_index(s.size(), -1);
    for (std::size_t i = 0; i < cluster.size(); ++i) order_index[cluster[i]] = static_cast<int>(i);
    std::vector<std::vector<double>> unwrapped(cluster.size());
    std::vector<char> seen(cluster.size(), 0);
    std::vector<std::uint32_t> stack{cluster[0]};
    unwrapped[0] = std::vector<double>(d, 0.0);
    seen[0] = 1;
    std::vector<double> disp(d);
    while (!stack.empty()) {
        const std::uint32_t v = stack.back();
        stack.pop_back();
        const int vi = order_index[v];
        for (std::uint32_t w : s.adjacency[v]) {
            const int wi = order_index[w];
            if (wi < 0 || seen[wi]) continue;
            box.displacement(s.point(v), s.point(w), disp);
            unwrapped[wi].resize(d);
            for (int a = 0; a < d; ++a) unwrapped[wi][a] = unwrapped[vi][a] + disp[a];
            seen[wi] = 1;
            stack.push_back(w);
        }
    }
    for (const auto& u : unwrapped) {
        for (int a = 0; a < d; ++a) {
            lo[a] = std::min(lo[a], u[a]);
            hi[a] = std::max(hi[a], u[a]);
        }
    }
    for (int a = 0; a < d; ++a)
        if (hi[a] - lo[a] >= 0.5 * box.side_length) return true;
    return false;
}

void check_subcritical(double t, const ConnectionFunction& f, double bound) {
    const double limit = bound > 0.0 ? bound : 1.0 / f.mass();
    if (t >= limit) {
        std::ostringstream os;
        os << "intensity " << t << " is not below the subcritical guard " << limit
           << " (default 1/m_phi; pass an explicit bound to assert otherwise)";
        throw std::invalid_argument(os.str());
    }
}

}  // namespace

std::vector<double> RadialProfile::centers() const {
    std::vector<double> c(values.size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = 0.5 * (bin_edges[i] + bin_edges[i + 1]);
    return c;
}

ProfileIntegral profile_integral(const RadialProfile& p, int dimension) {
    ProfileIntegral out;
    double var = 0.0;
    for (std::size_t i = 0; i < p.values.size(); ++i) {
        const double shell =
            ball_volume(dimension, p.bin_edges[i + 1]) - ball_volume(dimension, p.bin_edges[i]);
        out.value += p.values[i] * shell;
        var += shell * shell * p.std_errors[i] * p.std_errors[i];
    }
    out.std_error = std::sqrt(var);
    return out;
}

EstimateTable estimate_pairconn(double t, const ConnectionFunction& f, const BoxGeometry& box,
                                const std::vector<std::vector<double>>& displacements,
                                long long replicates, RngSpec rng, int threads) {
    box.validate_for(f);
    EstimateTable table;
    table.meta = {t,   f.describe(), box.side_length,
                  box.boundary == Boundary::periodic ? "periodic" : "free",
                  box.dimension, rng.seed, replicates, threads, 0.0, false, ""};

    const auto origin = box_center(box);
    for (std::size_t di = 0; di < displacements.size(); ++di) {
        const auto& x = displacements[di];
        const auto pin2 = pin_at_offset(box, x);
        std::vector<long long> hits(kBatches, 0);
        run_batches(replicates, threads, [&](int b, long long r) {
            RngSpec spec{rng.seed, rng.stream + static_cast<std::uint64_t>(r) +
                                       static_cast<std::uint64_t>(di) * 0x100000000ull};
            const RcmSample s = sample_rcm(t, f, box, {origin, pin2}, spec);
            const auto cl = cluster_of(s, 0);
            if (std::find(cl.begin(), cl.end(), 1u) != cl.end()) ++hits[b];
        });
        long long total = 0;
        for (long long h : hits) total += h;
        const double p = replicates ? static_cast<double>(total) / replicates : 0.0;
        double norm = 0.0;
        for (double c : x) norm += c * c;
        std::ostringstream os;
        os << std::sqrt(norm);
        table.rows.push_back({os.str(), p, binomial_se(p, replicates), replicates});
    }
    return table;
}

RadialProfile estimate_pairconn_profile(double t, const ConnectionFunction& f,
                                        const BoxGeometry& box, double r_max, double bin_width,
                                        long long replicates, RngSpec rng, int threads) {
    const int m = static_cast<int>(std::ceil(r_max / bin_width - 1e-12));
    RadialProfile prof;
    prof.bin_edges.resize(m + 1);
    for (int i = 0; i <= m; ++i) prof.bin_edges[i] = i * bin_width;
    std::vector<std::vector<double>> displacements;
    for (int i = 0; i < m; ++i) {
        std::vector<double> x(box.dimension, 0.0);
        x[0] = 0.5 * (prof.bin_edges[i] + prof.bin_edges[i + 1]);
        displacements.push_back(std::move(x));
    }
    const EstimateTable table =
        estimate_pairconn(t, f, box, displacements, replicates, rng, threads);
    for (const auto& row : table.rows) {
        prof.values.push_back(row.estimate);
        prof.std_errors.push_back(row.std_error);
        prof.counts.push_back(row.replicates);
    }
    return prof;
}

EstimateTable estimate_cluster_size_dist(double t, const ConnectionFunction& f,
                                         const BoxGeometry& box, int max_size,
                                         long long replicates, RngSpec rng, int threads) {
    if (max_size < 1) throw std::invalid_argument("max_size must be >= 1");
    box.validate_for(f);
    const auto origin = box_center(box);
    std::vector<std::vector<long long>> counts(kBatches,
                                               std::vector<long long>(max_size + 1, 0));
    run_batches(replicates, threads, [&](int b, long long r) {
        RngSpec spec{rng.seed, rng.stream + static_cast<std::uint64_t>(r)};
        const RcmSample s = sample_rcm(t, f, box, {origin}, spec);
        const std::size_t size = cluster_of(s, 0).size();
        if (size <= static_cast<std::size_t>(max_size))
            ++counts[b][size - 1];
        else
            ++counts[b][max_size];
    });
    EstimateTable table;
    table.meta = {t,   f.describe(), box.side_length,
                  box.boundary == Boundary::periodic ? "periodic" : "free",
                  box.dimension, rng.seed, replicates, threads, 0.0, false, ""};
    for (int k = 0; k <= max_size; ++k) {
        long long total = 0;
        for (int b = 0; b < kBatches; ++b) total += counts[b][k];
        const double p = replicates ? static_cast<double>(total) / replicates : 0.0;
        std::ostringstream os;
        if (k < max_size)
            os << (k + 1);
        else
            os << ">" << max_size;
        table.rows.push_back({os.str(), p, binomial_se(p, replicates), replicates});
    }
    return table;
}

double cluster_size_exact_small(double t, const ConnectionFunction& f, int n, double rel_tol) {
    if (f.dimension() != 1)
        throw std::invalid_argument("cluster_size_exact_small is implemented for d=1");
    if (f.kind() == PhiKind::exponential)
        throw std::invalid_argument("cluster_size_exact_small needs compact support");
    if (n < 0 || n > 2) throw std::invalid_argument("cluster_size_exact_small handles n <= 2");
    const double rt = f.truncation_radius();
    if (n == 0) return std::exp(-t * f.mass());

    // exponent integral: int (1 - prod_i (1 - phi(y - x_i))) dy over the
    // union of the shifted supports, split at every support edge
    auto exponent_u = [&](const std::vector<double>& xs) {
        std::vector<double> breaks;
        for (double x : xs) {
            breaks.push_back(x - rt);
            breaks.push_back(x);
            breaks.push_back(x + rt);
        }
        auto integrand = [&](double y) {
            double prod = 1.0;
            for (double x : xs) prod *= 1.0 - f.radial(y - x);
            return 1.0 - prod;
        };
        return integrate_panels(integrand, breaks);
    };

    double value = 0.0;
    if (n == 1) {
        auto integrand = [&](double x1) {
            return f.radial(x1) * std::exp(-t * exponent_u({0.0, x1}));
        };
        value = t * integrate_panels(integrand, {-rt, 0.0, rt});
    } else {
        // n = 2: connection probability of {0, x1, x2} from the four
        // connected graphs on three labeled vertices
        auto conn3 = [&](double x1, double x2) {
            const double a = f.radial(x1);
            const double b = f.radial(x2);
            const double c = f.radial(x2 - x1);
            return a * b * c + a * b * (1 - c) + a * c * (1 - b) + b * c * (1 - a);
        };
        auto inner = [&](double x1) {
            auto integrand = [&](double x2) {
                const double p = conn3(x1, x2);
                if (p == 0.0) return 0.0;
                return p * std::exp(-t * exponent_u({0.0, x1, x2}));
            };
            return integrate_panels(integrand,
                                    {-2 * rt, -rt, 0.0, rt, 2 * rt, x1 - rt, x1, x1 + rt});
        };
        value = 0.5 * t * t * integrate_panels(inner, {-2 * rt, -rt, 0.0, rt, 2 * rt});
    }

    // error control: repeat on split panels and compare
    if (rel_tol > 0.0) {
        const double check = [&] {
            if (n == 1) {
                auto integrand = [&](double x1) {
                    return f.radial(x1) * std::exp(-t * exponent_u({0.0, x1}));
                };
                return t * integrate_panels(integrand, {-rt, -0.5 * rt, 0.0, 0.5 * rt, rt});
            }
            auto conn3 = [&](double x1, double x2) {
                const double a = f.radial(x1);
                const double b = f.radial(x2);
                const double c = f.radial(x2 - x1);
                return a * b * c + a * b * (1 - c) + a * c * (1 - b) + b * c * (1 - a);
            };
            auto inner = [&](double x1) {
                auto integrand = [&](double x2) {
                    const double p = conn3(x1, x2);
                    if (p == 0.0) return 0.0;
                    return p * std::exp(-t * exponent_u({0.0, x1, x2}));
                };
                return integrate_panels(integrand, {-2 * rt, -1.5 * rt, -rt, -0.5 * rt, 0.0,
                                                    0.5 * rt, rt, 1.5 * rt, 2 * rt, x1 - rt, x1,
                                                    x1 + rt});
            };
            return 0.5 * t * t *
                   integrate_panels(inner, {-2 * rt, -1.5 * rt, -rt, -0.5 * rt, 0.0, 0.5 * rt,
                                            rt, 1.5 * rt, 2 * rt});
        }();
        const double scale = std::max(std::abs(value), 1e-300);
        if (std::abs(check - value) / scale > rel_tol)
            throw std::runtime_error("cluster-size quadrature achieved only " +
                                     std::to_string(std::abs(check - value) / scale));
    }
    return value;
}

MeanEstimate estimate_mean_cluster_size(double t, const ConnectionFunction& f,
                                        const BoxGeometry& box, long long replicates,
                                        RngSpec rng, int threads, double subcritical_bound,
                                        double boundary_warn_threshold) {
    check_subcritical(t, f, subcritical_bound);
    box.validate_for(f);
    const auto origin = box_center(box);
    const double rt = f.truncation_radius();
    BatchMeans sizes, touches;
    run_batches(replicates, threads, [&](int b, long long r) {
        RngSpec spec{rng.seed, rng.stream + static_cast<std::uint64_t>(r)};
        const RcmSample s = sample_rcm(t, f, box, {origin}, spec);
        const auto cl = cluster_of(s, 0);
        sizes.add(b, static_cast<double>(cl.size()));
        touches.add(b, cluster_touches_boundary(s, cl, box, rt) ? 1.0 : 0.0);
    });
    MeanEstimate out;
    out.value = sizes.mean();
    out.std_error = sizes.std_error();
    out.boundary_fraction = touches.mean();
    out.boundary_warning = out.boundary_fraction > boundary_warn_threshold;
    out.replicates = sizes.total();
    return out;
}

MeanEstimate estimate_mean_inverse_cluster_size(double t, const ConnectionFunction& f,
                                                const BoxGeometry& box, long long replicates,
                                                RngSpec rng, int threads) {
    box.validate_for(f);
    const auto origin = box_center(box);
    BatchMeans inv;
    run_batches(replicates, threads, [&](int b, long long r) {
        RngSpec spec{rng.seed, rng.stream + static_cast<std::uint64_t>(r)};
        const RcmSample s = sample_rcm(t, f, box, {origin}, spec);
        inv.add(b, 1.0 / static_cast<double>(cluster_of(s, 0).size()));
    });
    MeanEstimate out;
    out.value = inv.mean();
    out.std_error = inv.std_error();
    out.replicates = inv.total();
    return out;
}

MeanEstimate estimate_cluster_density(double t, const ConnectionFunction& f,
                                      const BoxGeometry& box, long long replicates, RngSpec rng,
                                      int threads, double subcritical_bound) {
    check_subcritical(t, f, subcritical_bound);
    box.validate_for(f);
    const double volume = box.volume();
    const double rt = f.truncation_radius();
    BatchMeans density;
    run_batches(replicates, threads, [&](int b, long long r) {
        RngSpec spec{rng.seed, rng.stream + static_cast<std::uint64_t>(r)};
        const RcmSample s = sample_rcm(t, f, box, {}, spec);
        const auto labels = component_labels(s);
        long long clusters = 0;
        for (std::uint32_t v = 0; v < s.size(); ++v) {
            if (labels[v] != v) continue;  // count each component at its smallest member
            if (box.boundary == Boundary::free) {
                const auto cl = cluster_of(s, v);
                if (cluster_touches_boundary(s, cl, box, rt)) continue;  // not fully inside
            }
            ++clusters;
        }
        density.add(b, static_cast<double>(clusters) / volume);
    });
    MeanEstimate out;
    out.value = density.mean();
    out.std_error = density.std_error();
    out.replicates = density.total();
    return out;
}

}  // namespace rcm
