#include "blowup/inheritance.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "blowup/error.hpp"
#include "blowup/rng.hpp"

namespace blowup {

namespace {

constexpr double kTol = 1e-12;

bool inherits_unchecked(const PropertySpec& spec, std::span<const Vertex> set)
{
    const Graph& g = *spec.host;
    const int s = spec.s;
    Bitset members(static_cast<std::size_t>(g.order()));
    for (Vertex v : set) members.set(v);
    if (spec.mode == InheritanceMode::Absolute) {
        const double need = (0.5 + spec.eps / 2.0) * s;
        for (Vertex v : set)
            if (g.degree_into(v, members) < need - kTol) return false;
        return true;
    }
    const double n1 = static_cast<double>(g.order() - 1);
    for (Vertex v : set) {
        const double inside = static_cast<double>(g.degree_into(v, members)) / (s - 1);
        const double global = static_cast<double>(g.degree(v)) / n1;
        if (inside < global - spec.eps - kTol) return false;
    }
    return true;
}

}  // namespace

PropertySpec::PropertySpec(const Graph& g, int s_, double eps_, InheritanceMode mode_)
    : host(&g), s(s_), eps(eps_), mode(mode_)
{
    if (s < 2 || s > g.order()) throw Error("property spec: need 2 <= s <= n");
    if (!(eps > 0.0 && eps < 1.0)) throw Error("property spec: need 0 < eps < 1");
}

double DegreeEstimate::standard_error() const
{
    if (trials == 0) return 0.0;
    return std::sqrt(estimate * (1.0 - estimate) / static_cast<double>(trials));
}

bool inherits_degree(const PropertySpec& spec, const VertexList& set)
{
    if (static_cast<int>(set.size()) != spec.s) throw Error("set size differs from s");
    VertexList sorted = set;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) throw Error("set has repeated vertex");
    for (Vertex v : sorted)
        if (v < 0 || v >= spec.host->order()) throw Error("vertex out of range");
    return inherits_unchecked(spec, sorted);
}

DegreeEstimate property_degree_estimate(const PropertySpec& spec, Vertex v, std::uint64_t trials,
                                        std::uint64_t seed)
{
    if (trials < 1) throw Error("trials must be positive");
    const int n = spec.host->order();
    VertexList others;
    others.reserve(static_cast<std::size_t>(n - 1));
    for (Vertex u = 0; u < n; ++u)
        if (u != v) others.push_back(u);

    DegreeEstimate out;
    out.trials = trials;
    out.seed = seed;
    VertexList set(static_cast<std::size_t>(spec.s));
    for (std::uint64_t t = 0; t < trials; ++t) {
        // Each trial reshuffles from the canonical order so trials are
        // independent of evaluation order.
        VertexList pool = others;
        Rng rng(mix_seed(seed, t));
        rng.partial_shuffle(pool, static_cast<std::size_t>(spec.s - 1));
        set[0] = v;
        std::copy_n(pool.begin(), spec.s - 1, set.begin() + 1);
        if (inherits_unchecked(spec, set)) ++out.successes;
    }
    out.estimate = static_cast<double>(out.successes) / static_cast<double>(trials);
    return out;
}

double property_degree_exact(const PropertySpec& spec, Vertex v, std::uint64_t budget)
{
    const int n = spec.host->order();
    const int k = spec.s - 1;
    const double total = binomial(n - 1, k);
    if (total > static_cast<double>(budget)) throw Error("enumeration exceeds budget");
    VertexList others;
    for (Vertex u = 0; u < n; ++u)
        if (u != v) others.push_back(u);

    std::vector<int> idx(static_cast<std::size_t>(k));
    std::iota(idx.begin(), idx.end(), 0);
    const int m = static_cast<int>(others.size());
    VertexList set(static_cast<std::size_t>(spec.s));
    std::uint64_t hits = 0, seen = 0;
    while (true) {
        set[0] = v;
        for (int i = 0; i < k; ++i) set[i + 1] = others[idx[i]];
        if (inherits_unchecked(spec, set)) ++hits;
        ++seen;
        int i = k - 1;
        while (i >= 0 && idx[i] == m - k + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
    return static_cast<double>(hits) / static_cast<double>(seen);
}

Hypergraph property_hypergraph(const PropertySpec& spec)
{
    PropertySpec copy = spec;
    return Hypergraph::implicit(spec.host->order(), spec.s,
                                [copy](std::span<const Vertex> set) { return inherits_unchecked(copy, set); });
}

double hypergeometric_tail_bound(double n_draws, double ell)
{
    if (!(n_draws >= 1.0)) throw Error("n_draws must be at least 1");
    if (!(ell > 0.0)) throw Error("ell must be positive");
    return 2.0 * std::exp(-2.0 * ell * ell / n_draws);
}

double binomial(int n, int k)
{
    if (k < 0 || k > n) return 0.0;
    k = std::min(k, n - k);
    double r = 1.0;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return std::round(r);
}

}  // namespace blowup
