#include "blowup/regular.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <unordered_map>

#include "blowup/error.hpp"
#include "blowup/rng.hpp"

namespace blowup {

const char* to_string(CertMode m)
{
    switch (m) {
    case CertMode::Exhaustive: return "EXHAUSTIVE";
    case CertMode::Sampled: return "SAMPLED";
    case CertMode::Uncertified: return "UNCERTIFIED";
    }
    return "?";
}

std::size_t RegularTuple::vertex_count() const
{
    std::size_t total = 0;
    for (const auto& part : parts) total += part.size();
    return total;
}

namespace {

constexpr std::size_t kMaxTensorCells = std::size_t{1} << 25;

/// Partite edge indicator over V_0 × … × V_{s-1}, row-major.
struct Tensor {
    std::vector<int> dims;
    std::vector<std::uint8_t> cells;

    std::size_t stride(std::size_t level) const
    {
        std::size_t st = 1;
        for (std::size_t i = level + 1; i < dims.size(); ++i) st *= static_cast<std::size_t>(dims[i]);
        return st;
    }
};

void validate_parts(const Hypergraph& p, const std::vector<VertexList>& parts)
{
    if (static_cast<int>(parts.size()) != p.uniformity()) throw Error("tuple needs exactly s parts");
    Bitset seen(static_cast<std::size_t>(p.order()));
    for (const auto& part : parts) {
        if (part.empty()) throw Error("empty part");
        for (Vertex v : part) {
            if (v < 0 || v >= p.order()) throw Error("part vertex out of range");
            if (seen.test(v)) throw Error("parts not disjoint");
            seen.set(v);
        }
    }
}

Tensor build_tensor(const Hypergraph& p, const std::vector<VertexList>& parts)
{
    Tensor t;
    std::size_t cells = 1;
    for (const auto& part : parts) {
        t.dims.push_back(static_cast<int>(part.size()));
        cells *= part.size();
        if (cells > kMaxTensorCells) throw Error("tuple too large for density evaluation");
    }
    t.cells.assign(cells, 0);
    const std::size_t s = parts.size();
    if (p.is_explicit()) {
        std::unordered_map<Vertex, std::pair<std::size_t, std::size_t>> where;
        for (std::size_t i = 0; i < s; ++i)
            for (std::size_t j = 0; j < parts[i].size(); ++j) where[parts[i][j]] = {i, j};
        std::vector<long> idx(s);
        for (const auto& e : p.edges()) {
            std::fill(idx.begin(), idx.end(), -1);
            bool ok = true;
            for (Vertex v : e) {
                auto it = where.find(v);
                if (it == where.end() || idx[it->second.first] != -1) {
                    ok = false;
                    break;
                }
                idx[it->second.first] = static_cast<long>(it->second.second);
            }
            if (!ok) continue;
            std::size_t flat = 0;
            for (std::size_t i = 0; i < s; ++i) flat = flat * t.dims[i] + static_cast<std::size_t>(idx[i]);
            t.cells[flat] = 1;
        }
        return t;
    }
    std::vector<std::size_t> odo(s, 0);
    VertexList tuple(s);
    for (std::size_t flat = 0; flat < cells; ++flat) {
        for (std::size_t i = 0; i < s; ++i) tuple[i] = parts[i][odo[i]];
        t.cells[flat] = p.has_edge(tuple) ? 1 : 0;
        for (std::size_t i = s; i-- > 0;) {
            if (++odo[i] < parts[i].size()) break;
            odo[i] = 0;
        }
    }
    return t;
}

/// Sum of the cells selected by one index list per dimension.
long sub_count(const Tensor& t, const std::vector<std::vector<int>>& pick, std::size_t level = 0, std::size_t base = 0)
{
    if (level == t.dims.size()) return t.cells[base];
    long total = 0;
    for (int j : pick[level]) total += sub_count(t, pick, level + 1, (base * t.dims[level]) + j);
    return total;
}

/// Partite degree of each index of dimension `level` within the sub-tensor
/// selected by `pick`.
std::vector<long> partite_degrees(const Tensor& t, const std::vector<std::vector<int>>& pick, std::size_t level)
{
    std::vector<long> out(static_cast<std::size_t>(t.dims[level]), 0);
    auto narrowed = pick;
    for (int j = 0; j < t.dims[level]; ++j) {
        narrowed[level] = {j};
        out[j] = sub_count(t, narrowed);
    }
    return out;
}

std::vector<int> subset_sizes(const std::vector<VertexList>& parts, double rho)
{
    std::vector<int> k;
    for (const auto& part : parts) {
        int size = static_cast<int>(std::ceil(rho * static_cast<double>(part.size()) - 1e-9));
        k.push_back(std::clamp(size, 1, static_cast<int>(part.size())));
    }
    return k;
}

double binomial_u(int n, int k)
{
    double r = 1.0;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

/// k smallest of `values` (ties by index), and their sum.
std::pair<long, std::vector<int>> smallest(const std::vector<long>& values, int k)
{
    std::vector<int> order(values.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return values[a] < values[b]; });
    order.resize(static_cast<std::size_t>(k));
    long sum = 0;
    for (int j : order) sum += values[j];
    std::sort(order.begin(), order.end());
    return {sum, order};
}

struct Witness {
    long count = 0;
    std::vector<std::vector<int>> pick;
};

class ExhaustiveMinimiser {
public:
    ExhaustiveMinimiser(const Tensor& t, std::vector<int> k) : t_(t), k_(std::move(k)), pick_(k_.size()) {}

    Witness run()
    {
        best_.count = -1;
        level(0, std::vector<long>(t_.cells.begin(), t_.cells.end()));
        return best_;
    }

private:
    void level(std::size_t lv, const std::vector<long>& sub)
    {
        const std::size_t s = k_.size();
        if (lv + 1 == s) {
            auto [sum, chosen] = smallest(sub, k_[lv]);
            if (best_.count < 0 || sum < best_.count) {
                best_.count = sum;
                best_.pick = pick_;
                best_.pick[lv] = chosen;
            }
            return;
        }
        std::size_t slice = 1;
        for (std::size_t i = lv + 1; i < s; ++i) slice *= static_cast<std::size_t>(t_.dims[i]);
        std::vector<std::vector<long>> acc(static_cast<std::size_t>(k_[lv]) + 1, std::vector<long>(slice, 0));
        pick_[lv].clear();
        choose(lv, sub, slice, acc, 0, 0);
    }

    void choose(std::size_t lv, const std::vector<long>& sub, std::size_t slice, std::vector<std::vector<long>>& acc,
                int start, int depth)
    {
        const int n = t_.dims[lv];
        if (depth == k_[lv]) {
            level(lv + 1, acc[depth]);
            return;
        }
        for (int j = start; j <= n - (k_[lv] - depth); ++j) {
            const long* row = sub.data() + static_cast<std::size_t>(j) * slice;
            for (std::size_t x = 0; x < slice; ++x) acc[depth + 1][x] = acc[depth][x] + row[x];
            pick_[lv].push_back(j);
            choose(lv, sub, slice, acc, j + 1, depth + 1);
            pick_[lv].pop_back();
        }
    }

    const Tensor& t_;
    std::vector<int> k_;
    std::vector<std::vector<int>> pick_;
    Witness best_;
};

std::vector<std::vector<int>> full_pick(const Tensor& t)
{
    std::vector<std::vector<int>> pick(t.dims.size());
    for (std::size_t i = 0; i < t.dims.size(); ++i) {
        pick[i].resize(static_cast<std::size_t>(t.dims[i]));
        std::iota(pick[i].begin(), pick[i].end(), 0);
    }
    return pick;
}

double product(const std::vector<std::vector<int>>& pick)
{
    double prod = 1.0;
    for (const auto& p : pick) prod *= static_cast<double>(p.size());
    return prod;
}

std::vector<VertexList> to_vertices(const std::vector<VertexList>& parts, const std::vector<std::vector<int>>& pick)
{
    std::vector<VertexList> out(parts.size());
    for (std::size_t i = 0; i < parts.size(); ++i) {
        for (int j : pick[i]) out[i].push_back(parts[i][j]);
        std::sort(out[i].begin(), out[i].end());
    }
    return out;
}

/// Sampled witness search: the first half of the trials draws every subset
/// from the low partite-degree end of its part, the rest uniformly. The last
/// part is always chosen optimally for the sampled prefix.
std::optional<Witness> sampled_witness(const Tensor& t, const std::vector<int>& k, double threshold, int trials,
                                       std::uint64_t seed)
{
    const std::size_t s = k.size();
    const auto all = full_pick(t);
    std::vector<std::vector<int>> by_degree(s);
    for (std::size_t i = 0; i + 1 < s; ++i) {
        auto deg = partite_degrees(t, all, i);
        by_degree[i] = all[i];
        std::stable_sort(by_degree[i].begin(), by_degree[i].end(), [&](int a, int b) { return deg[a] < deg[b]; });
    }
    const std::size_t last = s - 1;
    const std::size_t last_dim = static_cast<std::size_t>(t.dims[last]);
    for (int trial = 0; trial < trials; ++trial) {
        Rng rng(mix_seed(seed, static_cast<std::uint64_t>(trial)));
        const bool biased = trial < trials / 2;
        std::vector<std::vector<int>> pick(s);
        for (std::size_t i = 0; i < last; ++i) {
            std::vector<int> pool = biased ? by_degree[i] : all[i];
            if (biased) pool.resize(std::min(pool.size(), static_cast<std::size_t>(2 * k[i])));
            rng.partial_shuffle(pool, static_cast<std::size_t>(k[i]));
            pick[i].assign(pool.begin(), pool.begin() + k[i]);
            std::sort(pick[i].begin(), pick[i].end());
        }
        std::vector<long> values(last_dim, 0);
        for (std::size_t v = 0; v < last_dim; ++v) {
            auto narrowed = pick;
            narrowed[last] = {static_cast<int>(v)};
            values[v] = sub_count(t, narrowed);
        }
        auto [sum, chosen] = smallest(values, k[last]);
        pick[last] = chosen;
        if (static_cast<double>(sum) < threshold * product(pick) - 1e-9) return Witness{sum, pick};
    }
    return std::nullopt;
}

}  // namespace

double tuple_density(const Hypergraph& p, const std::vector<VertexList>& parts)
{
    validate_parts(p, parts);
    Tensor t = build_tensor(p, parts);
    long edges = std::accumulate(t.cells.begin(), t.cells.end(), 0L);
    return static_cast<double>(edges) / static_cast<double>(t.cells.size());
}

std::uint64_t exhaustive_subset_count(const std::vector<VertexList>& parts, double rho)
{
    auto k = subset_sizes(parts, rho);
    double total = 1.0;
    for (std::size_t i = 0; i + 1 < parts.size(); ++i) total *= binomial_u(static_cast<int>(parts[i].size()), k[i]);
    return total > 1.8e19 ? ~std::uint64_t{0} : static_cast<std::uint64_t>(total);
}

Verdict check_lower_regular(const Hypergraph& p, const std::vector<VertexList>& parts, double rho, double d,
                            const RegularityCheck& how)
{
    if (!(rho > 0.0 && rho < 1.0)) throw Error("rho must lie in (0,1)");
    validate_parts(p, parts);
    const double threshold = d - rho;
    if (threshold <= 0.0) return Verdict::pass();

    const Tensor t = build_tensor(p, parts);
    const auto all = full_pick(t);
    const long total = std::accumulate(t.cells.begin(), t.cells.end(), 0L);
    auto fail_with = [&](const std::vector<std::vector<int>>& pick, long count) {
        Verdict v = Verdict::fail("sub-tuple density " + std::to_string(count / product(pick)) + " below d - rho");
        v.witness_sets = to_vertices(parts, pick);
        return v;
    };
    if (static_cast<double>(total) < threshold * product(all) - 1e-9) return fail_with(all, total);

    const auto k = subset_sizes(parts, rho);
    const bool fits = exhaustive_subset_count(parts, rho) <= how.budget;
    if (how.mode == RegularityMode::Exhaustive && !fits) throw Error("exhaustive check exceeds subset budget");
    if (how.mode == RegularityMode::Exhaustive || (how.mode == RegularityMode::Auto && fits)) {
        Witness w = ExhaustiveMinimiser(t, k).run();
        if (static_cast<double>(w.count) < threshold * product(w.pick) - 1e-9) return fail_with(w.pick, w.count);
        return Verdict::pass();
    }
    if (auto w = sampled_witness(t, k, threshold, how.trials, how.seed)) return fail_with(w->pick, w->count);
    return Verdict::unknown("no witness in " + std::to_string(how.trials) + " samples");
}

std::optional<RegularTuple> find_lower_regular_tuple(const Hypergraph& p, const std::vector<VertexList>& parts,
                                                     double rho, double d, const RegularityCheck& how,
                                                     RegularTupleTelemetry* telemetry)
{
    if (!(rho > 0.0 && rho < 1.0)) throw Error("rho must lie in (0,1)");
    validate_parts(p, parts);
    for (const auto& part : parts)
        if (part.size() != parts.front().size()) throw Error("parts not balanced");
    if (tuple_density(p, parts) < d - 1e-12) throw Error("density precondition");

    std::vector<VertexList> current = parts;
    for (std::uint64_t iter = 0;; ++iter) {
        const Tensor t = build_tensor(p, current);
        const auto all = full_pick(t);
        const double density = static_cast<double>(sub_count(t, all)) / product(all);
        RegularityCheck step = how;
        step.seed = mix_seed(how.seed, iter);
        Verdict verdict = check_lower_regular(p, current, rho, d, step);
        if (telemetry)
            telemetry->iterations.push_back({static_cast<int>(current.front().size()), density, std::nullopt,
                                             verdict.status});
        if (!verdict.failed()) {
            RegularTuple out;
            out.parts = current;
            out.rho = rho;
            out.d = d;
            out.density = density;
            if (verdict.passed() && how.mode != RegularityMode::Sampled &&
                (how.mode == RegularityMode::Exhaustive || exhaustive_subset_count(current, rho) <= how.budget))
                out.cert = {CertMode::Exhaustive, 0, 0};
            else
                out.cert = {CertMode::Sampled, how.trials, step.seed};
            return out;
        }

        const int m = static_cast<int>(current.front().size());
        const int mp = static_cast<int>(std::ceil(rho * m - 1e-9));
        if (mp >= m || mp < 1) return std::nullopt;

        // Y_i: the m' witness vertices of lowest partite degree inside the witness.
        std::vector<std::vector<int>> witness(current.size());
        for (std::size_t i = 0; i < current.size(); ++i)
            for (Vertex v : verdict.witness_sets[i])
                witness[i].push_back(static_cast<int>(std::find(current[i].begin(), current[i].end(), v) -
                                                      current[i].begin()));
        std::vector<std::vector<std::vector<int>>> options(current.size());
        for (std::size_t i = 0; i < current.size(); ++i) {
            auto deg_w = partite_degrees(t, witness, i);
            std::vector<int> y = witness[i];
            std::stable_sort(y.begin(), y.end(), [&](int a, int b) { return deg_w[a] < deg_w[b]; });
            y.resize(static_cast<std::size_t>(mp));
            std::sort(y.begin(), y.end());

            // Blocks of V_i \ Y_i by descending partite degree; the remainder
            // (lowest degrees) is dropped.
            auto deg = partite_degrees(t, all, i);
            std::vector<int> rest;
            for (int j : all[i])
                if (!std::binary_search(y.begin(), y.end(), j)) rest.push_back(j);
            std::stable_sort(rest.begin(), rest.end(), [&](int a, int b) { return deg[a] > deg[b]; });
            options[i].push_back(y);
            for (std::size_t b = 0; b + static_cast<std::size_t>(mp) <= rest.size(); b += mp) {
                std::vector<int> block(rest.begin() + static_cast<long>(b), rest.begin() + static_cast<long>(b + mp));
                std::sort(block.begin(), block.end());
                options[i].push_back(block);
            }
        }

        std::vector<std::size_t> odo(current.size(), 0);
        std::vector<std::vector<int>> best;
        long best_count = -1;
        for (;;) {
            std::vector<std::vector<int>> pick(current.size());
            for (std::size_t i = 0; i < current.size(); ++i) pick[i] = options[i][odo[i]];
            long c = sub_count(t, pick);
            if (c > best_count) {
                best_count = c;
                best = pick;
            }
            std::size_t i = current.size();
            while (i-- > 0) {
                if (++odo[i] < options[i].size()) break;
                odo[i] = 0;
            }
            if (i == static_cast<std::size_t>(-1)) break;
        }
        if (telemetry) telemetry->iterations.back().selected_density = best_count / product(best);
        current = to_vertices(current, best);
    }
}

}  // namespace blowup
