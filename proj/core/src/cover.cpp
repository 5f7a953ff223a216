#include "blowup/cover.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

#include "blowup/error.hpp"
#include "blowup/find_blowup.hpp"
#include "blowup/inheritance.hpp"
#include "blowup/rng.hpp"
#include "blowup/rooted.hpp"
#include "blowup/tiling.hpp"

namespace blowup {

CoverParams CoverParams::preset(const std::string& name)
{
    if (name == "desk") return CoverParams{};
    if (name == "small") {
        CoverParams p;
        p.c3 = 0.55;
        p.c = 0.4;
        return p;
    }
    throw Error("unknown preset: " + name);
}

void CoverParams::validate() const
{
    if (!(eps > 0.0 && eps < 1.0)) throw Error("eps must lie in (0,1)");
    if (s < 3) throw Error("s must be at least 3");
    if (!(eta > 0.0 && eta < 1.0)) throw Error("eta must lie in (0,1)");
    if (!(c > 0.0 && c1 > 0.0 && c2 > 0.0 && c3 > 0.0)) throw Error("c dials must be positive");
    if (ell() < 1) throw Error("ell must be at least 1");
}

int CoverParams::m1(int n) const { return std::max(1, static_cast<int>(std::floor(c1 * std::log(n) + 1e-9))); }
int CoverParams::m2(int n) const { return std::max(1, static_cast<int>(std::floor(c2 * std::log(n) + 1e-9))); }
double CoverParams::m3(int n) const { return c3 * std::log(n); }
int CoverParams::m_conn(int n) const { return std::max(1, static_cast<int>(std::floor(c * std::log(n) + 1e-9))); }

int CoverParams::ell() const { return std::max(1, static_cast<int>(std::floor(c3 / c + 1e-9))); }

std::pair<int, int> CoverParams::piece_window(int n) const
{
    const double m = m3(n);
    const int lo = std::max(2, static_cast<int>(std::ceil((1.0 - eta) * m - 1e-9)));
    const int hi = static_cast<int>(std::floor((1.0 + eta) * m + 1e-9));
    if (hi < lo) throw Error("empty piece window at n = " + std::to_string(n));
    return {lo, hi};
}

namespace {

/// Singleton counts a_i (summing to k) with a_i + lo(k - a_i) ≤ x_i ≤ a_i + hi(k - a_i).
bool singleton_counts(const std::vector<int>& sizes, int k, int lo, int hi, std::size_t i, int left,
                      std::vector<int>& a)
{
    if (i == sizes.size()) return left == 0;
    const int x = sizes[i];
    // Prefer counts close to an even share.
    const int share = static_cast<int>((k + sizes.size() - 1 - i) / (sizes.size() - i));
    std::vector<int> order;
    for (int ai = 0; ai <= left; ++ai) order.push_back(ai);
    std::stable_sort(order.begin(), order.end(), [&](int p, int q) { return std::abs(p - share) < std::abs(q - share); });
    for (int ai : order) {
        const int pieces = k - ai;
        if (x < ai + lo * pieces || x > ai + hi * pieces) continue;
        a[i] = ai;
        if (singleton_counts(sizes, k, lo, hi, i + 1, left - ai, a)) return true;
    }
    return false;
}

std::optional<std::pair<int, std::vector<int>>> split_plan(const std::vector<int>& sizes, int lo, int hi)
{
    const int s = static_cast<int>(sizes.size());
    if (s < 2 || lo < 2 || hi < lo) return std::nullopt;
    const int total = std::accumulate(sizes.begin(), sizes.end(), 0);
    for (int k = total / (1 + (s - 1) * lo); k >= 1; --k) {
        std::vector<int> a(sizes.size(), 0);
        if (singleton_counts(sizes, k, lo, hi, 0, k, a)) return std::make_pair(k, a);
    }
    return std::nullopt;
}

std::vector<int> cluster_sizes(const Blowup& b)
{
    std::vector<int> out;
    for (const auto& c : b.family.clusters) out.push_back(static_cast<int>(c.size()));
    return out;
}

double inheritance_floor(const CoverParams& p) { return (0.5 + p.eps / 2.0) * p.s; }

/// Most frequent labelled graph among sampled inheriting s-sets. With a frame
/// the i-th vertex is drawn from part i; otherwise s distinct vertices of
/// `pool` are drawn.
std::optional<Graph> frequent_pattern(const Graph& g, const CoverParams& params,
                                      const std::vector<VertexList>* frame, const VertexList& pool, Rng& rng)
{
    const int s = params.s;
    if (frame) {
        for (const auto& part : *frame)
            if (part.empty()) return std::nullopt;
    } else if (static_cast<int>(pool.size()) < s) {
        return std::nullopt;
    }
    PropertySpec spec(g, s, params.eps, InheritanceMode::Absolute);
    std::map<std::uint64_t, int> counts;
    VertexList set(static_cast<std::size_t>(s));
    VertexList scratch = pool;
    for (int k = 0; k < params.pattern_samples; ++k) {
        if (frame) {
            for (int i = 0; i < s; ++i) set[i] = (*frame)[i][rng.below((*frame)[i].size())];
        } else {
            rng.partial_shuffle(scratch, static_cast<std::size_t>(s));
            std::copy(scratch.begin(), scratch.begin() + s, set.begin());
        }
        if (!inherits_degree(spec, set)) continue;
        std::uint64_t mask = 0;
        int bit = 0;
        for (int i = 0; i < s; ++i)
            for (int j = i + 1; j < s; ++j, ++bit)
                if (g.has_edge(set[i], set[j])) mask |= std::uint64_t{1} << bit;
        ++counts[mask];
    }
    if (counts.empty()) return std::nullopt;
    auto best = counts.begin();
    for (auto it = counts.begin(); it != counts.end(); ++it)
        if (it->second > best->second) best = it;
    Graph r(s);
    int bit = 0;
    for (int i = 0; i < s; ++i)
        for (int j = i + 1; j < s; ++j, ++bit)
            if (best->first >> bit & 1U) r.add_edge(i, j);
    return r;
}

void mark_used(const Blowup& b, Bitset& unused)
{
    for (const auto& c : b.family.clusters)
        for (Vertex v : c) unused.reset(v);
}

struct AlmostState {
    std::vector<Blowup> blowups;
    Bitset unused;
};

/// Almost cover with a ladder of cluster-size profiles; the framed stage uses
/// the first profile, the sweep walks the whole ladder.
AlmostState almost_cover_impl(const Graph& g, const CoverParams& params, const std::vector<std::vector<int>>& ladder,
                              CoverTelemetry& tel)
{
    params.validate();
    const int n = g.order();
    const int s = params.s;
    AlmostState st{{}, g.full_set()};
    if (n < s) return st;
    if (min_degree(g) < (0.5 + params.eps) * n)
        tel.diagnostics.push_back("minimum degree below (1/2+eps)n; best effort");

    // Regular tuples of the inheritance hypergraph.
    PropertySpec spec(g, s, params.eps, InheritanceMode::Absolute);
    Hypergraph p = property_hypergraph(spec);
    TilingParams tp;
    tp.s = s;
    tp.eta = params.eta;
    tp.rho = params.rho_value();
    tp.m0 = std::max(s, n / std::max(1, params.tiling_blocks));
    tp.max_rounds = params.tiling_rounds;
    tp.density_trials = params.tiling_density_trials;
    tp.check.trials = params.regularity_trials;
    tp.seed = mix_seed(params.seed, 0x711e);
    TilingResult tiling = almost_perfect_tiling(p, tp);
    tel.tiling_rounds = static_cast<int>(tiling.rounds.size());
    tel.tiling_tuples = static_cast<int>(tiling.tiling.tuples.size());
    tel.tiling_covered = tiling.tiling.covered();
    if (tiling.stall) tel.tiling_stall = *tiling.stall;

    Rng rng(mix_seed(params.seed, 0xa1));
    std::uint64_t search = 0;
    auto options = [&](std::optional<Bitset> allowed, std::optional<std::vector<VertexList>> frame) {
        BlowupSearchOptions o;
        o.allowed = std::move(allowed);
        o.frame = std::move(frame);
        o.restarts = params.blowup_restarts;
        o.exhaustive_budget = 0;
        o.biclique_budget = params.biclique_budget;
        o.seed = mix_seed(params.seed ^ 0xb10c, search++);
        return o;
    };

    const double rho = params.rho_value();
    for (const auto& tuple : tiling.tiling.tuples) {
        auto pattern = frequent_pattern(g, params, &tuple.parts, {}, rng);
        if (!pattern || min_degree(*pattern) < inheritance_floor(params) - 1e-9) continue;
        for (;;) {
            std::vector<VertexList> frame;
            bool enough = true;
            for (const auto& part : tuple.parts) {
                VertexList left;
                for (Vertex v : part)
                    if (st.unused.test(v)) left.push_back(v);
                enough = enough && static_cast<double>(left.size()) >= rho * static_cast<double>(part.size());
                frame.push_back(left);
            }
            if (!enough) break;
            auto b = find_blowup_sized(g, *pattern, ladder.front(), options(st.unused, frame));
            if (!b) break;
            mark_used(*b, st.unused);
            st.blowups.push_back(std::move(*b));
            ++tel.framed_blowups;
        }
    }

    for (const auto& sizes : ladder) {
        int found = 0;
        for (;;) {
            const VertexList pool = st.unused.to_list();
            if (static_cast<int>(pool.size()) < std::accumulate(sizes.begin(), sizes.end(), 0)) break;
            auto pattern = frequent_pattern(g, params, nullptr, pool, rng);
            if (!pattern || min_degree(*pattern) < inheritance_floor(params) - 1e-9) break;
            auto b = find_blowup_sized(g, *pattern, sizes, options(st.unused, std::nullopt));
            if (!b) break;
            mark_used(*b, st.unused);
            st.blowups.push_back(std::move(*b));
            ++found;
        }
        if (found > 0) tel.sweep_blowups.emplace_back(sizes.front(), found);
    }
    tel.almost_uncovered = st.unused.count();
    return st;
}

}  // namespace

int quasi_split_count(const std::vector<int>& sizes, int lo, int hi)
{
    auto plan = split_plan(sizes, lo, hi);
    return plan ? plan->first : 0;
}

std::optional<std::vector<Blowup>> split_quasi(const Blowup& b, int lo, int hi, Balance balance)
{
    const auto sizes = cluster_sizes(b);
    auto plan = split_plan(sizes, lo, hi);
    if (!plan) return std::nullopt;
    const auto& [k, a] = *plan;
    const std::size_t s = sizes.size();

    // Per cluster: a_i singletons, then k - a_i near-equal pieces.
    std::vector<std::vector<VertexList>> singles(s), pieces(s);
    for (std::size_t i = 0; i < s; ++i) {
        VertexList c = b.family.clusters[i];
        std::sort(c.begin(), c.end());
        for (int j = 0; j < a[i]; ++j) singles[i].push_back({c[j]});
        const int count = k - a[i];
        const int rest = sizes[i] - a[i];
        std::size_t at = static_cast<std::size_t>(a[i]);
        for (int j = 0; j < count; ++j) {
            const int len = rest / count + (j < rest % count ? 1 : 0);
            pieces[i].emplace_back(c.begin() + static_cast<long>(at), c.begin() + static_cast<long>(at + len));
            at += static_cast<std::size_t>(len);
        }
    }
    std::vector<std::size_t> role;
    for (std::size_t i = 0; i < s; ++i)
        for (int j = 0; j < a[i]; ++j) role.push_back(i);
    std::vector<std::size_t> next_single(s, 0), next_piece(s, 0);
    std::vector<Blowup> out;
    for (int f = 0; f < k; ++f) {
        Blowup fam;
        fam.reduced = b.reduced;
        fam.family.balance = balance;
        for (std::size_t i = 0; i < s; ++i)
            fam.family.clusters.push_back(role[f] == i ? singles[i][next_single[i]++] : pieces[i][next_piece[i]++]);
        out.push_back(std::move(fam));
    }
    return out;
}

namespace {

void non_increasing(int left, int max_part, int parts, std::vector<int>& cur, std::vector<std::vector<int>>& out)
{
    if (parts == 0) {
        if (left == 0) out.push_back(cur);
        return;
    }
    for (int v = std::min(left, max_part); v >= 0; --v) {
        cur.push_back(v);
        non_increasing(left - v, v, parts - 1, cur, out);
        cur.pop_back();
    }
}

/// Cluster-size profiles the simple cover extracts, largest first: uniform
/// sizes up to m1 that split exactly, then the extreme profiles of every
/// singleton assignment.
std::vector<std::vector<int>> size_ladder(int s, int m1, int lo, int hi)
{
    std::vector<std::vector<int>> out;
    for (int t = m1; t >= 2; --t)
        if (quasi_split_count(std::vector<int>(static_cast<std::size_t>(s), t), lo, hi) > 0)
            out.emplace_back(static_cast<std::size_t>(s), t);
    for (int k = 1; k <= 2 * s; ++k) {
        std::vector<std::vector<int>> comps;
        std::vector<int> cur;
        non_increasing(k, k, s, cur, comps);
        for (const auto& a : comps) {
            std::vector<int> lower, upper;
            bool ok = true;
            for (int i = 0; i < s; ++i) {
                lower.push_back(a[i] + lo * (k - a[i]));
                upper.push_back(std::min(m1, a[i] + hi * (k - a[i])));
                ok = ok && lower.back() <= upper.back();
            }
            if (!ok) continue;
            out.push_back(upper);
            out.push_back(lower);
        }
    }
    for (auto& p : out) std::sort(p.rbegin(), p.rend());
    std::stable_sort(out.begin(), out.end(), [](const std::vector<int>& x, const std::vector<int>& y) {
        const int sx = std::accumulate(x.begin(), x.end(), 0), sy = std::accumulate(y.begin(), y.end(), 0);
        if (sx != sy) return sx > sy;
        return x.front() - x.back() < y.front() - y.back();
    });
    out.erase(std::unique(out.begin(), out.end()), out.end());
    std::vector<std::vector<int>> dedup;
    for (auto& p : out)
        if (std::find(dedup.begin(), dedup.end(), p) == dedup.end()) dedup.push_back(p);
    return dedup;
}

class Donors {
public:
    Donors(int n, int lo, int hi) : n_(n), lo_(lo), hi_(hi) {}

    std::vector<Blowup>& all() { return blowups_; }

    void add(Blowup b) { blowups_.push_back(std::move(b)); }

    /// Vertices of clusters that can lose one vertex and still split exactly.
    Bitset eligible(const std::vector<bool>& banned) const
    {
        Bitset out(static_cast<std::size_t>(n_));
        for (std::size_t d = 0; d < blowups_.size(); ++d) {
            if (banned[d]) continue;
            auto sizes = cluster_sizes(blowups_[d]);
            for (std::size_t i = 0; i < sizes.size(); ++i) {
                --sizes[i];
                if (sizes[i] > 0 && quasi_split_count(sizes, lo_, hi_) > 0)
                    for (Vertex v : blowups_[d].family.clusters[i]) out.set(v);
                ++sizes[i];
            }
        }
        return out;
    }

    /// Index of the first donor that would stop splitting once `taken` is
    /// removed, if any.
    std::optional<std::size_t> violation(const Bitset& taken) const
    {
        for (std::size_t d = 0; d < blowups_.size(); ++d) {
            auto sizes = cluster_sizes(blowups_[d]);
            bool touched = false;
            for (std::size_t i = 0; i < sizes.size(); ++i) {
                int lost = 0;
                for (Vertex v : blowups_[d].family.clusters[i]) lost += taken.test(v) ? 1 : 0;
                sizes[i] -= lost;
                touched = touched || lost > 0;
            }
            if (touched && quasi_split_count(sizes, lo_, hi_) == 0) return d;
        }
        return std::nullopt;
    }

    void remove(const Bitset& taken)
    {
        for (auto& b : blowups_)
            for (auto& c : b.family.clusters)
                std::erase_if(c, [&](Vertex v) { return taken.test(v); });
    }

private:
    int n_, lo_, hi_;
    std::vector<Blowup> blowups_;
};

}  // namespace

CoverResult almost_blowup_cover(const Graph& g, const CoverParams& params)
{
    CoverResult out;
    out.kind = CoverKind::Almost;
    const int n = g.order();
    const int m1 = params.m1(std::max(n, 2));
    AlmostState st = almost_cover_impl(g, params, {std::vector<int>(static_cast<std::size_t>(params.s), m1)},
                                       out.telemetry);
    out.blowups = std::move(st.blowups);
    for (auto& b : out.blowups) b.family.balance = Balance::exact(m1);
    out.uncovered = st.unused.to_list();
    return out;
}

CoverResult simple_blowup_cover(const Graph& g, const CoverParams& params)
{
    params.validate();
    CoverResult out;
    out.kind = CoverKind::Simple;
    CoverTelemetry& tel = out.telemetry;
    const int n = g.order();
    if (n < params.s) throw Error("graph smaller than s");
    const int s = params.s;
    const auto [lo, hi] = params.piece_window(n);
    const Balance family_balance = Balance::quasi(params.m3(n), params.eta);
    const int m1 = params.m1(n);
    const auto ladder = size_ladder(s, m1, lo, hi);
    if (ladder.empty()) throw Error("no splittable cluster sizes up to m1");

    AlmostState st = almost_cover_impl(g, params, ladder, tel);
    Donors donors(n, lo, hi);
    for (auto& b : st.blowups) donors.add(std::move(b));
    Bitset w = st.unused;
    std::vector<Blowup> finals;

    std::uint64_t attempt_index = 0;
    auto pickup = [&](const VertexList& root, int t) -> std::optional<Blowup> {
        std::vector<bool> banned(donors.all().size(), false);
        for (int attempt = 0; attempt < params.pickup_attempts; ++attempt) {
            RootedOptions ro;
            ro.allowed = donors.eligible(banned);
            ro.samples = params.rooted_samples;
            ro.restarts = 3;
            ro.biclique_budget = params.biclique_budget;
            ro.seed = mix_seed(params.seed ^ 0x9e7, attempt_index++);
            auto r = rooted_blowup(g, root, s, params.eps, t, ro);
            if (!r) return std::nullopt;
            Bitset taken(static_cast<std::size_t>(n));
            for (std::size_t i = 0; i < r->blowup.family.clusters.size(); ++i)
                if (i != r->root)
                    for (Vertex v : r->blowup.family.clusters[i]) taken.set(v);
            if (auto bad = donors.violation(taken)) {
                banned[*bad] = true;
                ++tel.rooted_rejections;
                continue;
            }
            donors.remove(taken);
            return r->blowup;
        }
        return std::nullopt;
    };

    // Rooted pickups at scale m2 while the leftover is large.
    int t2 = 0;
    for (int t = params.m2(n); t >= 2 && t2 == 0; --t)
        if (quasi_split_count(std::vector<int>(static_cast<std::size_t>(s), t), lo, hi) > 0) t2 = t;
    const double large = params.eta * n / m1;
    while (t2 > 0 && static_cast<double>(w.count()) >= std::max<double>(large, t2)) {
        auto b = pickup(w.to_list(), t2);
        if (!b) {
            tel.diagnostics.push_back("rooted pickup failed with " + std::to_string(w.count()) + " leftover");
            break;
        }
        for (Vertex v : b->family.clusters[0]) w.reset(v);
        donors.add(std::move(*b));
        ++tel.rooted_pickups;
    }

    // One quasi blow-up per remaining vertex.
    for (Vertex u : w.to_list()) {
        auto b = pickup({u}, lo);
        if (!b) continue;
        b->family.balance = family_balance;
        finals.push_back(std::move(*b));
        w.reset(u);
        ++tel.vertex_pickups;
    }

    std::vector<Blowup> families;
    for (const auto& d : donors.all()) {
        auto parts = split_quasi(d, lo, hi, family_balance);
        if (!parts) {
            tel.diagnostics.push_back("internal: donor blow-up no longer splits");
            for (const auto& c : d.family.clusters)
                for (Vertex v : c) w.set(v);
            continue;
        }
        for (auto& f : *parts) families.push_back(std::move(f));
    }
    for (auto& f : finals) families.push_back(std::move(f));

    // Last resort: put a leftover vertex into a piece whose reduced
    // neighbours it is completely joined to.
    for (Vertex u : w.to_list()) {
        bool placed = false;
        for (auto& f : families) {
            const auto single = f.family.singleton_index();
            for (std::size_t j = 0; j < f.family.clusters.size() && !placed; ++j) {
                if (single && *single == j) continue;
                if (static_cast<int>(f.family.clusters[j].size()) >= hi) continue;
                bool joined = true;
                for (std::size_t i = 0; i < f.family.clusters.size() && joined; ++i) {
                    if (!f.reduced.has_edge(static_cast<Vertex>(i), static_cast<Vertex>(j))) continue;
                    for (Vertex x : f.family.clusters[i]) joined = joined && g.has_edge(u, x);
                }
                if (!joined) continue;
                auto& c = f.family.clusters[j];
                c.insert(std::upper_bound(c.begin(), c.end(), u), u);
                placed = true;
            }
            if (placed) break;
        }
        if (placed) {
            w.reset(u);
            ++tel.insertions;
        }
    }

    out.blowups = std::move(families);
    for (auto& b : out.blowups)
        for (auto& c : b.family.clusters) std::sort(c.begin(), c.end());
    tel.families = static_cast<int>(out.blowups.size());
    out.uncovered = w.to_list();
    if (!out.uncovered.empty())
        tel.diagnostics.push_back("pickup exhaustion: " + std::to_string(out.uncovered.size()) + " vertices uncovered");
    return out;
}

Verdict verify_simple_cover(const Graph& g, const CoverResult& cover, const CoverParams& params)
{
    const int n = g.order();
    if (!cover.uncovered.empty()) return Verdict::fail("uncovered vertices remain");
    Bitset seen(static_cast<std::size_t>(n));
    std::size_t total = 0;
    for (std::size_t i = 0; i < cover.blowups.size(); ++i) {
        const Blowup& b = cover.blowups[i];
        const std::string where = "blow-up " + std::to_string(i) + ": ";
        if (b.reduced.order() != params.s) return Verdict::fail(where + "reduced graph order differs from s");
        if (min_degree(b.reduced) < (0.5 + params.eps / 2.0) * params.s - 1e-9)
            return Verdict::fail(where + "reduced minimum degree too small");
        if (b.family.balance.kind != BalanceKind::Quasi || !b.family.balanced())
            return Verdict::fail(where + "family not quasi-balanced");
        Verdict hosted = verify_blowup_hosted(g, b);
        if (!hosted.passed()) return Verdict::fail(where + hosted.reason);
        for (const auto& c : b.family.clusters)
            for (Vertex v : c) {
                if (v < 0 || v >= n) return Verdict::fail(where + "vertex out of range");
                if (seen.test(v)) return Verdict::fail(where + "vertex covered twice");
                seen.set(v);
                ++total;
            }
    }
    if (total != static_cast<std::size_t>(n)) return Verdict::fail("cover is not spanning");
    return Verdict::pass();
}

}  // namespace blowup
