#include "blowup/matching.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

#include "blowup/error.hpp"
#include "blowup/rng.hpp"

namespace blowup {

namespace {

struct Slot {
    VertexList vertices;
    bool dummy = false;
};

class Exchanger {
public:
    Exchanger(const Hypergraph& p, const std::vector<int>& part_of, int s, std::uint64_t budget)
        : p_(p), part_of_(part_of), s_(s), budget_(budget)
    {
    }

    std::uint64_t nodes() const { return nodes_; }
    bool exhausted() const { return nodes_ >= budget_; }

    /// Splits `pool` (one vertex per part per slot) into partite host edges.
    std::optional<std::vector<VertexList>> split(const VertexList& pool)
    {
        std::vector<VertexList> by_part(static_cast<std::size_t>(s_));
        for (Vertex v : pool) by_part[part_of_[v]].push_back(v);
        std::vector<VertexList> out;
        if (split_rec(by_part, out)) return out;
        return std::nullopt;
    }

private:
    bool split_rec(std::vector<VertexList>& by_part, std::vector<VertexList>& out)
    {
        if (by_part[0].empty()) return true;
        const Vertex head = by_part[0].back();
        by_part[0].pop_back();
        VertexList edge{head};
        if (extend(by_part, edge, 1, out)) return true;
        by_part[0].push_back(head);
        return false;
    }

    bool extend(std::vector<VertexList>& by_part, VertexList& edge, int part, std::vector<VertexList>& out)
    {
        if (++nodes_ > budget_) return false;
        if (part == s_) {
            if (!p_.has_edge(edge)) return false;
            out.push_back(edge);
            if (split_rec(by_part, out)) return true;
            out.pop_back();
            return false;
        }
        auto& bucket = by_part[static_cast<std::size_t>(part)];
        for (std::size_t i = 0; i < bucket.size(); ++i) {
            const Vertex v = bucket[i];
            std::swap(bucket[i], bucket.back());
            bucket.pop_back();
            edge.push_back(v);
            if (extend(by_part, edge, part + 1, out)) return true;
            edge.pop_back();
            bucket.push_back(v);
            std::swap(bucket[i], bucket.back());
        }
        return false;
    }

    const Hypergraph& p_;
    const std::vector<int>& part_of_;
    int s_;
    std::uint64_t budget_;
    std::uint64_t nodes_ = 0;
};

/// Tries to replace the dummy slot `d` and k real slots by k+1 host edges.
bool exchange_once(std::vector<Slot>& slots, std::size_t d, int s, Exchanger& ex)
{
    std::vector<std::size_t> real;
    for (std::size_t i = 0; i < slots.size(); ++i)
        if (!slots[i].dummy) real.push_back(i);
    for (int k = 1; k <= s - 1 && k <= static_cast<int>(real.size()); ++k) {
        std::vector<std::size_t> pick(static_cast<std::size_t>(k));
        for (int i = 0; i < k; ++i) pick[i] = static_cast<std::size_t>(i);
        for (;;) {
            VertexList pool = slots[d].vertices;
            for (std::size_t idx : pick)
                pool.insert(pool.end(), slots[real[idx]].vertices.begin(), slots[real[idx]].vertices.end());
            if (auto edges = ex.split(pool)) {
                slots[d] = {(*edges)[0], false};
                for (std::size_t i = 0; i < pick.size(); ++i) slots[real[pick[i]]] = {(*edges)[i + 1], false};
                return true;
            }
            if (ex.exhausted()) return false;
            int i = k - 1;
            while (i >= 0 && pick[i] == real.size() - static_cast<std::size_t>(k - i)) --i;
            if (i < 0) break;
            ++pick[i];
            for (int j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
        }
    }
    return false;
}

}  // namespace

bool is_perfect_matching(const Hypergraph& p, const Matching& m)
{
    Bitset seen(static_cast<std::size_t>(p.order()));
    for (const auto& e : m.edges) {
        if (!p.has_edge(e)) return false;
        for (Vertex v : e) {
            if (v < 0 || v >= p.order() || seen.test(v)) return false;
            seen.set(v);
        }
    }
    return static_cast<int>(seen.count()) == p.order();
}

std::optional<Matching> hypergraph_perfect_matching(const Hypergraph& p, int s, const MatchingOptions& options,
                                                    MatchingTelemetry* telemetry)
{
    if (s < 1 || p.uniformity() != s) throw Error("uniformity mismatch");
    const int n = p.order();
    if (n % s != 0) throw Error("divisibility");
    if (!p.is_explicit()) throw Error("matching requires explicit edges");
    MatchingTelemetry local;
    MatchingTelemetry& tel = telemetry ? *telemetry : local;
    if (n == 0) return Matching{};

    const int m = n / s;
    const double threshold = (1.0 - 1.0 / s + options.eps / 2.0) * std::pow(static_cast<double>(m), s - 1);
    std::uint64_t spent = 0;
    for (int r = 0; r < options.partition_retries && spent < options.exchange_budget; ++r) {
        Rng rng(mix_seed(options.seed, static_cast<std::uint64_t>(r)));
        VertexList order(static_cast<std::size_t>(n));
        for (int v = 0; v < n; ++v) order[v] = v;
        rng.shuffle(order);
        std::vector<int> part_of(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) part_of[order[i]] = i / m;

        std::vector<VertexList> partite;
        std::vector<int> degree(static_cast<std::size_t>(n), 0);
        for (const auto& e : p.edges()) {
            std::uint64_t seen = 0;
            for (Vertex v : e) seen |= std::uint64_t{1} << part_of[v];
            if (static_cast<int>(std::popcount(seen)) != s) continue;
            partite.push_back(e);
            for (Vertex v : e) ++degree[v];
        }
        ++tel.partitions_tried;
        const int min_deg = *std::min_element(degree.begin(), degree.end());
        // Only the second half of the retry budget may use partitions below
        // the degree threshold.
        if (min_deg < threshold) {
            ++tel.partitions_below_threshold;
            if (r < options.partition_retries / 2) continue;
        }

        rng.shuffle(partite);
        Bitset used(static_cast<std::size_t>(n));
        std::vector<Slot> slots;
        for (const auto& e : partite) {
            bool free = true;
            for (Vertex v : e) free = free && !used.test(v);
            if (!free) continue;
            for (Vertex v : e) used.set(v);
            slots.push_back({e, false});
        }
        std::vector<VertexList> leftovers(static_cast<std::size_t>(s));
        for (int v = 0; v < n; ++v)
            if (!used.test(v)) leftovers[part_of[v]].push_back(v);
        const std::size_t dummies = leftovers[0].size();
        for (std::size_t i = 0; i < dummies; ++i) {
            VertexList e;
            for (int j = 0; j < s; ++j) e.push_back(leftovers[j][i]);
            slots.push_back({e, true});
        }
        if (r == 0 || tel.dummy_edges_initial == 0) tel.dummy_edges_initial = static_cast<int>(dummies);

        Exchanger ex(p, part_of, s, options.exchange_budget - spent);
        bool ok = true;
        for (std::size_t i = 0; i < slots.size() && ok; ++i) {
            if (!slots[i].dummy) continue;
            ok = exchange_once(slots, i, s, ex);
            if (ok) ++tel.exchanges;
        }
        spent += ex.nodes();
        tel.exchange_nodes += ex.nodes();
        if (!ok) continue;

        Matching out;
        for (auto& slot : slots) {
            std::sort(slot.vertices.begin(), slot.vertices.end());
            out.edges.push_back(slot.vertices);
        }
        std::sort(out.edges.begin(), out.edges.end());
        if (!is_perfect_matching(p, out)) throw Error("internal: matching invalid");
        return out;
    }
    return std::nullopt;
}

}  // namespace blowup
