#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "blowup/graph.hpp"

namespace blowup {

enum class Status { Pass, Fail, Unknown };

const char* to_string(Status s);

/// Outcome of a structural check. Failures carry a witness where one exists.
struct Verdict {
    Status status = Status::Pass;
    std::string reason;
    std::optional<std::pair<Vertex, Vertex>> missing_pair;
    std::vector<VertexList> witness_sets;

    bool passed() const { return status == Status::Pass; }
    bool failed() const { return status == Status::Fail; }

    static Verdict pass() { return {}; }
    static Verdict fail(std::string why)
    {
        Verdict v;
        v.status = Status::Fail;
        v.reason = std::move(why);
        return v;
    }
    static Verdict unknown(std::string why)
    {
        Verdict v;
        v.status = Status::Unknown;
        v.reason = std::move(why);
        return v;
    }
};

enum class BalanceKind { None, Exact, Approx, Quasi };

/// How the cluster sizes of a family are constrained.
struct Balance {
    BalanceKind kind = BalanceKind::None;
    double m = 0.0;
    double eta = 0.0;

    static Balance exact(int m) { return {BalanceKind::Exact, static_cast<double>(m), 0.0}; }
    static Balance approx(double m, double eta) { return {BalanceKind::Approx, m, eta}; }
    static Balance quasi(double m, double eta) { return {BalanceKind::Quasi, m, eta}; }
};

/// Pairwise disjoint clusters with a declared balance descriptor.
struct SetFamily {
    std::vector<VertexList> clusters;
    Balance balance;

    std::size_t size() const { return clusters.size(); }
    std::size_t vertex_count() const;
    bool disjoint() const;
    /// True iff the cluster sizes satisfy `balance`.
    bool balanced() const;
    /// Index of the unique singleton cluster, if exactly one exists.
    std::optional<std::size_t> singleton_index() const;

    friend bool operator==(const SetFamily& a, const SetFamily& b) { return a.clusters == b.clusters; }
};

/// A reduced graph together with one cluster per reduced vertex.
struct Blowup {
    Graph reduced;
    SetFamily family;

    VertexList vertices() const;
    friend bool operator==(const Blowup&, const Blowup&) = default;
};

/// Cyclic cluster sequence claimed to span a complete blow-up of a cycle.
struct CycleBlowupCertificate {
    int n = 0;
    double c = 0.0;
    double eta = 0.0;
    std::vector<VertexList> clusters;

    friend bool operator==(const CycleBlowupCertificate&, const CycleBlowupCertificate&) = default;
};

/// Inclusive integer size window ⌈(1-eta)c ln n⌉ .. ⌊(1+eta)c ln n⌋.
std::pair<int, int> cluster_size_bounds(int n, double c, double eta);

Verdict is_complete_bipartite(const Graph& g, const VertexList& a, const VertexList& b);
Verdict verify_blowup_hosted(const Graph& g, const Blowup& b);
Verdict verify_cycle_blowup(const Graph& g, const CycleBlowupCertificate& cert);

}  // namespace blowup
