#include "blowup/io.hpp"

#include <fstream>
#include <iomanip>
#include <sstream>

#include <json.hpp>

#include "blowup/error.hpp"

namespace blowup {

using nlohmann::json;

namespace {

bool next_content_line(std::istream& in, std::string& line, int& lineno)
{
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        if (line.find_first_not_of(" \t\r") != std::string::npos) return true;
    }
    return false;
}

}  // namespace

Graph read_graph(std::istream& in)
{
    std::string line;
    int lineno = 0;
    if (!next_content_line(in, line, lineno)) throw Error("graph file: missing header");
    long long n = -1, m = -1;
    {
        std::istringstream hs(line);
        if (!(hs >> n >> m) || n < 0 || m < 0) throw Error("graph file: bad header on line " + std::to_string(lineno));
    }
    Graph g(static_cast<int>(n));
    for (long long i = 0; i < m; ++i) {
        if (!next_content_line(in, line, lineno)) throw Error("graph file: expected " + std::to_string(m) + " edges");
        std::istringstream es(line);
        long long u, v;
        if (!(es >> u >> v)) throw Error("graph file: bad edge on line " + std::to_string(lineno));
        if (u < 0 || v < 0 || u >= n || v >= n || u == v)
            throw Error("graph file: invalid edge on line " + std::to_string(lineno));
        g.add_edge(static_cast<Vertex>(u), static_cast<Vertex>(v));
    }
    return g;
}

void write_graph(std::ostream& out, const Graph& g)
{
    auto es = g.edges();
    out << g.order() << ' ' << es.size() << '\n';
    for (auto [u, v] : es) out << u << ' ' << v << '\n';
}

Graph load_graph(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw Error("cannot open " + path);
    return read_graph(in);
}

void save_graph(const std::string& path, const Graph& g)
{
    std::ofstream out(path);
    if (!out) throw Error("cannot write " + path);
    write_graph(out, g);
}

Hypergraph read_hypergraph(std::istream& in)
{
    std::string line;
    int lineno = 0;
    if (!next_content_line(in, line, lineno)) throw Error("hypergraph file: missing header");
    long long n = -1, s = -1, m = -1;
    {
        std::istringstream hs(line);
        if (!(hs >> n >> s >> m) || n < 0 || s < 1 || m < 0)
            throw Error("hypergraph file: bad header on line " + std::to_string(lineno));
    }
    std::vector<VertexList> edges;
    edges.reserve(static_cast<std::size_t>(m));
    for (long long i = 0; i < m; ++i) {
        if (!next_content_line(in, line, lineno))
            throw Error("hypergraph file: expected " + std::to_string(m) + " edges");
        std::istringstream es(line);
        VertexList e;
        for (long long k = 0; k < s; ++k) {
            long long v;
            if (!(es >> v) || v < 0 || v >= n) throw Error("hypergraph file: bad edge on line " + std::to_string(lineno));
            e.push_back(static_cast<Vertex>(v));
        }
        edges.push_back(std::move(e));
    }
    return Hypergraph::explicit_edges(static_cast<int>(n), static_cast<int>(s), std::move(edges));
}

void write_hypergraph(std::ostream& out, const Hypergraph& h)
{
    const auto& es = h.edges();
    out << h.order() << ' ' << h.uniformity() << ' ' << es.size() << '\n';
    for (const auto& e : es) {
        for (std::size_t i = 0; i < e.size(); ++i) out << (i ? " " : "") << e[i];
        out << '\n';
    }
}

Hypergraph load_hypergraph(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw Error("cannot open " + path);
    return read_hypergraph(in);
}

std::string serialize_certificate(const CycleBlowupCertificate& cert)
{
    json j;
    j["n"] = cert.n;
    j["c"] = cert.c;
    j["eta"] = cert.eta;
    j["clusters"] = cert.clusters;
    return j.dump() + "\n";
}

CycleBlowupCertificate parse_certificate(const std::string& text)
{
    try {
        json j = json::parse(text);
        CycleBlowupCertificate cert;
        cert.n = j.at("n").get<int>();
        cert.c = j.at("c").get<double>();
        cert.eta = j.at("eta").get<double>();
        cert.clusters = j.at("clusters").get<std::vector<VertexList>>();
        return cert;
    } catch (const json::exception& e) {
        throw Error(std::string("certificate: ") + e.what());
    }
}

CycleBlowupCertificate load_certificate(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw Error("cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_certificate(ss.str());
}

void save_certificate(const std::string& path, const CycleBlowupCertificate& cert)
{
    std::ofstream out(path);
    if (!out) throw Error("cannot write " + path);
    out << serialize_certificate(cert);
}

namespace {

const char* balance_name(BalanceKind k)
{
    switch (k) {
    case BalanceKind::None: return "none";
    case BalanceKind::Exact: return "exact";
    case BalanceKind::Approx: return "approx";
    case BalanceKind::Quasi: return "quasi";
    }
    return "none";
}

BalanceKind balance_from(const std::string& s)
{
    if (s == "none") return BalanceKind::None;
    if (s == "exact") return BalanceKind::Exact;
    if (s == "approx") return BalanceKind::Approx;
    if (s == "quasi") return BalanceKind::Quasi;
    throw Error("unknown balance kind " + s);
}

}  // namespace

std::string serialize_blowup(const Blowup& b)
{
    json j;
    j["reduced"] = {{"n", b.reduced.order()}, {"edges", b.reduced.edges()}};
    j["clusters"] = b.family.clusters;
    j["balance"] = {{"kind", balance_name(b.family.balance.kind)},
                    {"m", b.family.balance.m},
                    {"eta", b.family.balance.eta}};
    return j.dump() + "\n";
}

Blowup parse_blowup(const std::string& text)
{
    try {
        json j = json::parse(text);
        Blowup b;
        b.reduced = Graph::from_edges(j.at("reduced").at("n").get<int>(),
                                      j.at("reduced").at("edges").get<std::vector<std::pair<Vertex, Vertex>>>());
        b.family.clusters = j.at("clusters").get<std::vector<VertexList>>();
        const auto& bal = j.at("balance");
        b.family.balance = {balance_from(bal.at("kind").get<std::string>()), bal.at("m").get<double>(),
                            bal.at("eta").get<double>()};
        return b;
    } catch (const json::exception& e) {
        throw Error(std::string("blowup: ") + e.what());
    }
}

}  // namespace blowup
