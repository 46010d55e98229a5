#include "halfcube/morse.hpp"

#include <algorithm>
#include <functional>
#include <ostream>
#include <queue>
#include <sstream>
#include <stdexcept>

namespace halfcube {

std::size_t HasseDiagram::add(int dim, std::vector<std::size_t> node_facets)
{
    for (auto f : node_facets)
        if (f >= dims.size())
            throw std::invalid_argument("HasseDiagram::add: facet refers to a later node");
    dims.push_back(dim);
    facets.push_back(std::move(node_facets));
    return dims.size() - 1;
}

namespace {

std::size_t first_node(const CellComplex& c, int dim)
{
    std::size_t offset = 1;
    for (int d = 0; d < dim; ++d)
        offset += c.count(d);
    return offset;
}

} // namespace

std::size_t node_of(const CellComplex& c, CellRef ref) { return first_node(c, ref.dim) + ref.index; }

std::optional<CellRef> cell_of(const CellComplex& c, std::size_t node)
{
    if (node == 0)
        return std::nullopt;
    std::size_t offset = 1;
    for (int d = 0; d <= c.dimension(); ++d) {
        if (node < offset + c.count(d))
            return CellRef{d, node - offset};
        offset += c.count(d);
    }
    throw std::out_of_range("cell_of: node index beyond the complex");
}

HasseDiagram hasse_diagram(const CellComplex& c)
{
    HasseDiagram h;
    h.dims.reserve(c.total() + 1);
    h.facets.reserve(c.total() + 1);
    h.add(-1, {});
    std::size_t below = 0;
    for (int d = 0; d <= c.dimension(); ++d) {
        const std::size_t here = h.size();
        for (std::size_t i = 0; i < c.count(d); ++i) {
            std::vector<std::size_t> f;
            if (d == 0) {
                f.push_back(0);
            } else {
                for (auto j : c.facets(CellRef{d, i}))
                    f.push_back(below + j);
            }
            h.add(d, std::move(f));
        }
        below = here;
    }
    return h;
}

MorseMatching build_matching_Vk(const CellComplex& c, std::optional<int> coordinate)
{
    if (c.is_full())
        throw std::invalid_argument("build_matching_Vk: the full complex has no V_k");
    const int n = c.dimension();
    const int k = c.k_cut();
    const int j = coordinate.value_or(n - 1);
    if (j < 0 || j >= n)
        throw std::invalid_argument("build_matching_Vk: coordinate out of range");

    MorseMatching m{hasse_diagram(c), {}, j};
    for (int d = k - 1; d + 1 < n; ++d) {
        for (std::size_t i = 0; i < c.count(d); ++i) {
            const auto& cell = c.cell(CellRef{d, i});
            if (cell.kind != FaceKind::SimplexK || cell.mask.contains(j))
                continue;
            const auto upper = c.find(make_simplex_face(cell.point, cell.mask.with(j)).key());
            if (!upper)
                throw std::logic_error("build_matching_Vk: partner of " + to_string(cell) + " missing");
            m.pairs.push_back({node_of(c, CellRef{d, i}), node_of(c, *upper)});
        }
    }
    return m;
}

FieldCheck validate_vector_field(const MorseMatching& m)
{
    const auto& h = m.hasse;
    std::vector<char> used(h.size(), 0);
    for (const auto& p : m.pairs) {
        std::ostringstream where;
        where << "(" << p.lower << ", " << p.upper << ")";
        if (p.lower >= h.size() || p.upper >= h.size())
            return {false, "pair " + where.str() + " refers to a missing node"};
        if (h.dims[p.lower] < 0 || h.dims[p.upper] < 0)
            return {false, "pair " + where.str() + " uses the empty cell"};
        if (h.dims[p.upper] != h.dims[p.lower] + 1)
            return {false, "pair " + where.str() + " is not of codimension one"};
        const auto& f = h.facets[p.upper];
        if (std::find(f.begin(), f.end(), p.lower) == f.end())
            return {false, "pair " + where.str() + ": lower is not a face of upper"};
        if (used[p.lower] || used[p.upper])
            return {false, "pair " + where.str() + " reuses a cell"};
        used[p.lower] = used[p.upper] = 1;
    }
    return {};
}

AcyclicityCertificate check_acyclic(const MorseMatching& m)
{
    const auto& h = m.hasse;
    const std::size_t N = h.size();
    std::vector<std::size_t> partner(N, N);
    for (const auto& p : m.pairs) {
        partner[p.lower] = p.upper;
        partner[p.upper] = p.lower;
    }

    std::vector<std::vector<std::size_t>> out(N), in(N);
    for (std::size_t cell = 0; cell < N; ++cell)
        for (auto f : h.facets[cell]) {
            const bool matched = partner[f] == cell;
            const std::size_t from = matched ? cell : f;
            const std::size_t to = matched ? f : cell;
            out[from].push_back(to);
            in[to].push_back(from);
        }

    std::vector<std::size_t> indegree(N);
    std::priority_queue<std::size_t, std::vector<std::size_t>, std::greater<>> ready;
    for (std::size_t v = 0; v < N; ++v) {
        indegree[v] = in[v].size();
        if (indegree[v] == 0)
            ready.push(v);
    }
    AcyclicityCertificate cert;
    cert.order.reserve(N);
    while (!ready.empty()) {
        const auto v = ready.top();
        ready.pop();
        cert.order.push_back(v);
        for (auto w : out[v])
            if (--indegree[w] == 0)
                ready.push(w);
    }
    if (cert.order.size() == N)
        return cert;

    // Every leftover node has a leftover predecessor; walk backwards until a repeat.
    cert.acyclic = false;
    cert.order.clear();
    std::size_t start = 0;
    while (indegree[start] == 0)
        ++start;
    std::vector<std::size_t> seen_at(N, N);
    std::vector<std::size_t> walk;
    std::size_t v = start;
    while (seen_at[v] == N) {
        seen_at[v] = walk.size();
        walk.push_back(v);
        std::size_t pred = N;
        for (auto u : in[v])
            if (indegree[u] > 0 && (pred == N || u < pred))
                pred = u;
        v = pred;
    }
    cert.cycle.assign(walk.begin() + static_cast<std::ptrdiff_t>(seen_at[v]), walk.end());
    std::reverse(cert.cycle.begin(), cert.cycle.end());
    return cert;
}

long long MorseCensus::alternating_sum() const
{
    long long s = 0;
    for (std::size_t p = 0; p < unpaired.size(); ++p)
        s += (p % 2 == 0 ? 1 : -1) * static_cast<long long>(unpaired[p]);
    return s;
}

MorseCensus unpaired_census(const MorseMatching& m)
{
    const auto& h = m.hasse;
    std::vector<char> used(h.size(), 0);
    for (const auto& p : m.pairs)
        used[p.lower] = used[p.upper] = 1;
    int top = -1;
    for (int d : h.dims)
        top = std::max(top, d);
    MorseCensus census;
    census.unpaired.assign(static_cast<std::size_t>(top + 1), 0);
    for (std::size_t v = 0; v < h.size(); ++v) {
        if (h.dims[v] < 0) {
            census.empty_cell_unpaired = census.empty_cell_unpaired && !used[v];
            continue;
        }
        if (!used[v])
            ++census.unpaired[h.dims[v]];
    }
    return census;
}

std::string key_string(const VertexKey& key)
{
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < key.size(); ++i)
        os << (i ? "," : "") << key[i];
    os << "]";
    return os.str();
}

void write_pairs(std::ostream& os, const MorseMatching& m, const CellComplex& c)
{
    for (const auto& p : m.pairs) {
        const auto lower = cell_of(c, p.lower);
        const auto upper = cell_of(c, p.upper);
        if (!lower || !upper)
            throw std::invalid_argument("write_pairs: matching pairs the empty cell");
        os << key_string(c.cell(*lower).key()) << " " << key_string(c.cell(*upper).key()) << "\n";
    }
}

} // namespace halfcube
