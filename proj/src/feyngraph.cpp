#include "hallforest/feyngraph.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <numeric>
#include <set>
#include <istream>
#include <ostream>
#include <sstream>

#include <json.hpp>

namespace hallforest::graphs {

namespace {

struct UnionFind {
    std::vector<int> up;
    explicit UnionFind(int n) : up(n) { std::iota(up.begin(), up.end(), 0); }
    int find(int x) {
        while (up[x] != x) x = up[x] = up[up[x]];
        return x;
    }
    void unite(int a, int b) { up[find(a)] = find(b); }
};

}  // namespace

std::vector<Violation> validate_raw(const RawGraph& raw) {
    std::vector<Violation> out;
    std::map<std::string, int> vidx, hidx;
    for (const auto& v : raw.vertices)
        if (!vidx.emplace(v, static_cast<int>(vidx.size())).second)
            out.push_back({"duplicate vertex id", v});
    for (const auto& [h, v] : raw.half_edges) {
        if (!hidx.emplace(h, static_cast<int>(hidx.size())).second)
            out.push_back({"duplicate half-edge id", h});
        if (!vidx.count(v)) out.push_back({"half-edge on unknown vertex", h});
    }
    std::map<std::string, int> pair_uses;
    for (const auto& [a, b] : raw.internal) {
        if (!hidx.count(a)) out.push_back({"internal pair with unknown half-edge", a});
        if (!hidx.count(b)) out.push_back({"internal pair with unknown half-edge", b});
        if (a == b) out.push_back({"half-edge paired with itself", a});
        ++pair_uses[a];
        ++pair_uses[b];
    }
    for (const auto& [h, uses] : pair_uses)
        if (uses > 1) out.push_back({"half-edge in two pairs", h});
    if (!out.empty()) return out;

    std::vector<int> degree(raw.vertices.size(), 0);
    for (const auto& [h, v] : raw.half_edges) {
        (void)h;
        ++degree[static_cast<std::size_t>(vidx[v])];
    }
    for (std::size_t v = 0; v < raw.vertices.size(); ++v)
        if (degree[v] != 3) out.push_back({"non-trivalent vertex", raw.vertices[v]});

    UnionFind uf(static_cast<int>(raw.vertices.size()));
    std::map<std::string, std::string> half_vertex;
    for (const auto& [h, v] : raw.half_edges) half_vertex[h] = v;
    std::set<std::string> paired;
    for (const auto& [a, b] : raw.internal) {
        uf.unite(vidx[half_vertex[a]], vidx[half_vertex[b]]);
        paired.insert(a);
        paired.insert(b);
    }
    std::map<int, int> comp_ext, comp_int, comp_size;
    std::map<int, std::string> comp_name;
    for (std::size_t v = 0; v < raw.vertices.size(); ++v) {
        int root = uf.find(static_cast<int>(v));
        ++comp_size[root];
        if (!comp_name.count(root)) comp_name[root] = raw.vertices[v];
    }
    for (const auto& [h, v] : raw.half_edges)
        if (!paired.count(h)) ++comp_ext[uf.find(vidx[v])];
    for (const auto& [a, b] : raw.internal) {
        (void)b;
        ++comp_int[uf.find(vidx[half_vertex[a]])];
    }
    for (const auto& [root, size] : comp_size) {
        int ext = comp_ext.count(root) ? comp_ext[root] : 0;
        int internal = comp_int.count(root) ? comp_int[root] : 0;
        if (ext != 2 && ext != 3) out.push_back({"wrong external count", comp_name[root]});
        if (internal - size + 1 < 1) out.push_back({"loop-free component", comp_name[root]});
    }
    // 1PI: every component stays connected when any single internal edge is
    // removed (bridges are one-particle-reducible)
    for (std::size_t skip = 0; skip < raw.internal.size(); ++skip) {
        UnionFind uf2(static_cast<int>(raw.vertices.size()));
        for (std::size_t i = 0; i < raw.internal.size(); ++i) {
            if (i == skip) continue;
            uf2.unite(vidx[half_vertex[raw.internal[i].first]],
                      vidx[half_vertex[raw.internal[i].second]]);
        }
        int a = vidx[half_vertex[raw.internal[skip].first]];
        int b = vidx[half_vertex[raw.internal[skip].second]];
        if (uf2.find(a) != uf2.find(b)) {
            out.push_back({"one-particle-reducible component", half_vertex[raw.internal[skip].first]});
            break;
        }
    }
    return out;
}

FeynmanGraph FeynmanGraph::from_raw(const RawGraph& raw) {
    auto violations = validate_raw(raw);
    if (!violations.empty()) {
        std::string msg = "invalid Feynman graph:";
        for (const auto& v : violations) msg += " [" + v.rule + ": " + v.where + "]";
        throw GraphError(msg);
    }
    FeynmanGraph g;
    g.vertex_ids_ = raw.vertices;
    for (int v = 0; v < g.vertex_count(); ++v) g.vertex_index_[g.vertex_ids_[v]] = v;
    g.at_vertex_.resize(raw.vertices.size());
    for (const auto& [h, v] : raw.half_edges) {
        int hi = static_cast<int>(g.half_ids_.size());
        g.half_ids_.push_back(h);
        g.half_index_[h] = hi;
        int vi = g.vertex_index_[v];
        g.half_vertex_.push_back(vi);
        g.at_vertex_[static_cast<std::size_t>(vi)].push_back(hi);
    }
    g.partner_.assign(g.half_ids_.size(), -1);
    for (const auto& [a, b] : raw.internal) {
        int ha = g.half_index_[a], hb = g.half_index_[b];
        g.partner_[static_cast<std::size_t>(ha)] = hb;
        g.partner_[static_cast<std::size_t>(hb)] = ha;
    }
    return g;
}

FeynmanGraph FeynmanGraph::empty() { return FeynmanGraph(); }

int FeynmanGraph::vertex_index(const std::string& id) const {
    auto it = vertex_index_.find(id);
    return it == vertex_index_.end() ? -1 : it->second;
}

int FeynmanGraph::half_index(const std::string& id) const {
    auto it = half_index_.find(id);
    return it == half_index_.end() ? -1 : it->second;
}

std::vector<int> FeynmanGraph::external_halves() const {
    std::vector<int> out;
    for (int h = 0; h < half_count(); ++h)
        if (partner_[static_cast<std::size_t>(h)] < 0) out.push_back(h);
    return out;
}

int FeynmanGraph::internal_count() const {
    int n = 0;
    for (int h = 0; h < half_count(); ++h)
        if (partner_[static_cast<std::size_t>(h)] > h) ++n;
    return n;
}

std::vector<std::vector<int>> FeynmanGraph::components() const {
    UnionFind uf(vertex_count());
    for (int h = 0; h < half_count(); ++h)
        if (partner(h) >= 0) uf.unite(half_vertex(h), half_vertex(partner(h)));
    std::map<int, std::vector<int>> groups;
    for (int v = 0; v < vertex_count(); ++v) groups[uf.find(v)].push_back(v);
    std::vector<std::vector<int>> out;
    out.reserve(groups.size());
    for (auto& [root, members] : groups) {
        (void)root;
        std::sort(members.begin(), members.end());
        out.push_back(std::move(members));
    }
    std::sort(out.begin(), out.end());
    return out;
}

int FeynmanGraph::loop_count() const {
    if (is_empty()) return 0;
    return internal_count() - vertex_count() + static_cast<int>(components().size());
}

RawGraph FeynmanGraph::to_raw() const {
    RawGraph raw;
    raw.vertices = vertex_ids_;
    for (int h = 0; h < half_count(); ++h)
        raw.half_edges.emplace_back(half_ids_[static_cast<std::size_t>(h)],
                                    vertex_ids_[static_cast<std::size_t>(half_vertex(h))]);
    for (int h = 0; h < half_count(); ++h)
        if (partner(h) > h)
            raw.internal.emplace_back(half_ids_[static_cast<std::size_t>(h)],
                                      half_ids_[static_cast<std::size_t>(partner(h))]);
    return raw;
}

// ---------------------------------------------------------------------------
// canonical form
// ---------------------------------------------------------------------------

namespace {

// Multigraph view: external count per vertex plus edge multiplicities
// (diagonal entries count self-loop pairs). Faithful for half-edge graphs
// up to isomorphism: half-edges carry no structure beyond incidence and
// pairing, so the multiplicity data reconstructs the class.
struct Multigraph {
    int n = 0;
    std::vector<int> ext;
    std::vector<std::vector<int>> mult;
};

Multigraph to_multigraph(const FeynmanGraph& g) {
    Multigraph mg;
    mg.n = g.vertex_count();
    mg.ext.assign(static_cast<std::size_t>(mg.n), 0);
    mg.mult.assign(static_cast<std::size_t>(mg.n), std::vector<int>(static_cast<std::size_t>(mg.n), 0));
    for (int h = 0; h < g.half_count(); ++h) {
        int p = g.partner(h);
        if (p < 0) {
            ++mg.ext[static_cast<std::size_t>(g.half_vertex(h))];
        } else if (p > h) {
            int a = g.half_vertex(h), b = g.half_vertex(p);
            if (a == b) {
                ++mg.mult[static_cast<std::size_t>(a)][static_cast<std::size_t>(a)];
            } else {
                ++mg.mult[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
                ++mg.mult[static_cast<std::size_t>(b)][static_cast<std::size_t>(a)];
            }
        }
    }
    return mg;
}

// Iterated partition refinement; final colors are iso-invariant ranks, so
// restricting the minimization below to color-sorted orderings stays
// canon-sound.
std::vector<int> wl_colors(const Multigraph& mg) {
    int n = mg.n;
    std::vector<int> color(static_cast<std::size_t>(n), 0);
    {
        std::vector<std::pair<int, int>> init(static_cast<std::size_t>(n));
        for (int v = 0; v < n; ++v)
            init[static_cast<std::size_t>(v)] = {mg.ext[static_cast<std::size_t>(v)],
                                                 mg.mult[static_cast<std::size_t>(v)][static_cast<std::size_t>(v)]};
        auto sorted = init;
        std::sort(sorted.begin(), sorted.end());
        sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
        for (int v = 0; v < n; ++v)
            color[static_cast<std::size_t>(v)] = static_cast<int>(
                std::lower_bound(sorted.begin(), sorted.end(), init[static_cast<std::size_t>(v)]) -
                sorted.begin());
    }
    for (int round = 0; round < n; ++round) {
        using Key = std::pair<int, std::vector<std::pair<int, int>>>;
        std::vector<Key> keys(static_cast<std::size_t>(n));
        for (int v = 0; v < n; ++v) {
            std::vector<std::pair<int, int>> nb;
            for (int u = 0; u < n; ++u)
                if (u != v && mg.mult[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)] > 0)
                    nb.emplace_back(mg.mult[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)],
                                    color[static_cast<std::size_t>(u)]);
            std::sort(nb.begin(), nb.end());
            keys[static_cast<std::size_t>(v)] = {color[static_cast<std::size_t>(v)], std::move(nb)};
        }
        auto sorted = keys;
        std::sort(sorted.begin(), sorted.end());
        sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
        std::vector<int> next(static_cast<std::size_t>(n));
        for (int v = 0; v < n; ++v)
            next[static_cast<std::size_t>(v)] = static_cast<int>(
                std::lower_bound(sorted.begin(), sorted.end(), keys[static_cast<std::size_t>(v)]) -
                sorted.begin());
        if (next == color) break;
        color = std::move(next);
    }
    return color;
}

std::vector<int> signature_for(const Multigraph& mg, const std::vector<int>& order) {
    std::vector<int> sig;
    sig.reserve(static_cast<std::size_t>(mg.n) * static_cast<std::size_t>(mg.n + 3) / 2);
    for (int v : order) sig.push_back(mg.ext[static_cast<std::size_t>(v)]);
    for (int i = 0; i < mg.n; ++i)
        for (int j = i; j < mg.n; ++j)
            sig.push_back(mg.mult[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])]
                                 [static_cast<std::size_t>(order[static_cast<std::size_t>(j)])]);
    return sig;
}

std::string key_from_signature(int n, const std::vector<int>& sig) {
    std::ostringstream os;
    os << "g[" << n << ';';
    for (int v = 0; v < n; ++v) {
        if (v) os << ',';
        os << sig[static_cast<std::size_t>(v)];
    }
    os << ';';
    bool first = true;
    std::size_t idx = static_cast<std::size_t>(n);
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j, ++idx) {
            if (sig[idx] == 0) continue;
            if (!first) os << ',';
            first = false;
            os << i << '-' << j << ':' << sig[idx];
        }
    os << ']';
    return os.str();
}

std::string multigraph_fingerprint(const Multigraph& mg) {
    std::ostringstream os;
    os << mg.n << '|';
    for (int v = 0; v < mg.n; ++v) os << mg.ext[static_cast<std::size_t>(v)] << ',';
    os << '|';
    for (int i = 0; i < mg.n; ++i)
        for (int j = i; j < mg.n; ++j)
            os << mg.mult[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] << ',';
    return os.str();
}

std::mutex canon_mutex;
std::map<std::string, GraphKey> canon_cache;

}  // namespace

GraphKey canon_key(const FeynmanGraph& g) {
    if (g.is_empty()) return "{}";
    Multigraph mg = to_multigraph(g);
    std::string fp = multigraph_fingerprint(mg);
    {
        std::lock_guard<std::mutex> lock(canon_mutex);
        auto it = canon_cache.find(fp);
        if (it != canon_cache.end()) return it->second;
    }
    auto color = wl_colors(mg);
    std::map<int, std::vector<int>> classes;
    for (int v = 0; v < mg.n; ++v) classes[color[static_cast<std::size_t>(v)]].push_back(v);
    std::vector<std::vector<int>> blocks;
    blocks.reserve(classes.size());
    for (auto& [c, members] : classes) {
        (void)c;
        std::sort(members.begin(), members.end());
        blocks.push_back(members);
    }
    std::vector<int> best;
    std::vector<int> order;
    order.reserve(static_cast<std::size_t>(mg.n));
    std::function<void(std::size_t)> rec = [&](std::size_t bi) {
        if (bi == blocks.size()) {
            auto sig = signature_for(mg, order);
            if (best.empty() || sig < best) best = std::move(sig);
            return;
        }
        auto block = blocks[bi];
        std::sort(block.begin(), block.end());
        do {
            order.insert(order.end(), block.begin(), block.end());
            rec(bi + 1);
            order.resize(order.size() - block.size());
        } while (std::next_permutation(block.begin(), block.end()));
    };
    rec(0);
    GraphKey key = key_from_signature(mg.n, best);
    std::lock_guard<std::mutex> lock(canon_mutex);
    canon_cache.emplace(std::move(fp), key);
    return key;
}

void canon_cache_load(std::istream& in) {
    std::string line;
    std::lock_guard<std::mutex> lock(canon_mutex);
    while (std::getline(in, line)) {
        auto tab = line.find('\t');
        if (tab == std::string::npos) continue;
        canon_cache.emplace(line.substr(0, tab), line.substr(tab + 1));
    }
}

void canon_cache_save(std::ostream& out) {
    std::lock_guard<std::mutex> lock(canon_mutex);
    for (const auto& [fp, key] : canon_cache) out << fp << '\t' << key << '\n';
}

bool is_graph_key(const std::string& key) {
    return key == "{}" || (key.size() > 3 && key.rfind("g[", 0) == 0 && key.back() == ']');
}

FeynmanGraph graph_from_key(const GraphKey& key) {
    if (key == "{}") return FeynmanGraph::empty();
    if (!is_graph_key(key)) throw GraphError("malformed graph key '" + key + "'");
    std::string body = key.substr(2, key.size() - 3);
    auto semi1 = body.find(';');
    auto semi2 = body.find(';', semi1 + 1);
    if (semi1 == std::string::npos || semi2 == std::string::npos)
        throw GraphError("malformed graph key '" + key + "'");
    int n = std::stoi(body.substr(0, semi1));
    RawGraph raw;
    for (int v = 0; v < n; ++v) raw.vertices.push_back("v" + std::to_string(v));
    int half_counter = 0;
    auto fresh_half = [&](int v) {
        std::string id = "h" + std::to_string(++half_counter);
        raw.half_edges.emplace_back(id, raw.vertices[static_cast<std::size_t>(v)]);
        return id;
    };
    {
        std::string exts = body.substr(semi1 + 1, semi2 - semi1 - 1);
        std::istringstream is(exts);
        std::string item;
        int v = 0;
        while (std::getline(is, item, ',')) {
            if (v >= n) throw GraphError("malformed graph key '" + key + "'");
            for (int k = item.empty() ? 0 : std::stoi(item); k > 0; --k) fresh_half(v);
            ++v;
        }
    }
    {
        std::string edges = body.substr(semi2 + 1);
        std::istringstream is(edges);
        std::string item;
        while (std::getline(is, item, ',')) {
            if (item.empty()) continue;
            auto dash = item.find('-');
            auto colon = item.find(':');
            if (dash == std::string::npos || colon == std::string::npos)
                throw GraphError("malformed graph key '" + key + "'");
            int i = std::stoi(item.substr(0, dash));
            int j = std::stoi(item.substr(dash + 1, colon - dash - 1));
            int m = std::stoi(item.substr(colon + 1));
            for (int k = 0; k < m; ++k) {
                auto a = fresh_half(i);
                auto b = fresh_half(j);
                raw.internal.emplace_back(a, b);
            }
        }
    }
    return FeynmanGraph::from_raw(raw);
}

// ---------------------------------------------------------------------------
// subgraphs, contraction, subobjects
// ---------------------------------------------------------------------------

namespace {

void sort_selection(Selection& sel) {
    for (auto& piece : sel) std::sort(piece.begin(), piece.end());
    std::sort(sel.begin(), sel.end());
}

// Validity of one connected piece, standing alone with its induced pairing:
// connected, 2 or 3 externals, at least one loop, no bridges.
bool piece_valid(const FeynmanGraph& g, const Piece& piece) {
    if (piece.empty()) return false;
    std::set<int> cv(piece.begin(), piece.end());
    int ext = 0;
    std::vector<std::pair<int, int>> internal;
    for (int v : piece)
        for (int h : g.halves_at(v)) {
            int p = g.partner(h);
            if (p < 0 || !cv.count(g.half_vertex(p)))
                ++ext;
            else if (p > h)
                internal.emplace_back(h, p);
        }
    if (ext != 2 && ext != 3) return false;
    if (static_cast<int>(internal.size()) - static_cast<int>(piece.size()) + 1 < 1) return false;
    // connected
    UnionFind uf(g.vertex_count());
    for (const auto& [h, p] : internal) uf.unite(g.half_vertex(h), g.half_vertex(p));
    for (int v : piece)
        if (uf.find(v) != uf.find(piece.front())) return false;
    // 1PI: no bridges
    for (std::size_t skip = 0; skip < internal.size(); ++skip) {
        UnionFind uf2(g.vertex_count());
        for (std::size_t i = 0; i < internal.size(); ++i) {
            if (i == skip) continue;
            uf2.unite(g.half_vertex(internal[i].first), g.half_vertex(internal[i].second));
        }
        if (uf2.find(g.half_vertex(internal[skip].first)) !=
            uf2.find(g.half_vertex(internal[skip].second)))
            return false;
    }
    return true;
}

}  // namespace

Selection selection_from_vertices(const FeynmanGraph& g, const std::vector<int>& vertices) {
    std::set<int> in(vertices.begin(), vertices.end());
    UnionFind uf(g.vertex_count());
    for (int h = 0; h < g.half_count(); ++h) {
        int p = g.partner(h);
        if (p >= 0 && in.count(g.half_vertex(h)) && in.count(g.half_vertex(p)))
            uf.unite(g.half_vertex(h), g.half_vertex(p));
    }
    std::map<int, Piece> groups;
    for (int v : vertices) groups[uf.find(v)].push_back(v);
    Selection sel;
    for (auto& [r, piece] : groups) {
        (void)r;
        sel.push_back(std::move(piece));
    }
    sort_selection(sel);
    return sel;
}

bool selection_valid(const FeynmanGraph& g, const Selection& sel) {
    std::set<int> seen;
    for (const auto& piece : sel) {
        if (!piece_valid(g, piece)) return false;
        for (int v : piece)
            if (!seen.insert(v).second) return false;  // pieces must be disjoint
    }
    return true;
}

std::vector<Piece> subgraph_atoms(const FeynmanGraph& g) {
    int n = g.vertex_count();
    if (n > 25) throw GraphError("subgraph enumeration over " + std::to_string(n) + " vertices");
    std::vector<Piece> atoms;
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        Piece piece;
        for (int v = 0; v < n; ++v)
            if (mask & (1u << v)) piece.push_back(v);
        if (piece_valid(g, piece)) atoms.push_back(std::move(piece));
    }
    return atoms;
}

std::vector<Selection> subgraph_selections(const FeynmanGraph& g) {
    auto atoms = subgraph_atoms(g);
    // families of pairwise disjoint atoms
    std::vector<Selection> out;
    Selection cur;
    std::set<int> used;
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (i == atoms.size()) {
            Selection family = cur;
            sort_selection(family);
            out.push_back(std::move(family));
            return;
        }
        rec(i + 1);
        bool free = true;
        for (int v : atoms[i])
            if (used.count(v)) free = false;
        if (free) {
            for (int v : atoms[i]) used.insert(v);
            cur.push_back(atoms[i]);
            rec(i + 1);
            cur.pop_back();
            for (int v : atoms[i]) used.erase(v);
        }
    };
    rec(0);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

FeynmanGraph induced_subgraph(const FeynmanGraph& g, const Selection& sel) {
    RawGraph raw;
    std::map<int, int> piece_of;  // vertex -> piece index
    for (std::size_t i = 0; i < sel.size(); ++i)
        for (int v : sel[i]) piece_of[v] = static_cast<int>(i);
    for (const auto& piece : sel)
        for (int v : piece) raw.vertices.push_back(g.vertex_id(v));
    for (const auto& piece : sel)
        for (int v : piece)
            for (int h : g.halves_at(v)) raw.half_edges.emplace_back(g.half_id(h), g.vertex_id(v));
    for (int h = 0; h < g.half_count(); ++h) {
        int p = g.partner(h);
        if (p <= h) continue;
        auto ih = piece_of.find(g.half_vertex(h));
        auto ip = piece_of.find(g.half_vertex(p));
        // pairs between pieces are not part of the subgraph
        if (ih != piece_of.end() && ip != piece_of.end() && ih->second == ip->second)
            raw.internal.emplace_back(g.half_id(h), g.half_id(p));
    }
    return FeynmanGraph::from_raw(raw);
}

FeynmanGraph contract(const FeynmanGraph& g, const Selection& sel) {
    if (sel.empty()) return g;
    if (!selection_valid(g, sel)) throw GraphError("contract: selection is not a Feynman subgraph");

    std::vector<bool> vertex_alive(static_cast<std::size_t>(g.vertex_count()), true);
    std::vector<bool> half_alive(static_cast<std::size_t>(g.half_count()), true);
    std::vector<int> partner(static_cast<std::size_t>(g.half_count()));
    std::vector<int> host(static_cast<std::size_t>(g.half_count()));  // -2-k = new vertex k
    for (int h = 0; h < g.half_count(); ++h) {
        partner[static_cast<std::size_t>(h)] = g.partner(h);
        host[static_cast<std::size_t>(h)] = g.half_vertex(h);
    }
    std::vector<std::string> added;
    std::set<std::string> used_ids;
    for (int v = 0; v < g.vertex_count(); ++v) used_ids.insert(g.vertex_id(v));

    for (const auto& piece : sel) {
        std::set<int> cv(piece.begin(), piece.end());
        std::vector<int> externals, all_halves;
        for (int v : piece)
            for (int h : g.halves_at(v)) {
                all_halves.push_back(h);
                // external of the piece: not paired inside the piece itself
                int p = g.partner(h);
                if (p < 0 || !cv.count(g.half_vertex(p))) externals.push_back(h);
            }
        if (externals.size() == 3) {
            bool unattached = true;  // a whole 3-point component contracts to nothing
            for (int h : externals)
                if (partner[static_cast<std::size_t>(h)] >= 0) unattached = false;
            if (unattached) {
                for (int v : piece) vertex_alive[static_cast<std::size_t>(v)] = false;
                for (int h : all_halves) half_alive[static_cast<std::size_t>(h)] = false;
                continue;
            }
            std::string id = "q:" + g.vertex_id(piece.front());
            while (used_ids.count(id)) id += '#';
            used_ids.insert(id);
            std::set<int> ext_set(externals.begin(), externals.end());
            for (int h : all_halves) {
                if (ext_set.count(h))
                    host[static_cast<std::size_t>(h)] = -2 - static_cast<int>(added.size());
                else
                    half_alive[static_cast<std::size_t>(h)] = false;
            }
            for (int v : piece) vertex_alive[static_cast<std::size_t>(v)] = false;
            added.push_back(id);
        } else if (externals.size() == 2) {
            int p1 = partner[static_cast<std::size_t>(externals[0])];
            int p2 = partner[static_cast<std::size_t>(externals[1])];
            if ((p1 < 0) != (p2 < 0))
                throw GraphError(
                    "contract: 2-external piece with exactly one paired external at half-edge '" +
                    g.half_id(externals[p1 < 0 ? 1 : 0]) + "'");
            for (int v : piece) vertex_alive[static_cast<std::size_t>(v)] = false;
            for (int h : all_halves) half_alive[static_cast<std::size_t>(h)] = false;
            if (p1 >= 0) {
                partner[static_cast<std::size_t>(p1)] = p2;
                partner[static_cast<std::size_t>(p2)] = p1;
            }
        } else {
            throw GraphError("contract: piece with invalid external count");
        }
    }

    RawGraph raw;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (vertex_alive[static_cast<std::size_t>(v)]) raw.vertices.push_back(g.vertex_id(v));
    for (const auto& id : added) raw.vertices.push_back(id);
    for (int h = 0; h < g.half_count(); ++h) {
        if (!half_alive[static_cast<std::size_t>(h)]) continue;
        int hv = host[static_cast<std::size_t>(h)];
        std::string vid = hv >= 0 ? g.vertex_id(hv) : added[static_cast<std::size_t>(-2 - hv)];
        raw.half_edges.emplace_back(g.half_id(h), vid);
    }
    for (int h = 0; h < g.half_count(); ++h) {
        int p = partner[static_cast<std::size_t>(h)];
        if (half_alive[static_cast<std::size_t>(h)] && p > h &&
            half_alive[static_cast<std::size_t>(p)])
            raw.internal.emplace_back(g.half_id(h), g.half_id(p));
    }
    return FeynmanGraph::from_raw(raw);
}

bool quotient_defined(const FeynmanGraph& g, const Selection& sel) {
    if (!selection_valid(g, sel)) return false;
    try {
        contract(g, sel);
        return true;
    } catch (const GraphError&) {
        return false;
    }
}

std::vector<Selection> subobject_selections(const FeynmanGraph& g) {
    std::vector<Selection> out;
    for (auto& sel : subgraph_selections(g))
        if (quotient_defined(g, sel)) out.push_back(std::move(sel));
    return out;
}

std::vector<GraphSplit> graph_splits(const FeynmanGraph& g) {
    std::map<std::pair<GraphKey, GraphKey>, long long> grouped;
    for (const auto& sel : subobject_selections(g)) {
        GraphKey sub = canon_key(induced_subgraph(g, sel));
        GraphKey quot = canon_key(contract(g, sel));
        ++grouped[{sub, quot}];
    }
    std::vector<GraphSplit> out;
    out.reserve(grouped.size());
    for (const auto& [k, count] : grouped) out.push_back(GraphSplit{k.first, k.second, count});
    return out;
}

namespace {

std::mutex splits_mutex;
std::map<GraphKey, std::vector<GraphSplit>> splits_cache;

const std::vector<GraphSplit>& graph_splits_of_key(const GraphKey& m) {
    {
        std::lock_guard<std::mutex> lock(splits_mutex);
        auto it = splits_cache.find(m);
        if (it != splits_cache.end()) return it->second;
    }
    auto splits = graph_splits(graph_from_key(m));
    std::lock_guard<std::mutex> lock(splits_mutex);
    return splits_cache.emplace(m, std::move(splits)).first->second;
}

}  // namespace

long long graph_subobject_count(const GraphKey& a, const GraphKey& b, const GraphKey& m) {
    for (const auto& s : graph_splits_of_key(m))
        if (s.sub == a && s.quot == b) return s.count;
    return 0;
}

// ---------------------------------------------------------------------------
// insertion
// ---------------------------------------------------------------------------

namespace {

std::vector<std::string> splice_copy(RawGraph& raw, const FeynmanGraph& g1,
                                     const std::string& prefix) {
    for (int v = 0; v < g1.vertex_count(); ++v) raw.vertices.push_back(prefix + g1.vertex_id(v));
    for (int h = 0; h < g1.half_count(); ++h)
        raw.half_edges.emplace_back(prefix + g1.half_id(h),
                                    prefix + g1.vertex_id(g1.half_vertex(h)));
    for (int h = 0; h < g1.half_count(); ++h)
        if (g1.partner(h) > h)
            raw.internal.emplace_back(prefix + g1.half_id(h), prefix + g1.half_id(g1.partner(h)));
    std::vector<std::string> ext;
    for (int h : g1.external_halves()) ext.push_back(prefix + g1.half_id(h));
    return ext;
}

}  // namespace

FeynmanGraph insert_at_vertex(const FeynmanGraph& g2, int v, const std::vector<int>& leg_order,
                              const FeynmanGraph& g1) {
    auto ex1 = g1.external_halves();
    if (ex1.size() != 3 || !g1.connected())
        throw GraphError("insert_at_vertex: inserted graph must be connected with 3 externals");
    if (leg_order.size() != 3) throw GraphError("insert_at_vertex: need a 3-leg bijection");
    const auto& hv = g2.halves_at(v);

    RawGraph raw;
    for (int u = 0; u < g2.vertex_count(); ++u)
        if (u != v) raw.vertices.push_back(g2.vertex_id(u));
    for (int h = 0; h < g2.half_count(); ++h)
        if (g2.half_vertex(h) != v)
            raw.half_edges.emplace_back(g2.half_id(h), g2.vertex_id(g2.half_vertex(h)));
    for (int h = 0; h < g2.half_count(); ++h) {
        int p = g2.partner(h);
        if (p > h && g2.half_vertex(h) != v && g2.half_vertex(p) != v)
            raw.internal.emplace_back(g2.half_id(h), g2.half_id(p));
    }
    auto ext_ids = splice_copy(raw, g1, "i:");
    for (std::size_t i = 0; i < 3; ++i) {
        int k = hv[static_cast<std::size_t>(leg_order[i])];
        int kp = g2.partner(k);
        if (kp < 0) continue;  // external leg of g2 stays external on g1's leg
        if (g2.half_vertex(kp) == v) {
            // self-loop at v: glue the two matched g1 legs to each other
            for (std::size_t j = i + 1; j < 3; ++j)
                if (hv[static_cast<std::size_t>(leg_order[j])] == kp)
                    raw.internal.emplace_back(ext_ids[i], ext_ids[j]);
        } else {
            raw.internal.emplace_back(ext_ids[i], g2.half_id(kp));
        }
    }
    return FeynmanGraph::from_raw(raw);
}

FeynmanGraph insert_on_edge(const FeynmanGraph& g2, int h, bool flip, const FeynmanGraph& g1) {
    auto ex1 = g1.external_halves();
    if (ex1.size() != 2 || !g1.connected())
        throw GraphError("insert_on_edge: inserted graph must be connected with 2 externals");
    int p = g2.partner(h);
    if (p < 0) throw GraphError("insert_on_edge: not an internal edge");

    RawGraph raw = g2.to_raw();
    raw.internal.erase(std::remove_if(raw.internal.begin(), raw.internal.end(),
                                      [&](const auto& pr) {
                                          return (pr.first == g2.half_id(h) &&
                                                  pr.second == g2.half_id(p)) ||
                                                 (pr.first == g2.half_id(p) &&
                                                  pr.second == g2.half_id(h));
                                      }),
                       raw.internal.end());
    auto ext_ids = splice_copy(raw, g1, "i:");
    raw.internal.emplace_back(ext_ids[flip ? 1 : 0], g2.half_id(h));
    raw.internal.emplace_back(ext_ids[flip ? 0 : 1], g2.half_id(p));
    return FeynmanGraph::from_raw(raw);
}

std::map<GraphKey, long long> prelie_graph(const FeynmanGraph& g1, const FeynmanGraph& g2) {
    auto ex1 = g1.external_halves();
    if (!g1.connected() || g1.is_empty())
        throw GraphError("prelie_graph: left argument must be connected and nonempty");
    std::map<GraphKey, long long> out;
    if (ex1.size() == 3) {
        for (int v = 0; v < g2.vertex_count(); ++v) {
            std::vector<int> perm{0, 1, 2};
            do {
                ++out[canon_key(insert_at_vertex(g2, v, perm, g1))];
            } while (std::next_permutation(perm.begin(), perm.end()));
        }
    } else if (ex1.size() == 2) {
        for (int h = 0; h < g2.half_count(); ++h) {
            if (g2.partner(h) <= h) continue;
            ++out[canon_key(insert_on_edge(g2, h, false, g1))];
            ++out[canon_key(insert_on_edge(g2, h, true, g1))];
        }
    } else {
        throw GraphError("prelie_graph: left argument must have 2 or 3 externals");
    }
    return out;
}

// ---------------------------------------------------------------------------
// K0 and primitivity
// ---------------------------------------------------------------------------

bool is_primitive(const FeynmanGraph& g) {
    if (g.is_empty() || !g.connected()) return false;
    return subgraph_selections(g).size() == 2;  // only {} and V
}

std::map<GraphKey, long long> k0_graph(const FeynmanGraph& g) {
    std::map<GraphKey, long long> constituents;
    FeynmanGraph cur = g;
    while (!cur.is_empty()) {
        // minimal (fewest vertices, then least key) connected proper
        // nonempty subobject
        std::optional<Selection> pick;
        GraphKey pick_key;
        std::size_t pick_size = 0;
        for (const auto& sel : subobject_selections(cur)) {
            if (sel.size() != 1) continue;
            const Piece& piece = sel.front();
            if (static_cast<int>(piece.size()) == cur.vertex_count()) continue;
            GraphKey k = canon_key(induced_subgraph(cur, sel));
            if (!pick || piece.size() < pick_size ||
                (piece.size() == pick_size && k < pick_key)) {
                pick = sel;
                pick_key = k;
                pick_size = piece.size();
            }
        }
        if (!pick) {
            for (const auto& comp : cur.components())
                ++constituents[canon_key(induced_subgraph(cur, Selection{comp}))];
            break;
        }
        ++constituents[pick_key];
        cur = contract(cur, *pick);
    }
    return constituents;
}

// ---------------------------------------------------------------------------
// extension candidates
// ---------------------------------------------------------------------------

std::vector<GraphKey> key_components(const GraphKey& key) {
    auto g = graph_from_key(key);
    std::vector<GraphKey> out;
    for (const auto& comp : g.components())
        out.push_back(canon_key(induced_subgraph(g, Selection{comp})));
    std::sort(out.begin(), out.end());
    return out;
}

GraphKey key_direct_sum(const std::vector<GraphKey>& parts) {
    RawGraph raw;
    int idx = 0;
    for (const auto& part : parts) {
        auto g = graph_from_key(part);
        std::string prefix = "u" + std::to_string(idx++) + ":";
        auto sub = g.to_raw();
        for (auto& v : sub.vertices) v = prefix + v;
        for (auto& [h, v] : sub.half_edges) {
            h = prefix + h;
            v = prefix + v;
        }
        for (auto& [x, y] : sub.internal) {
            x = prefix + x;
            y = prefix + y;
        }
        raw.vertices.insert(raw.vertices.end(), sub.vertices.begin(), sub.vertices.end());
        raw.half_edges.insert(raw.half_edges.end(), sub.half_edges.begin(), sub.half_edges.end());
        raw.internal.insert(raw.internal.end(), sub.internal.begin(), sub.internal.end());
    }
    return canon_key(FeynmanGraph::from_raw(raw));
}

namespace {

// All ways to place one connected piece into a host class.
std::set<GraphKey> placements(const GraphKey& host, const FeynmanGraph& piece) {
    std::set<GraphKey> out;
    out.insert(key_direct_sum({host, canon_key(piece)}));
    auto g2 = graph_from_key(host);
    int ext = static_cast<int>(piece.external_halves().size());
    if (ext == 3) {
        for (int v = 0; v < g2.vertex_count(); ++v) {
            std::vector<int> perm{0, 1, 2};
            do {
                out.insert(canon_key(insert_at_vertex(g2, v, perm, piece)));
            } while (std::next_permutation(perm.begin(), perm.end()));
        }
    } else if (ext == 2) {
        for (int h = 0; h < g2.half_count(); ++h) {
            if (g2.partner(h) <= h) continue;
            out.insert(canon_key(insert_on_edge(g2, h, false, piece)));
            out.insert(canon_key(insert_on_edge(g2, h, true, piece)));
        }
    }
    return out;
}

std::mutex ext_mutex;
std::map<std::pair<GraphKey, GraphKey>, std::vector<GraphKey>> ext_cache;

}  // namespace

std::vector<GraphKey> graph_extension_candidates(const GraphKey& a, const GraphKey& b) {
    {
        std::lock_guard<std::mutex> lock(ext_mutex);
        auto it = ext_cache.find({a, b});
        if (it != ext_cache.end()) return it->second;
    }
    auto comps = key_components(a);
    // all component orders; later pieces may land inside earlier ones
    std::sort(comps.begin(), comps.end());
    std::set<GraphKey> result;
    do {
        std::set<GraphKey> cur{b};
        for (const auto& ck : comps) {
            std::set<GraphKey> next;
            auto piece = graph_from_key(ck);
            for (const auto& host : cur) {
                auto pl = placements(host, piece);
                next.insert(pl.begin(), pl.end());
            }
            cur = std::move(next);
        }
        result.insert(cur.begin(), cur.end());
    } while (std::next_permutation(comps.begin(), comps.end()));
    std::vector<GraphKey> out(result.begin(), result.end());
    std::lock_guard<std::mutex> lock(ext_mutex);
    ext_cache.emplace(std::make_pair(a, b), out);
    return out;
}

// ---------------------------------------------------------------------------
// builtins, corpus, JSON
// ---------------------------------------------------------------------------

namespace {

RawGraph make_raw(std::vector<std::string> vertices,
                  std::vector<std::pair<std::string, std::string>> halves,
                  std::vector<std::pair<std::string, std::string>> internal) {
    return RawGraph{std::move(vertices), std::move(halves), std::move(internal)};
}

std::map<std::string, RawGraph> build_builtins() {
    std::map<std::string, RawGraph> m;
    // B2: two vertices, two parallel internal edges, one external each
    m["B2"] =
        make_raw({"a", "b"},
                 {{"a1", "a"}, {"a2", "a"}, {"a3", "a"}, {"b1", "b"}, {"b2", "b"}, {"b3", "b"}},
                 {{"a2", "b2"}, {"a3", "b3"}});
    return m;
}

std::map<std::string, RawGraph> build_reducible() {
    std::map<std::string, RawGraph> m;
    // TP: self-loop at a, bridge a-b, two externals at b
    m["TP"] =
        make_raw({"a", "b"},
                 {{"a1", "a"}, {"a2", "a"}, {"a3", "a"}, {"b1", "b"}, {"b2", "b"}, {"b3", "b"}},
                 {{"a1", "a2"}, {"a3", "b1"}});
    // TS3: self-loop plus path, one external at b, two at c
    m["TS3"] = make_raw({"a", "b", "c"},
                        {{"a1", "a"}, {"a2", "a"}, {"a3", "a"},
                         {"b1", "b"}, {"b2", "b"}, {"b3", "b"},
                         {"c1", "c"}, {"c2", "c"}, {"c3", "c"}},
                        {{"a1", "a2"}, {"a3", "b1"}, {"b2", "c1"}});
    // B2L: double edge a=b plus leg b-c; one external at a, two at c
    m["B2L"] = make_raw({"a", "b", "c"},
                        {{"a1", "a"}, {"a2", "a"}, {"a3", "a"},
                         {"b1", "b"}, {"b2", "b"}, {"b3", "b"},
                         {"c1", "c"}, {"c2", "c"}, {"c3", "c"}},
                        {{"a2", "b1"}, {"a3", "b2"}, {"b3", "c1"}});
    // Xleg: bubble hanging off one external leg of the triangle
    m["Xleg"] = make_raw({"a", "b", "c", "d", "e"},
                         {{"a1", "a"}, {"a2", "a"}, {"a3", "a"},
                          {"b1", "b"}, {"b2", "b"}, {"b3", "b"},
                          {"c1", "c"}, {"c2", "c"}, {"c3", "c"},
                          {"d1", "d"}, {"d2", "d"}, {"d3", "d"},
                          {"e1", "e"}, {"e2", "e"}, {"e3", "e"}},
                         {{"a2", "b1"}, {"b3", "c2"}, {"c1", "a3"},
                          {"a1", "d1"}, {"d2", "e2"}, {"d3", "e3"}});
    // chain: two bubbles in series
    m["chain"] = make_raw({"a", "b", "c", "d"},
                          {{"a1", "a"}, {"a2", "a"}, {"a3", "a"},
                           {"b1", "b"}, {"b2", "b"}, {"b3", "b"},
                           {"c1", "c"}, {"c2", "c"}, {"c3", "c"},
                           {"d1", "d"}, {"d2", "d"}, {"d3", "d"}},
                          {{"a2", "b1"}, {"a3", "b2"}, {"b3", "c1"}, {"c2", "d1"}, {"c3", "d2"}});
    return m;
}

std::map<std::string, RawGraph> build_builtins_rest(std::map<std::string, RawGraph> m) {
    // T3: triangle, one external per vertex
    m["T3"] = make_raw({"a", "b", "c"},
                       {{"a1", "a"}, {"a2", "a"}, {"a3", "a"},
                        {"b1", "b"}, {"b2", "b"}, {"b3", "b"},
                        {"c1", "c"}, {"c2", "c"}, {"c3", "c"}},
                       {{"a2", "b1"}, {"b3", "c2"}, {"c1", "a3"}});
    // X: bubble inserted on one edge of the triangle
    m["X"] = make_raw({"a", "b", "c", "d", "e"},
                      {{"a1", "a"}, {"a2", "a"}, {"a3", "a"},
                       {"b1", "b"}, {"b2", "b"}, {"b3", "b"},
                       {"c1", "c"}, {"c2", "c"}, {"c3", "c"},
                       {"d1", "d"}, {"d2", "d"}, {"d3", "d"},
                       {"e1", "e"}, {"e2", "e"}, {"e3", "e"}},
                      {{"a2", "d1"}, {"b1", "e1"}, {"d2", "e2"}, {"d3", "e3"},
                       {"a3", "c1"}, {"b3", "c2"}});
    // Y: square v1 v3 v2 v4 with chord v3-v4, externals at v1 and v2
    m["Y"] = make_raw({"v1", "v2", "v3", "v4"},
                      {{"p1", "v1"}, {"p2", "v1"}, {"p3", "v1"},
                       {"q1", "v2"}, {"q2", "v2"}, {"q3", "v2"},
                       {"r1", "v3"}, {"r2", "v3"}, {"r3", "v3"},
                       {"s1", "v4"}, {"s2", "v4"}, {"s3", "v4"}},
                      {{"p2", "r1"}, {"p3", "s1"}, {"q2", "r2"}, {"q3", "s2"}, {"r3", "s3"}});
    // nested: bubble inserted on one edge of a bubble
    m["nested"] = make_raw({"a", "b", "c", "d"},
                           {{"a1", "a"}, {"a2", "a"}, {"a3", "a"},
                            {"b1", "b"}, {"b2", "b"}, {"b3", "b"},
                            {"c1", "c"}, {"c2", "c"}, {"c3", "c"},
                            {"d1", "d"}, {"d2", "d"}, {"d3", "d"}},
                           {{"a2", "b2"}, {"a3", "c1"}, {"b3", "d1"}, {"c2", "d2"}, {"c3", "d3"}});
    // Gamma_eg: the 6-vertex 2-point example graph (v5 = bottom, v6 = top)
    m["Gamma_eg"] = make_raw(
        {"v1", "v2", "v3", "v4", "v5", "v6"},
        {{"e1", "v1"}, {"e3a", "v1"}, {"e5a", "v1"},
         {"e2", "v2"}, {"e4a", "v2"}, {"e6a", "v2"},
         {"e7a", "v3"}, {"e9a", "v3"}, {"e10a", "v3"},
         {"e8a", "v4"}, {"e9b", "v4"}, {"e10b", "v4"},
         {"e5b", "v5"}, {"e6b", "v5"}, {"e7b", "v5"},
         {"e3b", "v6"}, {"e4b", "v6"}, {"e8b", "v6"}},
        {{"e3a", "e3b"}, {"e4a", "e4b"}, {"e5a", "e5b"}, {"e6a", "e6b"},
         {"e7a", "e7b"}, {"e8a", "e8b"}, {"e9a", "e9b"}, {"e10a", "e10b"}});
    // gamma_eg: the {v3, v4} subgraph of Gamma_eg as a standalone graph
    m["gamma_eg"] = make_raw({"v3", "v4"},
                             {{"e7a", "v3"}, {"e9a", "v3"}, {"e10a", "v3"},
                              {"e8a", "v4"}, {"e9b", "v4"}, {"e10b", "v4"}},
                             {{"e9a", "e9b"}, {"e10a", "e10b"}});
    return m;
}

}  // namespace

const std::map<std::string, RawGraph>& builtin_graphs() {
    static const std::map<std::string, RawGraph> m = build_builtins_rest(build_builtins());
    return m;
}

const std::map<std::string, RawGraph>& reducible_examples() {
    static const std::map<std::string, RawGraph> m = build_reducible();
    return m;
}

FeynmanGraph builtin_graph(const std::string& name) {
    auto it = builtin_graphs().find(name);
    if (it == builtin_graphs().end()) throw GraphError("unknown builtin graph '" + name + "'");
    return FeynmanGraph::from_raw(it->second);
}

namespace {

std::vector<GraphKey> build_corpus(int loops, const std::map<int, std::vector<GraphKey>>& cache) {
    std::vector<GraphKey> result;
    if (loops == 1) {
        for (const char* name : {"B2", "T3"})
            result.push_back(canon_key(builtin_graph(name)));
        std::sort(result.begin(), result.end());
    } else if (loops == 2) {
        std::set<GraphKey> keys;
        const auto& one = cache.at(1);
        for (const auto& a : one)
            for (const auto& b : one)
                for (const auto& [k, c] : prelie_graph(graph_from_key(a), graph_from_key(b))) {
                    (void)c;
                    keys.insert(k);
                }
        result.assign(keys.begin(), keys.end());
    } else if (loops == 3) {
        std::set<GraphKey> keys;
        const auto& one = cache.at(1);
        const auto& two = cache.at(2);
        for (const auto& a : one)
            for (const auto& b : two) {
                for (const auto& [k, c] : prelie_graph(graph_from_key(a), graph_from_key(b))) {
                    (void)c;
                    keys.insert(k);
                }
                for (const auto& [k, c] : prelie_graph(graph_from_key(b), graph_from_key(a))) {
                    (void)c;
                    keys.insert(k);
                }
            }
        result.assign(keys.begin(), keys.end());
    }
    return result;
}

}  // namespace

const std::vector<GraphKey>& connected_corpus(int loops) {
    static std::mutex m;
    static std::map<int, std::vector<GraphKey>> cache;
    std::lock_guard<std::mutex> lock(m);
    for (int l = 1; l <= loops; ++l)
        if (!cache.count(l)) cache.emplace(l, build_corpus(l, cache));
    if (!cache.count(loops)) cache.emplace(loops, std::vector<GraphKey>{});
    return cache.at(loops);
}

std::string raw_to_json(const RawGraph& raw) {
    nlohmann::json j;
    j["vertices"] = raw.vertices;
    j["half_edges"] = nlohmann::json::array();
    for (const auto& [h, v] : raw.half_edges)
        j["half_edges"].push_back({{"id", h}, {"vertex", v}});
    j["internal"] = nlohmann::json::array();
    for (const auto& [a, b] : raw.internal) j["internal"].push_back({a, b});
    return j.dump();
}

RawGraph raw_from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    RawGraph raw;
    for (const auto& v : j.at("vertices")) raw.vertices.push_back(v.get<std::string>());
    for (const auto& he : j.at("half_edges"))
        raw.half_edges.emplace_back(he.at("id").get<std::string>(),
                                    he.at("vertex").get<std::string>());
    for (const auto& pr : j.at("internal"))
        raw.internal.emplace_back(pr.at(0).get<std::string>(), pr.at(1).get<std::string>());
    return raw;
}

}  // namespace hallforest::graphs
