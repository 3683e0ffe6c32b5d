#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace hallforest::graphs {

/// Raw half-edge structure as it appears in the JSON document:
///   {"vertices":[id...], "half_edges":[{"id":h,"vertex":v}...],
///    "internal":[[h1,h2]...]}
/// External half-edges are derived (those in no internal pair).
struct RawGraph {
    std::vector<std::string> vertices;
    std::vector<std::pair<std::string, std::string>> half_edges;  // (half id, vertex id)
    std::vector<std::pair<std::string, std::string>> internal;
};

struct Violation {
    std::string rule;   // e.g. "non-trivalent vertex"
    std::string where;  // offending vertex / half-edge id
};

/// All rule violations of a raw graph: structural (unknown ids, duplicate
/// ids, half-edge in two pairs, self-paired half) and Feynman (non-trivalent
/// vertex, wrong external count, loop-free component).
std::vector<Violation> validate_raw(const RawGraph& raw);

struct GraphError : std::runtime_error {
    explicit GraphError(const std::string& msg) : std::runtime_error(msg) {}
};

/// A validated phi^3 Feynman graph: every vertex trivalent, every connected
/// component with 2 or 3 external edges and at least one loop. Immutable.
class FeynmanGraph {
public:
    /// Throws GraphError listing violations unless raw is a valid Feynman
    /// graph (the empty graph is allowed).
    static FeynmanGraph from_raw(const RawGraph& raw);
    static FeynmanGraph empty();

    int vertex_count() const { return static_cast<int>(vertex_ids_.size()); }
    int half_count() const { return static_cast<int>(half_ids_.size()); }
    const std::string& vertex_id(int v) const { return vertex_ids_[v]; }
    const std::string& half_id(int h) const { return half_ids_[h]; }
    int half_vertex(int h) const { return half_vertex_[h]; }
    int partner(int h) const { return partner_[h]; }  // -1 = external
    const std::vector<int>& halves_at(int v) const { return at_vertex_[v]; }
    int vertex_index(const std::string& id) const;  // -1 if absent
    int half_index(const std::string& id) const;

    bool is_empty() const { return vertex_ids_.empty(); }
    std::vector<int> external_halves() const;
    int internal_count() const;

    /// Connected components as sorted vertex-index lists.
    std::vector<std::vector<int>> components() const;
    /// First Betti number of the whole graph (sum over components).
    int loop_count() const;
    bool connected() const { return components().size() <= 1; }

    RawGraph to_raw() const;

private:
    std::vector<std::string> vertex_ids_;
    std::vector<std::string> half_ids_;
    std::vector<int> half_vertex_;
    std::vector<int> partner_;
    std::vector<std::vector<int>> at_vertex_;
    std::map<std::string, int> vertex_index_, half_index_;

    friend class GraphBuilder;
};

/// Canonical isomorphism-class key. Opaque ASCII, stable, and decodable by
/// graph_from_key. The empty graph's key is "{}".
using GraphKey = std::string;

GraphKey canon_key(const FeynmanGraph& g);
bool is_graph_key(const std::string& key);
/// A concrete representative of the class (deterministic ids).
FeynmanGraph graph_from_key(const GraphKey& key);

/// Optional persistence of the canonical-form cache (one
/// "fingerprint<TAB>key" line per entry); entries are content-addressed,
/// so merging loads is idempotent.
void canon_cache_load(std::istream& in);
void canon_cache_save(std::ostream& out);

/// A subgraph selection: a family of pairwise vertex-disjoint connected
/// pieces. Each piece (sorted vertex indices) carries its full induced
/// pairing and is itself a valid Feynman graph; half-edge pairs running
/// between two pieces belong to the ambient graph, not to the subgraph.
/// This realizes "disjoint unions of 1PI subgraphs": adjacent pieces stay
/// separate components of the subgraph.
using Piece = std::vector<int>;
using Selection = std::vector<Piece>;

/// Wraps a vertex subset into a selection, one piece per connected part of
/// the induced structure. Does not validate.
Selection selection_from_vertices(const FeynmanGraph& g, const std::vector<int>& vertices);

/// All connected vertex subsets whose induced graph stands alone as a valid
/// Feynman graph.
std::vector<Piece> subgraph_atoms(const FeynmanGraph& g);

/// All valid selections (families of disjoint atoms), including the empty
/// and full ones, in deterministic order.
std::vector<Selection> subgraph_selections(const FeynmanGraph& g);

bool selection_valid(const FeynmanGraph& g, const Selection& sel);

/// The subgraph itself: the disjoint union of the pieces (pairs between
/// pieces are dropped, their halves becoming external).
FeynmanGraph induced_subgraph(const FeynmanGraph& g, const Selection& sel);

/// Whether the quotient g/gamma exists and is a valid Feynman graph.
bool quotient_defined(const FeynmanGraph& g, const Selection& sel);

/// Contraction g / gamma. Per piece: 3 externals -> collapse to a new
/// trivalent vertex (or drop a whole 3-point component of g); 2 externals ->
/// remove it and join the partners of its externals (which may already have
/// been re-paired by earlier pieces). Throws GraphError if undefined.
FeynmanGraph contract(const FeynmanGraph& g, const Selection& sel);

/// Subobject selections: valid selections with a defined, valid quotient.
std::vector<Selection> subobject_selections(const FeynmanGraph& g);

struct GraphSplit {
    GraphKey sub;
    GraphKey quot;
    long long count;
};
/// Grouped (sub, quot, multiplicity) over all subobject selections.
std::vector<GraphSplit> graph_splits(const FeynmanGraph& g);

/// #{gamma subobject of m : gamma ≅ a, m/gamma ≅ b}.
long long graph_subobject_count(const GraphKey& a, const GraphKey& b, const GraphKey& m);

/// Insertion of a 3-external connected g1 at vertex v of g2. `leg_order`
/// gives the bijection Ex(g1) -> H(v): the i-th external half of g1 (in
/// half-index order) is glued to halves_at(v)[leg_order[i]].
FeynmanGraph insert_at_vertex(const FeynmanGraph& g2, int v, const std::vector<int>& leg_order,
                              const FeynmanGraph& g1);

/// Insertion of a 2-external connected g1 on the internal edge {h, partner(h)}
/// of g2. flip = false glues the first external of g1 to h.
FeynmanGraph insert_on_edge(const FeynmanGraph& g2, int h, bool flip, const FeynmanGraph& g1);

/// The pre-Lie insertion product g1 ⋆ g2: sum over all insertion data
/// (vertex + bijection for 3-external g1, internal edge + bijection for
/// 2-external g1) of the resulting class, with multiplicities.
std::map<GraphKey, long long> prelie_graph(const FeynmanGraph& g1, const FeynmanGraph& g2);

/// True iff g is connected and has no proper nonempty subgraph.
bool is_primitive(const FeynmanGraph& g);

/// K0 class: multiset of primitive constituent keys, computed by repeatedly
/// contracting the minimal (fewest vertices, then lexicographically least
/// key) connected proper nonempty subobject.
std::map<GraphKey, long long> k0_graph(const FeynmanGraph& g);

/// Connected-component classes of a key (multiset, sorted).
std::vector<GraphKey> key_components(const GraphKey& key);

/// Disjoint union of classes.
GraphKey key_direct_sum(const std::vector<GraphKey>& parts);

/// Every M with a subobject in class a and quotient in class b arises by
/// folding a's components into b: disjoint union, insertion at a vertex
/// (3-external component) or on an internal edge (2-external component),
/// over all component orders. Returns that candidate set.
std::vector<GraphKey> graph_extension_candidates(const GraphKey& a, const GraphKey& b);

/// Named example graphs (B2, T3, X, Y, nested, Gamma_eg, gamma_eg).
const std::map<std::string, RawGraph>& builtin_graphs();
FeynmanGraph builtin_graph(const std::string& name);

/// Named one-particle-reducible structures (TP, TS3, B2L, Xleg, chain);
/// these fail validation and serve as rejection fixtures.
const std::map<std::string, RawGraph>& reducible_examples();

/// Connected corpus classes with the given loop count (exhaustive for 1
/// loop; insertion-closure plus named seeds for 2 and 3).
const std::vector<GraphKey>& connected_corpus(int loops);

/// JSON round-trip per the document schema.
std::string raw_to_json(const RawGraph& raw);
RawGraph raw_from_json(const std::string& text);

}  // namespace hallforest::graphs
