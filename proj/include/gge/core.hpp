// core.hpp -- finite directed graphs, typed graphs, morphisms and the
// categorical constructions (pushout, pushout complement) the engine builds on.
#ifndef GGE_CORE_HPP
#define GGE_CORE_HPP

#include <map>
#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

namespace gge {

/// Opaque element identifier. Node ids and edge ids live in disjoint
/// namespaces within one graph.
using Id = std::string;

struct EdgeEnds {
    Id source;
    Id target;
    auto operator<=>(const EdgeEnds&) const = default;
};

/// Finite directed multigraph. Immutable by convention: operations return
/// fresh values and never mutate their inputs.
struct Graph {
    std::set<Id> nodes;
    std::map<Id, EdgeEnds> edges;

    bool operator==(const Graph&) const = default;

    std::size_t size() const { return nodes.size() + edges.size(); }
    bool has_node(const Id& n) const { return nodes.count(n) != 0; }
    bool has_edge(const Id& e) const { return edges.count(e) != 0; }

    Graph& add_node(const Id& n) { nodes.insert(n); return *this; }
    Graph& add_edge(const Id& e, const Id& src, const Id& tgt) {
        edges.emplace(e, EdgeEnds{src, tgt});
        return *this;
    }
};

/// Raw component maps of a morphism (node map + edge map).
struct Mapping {
    std::map<Id, Id> nodes;
    std::map<Id, Id> edges;

    bool operator==(const Mapping&) const = default;
    auto operator<=>(const Mapping&) const = default;

    static Mapping identity(const Graph& g);
    /// Identity on the ids the two graphs share; used by the document
    /// parser where omitted maps default to inclusion-by-id.
    static Mapping shared_ids(const Graph& from, const Graph& to);
};

struct Morphism {
    Graph dom;
    Graph cod;
    Mapping map;
};

/// Graph with a typing morphism into a type graph. The typing mapping sends
/// carrier nodes/edges to type-graph nodes/edges.
struct TypedGraph {
    Graph graph;
    Graph type;
    Mapping typing;

    bool operator==(const TypedGraph&) const = default;

    const Id& node_type(const Id& n) const { return typing.nodes.at(n); }
    const Id& edge_type(const Id& e) const { return typing.edges.at(e); }
};

struct TypedMorphism {
    TypedGraph dom;
    TypedGraph cod;
    Mapping map;
};

struct Validation {
    std::vector<std::string> violations;
    bool ok() const { return violations.empty(); }
};

struct MorphismClass {
    bool injective = false;
    bool surjective = false;
    bool iso = false;
};

enum class MorphKind { Any, Mono, Iso };

Validation validate_graph(const Graph& g);
Validation validate_typed_graph(const TypedGraph& g);

/// Totality + homomorphism squares. Typed variant also checks the typing
/// triangle type_cod . f = type_dom.
Validation validate_morphism(const Graph& dom, const Graph& cod, const Mapping& m);
Validation validate_typed_morphism(const TypedGraph& dom, const TypedGraph& cod,
                                   const Mapping& m);

MorphismClass classify(const Graph& dom, const Graph& cod, const Mapping& m);

/// Componentwise composition; throws std::invalid_argument if f's codomain
/// does not equal g's domain graph.
Mapping compose(const Graph& a, const Graph& b, const Graph& c,
                const Mapping& f, const Mapping& g);
Mapping compose(const Mapping& f, const Mapping& g);

/// All typed morphisms a -> b of the requested kind, in canonical
/// (lexicographic on sorted id assignments) order. Requires a and b typed
/// over equal type graphs.
std::vector<Mapping> find_morphisms(const TypedGraph& a, const TypedGraph& b,
                                    MorphKind kind);

std::optional<Mapping> graph_isomorphic(const TypedGraph& a, const TypedGraph& b);

struct PushoutResult {
    TypedGraph object;
    Mapping from_b;  // B -> D
    Mapping from_c;  // C -> D
};

struct GraphPushoutResult {
    Graph object;
    Mapping from_b;
    Mapping from_c;
};

/// Pushout of B <-f- A -g-> C as the quotient of B+C by f(x) ~ g(x).
/// Quotient classes are named by their smallest constituent id, preferring
/// C-side ids, so DPO application keeps host ids stable.
GraphPushoutResult pushout(const Graph& a, const Graph& b, const Graph& c,
                           const Mapping& f, const Mapping& g);
PushoutResult pushout(const TypedGraph& a, const TypedGraph& b, const TypedGraph& c,
                      const Mapping& f, const Mapping& g);

struct GluingViolation {
    std::vector<Id> dangling;    // edges of G attached to a deleted node
    std::vector<Id> identified;  // deleted elements identified with others
    std::string to_string() const;
};

struct PushoutComplementResult {
    TypedGraph object;       // D, a subgraph of G keeping G's ids
    Mapping from_interface;  // K -> D
    Mapping to_host;         // D -> G (inclusion)
};

/// Pushout complement of K >-l-> L -m-> G: removes m(L \ l(K)) from G.
/// Fails with the gluing violation when the dangling or identification
/// condition does not hold.
std::variant<PushoutComplementResult, GluingViolation>
pushout_complement(const TypedGraph& interface_, const TypedGraph& lhs,
                   const TypedGraph& host, const Mapping& l, const Mapping& m);

enum class PushoutCheck { Yes, No, BoundExceeded };

/// Universal-property oracle: checks the square A -f-> B -b-> D, A -g-> C
/// -c-> D against every quotient cocone of B+C (exhaustive up to the element
/// bound). Independent of the union-find construction in pushout().
PushoutCheck is_pushout(const TypedGraph& a, const TypedGraph& b,
                        const TypedGraph& c, const TypedGraph& d,
                        const Mapping& f, const Mapping& g,
                        const Mapping& from_b, const Mapping& from_c,
                        std::size_t bound = 10);

}  // namespace gge

#endif
