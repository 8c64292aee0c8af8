// Auslander-Reiten quivers as plain graphs: nodes, irreducible-map arrows and
// the translation. The translation is drawn from M to DTr(M), the two ends of
// the almost split sequence starting at M.
#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace arcoalg::ar {

struct Node {
    std::string id;
    std::string label;
    int dim = 0;
    bool injective = false;
    bool incomplete = false;  // some AR neighbour lies outside the window
    int row = 0;              // layout hints for the ASCII grid
    int col = 0;
    int component = 0;
    bool operator==(const Node&) const = default;
};

struct Edge {
    std::string source;
    std::string target;
    bool operator==(const Edge&) const = default;
    auto operator<=>(const Edge&) const = default;
};

class ARQuiver {
public:
    /// Ignores a node whose id is already present.
    void add_node(Node n);
    /// Ignores duplicates and arrows with an unknown endpoint.
    void add_arrow(const std::string& source, const std::string& target);
    void set_translation(const std::string& node, const std::string& translate);

    const std::vector<Node>& nodes() const { return nodes_; }
    const std::vector<Edge>& arrows() const { return arrows_; }
    /// Pairs (M, DTr M) in insertion order.
    const std::vector<Edge>& translation() const { return translation_; }

    bool contains(const std::string& id) const { return index_.contains(id); }
    const Node& node(const std::string& id) const { return nodes_[index_.at(id)]; }
    std::optional<std::string> translate(const std::string& id) const;
    std::vector<std::string> targets_of(const std::string& id) const;
    std::vector<std::string> sources_of(const std::string& id) const;

    bool operator==(const ARQuiver& o) const {
        return nodes_ == o.nodes_ && arrows_ == o.arrows_ && translation_ == o.translation_;
    }

private:
    std::vector<Node> nodes_;
    std::vector<Edge> arrows_;
    std::vector<Edge> translation_;
    std::map<std::string, std::size_t> index_;
};

/// Deletes injective nodes with their arrows and translation pairs.
ARQuiver stable(const ARQuiver& q);

struct MeshViolation {
    std::string node;
    std::string translate;
    std::vector<std::string> out_of_node;       // sorted
    std::vector<std::string> into_translate;    // sorted
};

/// For each M with DTr M, both complete: targets of M must equal sources of DTr M.
std::vector<MeshViolation> mesh_lint(const ARQuiver& q);

std::string to_dot(const ARQuiver& q, const std::string& name = "ar");
std::string to_json(const ARQuiver& q);
/// Diagonal grid from the row/col hints, one block per component.
std::string to_ascii(const ARQuiver& q);

}  // namespace arcoalg::ar
