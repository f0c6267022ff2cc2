#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include "detnet/errors.hpp"

namespace detnet {

/// Address of a node in a taxonomy tree: the sequence of child indices
/// walked from the root. The empty path is the root itself.
struct TaxonomyPath {
    std::vector<int> indices;

    TaxonomyPath() = default;
    TaxonomyPath(std::initializer_list<int> ix) : indices(ix) {}
    explicit TaxonomyPath(std::vector<int> ix) : indices(std::move(ix)) {}

    std::size_t length() const { return indices.size(); }
    bool is_root() const { return indices.empty(); }

    TaxonomyPath child(int index) const {
        TaxonomyPath p(*this);
        p.indices.push_back(index);
        return p;
    }

    /// True iff this path is a strict prefix of `other`.
    bool is_strict_prefix_of(const TaxonomyPath& other) const {
        if (indices.size() >= other.indices.size()) return false;
        for (std::size_t i = 0; i < indices.size(); ++i)
            if (indices[i] != other.indices[i]) return false;
        return true;
    }

    bool operator==(const TaxonomyPath& other) const { return indices == other.indices; }
    bool operator!=(const TaxonomyPath& other) const { return !(*this == other); }
    bool operator<(const TaxonomyPath& other) const { return indices < other.indices; }

    std::string to_string() const {
        std::string s = "(";
        for (std::size_t i = 0; i < indices.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(indices[i]);
        }
        s += ")";
        return s;
    }
};

/// Rooted tree of incident categories. Nodes are addressed by TaxonomyPath;
/// child indices are zero-based and sequential in insertion order.
/// Immutable once built; share freely across threads after construction.
class TaxonomyTree {
public:
    struct Node {
        std::string label;
        std::vector<Node> children;
    };

    explicit TaxonomyTree(std::string root_label = "ROOT") { root_.label = std::move(root_label); }

    const Node& root() const { return root_; }

    /// Appends a child under `parent` and returns the new node's path.
    TaxonomyPath add_node(const TaxonomyPath& parent, const std::string& label) {
        Node* p = find_mutable(parent);
        if (!p)
            throw UnknownNodeError("taxonomy: unknown parent path " + parent.to_string());
        p->children.push_back(Node{label, {}});
        return parent.child(static_cast<int>(p->children.size()) - 1);
    }

    bool contains(const TaxonomyPath& path) const { return find(path) != nullptr; }

    const Node* find(const TaxonomyPath& path) const {
        const Node* cur = &root_;
        for (int ix : path.indices) {
            if (ix < 0 || static_cast<std::size_t>(ix) >= cur->children.size()) return nullptr;
            cur = &cur->children[static_cast<std::size_t>(ix)];
        }
        return cur;
    }

    std::string label_at(const TaxonomyPath& path) const {
        const Node* n = find(path);
        if (!n) throw UnknownNodeError("taxonomy: unresolved path " + path.to_string());
        return n->label;
    }

    /// Length of the longest root-to-node path.
    int depth() const { return depth_of(root_); }

    std::size_t node_count() const { return count_of(root_); }

    /// Depth-first enumeration of (path, label) over all nodes, root first.
    template <typename F>
    void for_each(F&& fn) const {
        TaxonomyPath p;
        walk(root_, p, fn);
    }

private:
    Node root_;

    Node* find_mutable(const TaxonomyPath& path) {
        Node* cur = &root_;
        for (int ix : path.indices) {
            if (ix < 0 || static_cast<std::size_t>(ix) >= cur->children.size()) return nullptr;
            cur = &cur->children[static_cast<std::size_t>(ix)];
        }
        return cur;
    }

    static int depth_of(const Node& n) {
        int d = 0;
        for (const Node& c : n.children) d = std::max(d, 1 + depth_of(c));
        return d;
    }

    static std::size_t count_of(const Node& n) {
        std::size_t c = 1;
        for (const Node& ch : n.children) c += count_of(ch);
        return c;
    }

    template <typename F>
    static void walk(const Node& n, TaxonomyPath& path, F& fn) {
        fn(static_cast<const TaxonomyPath&>(path), n.label);
        for (std::size_t i = 0; i < n.children.size(); ++i) {
            path.indices.push_back(static_cast<int>(i));
            walk(n.children[i], path, fn);
            path.indices.pop_back();
        }
    }
};

/// True iff `m` is a strict ancestor of `n`. Both paths must resolve.
inline bool is_ancestor(const TaxonomyTree& tree, const TaxonomyPath& m, const TaxonomyPath& n) {
    if (!tree.contains(m)) throw UnknownNodeError("is_ancestor: unresolved path " + m.to_string());
    if (!tree.contains(n)) throw UnknownNodeError("is_ancestor: unresolved path " + n.to_string());
    return m.is_strict_prefix_of(n);
}

/// The bundled simulation taxonomy: ROOT plus nodes A-J, depth 4.
///
///   ROOT -> A -> C -> F -> I
///                C -> G
///           A -> D -> H -> J
///        -> B -> E
inline TaxonomyTree default_taxonomy() {
    TaxonomyTree t("ROOT");
    TaxonomyPath a = t.add_node({}, "A");
    TaxonomyPath b = t.add_node({}, "B");
    TaxonomyPath c = t.add_node(a, "C");
    TaxonomyPath d = t.add_node(a, "D");
    t.add_node(b, "E");
    TaxonomyPath f = t.add_node(c, "F");
    t.add_node(c, "G");
    TaxonomyPath h = t.add_node(d, "H");
    t.add_node(f, "I");
    t.add_node(h, "J");
    return t;
}

}  // namespace detnet
