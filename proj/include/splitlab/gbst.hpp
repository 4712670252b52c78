#pragma once

#include <splitlab/instance.hpp>
#include <splitlab/verdict.hpp>

#include <memory>
#include <optional>
#include <span>

namespace splitlab {

struct GbstNode;

/// Generalized binary split tree. Each node has an equality-test key and a split key;
/// a search halts on an equality match, otherwise goes left iff the query is below the split key.
/// Immutable; subtrees are shared between copies. The default value is the empty tree.
class GbstTree {
public:
    GbstTree() = default;

    static GbstTree leaf(KeyIndex eq_key);
    /// `split_key` may be absent only when both children are empty. A split key of n+1 means
    /// "above every key", which routes every remaining query left.
    static GbstTree node(KeyIndex eq_key, std::optional<KeyIndex> split_key, GbstTree left, GbstTree right);

    bool empty() const { return root_ == nullptr; }
    const GbstNode& root() const;

    KeyIndex eq_key() const;
    std::optional<KeyIndex> split_key() const;
    const GbstTree& left() const;
    const GbstTree& right() const;

    int node_count() const;
    /// Set of equality-test keys; a repeated key is counted once.
    KeySet eq_keys() const;
    int height() const;

    friend bool operator==(const GbstTree& a, const GbstTree& b);

private:
    explicit GbstTree(std::shared_ptr<const GbstNode> root) : root_(std::move(root)) {}
    std::shared_ptr<const GbstNode> root_;
};

struct GbstNode {
    KeyIndex eq_key;
    std::optional<KeyIndex> split_key;
    GbstTree left;
    GbstTree right;
};

/// Sum over nodes of weight(eq_key) * (depth + 1). Throws std::out_of_range on a bad key.
Cost gbst_cost(const GbstTree& tree, const Instance& inst);

/// Total weight of the equality-test keys.
Weight gbst_weight(const GbstTree& tree, const Instance& inst);

/// Valid iff the equality keys are exactly I \ H and every search for v in I \ H halts at v's node.
Verdict gbst_validate(const GbstTree& tree, Interval iv, HoleSet holes, const Instance& inst);

/// For every node M, equality keys in M's left subtree are below those in its right subtree.
Verdict check_order_property(const GbstTree& tree);

enum class Side { Left, Right };

/// Copy of `tree` with the subtree at `path` replaced. The last step may land on an empty child;
/// every earlier step must pass through an existing node. Throws std::out_of_range otherwise.
GbstTree replace_subtree(const GbstTree& tree, std::span<const Side> path, GbstTree replacement);

} // namespace splitlab
