#pragma once

#include <splitlab/instance.hpp>
#include <splitlab/verdict.hpp>

#include <memory>

namespace splitlab {

enum class Comparison { Equal, Less };

struct TwcstNode;

/// Two-way comparison search tree. Internal nodes test `query == key` or `query < key`
/// and continue in the yes- or no-branch; queries resolve at leaves. Immutable, shared subtrees.
class TwcstTree {
public:
    static TwcstTree leaf(KeyIndex key);
    /// Equality node whose yes-branch is Leaf(key).
    static TwcstTree equal(KeyIndex key, TwcstTree no);
    /// Less-than node; queries below `key` take the yes-branch.
    static TwcstTree less(KeyIndex key, TwcstTree yes, TwcstTree no);
    /// Unchecked constructor for parsers; the result may violate the Eq-node invariant.
    static TwcstTree internal(Comparison op, KeyIndex key, TwcstTree yes, TwcstTree no);

    bool is_leaf() const;
    KeyIndex key() const;
    Comparison op() const;
    const TwcstTree& yes() const;
    const TwcstTree& no() const;

    KeySet leaf_keys() const;
    int leaf_count() const;
    int internal_count() const;

    friend bool operator==(const TwcstTree& a, const TwcstTree& b);

private:
    explicit TwcstTree(std::shared_ptr<const TwcstNode> n) : node_(std::move(n)) {}
    std::shared_ptr<const TwcstNode> node_;
};

struct TwcstNode {
    bool leaf;
    Comparison op;
    KeyIndex key;
    std::unique_ptr<const TwcstTree> yes;
    std::unique_ptr<const TwcstTree> no;
};

/// Sum over leaves of weight(key) * (internal nodes on the root-to-leaf path).
Cost twcst_cost(const TwcstTree& tree, const Instance& inst);

/// Total weight of the leaf keys.
Weight twcst_weight(const TwcstTree& tree, const Instance& inst);

/// Valid iff the leaf keys are exactly I \ H, each once, every search for v in I \ H reaches
/// the leaf labeled v, and every Eq node's yes-branch is the matching leaf.
Verdict twcst_validate(const TwcstTree& tree, Interval iv, HoleSet holes, const Instance& inst);

/// Depth (number of comparisons) of the leaf labeled `key`, or -1 if absent.
int twcst_leaf_depth(const TwcstTree& tree, KeyIndex key);

} // namespace splitlab
