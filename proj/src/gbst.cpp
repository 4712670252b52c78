#include <splitlab/gbst.hpp>

#include <algorithm>
#include <map>

namespace splitlab {

GbstTree GbstTree::leaf(KeyIndex eq_key)
{
    return node(eq_key, std::nullopt, {}, {});
}

GbstTree GbstTree::node(KeyIndex eq_key, std::optional<KeyIndex> split_key, GbstTree left, GbstTree right)
{
    return GbstTree(std::make_shared<const GbstNode>(GbstNode{eq_key, split_key, std::move(left), std::move(right)}));
}

const GbstNode& GbstTree::root() const
{
    if (!root_)
        throw std::logic_error("empty GBST has no root");
    return *root_;
}

KeyIndex GbstTree::eq_key() const { return root().eq_key; }
std::optional<KeyIndex> GbstTree::split_key() const { return root().split_key; }
const GbstTree& GbstTree::left() const { return root().left; }
const GbstTree& GbstTree::right() const { return root().right; }

int GbstTree::node_count() const
{
    return empty() ? 0 : 1 + root_->left.node_count() + root_->right.node_count();
}

KeySet GbstTree::eq_keys() const
{
    if (empty())
        return {};
    return root_->left.eq_keys().with(root_->eq_key) | root_->right.eq_keys();
}

int GbstTree::height() const
{
    return empty() ? 0 : 1 + std::max(root_->left.height(), root_->right.height());
}

bool operator==(const GbstTree& a, const GbstTree& b)
{
    if (a.root_ == b.root_)
        return true;
    if (a.empty() || b.empty())
        return false;
    return a.root_->eq_key == b.root_->eq_key && a.root_->split_key == b.root_->split_key
        && a.root_->left == b.root_->left && a.root_->right == b.root_->right;
}

namespace {

Cost cost_at(const GbstTree& t, const Instance& inst, Cost depth)
{
    if (t.empty())
        return 0;
    return inst.weight(t.eq_key()) * (depth + 1) + cost_at(t.left(), inst, depth + 1)
        + cost_at(t.right(), inst, depth + 1);
}

std::string name_of(const Instance& inst, KeyIndex k)
{
    return inst.valid_key(k) ? inst.label(k) : "#" + std::to_string(k);
}

void collect(const GbstTree& t, const Instance& inst, std::map<KeyIndex, int>& seen, Verdict& v)
{
    if (t.empty())
        return;
    const auto& n = t.root();
    ++seen[n.eq_key];
    if (!inst.valid_key(n.eq_key))
        v.violations.push_back("equality key " + name_of(inst, n.eq_key) + " out of range");
    const bool has_children = !n.left.empty() || !n.right.empty();
    if (has_children && !n.split_key)
        v.violations.push_back("node " + name_of(inst, n.eq_key) + " has children but no split key");
    if (n.split_key && (*n.split_key < 1 || *n.split_key > inst.size() + 1))
        v.violations.push_back("split key at node " + name_of(inst, n.eq_key) + " out of range");
    collect(n.left, inst, seen, v);
    collect(n.right, inst, seen, v);
}

// Node where a search for `q` halts, or nullptr if it falls off the tree.
const GbstNode* search(const GbstTree& t, KeyIndex q)
{
    const GbstTree* cur = &t;
    while (!cur->empty()) {
        const auto& n = cur->root();
        if (n.eq_key == q)
            return &n;
        if (!n.split_key)
            return nullptr;
        cur = q < *n.split_key ? &n.left : &n.right;
    }
    return nullptr;
}

struct KeyRange {
    KeyIndex lo;
    KeyIndex hi;
};

std::optional<KeyRange> order_walk(const GbstTree& t, Verdict& v)
{
    if (t.empty())
        return std::nullopt;
    const auto& n = t.root();
    const auto l = order_walk(n.left, v);
    const auto r = order_walk(n.right, v);
    if (l && r && l->hi >= r->lo)
        v.violations.push_back("node with key #" + std::to_string(n.eq_key) + ": left subtree key #"
                               + std::to_string(l->hi) + " not below right subtree key #" + std::to_string(r->lo));
    KeyRange out{n.eq_key, n.eq_key};
    for (const auto& side : {l, r}) {
        if (side) {
            out.lo = std::min(out.lo, side->lo);
            out.hi = std::max(out.hi, side->hi);
        }
    }
    return out;
}

GbstTree replace_at(const GbstTree& t, std::span<const Side> path, GbstTree replacement)
{
    if (path.empty())
        return replacement;
    if (t.empty())
        throw std::out_of_range("subtree path passes through an empty position");
    const auto& n = t.root();
    const auto rest = path.subspan(1);
    if (path.front() == Side::Left)
        return GbstTree::node(n.eq_key, n.split_key, replace_at(n.left, rest, std::move(replacement)), n.right);
    return GbstTree::node(n.eq_key, n.split_key, n.left, replace_at(n.right, rest, std::move(replacement)));
}

} // namespace

Cost gbst_cost(const GbstTree& tree, const Instance& inst)
{
    return cost_at(tree, inst, 0);
}

Weight gbst_weight(const GbstTree& tree, const Instance& inst)
{
    if (tree.empty())
        return 0;
    return inst.weight(tree.eq_key()) + gbst_weight(tree.left(), inst) + gbst_weight(tree.right(), inst);
}

Verdict gbst_validate(const GbstTree& tree, Interval iv, HoleSet holes, const Instance& inst)
{
    Verdict v;
    if (!holes.subset_of(iv.keys()))
        v.violations.push_back("hole set not contained in interval " + to_string(iv));

    std::map<KeyIndex, int> seen;
    collect(tree, inst, seen, v);

    const KeySet expected = iv.keys() - holes;
    for (const auto& [k, count] : seen) {
        if (count > 1)
            v.violations.push_back("equality key " + name_of(inst, k) + " used " + std::to_string(count) + " times");
        if (!expected.contains(k))
            v.violations.push_back("equality key " + name_of(inst, k) + " not in I \\ H");
    }
    for (KeyIndex k : expected.members()) {
        if (!seen.contains(k)) {
            v.violations.push_back("key " + name_of(inst, k) + " missing from tree");
            continue;
        }
        const GbstNode* hit = search(tree, k);
        if (hit == nullptr)
            v.violations.push_back("search for " + name_of(inst, k) + " falls off the tree");
        else if (hit->eq_key != k)
            v.violations.push_back("search for " + name_of(inst, k) + " halts at " + name_of(inst, hit->eq_key));
    }
    return v;
}

Verdict check_order_property(const GbstTree& tree)
{
    Verdict v;
    order_walk(tree, v);
    return v;
}

GbstTree replace_subtree(const GbstTree& tree, std::span<const Side> path, GbstTree replacement)
{
    return replace_at(tree, path, std::move(replacement));
}

} // namespace splitlab
