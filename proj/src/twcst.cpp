#include <splitlab/twcst.hpp>

#include <map>

namespace splitlab {

TwcstTree TwcstTree::leaf(KeyIndex key)
{
    return TwcstTree(std::make_shared<const TwcstNode>(TwcstNode{true, Comparison::Equal, key, nullptr, nullptr}));
}

TwcstTree TwcstTree::equal(KeyIndex key, TwcstTree no)
{
    return internal(Comparison::Equal, key, leaf(key), std::move(no));
}

TwcstTree TwcstTree::less(KeyIndex key, TwcstTree yes, TwcstTree no)
{
    return internal(Comparison::Less, key, std::move(yes), std::move(no));
}

TwcstTree TwcstTree::internal(Comparison op, KeyIndex key, TwcstTree yes, TwcstTree no)
{
    return TwcstTree(std::make_shared<const TwcstNode>(TwcstNode{false, op, key,
                                                                 std::make_unique<const TwcstTree>(std::move(yes)),
                                                                 std::make_unique<const TwcstTree>(std::move(no))}));
}

bool TwcstTree::is_leaf() const { return node_->leaf; }
KeyIndex TwcstTree::key() const { return node_->key; }

Comparison TwcstTree::op() const
{
    if (is_leaf())
        throw std::logic_error("leaf has no comparison");
    return node_->op;
}

const TwcstTree& TwcstTree::yes() const
{
    if (is_leaf())
        throw std::logic_error("leaf has no children");
    return *node_->yes;
}

const TwcstTree& TwcstTree::no() const
{
    if (is_leaf())
        throw std::logic_error("leaf has no children");
    return *node_->no;
}

KeySet TwcstTree::leaf_keys() const
{
    if (is_leaf())
        return KeySet{}.with(key());
    return yes().leaf_keys() | no().leaf_keys();
}

int TwcstTree::leaf_count() const
{
    return is_leaf() ? 1 : yes().leaf_count() + no().leaf_count();
}

int TwcstTree::internal_count() const
{
    return is_leaf() ? 0 : 1 + yes().internal_count() + no().internal_count();
}

bool operator==(const TwcstTree& a, const TwcstTree& b)
{
    if (a.node_ == b.node_)
        return true;
    if (a.is_leaf() != b.is_leaf() || a.key() != b.key())
        return false;
    if (a.is_leaf())
        return true;
    return a.op() == b.op() && a.yes() == b.yes() && a.no() == b.no();
}

namespace {

Cost cost_at(const TwcstTree& t, const Instance& inst, Cost depth)
{
    if (t.is_leaf())
        return inst.weight(t.key()) * depth;
    return cost_at(t.yes(), inst, depth + 1) + cost_at(t.no(), inst, depth + 1);
}

std::string name_of(const Instance& inst, KeyIndex k)
{
    return inst.valid_key(k) ? inst.label(k) : "#" + std::to_string(k);
}

void collect(const TwcstTree& t, const Instance& inst, std::map<KeyIndex, int>& seen, Verdict& v)
{
    if (t.is_leaf()) {
        ++seen[t.key()];
        if (!inst.valid_key(t.key()))
            v.violations.push_back("leaf key " + name_of(inst, t.key()) + " out of range");
        return;
    }
    if (t.key() < 1 || t.key() > inst.size())
        v.violations.push_back("comparison key " + name_of(inst, t.key()) + " out of range");
    if (t.op() == Comparison::Equal && !(t.yes().is_leaf() && t.yes().key() == t.key()))
        v.violations.push_back("equality node " + name_of(inst, t.key()) + " has a yes-branch other than its own leaf");
    collect(t.yes(), inst, seen, v);
    collect(t.no(), inst, seen, v);
}

KeyIndex search(const TwcstTree& t, KeyIndex q)
{
    const TwcstTree* cur = &t;
    while (!cur->is_leaf()) {
        const bool yes = cur->op() == Comparison::Equal ? q == cur->key() : q < cur->key();
        cur = yes ? &cur->yes() : &cur->no();
    }
    return cur->key();
}

} // namespace

Cost twcst_cost(const TwcstTree& tree, const Instance& inst)
{
    return cost_at(tree, inst, 0);
}

Weight twcst_weight(const TwcstTree& tree, const Instance& inst)
{
    if (tree.is_leaf())
        return inst.weight(tree.key());
    return twcst_weight(tree.yes(), inst) + twcst_weight(tree.no(), inst);
}

Verdict twcst_validate(const TwcstTree& tree, Interval iv, HoleSet holes, const Instance& inst)
{
    Verdict v;
    if (!holes.subset_of(iv.keys()))
        v.violations.push_back("hole set not contained in interval " + to_string(iv));

    std::map<KeyIndex, int> seen;
    collect(tree, inst, seen, v);

    const KeySet expected = iv.keys() - holes;
    for (const auto& [k, count] : seen) {
        if (count > 1)
            v.violations.push_back("leaf " + name_of(inst, k) + " appears " + std::to_string(count) + " times");
        if (!expected.contains(k))
            v.violations.push_back("leaf " + name_of(inst, k) + " not in I \\ H");
    }
    for (KeyIndex k : expected.members()) {
        if (!seen.contains(k)) {
            v.violations.push_back("query " + name_of(inst, k) + " has no leaf");
            continue;
        }
        const KeyIndex hit = search(tree, k);
        if (hit != k)
            v.violations.push_back("search for " + name_of(inst, k) + " reaches leaf " + name_of(inst, hit));
    }
    return v;
}

int twcst_leaf_depth(const TwcstTree& tree, KeyIndex key)
{
    if (tree.is_leaf())
        return tree.key() == key ? 0 : -1;
    for (const TwcstTree* child : {&tree.yes(), &tree.no()}) {
        const int d = twcst_leaf_depth(*child, key);
        if (d >= 0)
            return d + 1;
    }
    return -1;
}

} // namespace splitlab
