#pragma once

#include <splitlab/gbst.hpp>
#include <splitlab/twcst.hpp>

#include <string>
#include <string_view>
#include <variant>

namespace splitlab {

/// Tree files are parenthesized preorder text, `#` starting a comment, keys written as labels.
///
///   gbst (EQ SPLIT LEFT RIGHT)      SPLIT is a label, `*` for "above every key", or `-` for none;
///                                   LEFT/RIGHT are subtrees or `-` for empty. A bare label is a leaf.
///   twcst (< K YES NO)              less-than node
///         (= K NO)                  equality node; the yes-branch is the leaf K
///         (= K YES NO)              equality node with an explicit yes-branch
///         K                         leaf
///
/// Throws ParseError with the offending line.
using AnyTree = std::variant<GbstTree, TwcstTree>;
AnyTree parse_tree(std::string_view text, const Instance& inst);

std::string format_tree(const GbstTree& tree, const Instance& inst);
std::string format_tree(const TwcstTree& tree, const Instance& inst);

} // namespace splitlab
