#pragma once

#include <splitlab/gbst.hpp>
#include <splitlab/twcst.hpp>

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace splitlab {

enum class RenderFormat { Dot, Ascii, IfElse };

std::optional<RenderFormat> parse_render_format(std::string_view text);

/// Trees are checked against the interval spanned by their keys (every other key of that span
/// is treated as a hole); an invalid tree throws std::invalid_argument.
///
/// dot:    one node per tree node; GBST nodes "label:weight", edges "<" and ">=";
///         comparison leaves "label:weight", internal nodes "== label" / "< label", edges yes/no.
/// ascii:  one line per node, children indented two spaces and prefixed "L: "/"R: " (GBST) or
///         "yes: "/"no: "; GBST nodes and comparison leaves print "label (weight)".
/// ifelse: nested pseudocode with "if (x == k)", "if (x < k)" and "return k".
std::string render(const GbstTree& tree, const Instance& inst, RenderFormat format);
std::string render(const TwcstTree& tree, const Instance& inst, RenderFormat format);

/// Tree shape as recovered from the ascii rendering.
struct AsciiNode {
    std::string edge; // "", "L", "R", "yes", "no"
    std::string text; // the line after the edge prefix
    std::vector<AsciiNode> children;
    friend bool operator==(const AsciiNode&, const AsciiNode&) = default;
};

/// Parses ascii output back into its shape. Throws ParseError on inconsistent indentation.
AsciiNode parse_ascii(std::string_view text);

AsciiNode ascii_shape(const GbstTree& tree, const Instance& inst);
AsciiNode ascii_shape(const TwcstTree& tree, const Instance& inst);

} // namespace splitlab
