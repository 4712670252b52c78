#include <splitlab/render.hpp>

#include <sstream>

namespace splitlab {

std::optional<RenderFormat> parse_render_format(std::string_view text)
{
    if (text == "dot")
        return RenderFormat::Dot;
    if (text == "ascii")
        return RenderFormat::Ascii;
    if (text == "ifelse")
        return RenderFormat::IfElse;
    return std::nullopt;
}

namespace {

void require_keys(KeySet keys, const Instance& inst)
{
    for (KeyIndex k : keys.members())
        if (!inst.valid_key(k))
            throw std::invalid_argument("tree key " + std::to_string(k) + " is not in the instance");
}

void require(const Verdict& v)
{
    if (!v.valid())
        throw std::invalid_argument("invalid tree: " + v.violations.front());
}

void check(const GbstTree& t, const Instance& inst)
{
    if (t.empty())
        throw std::invalid_argument("cannot render an empty tree");
    const KeySet keys = t.eq_keys();
    require_keys(keys, inst);
    const Interval span{keys.min(), keys.max()};
    require(gbst_validate(t, span, span.keys() - keys, inst));
}

void check(const TwcstTree& t, const Instance& inst)
{
    const KeySet keys = t.leaf_keys();
    require_keys(keys, inst);
    const Interval span{keys.min(), keys.max()};
    require(twcst_validate(t, span, span.keys() - keys, inst));
}

std::string weighted(const Instance& inst, KeyIndex k, const char* sep)
{
    return inst.label(k) + sep + std::to_string(inst.weight(k));
}

std::string pad(int depth) { return std::string(static_cast<std::size_t>(2 * depth), ' '); }

// ---- ascii

AsciiNode shape(const GbstTree& t, const Instance& inst, std::string edge)
{
    AsciiNode n{std::move(edge), inst.label(t.eq_key()) + " (" + std::to_string(inst.weight(t.eq_key())) + ")", {}};
    if (!t.left().empty())
        n.children.push_back(shape(t.left(), inst, "L"));
    if (!t.right().empty())
        n.children.push_back(shape(t.right(), inst, "R"));
    return n;
}

AsciiNode shape(const TwcstTree& t, const Instance& inst, std::string edge)
{
    if (t.is_leaf())
        return {std::move(edge), inst.label(t.key()) + " (" + std::to_string(inst.weight(t.key())) + ")", {}};
    AsciiNode n{std::move(edge), (t.op() == Comparison::Equal ? "== " : "< ") + inst.label(t.key()), {}};
    n.children.push_back(shape(t.yes(), inst, "yes"));
    n.children.push_back(shape(t.no(), inst, "no"));
    return n;
}

void write_ascii(const AsciiNode& n, int depth, std::ostream& out)
{
    out << pad(depth);
    if (!n.edge.empty())
        out << n.edge << ": ";
    out << n.text << '\n';
    for (const auto& c : n.children)
        write_ascii(c, depth + 1, out);
}

// ---- dot

struct DotWriter {
    std::ostringstream out;
    int next = 0;

    int add(const std::string& label)
    {
        out << "  n" << next << " [label=\"" << label << "\"];\n";
        return next++;
    }
    void edge(int from, int to, const char* label)
    {
        out << "  n" << from << " -> n" << to << " [label=\"" << label << "\"];\n";
    }

    int gbst(const GbstTree& t, const Instance& inst)
    {
        const int id = add(weighted(inst, t.eq_key(), ":"));
        if (!t.left().empty())
            edge(id, gbst(t.left(), inst), "<");
        if (!t.right().empty())
            edge(id, gbst(t.right(), inst), ">=");
        return id;
    }

    int twcst(const TwcstTree& t, const Instance& inst)
    {
        if (t.is_leaf())
            return add(weighted(inst, t.key(), ":"));
        const int id = add((t.op() == Comparison::Equal ? "== " : "< ") + inst.label(t.key()));
        edge(id, twcst(t.yes(), inst), "yes");
        edge(id, twcst(t.no(), inst), "no");
        return id;
    }
};

// ---- ifelse

void ifelse(const GbstTree& t, const Instance& inst, int depth, std::ostream& out)
{
    if (t.empty()) {
        out << pad(depth) << "return none\n";
        return;
    }
    const std::string& k = inst.label(t.eq_key());
    out << pad(depth) << "if (x == " << k << ") {\n" << pad(depth + 1) << "return " << k << '\n';
    if (!t.split_key()) {
        out << pad(depth) << "}\n" << pad(depth) << "return none\n";
        return;
    }
    const KeyIndex s = *t.split_key();
    const std::string split = inst.valid_key(s) ? inst.label(s) : "+inf";
    out << pad(depth) << "} else if (x < " << split << ") {\n";
    ifelse(t.left(), inst, depth + 1, out);
    out << pad(depth) << "} else {\n";
    ifelse(t.right(), inst, depth + 1, out);
    out << pad(depth) << "}\n";
}

void ifelse(const TwcstTree& t, const Instance& inst, int depth, std::ostream& out)
{
    if (t.is_leaf()) {
        out << pad(depth) << "return " << inst.label(t.key()) << '\n';
        return;
    }
    out << pad(depth) << "if (x " << (t.op() == Comparison::Equal ? "==" : "<") << ' ' << inst.label(t.key())
        << ") {\n";
    ifelse(t.yes(), inst, depth + 1, out);
    out << pad(depth) << "} else {\n";
    ifelse(t.no(), inst, depth + 1, out);
    out << pad(depth) << "}\n";
}

} // namespace

AsciiNode ascii_shape(const GbstTree& tree, const Instance& inst)
{
    check(tree, inst);
    return shape(tree, inst, "");
}

AsciiNode ascii_shape(const TwcstTree& tree, const Instance& inst)
{
    check(tree, inst);
    return shape(tree, inst, "");
}

std::string render(const GbstTree& tree, const Instance& inst, RenderFormat format)
{
    check(tree, inst);
    std::ostringstream out;
    switch (format) {
    case RenderFormat::Ascii:
        write_ascii(shape(tree, inst, ""), 0, out);
        break;
    case RenderFormat::Dot: {
        DotWriter w;
        w.gbst(tree, inst);
        out << "digraph gbst {\n" << w.out.str() << "}\n";
        break;
    }
    case RenderFormat::IfElse:
        ifelse(tree, inst, 0, out);
        break;
    }
    return out.str();
}

std::string render(const TwcstTree& tree, const Instance& inst, RenderFormat format)
{
    check(tree, inst);
    std::ostringstream out;
    switch (format) {
    case RenderFormat::Ascii:
        write_ascii(shape(tree, inst, ""), 0, out);
        break;
    case RenderFormat::Dot: {
        DotWriter w;
        w.twcst(tree, inst);
        out << "digraph twcst {\n" << w.out.str() << "}\n";
        break;
    }
    case RenderFormat::IfElse:
        ifelse(tree, inst, 0, out);
        break;
    }
    return out.str();
}

AsciiNode parse_ascii(std::string_view text)
{
    struct Line {
        int line;
        int depth;
        AsciiNode node;
    };
    std::vector<Line> lines;
    int line_no = 0;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos)
            end = text.size();
        std::string_view raw = text.substr(pos, end - pos);
        pos = end + 1;
        ++line_no;
        if (raw.find_first_not_of(' ') == std::string_view::npos)
            continue;
        const std::size_t indent = raw.find_first_not_of(' ');
        if (indent % 2 != 0)
            throw ParseError(line_no, "odd indentation");
        std::string_view body = raw.substr(indent);
        AsciiNode n;
        for (const char* e : {"L", "R", "yes", "no"}) {
            const std::string prefix = std::string(e) + ": ";
            if (body.substr(0, prefix.size()) == prefix) {
                n.edge = e;
                body.remove_prefix(prefix.size());
                break;
            }
        }
        n.text = std::string(body);
        lines.push_back({line_no, static_cast<int>(indent / 2), std::move(n)});
    }
    if (lines.empty())
        throw ParseError(line_no, "empty tree text");

    std::size_t at = 0;
    auto build = [&](auto&& self, int depth) -> AsciiNode {
        Line& l = lines[at++];
        if (l.depth != depth)
            throw ParseError(l.line, "unexpected indentation");
        AsciiNode n = std::move(l.node);
        while (at < lines.size() && lines[at].depth > depth)
            n.children.push_back(self(self, depth + 1));
        return n;
    };
    AsciiNode root = build(build, 0);
    if (at != lines.size())
        throw ParseError(lines[at].line, "more than one root");
    if (!root.edge.empty())
        throw ParseError(lines.front().line, "root line has an edge prefix");
    return root;
}

} // namespace splitlab
