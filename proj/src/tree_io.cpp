#include <splitlab/tree_io.hpp>

#include <cctype>
#include <vector>

namespace splitlab {

namespace {

struct Token {
    std::string text; // "(", ")" or an atom
    int line;
};

std::vector<Token> tokenize(std::string_view text)
{
    std::vector<Token> out;
    int line = 1;
    for (std::size_t p = 0; p < text.size();) {
        const char c = text[p];
        if (c == '\n') {
            ++line;
            ++p;
        } else if (c == '#') {
            while (p < text.size() && text[p] != '\n')
                ++p;
        } else if (std::isspace(static_cast<unsigned char>(c))) {
            ++p;
        } else if (c == '(' || c == ')') {
            out.push_back({std::string(1, c), line});
            ++p;
        } else {
            const std::size_t start = p;
            while (p < text.size() && text[p] != '(' && text[p] != ')' && text[p] != '#'
                   && !std::isspace(static_cast<unsigned char>(text[p])))
                ++p;
            out.push_back({std::string(text.substr(start, p - start)), line});
        }
    }
    return out;
}

class Parser {
public:
    Parser(std::vector<Token> tokens, const Instance& inst) : toks_(std::move(tokens)), inst_(inst) {}

    AnyTree parse()
    {
        const Token& kind = next("tree kind");
        AnyTree result;
        if (kind.text == "gbst")
            result = gbst();
        else if (kind.text == "twcst")
            result = twcst();
        else
            throw ParseError(kind.line, "expected 'gbst' or 'twcst', got '" + kind.text + "'");
        if (at_ < toks_.size())
            throw ParseError(toks_[at_].line, "trailing input after the tree");
        return result;
    }

private:
    const Token& next(const char* what)
    {
        if (at_ >= toks_.size())
            throw ParseError(toks_.empty() ? 1 : toks_.back().line, std::string("unexpected end of input, expected ") + what);
        return toks_[at_++];
    }

    const Token& peek(const char* what)
    {
        if (at_ >= toks_.size())
            throw ParseError(toks_.empty() ? 1 : toks_.back().line, std::string("unexpected end of input, expected ") + what);
        return toks_[at_];
    }

    void expect_close()
    {
        const Token& t = next("')'");
        if (t.text != ")")
            throw ParseError(t.line, "expected ')', got '" + t.text + "'");
    }

    KeyIndex key(const Token& t)
    {
        if (t.text == "(" || t.text == ")")
            throw ParseError(t.line, "expected a key label");
        auto k = inst_.find(t.text);
        if (!k)
            throw ParseError(t.line, "unknown key '" + t.text + "'");
        return *k;
    }

    GbstTree gbst()
    {
        const Token& t = next("a split tree");
        if (t.text == "-")
            return {};
        if (t.text != "(")
            return GbstTree::leaf(key(t));
        const KeyIndex eq = key(next("an equality key"));
        const Token& s = next("a split key");
        std::optional<KeyIndex> split;
        if (s.text == "*")
            split = inst_.size() + 1;
        else if (s.text != "-")
            split = key(s);
        GbstTree left = gbst();
        GbstTree right = gbst();
        expect_close();
        if (!split && (!left.empty() || !right.empty()))
            throw ParseError(s.line, "node with children needs a split key");
        return GbstTree::node(eq, split, std::move(left), std::move(right));
    }

    TwcstTree twcst()
    {
        const Token& t = next("a comparison tree");
        if (t.text != "(")
            return TwcstTree::leaf(key(t));
        const Token& op = next("'<' or '='");
        if (op.text != "<" && op.text != "=")
            throw ParseError(op.line, "expected '<' or '=', got '" + op.text + "'");
        const KeyIndex k = key(next("a key"));
        TwcstTree first = twcst();
        if (op.text == "=" && peek("')'").text == ")") {
            ++at_;
            return TwcstTree::equal(k, std::move(first));
        }
        TwcstTree second = twcst();
        expect_close();
        return TwcstTree::internal(op.text == "=" ? Comparison::Equal : Comparison::Less, k, std::move(first),
                                   std::move(second));
    }

    std::vector<Token> toks_;
    std::size_t at_ = 0;
    const Instance& inst_;
};

void write(const GbstTree& t, const Instance& inst, std::string& out)
{
    if (t.empty()) {
        out += '-';
        return;
    }
    if (t.left().empty() && t.right().empty() && !t.split_key()) {
        out += inst.label(t.eq_key());
        return;
    }
    out += '(' + inst.label(t.eq_key()) + ' ';
    if (!t.split_key())
        out += '-';
    else if (*t.split_key() == inst.size() + 1)
        out += '*';
    else
        out += inst.label(*t.split_key());
    out += ' ';
    write(t.left(), inst, out);
    out += ' ';
    write(t.right(), inst, out);
    out += ')';
}

void write(const TwcstTree& t, const Instance& inst, std::string& out)
{
    if (t.is_leaf()) {
        out += inst.label(t.key());
        return;
    }
    const bool plain_eq = t.op() == Comparison::Equal && t.yes().is_leaf() && t.yes().key() == t.key();
    out += std::string(t.op() == Comparison::Equal ? "(= " : "(< ") + inst.label(t.key()) + ' ';
    if (!plain_eq) {
        write(t.yes(), inst, out);
        out += ' ';
    }
    write(t.no(), inst, out);
    out += ')';
}

} // namespace

AnyTree parse_tree(std::string_view text, const Instance& inst)
{
    return Parser(tokenize(text), inst).parse();
}

std::string format_tree(const GbstTree& tree, const Instance& inst)
{
    std::string out = "gbst ";
    write(tree, inst, out);
    return out + '\n';
}

std::string format_tree(const TwcstTree& tree, const Instance& inst)
{
    std::string out = "twcst ";
    write(tree, inst, out);
    return out + '\n';
}

} // namespace splitlab
