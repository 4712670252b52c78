#include <splitlab/instance.hpp>

#include <algorithm>
#include <charconv>
#include <sstream>

namespace splitlab {

namespace {

bool is_digit(char c) { return c >= '0' && c <= '9'; }

bool valid_label(std::string_view s)
{
    if (s.empty())
        return false;
    return std::all_of(s.begin(), s.end(), [](char c) {
        return is_digit(c) || (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || c == '_';
    });
}

std::string_view trim(std::string_view s)
{
    const auto ws = " \t\r";
    const auto b = s.find_first_not_of(ws);
    if (b == std::string_view::npos)
        return {};
    const auto e = s.find_last_not_of(ws);
    return s.substr(b, e - b + 1);
}

} // namespace

std::string to_string(Interval iv)
{
    return "[" + std::to_string(iv.i) + "," + std::to_string(iv.j) + "]";
}

bool label_less(std::string_view a, std::string_view b)
{
    std::size_t x = 0, y = 0;
    while (x < a.size() && y < b.size()) {
        if (is_digit(a[x]) && is_digit(b[y])) {
            std::size_t xe = x, ye = y;
            while (xe < a.size() && is_digit(a[xe]))
                ++xe;
            while (ye < b.size() && is_digit(b[ye]))
                ++ye;
            // compare digit runs numerically, ignoring leading zeros
            std::string_view ra = a.substr(x, xe - x), rb = b.substr(y, ye - y);
            ra.remove_prefix(std::min(ra.find_first_not_of('0'), ra.size()));
            rb.remove_prefix(std::min(rb.find_first_not_of('0'), rb.size()));
            if (ra.size() != rb.size())
                return ra.size() < rb.size();
            if (ra != rb)
                return ra < rb;
            if (xe - x != ye - y)
                return xe - x < ye - y;
            x = xe;
            y = ye;
        } else {
            if (a[x] != b[y])
                return static_cast<unsigned char>(a[x]) < static_cast<unsigned char>(b[y]);
            ++x;
            ++y;
        }
    }
    return a.size() - x < b.size() - y;
}

Instance::Instance(std::vector<std::string> labels, std::vector<Weight> weights)
    : labels_(std::move(labels)), weights_(std::move(weights))
{
    if (weights_.empty())
        throw std::invalid_argument("instance has no keys");
    if (labels_.size() != weights_.size())
        throw std::invalid_argument("label and weight counts differ");
    if (weights_.size() > static_cast<std::size_t>(kMaxKeys))
        throw std::invalid_argument("instance has more than " + std::to_string(kMaxKeys) + " keys");
    for (std::size_t k = 0; k < weights_.size(); ++k) {
        if (weights_[k] < 0)
            throw std::invalid_argument("negative weight for key " + labels_[k]);
        if (!valid_label(labels_[k]))
            throw std::invalid_argument("malformed label '" + labels_[k] + "'");
        if (k > 0 && labels_[k - 1] == labels_[k])
            throw std::invalid_argument("duplicate label " + labels_[k]);
        if (k > 0 && !label_less(labels_[k - 1], labels_[k]))
            throw std::invalid_argument("label " + labels_[k] + " out of order after " + labels_[k - 1]);
    }
}

Instance Instance::from_weights(std::vector<Weight> weights)
{
    std::vector<std::string> labels;
    for (std::size_t k = 1; k <= weights.size(); ++k)
        labels.push_back(std::to_string(k));
    return Instance(std::move(labels), std::move(weights));
}

Weight Instance::weight(KeyIndex k) const
{
    if (!valid_key(k))
        throw std::out_of_range("key index " + std::to_string(k) + " outside 1.." + std::to_string(size()));
    return weights_[static_cast<std::size_t>(k - 1)];
}

const std::string& Instance::label(KeyIndex k) const
{
    if (!valid_key(k))
        throw std::out_of_range("key index " + std::to_string(k) + " outside 1.." + std::to_string(size()));
    return labels_[static_cast<std::size_t>(k - 1)];
}

std::optional<KeyIndex> Instance::find(std::string_view label) const
{
    for (std::size_t k = 0; k < labels_.size(); ++k)
        if (labels_[k] == label)
            return static_cast<KeyIndex>(k + 1);
    return std::nullopt;
}

Weight Instance::weight_of(KeySet keys) const
{
    Weight total = 0;
    for (KeyIndex k : keys.members())
        total += weight(k);
    return total;
}

Instance parse_instance(std::string_view text)
{
    std::vector<std::string> labels;
    std::vector<Weight> weights;
    int line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const auto nl = text.find('\n', pos);
        const auto raw = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
        pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
        ++line_no;

        const auto line = trim(raw);
        if (line.empty() || line.front() == '#')
            continue;

        const auto sep = line.find_first_of(" \t");
        if (sep == std::string_view::npos)
            throw ParseError(line_no, "expected '<label> <weight>'");
        const auto label = line.substr(0, sep);
        const auto rest = trim(line.substr(sep));
        if (!valid_label(label))
            throw ParseError(line_no, "malformed label '" + std::string(label) + "'");
        if (rest.find_first_of(" \t") != std::string_view::npos)
            throw ParseError(line_no, "trailing text after weight");

        Weight w = 0;
        const auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), w);
        if (ec != std::errc() || ptr != rest.data() + rest.size())
            throw ParseError(line_no, "weight '" + std::string(rest) + "' is not an integer");
        if (w < 0)
            throw ParseError(line_no, "negative weight");
        if (!labels.empty()) {
            if (labels.back() == label)
                throw ParseError(line_no, "duplicate label " + std::string(label));
            if (!label_less(labels.back(), label))
                throw ParseError(line_no, "label " + std::string(label) + " out of order");
        }
        if (labels.size() == static_cast<std::size_t>(kMaxKeys))
            throw ParseError(line_no, "more than " + std::to_string(kMaxKeys) + " keys");
        labels.emplace_back(label);
        weights.push_back(w);
    }
    if (labels.empty())
        throw ParseError(line_no, "instance has no keys");
    return Instance(std::move(labels), std::move(weights));
}

std::string format_instance(const Instance& inst)
{
    std::ostringstream out;
    for (KeyIndex k = 1; k <= inst.size(); ++k)
        out << inst.label(k) << ' ' << inst.weight(k) << '\n';
    return out.str();
}

KeySet parse_key_list(const Instance& inst, std::string_view csv)
{
    KeySet keys;
    std::size_t pos = 0;
    while (pos <= csv.size()) {
        const auto comma = csv.find(',', pos);
        const auto item = trim(csv.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos));
        pos = comma == std::string_view::npos ? csv.size() + 1 : comma + 1;
        if (item.empty())
            continue;
        const auto k = inst.find(item);
        if (!k)
            throw std::invalid_argument("unknown key label '" + std::string(item) + "'");
        keys = keys.with(*k);
    }
    return keys;
}

std::string format_key_list(const Instance& inst, KeySet keys)
{
    std::string out;
    for (KeyIndex k : keys.members()) {
        if (!out.empty())
            out += ',';
        out += inst.label(k);
    }
    return out;
}

} // namespace splitlab
