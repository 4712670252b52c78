#pragma once

#include <bit>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace splitlab {

using Weight = std::int64_t;
using Cost = std::int64_t;

/// 1-based key index into an Instance. Labels are cosmetic; identity is the index.
using KeyIndex = int;

/// Largest instance the 64-bit key sets can describe (bit 0 is unused).
inline constexpr int kMaxKeys = 63;

/// Fixed-width set of key indices in 1..kMaxKeys.
class KeySet {
public:
    constexpr KeySet() = default;

    static constexpr KeySet from_bits(std::uint64_t bits) { return KeySet(bits); }

    /// Keys i..j inclusive; empty when i > j.
    static constexpr KeySet range(KeyIndex i, KeyIndex j)
    {
        if (i > j)
            return {};
        const std::uint64_t upto_j = j >= 63 ? ~std::uint64_t{0} : (std::uint64_t{1} << (j + 1)) - 1;
        const std::uint64_t below_i = (std::uint64_t{1} << i) - 1;
        return KeySet(upto_j & ~below_i);
    }

    static KeySet of(std::initializer_list<KeyIndex> keys)
    {
        KeySet s;
        for (KeyIndex k : keys)
            s = s.with(k);
        return s;
    }

    constexpr std::uint64_t bits() const { return bits_; }
    constexpr bool contains(KeyIndex k) const { return k >= 0 && k < 64 && ((bits_ >> k) & 1u) != 0; }
    constexpr KeySet with(KeyIndex k) const { return KeySet(bits_ | (std::uint64_t{1} << k)); }
    constexpr KeySet without(KeyIndex k) const { return KeySet(bits_ & ~(std::uint64_t{1} << k)); }
    constexpr int size() const { return std::popcount(bits_); }
    constexpr bool empty() const { return bits_ == 0; }
    constexpr bool subset_of(KeySet other) const { return (bits_ & ~other.bits_) == 0; }

    /// Smallest member; precondition: non-empty.
    constexpr KeyIndex min() const { return std::countr_zero(bits_); }
    constexpr KeyIndex max() const { return 63 - std::countl_zero(bits_); }

    std::vector<KeyIndex> members() const
    {
        std::vector<KeyIndex> out;
        for (std::uint64_t b = bits_; b != 0; b &= b - 1)
            out.push_back(std::countr_zero(b));
        return out;
    }

    constexpr KeySet operator|(KeySet o) const { return KeySet(bits_ | o.bits_); }
    constexpr KeySet operator&(KeySet o) const { return KeySet(bits_ & o.bits_); }
    constexpr KeySet operator-(KeySet o) const { return KeySet(bits_ & ~o.bits_); }
    friend constexpr bool operator==(KeySet, KeySet) = default;

private:
    constexpr explicit KeySet(std::uint64_t bits) : bits_(bits) {}
    std::uint64_t bits_ = 0;
};

/// Keys resolved by ancestors and therefore absent from a subtree.
using HoleSet = KeySet;

/// Contiguous key range [i, j], 1-based inclusive; empty when i > j.
struct Interval {
    KeyIndex i = 1;
    KeyIndex j = 0;

    constexpr int size() const { return j >= i ? j - i + 1 : 0; }
    constexpr bool empty() const { return j < i; }
    constexpr bool contains(KeyIndex k) const { return k >= i && k <= j; }
    constexpr KeySet keys() const { return KeySet::range(i, j); }
    friend constexpr bool operator==(Interval, Interval) = default;
};

std::string to_string(Interval iv);

/// Natural ordering of labels: digit runs compare numerically, everything else bytewise.
bool label_less(std::string_view a, std::string_view b);

/// Ordered keys with nonnegative integer weights.
class Instance {
public:
    /// Throws std::invalid_argument on empty input, length mismatch, negative weights,
    /// malformed or non-ascending labels, or more than kMaxKeys keys.
    Instance(std::vector<std::string> labels, std::vector<Weight> weights);

    /// Labels "1".."n".
    static Instance from_weights(std::vector<Weight> weights);

    int size() const { return static_cast<int>(weights_.size()); }
    Interval full() const { return {1, size()}; }

    Weight weight(KeyIndex k) const;
    const std::string& label(KeyIndex k) const;
    std::span<const Weight> weights() const { return weights_; }
    std::span<const std::string> labels() const { return labels_; }
    std::optional<KeyIndex> find(std::string_view label) const;

    bool valid_key(KeyIndex k) const { return k >= 1 && k <= size(); }
    Weight weight_of(KeySet keys) const;

    friend bool operator==(const Instance&, const Instance&) = default;

private:
    std::vector<std::string> labels_;
    std::vector<Weight> weights_;
};

/// Malformed instance or tree text; `line` is 1-based.
class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line)
    {
    }
    int line() const { return line_; }

private:
    int line_;
};

/// Instance file: `#` comments, one `<label> <weight>` pair per line, keys in ascending order.
Instance parse_instance(std::string_view text);
std::string format_instance(const Instance& inst);

/// Parses "A3,B4" into a key set; throws std::invalid_argument on unknown labels.
KeySet parse_key_list(const Instance& inst, std::string_view csv);
std::string format_key_list(const Instance& inst, KeySet keys);

} // namespace splitlab
