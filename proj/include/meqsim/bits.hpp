#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace meqsim {

// Fixed-length bit string over F2. Bit i is the coefficient of index i
// (player, node, or codeword position). In the textual form "0110..." the
// leftmost character is bit 0.
class BitString {
public:
    BitString() = default;
    explicit BitString(int size);

    static BitString zeros(int size) { return BitString(size); }
    static BitString unit(int size, int index);
    static BitString from_string(std::string_view s);
    static BitString from_value(int size, std::uint64_t value);

    int size() const { return size_; }
    bool bit(int i) const;
    void set_bit(int i, bool value);
    int weight() const;
    bool is_zero() const;

    // Packed value, bit i contributing 2^i. Requires size <= 64.
    std::uint64_t to_value() const;

    BitString operator^(const BitString& other) const;
    BitString& operator^=(const BitString& other);
    bool operator==(const BitString& other) const = default;

    std::string to_string() const;
    // Big-endian hex of the packed value, zero-padded to ceil(size/4)
    // digits, "0x" prefixed. Used by report records.
    std::string to_hex() const;

private:
    void check_index(int i) const;

    int size_ = 0;
    std::vector<std::uint64_t> words_;
};

int hamming_distance(const BitString& a, const BitString& b);

} // namespace meqsim
