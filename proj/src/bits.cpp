#include "meqsim/bits.hpp"

#include <bit>
#include <stdexcept>

namespace meqsim {

namespace {
int words_needed(int size) { return (size + 63) / 64; }
} // namespace

BitString::BitString(int size) : size_(size), words_(words_needed(size), 0) {
    if (size < 0) {
        throw std::invalid_argument("BitString size must be non-negative");
    }
}

BitString BitString::unit(int size, int index) {
    BitString b(size);
    b.set_bit(index, true);
    return b;
}

BitString BitString::from_string(std::string_view s) {
    BitString b(static_cast<int>(s.size()));
    for (int i = 0; i < b.size_; ++i) {
        char c = s[static_cast<std::size_t>(i)];
        if (c != '0' && c != '1') {
            throw std::invalid_argument("BitString: character outside {0,1}");
        }
        b.set_bit(i, c == '1');
    }
    return b;
}

BitString BitString::from_value(int size, std::uint64_t value) {
    if (size > 64) {
        throw std::invalid_argument("BitString::from_value: size > 64");
    }
    BitString b(size);
    if (size > 0) {
        std::uint64_t mask = size == 64 ? ~0ULL : ((1ULL << size) - 1);
        if ((value & ~mask) != 0) {
            throw std::invalid_argument("BitString::from_value: value exceeds size");
        }
        b.words_[0] = value & mask;
    }
    return b;
}

void BitString::check_index(int i) const {
    if (i < 0 || i >= size_) {
        throw std::out_of_range("BitString index out of range");
    }
}

bool BitString::bit(int i) const {
    check_index(i);
    return (words_[static_cast<std::size_t>(i / 64)] >> (i % 64)) & 1ULL;
}

void BitString::set_bit(int i, bool value) {
    check_index(i);
    std::uint64_t mask = 1ULL << (i % 64);
    auto& w = words_[static_cast<std::size_t>(i / 64)];
    w = value ? (w | mask) : (w & ~mask);
}

int BitString::weight() const {
    int total = 0;
    for (std::uint64_t w : words_) {
        total += std::popcount(w);
    }
    return total;
}

bool BitString::is_zero() const {
    for (std::uint64_t w : words_) {
        if (w != 0) return false;
    }
    return true;
}

std::uint64_t BitString::to_value() const {
    if (size_ > 64) {
        throw std::logic_error("BitString::to_value: size > 64");
    }
    return words_.empty() ? 0 : words_[0];
}

BitString BitString::operator^(const BitString& other) const {
    BitString out = *this;
    out ^= other;
    return out;
}

BitString& BitString::operator^=(const BitString& other) {
    if (size_ != other.size_) {
        throw std::invalid_argument("BitString xor: length mismatch");
    }
    for (std::size_t w = 0; w < words_.size(); ++w) {
        words_[w] ^= other.words_[w];
    }
    return *this;
}

std::string BitString::to_string() const {
    std::string s(static_cast<std::size_t>(size_), '0');
    for (int i = 0; i < size_; ++i) {
        if (bit(i)) s[static_cast<std::size_t>(i)] = '1';
    }
    return s;
}

std::string BitString::to_hex() const {
    static const char* digits = "0123456789abcdef";
    int nibbles = (size_ + 3) / 4;
    if (nibbles == 0) nibbles = 1;
    std::string s = "0x";
    for (int d = nibbles - 1; d >= 0; --d) {
        int v = 0;
        for (int b = 0; b < 4; ++b) {
            int i = 4 * d + b;
            if (i < size_ && bit(i)) v |= 1 << b;
        }
        s.push_back(digits[v]);
    }
    return s;
}

int hamming_distance(const BitString& a, const BitString& b) {
    return (a ^ b).weight();
}

} // namespace meqsim
