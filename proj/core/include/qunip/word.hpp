#pragma once

#include "qunip/rootdata.hpp"

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace qunip {

inline constexpr int kMaxWordLength = 16;

// A word over I packed four bits per letter, first letter in the highest used nibble.
// For equal lengths numeric order on the code is lexicographic order on letters.
struct Word {
    std::uint64_t code = 0;
    int len = 0;

    Word() = default;
    // BoundExceeded beyond kMaxWordLength letters.
    explicit Word(const std::vector<int>& letters);
    static Word letter_word(int a) { return Word(static_cast<std::uint64_t>(a), 1); }

    int letter(int k) const { return static_cast<int>((code >> (4 * (len - 1 - k))) & 0xF); }
    int first() const { return letter(0); }
    int last() const { return static_cast<int>(code & 0xF); }
    bool empty() const { return len == 0; }
    std::vector<int> letters() const;

    Word append(int a) const;
    Word prepend(int a) const;
    Word drop_first() const { return Word(code & ((std::uint64_t{1} << (4 * (len - 1))) - 1), len - 1); }
    Word drop_last() const { return Word(code >> 4, len - 1); }
    Word erase(int k) const;
    Word reversed() const;
    friend Word operator+(const Word& a, const Word& b);

    // Letter multiplicities, length `rank`.
    std::vector<int> content(int rank) const;

    // Degree-lexicographic: shorter first, then lexicographic.
    friend auto operator<=>(const Word& a, const Word& b)
    {
        if (auto c = a.len <=> b.len; c != 0)
            return c;
        return a.code <=> b.code;
    }
    friend bool operator==(const Word& a, const Word& b) = default;

    // 1-based letters, e.g. "1,2,1".
    std::string to_string() const;

    Word(std::uint64_t c, int l) : code(c), len(l) {}
};

// Number of words with the given letter multiplicities.
std::uint64_t multinomial(const std::vector<int>& content);

// All words of a fixed content, in lexicographic order.
class WordSpace {
public:
    explicit WordSpace(std::vector<int> content);

    const std::vector<int>& content() const { return content_; }
    int length() const { return length_; }
    std::size_t size() const { return codes_.size(); }
    Word word(std::size_t idx) const { return Word(codes_[idx], length_); }
    const std::vector<std::uint64_t>& codes() const { return codes_; }
    // Position of w, or npos when w has a different content.
    std::size_t index(const Word& w) const;
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

private:
    std::vector<int> content_;
    int length_ = 0;
    std::vector<std::uint64_t> codes_;
};

// Lexicographic rank of a word among words of its content, computed letter by letter.
// offset(remaining, a) is the number of words with the remaining content that start below a.
class RankTable {
public:
    explicit RankTable(std::vector<int> content);
    std::uint64_t offset(const std::vector<int>& remaining, int a) const;

    // Incremental interface: start from encode(content), subtract stride(a) per letter.
    std::uint64_t encode(const std::vector<int>& remaining) const;
    std::uint64_t stride(int a) const { return strides_[static_cast<std::size_t>(a)]; }
    std::uint64_t offset_code(std::uint64_t code, int a) const
    {
        return table_[code * content_.size() + static_cast<std::size_t>(a)];
    }

private:
    std::vector<int> content_;
    std::vector<std::uint64_t> strides_;
    std::vector<std::uint64_t> table_; // indexed by (encoded remaining content, letter)
};

} // namespace qunip
