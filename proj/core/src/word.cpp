#include "qunip/word.hpp"

#include "qunip/errors.hpp"

#include <algorithm>
#include <numeric>

namespace qunip {

Word::Word(const std::vector<int>& letters)
{
    if (letters.size() > static_cast<std::size_t>(kMaxWordLength))
        throw BoundExceeded("word longer than " + std::to_string(kMaxWordLength) + " letters");
    for (int a : letters) {
        check(a >= 0 && a < 16, "letter out of range");
        code = (code << 4) | static_cast<std::uint64_t>(a);
    }
    len = static_cast<int>(letters.size());
}

std::vector<int> Word::letters() const
{
    std::vector<int> out(static_cast<std::size_t>(len));
    for (int k = 0; k < len; ++k)
        out[k] = letter(k);
    return out;
}

Word Word::append(int a) const
{
    if (len >= kMaxWordLength)
        throw BoundExceeded("word longer than " + std::to_string(kMaxWordLength) + " letters");
    return Word((code << 4) | static_cast<std::uint64_t>(a), len + 1);
}

Word Word::prepend(int a) const
{
    if (len >= kMaxWordLength)
        throw BoundExceeded("word longer than " + std::to_string(kMaxWordLength) + " letters");
    return Word(code | (static_cast<std::uint64_t>(a) << (4 * len)), len + 1);
}

Word Word::erase(int k) const
{
    int tail = len - 1 - k;
    std::uint64_t low = tail == 0 ? 0 : code & ((std::uint64_t{1} << (4 * tail)) - 1);
    std::uint64_t high = code >> (4 * (tail + 1));
    return Word((high << (4 * tail)) | low, len - 1);
}

Word Word::reversed() const
{
    std::uint64_t r = 0, c = code;
    for (int k = 0; k < len; ++k) {
        r = (r << 4) | (c & 0xF);
        c >>= 4;
    }
    return Word(r, len);
}

Word operator+(const Word& a, const Word& b)
{
    if (a.len + b.len > kMaxWordLength)
        throw BoundExceeded("word longer than " + std::to_string(kMaxWordLength) + " letters");
    if (b.len == 0)
        return a;
    return Word((a.code << (4 * b.len)) | b.code, a.len + b.len);
}

std::vector<int> Word::content(int rank) const
{
    std::vector<int> c(static_cast<std::size_t>(rank), 0);
    std::uint64_t x = code;
    for (int k = 0; k < len; ++k) {
        ++c[x & 0xF];
        x >>= 4;
    }
    return c;
}

std::string Word::to_string() const
{
    std::string s;
    for (int k = 0; k < len; ++k) {
        if (k)
            s += ',';
        s += std::to_string(letter(k) + 1);
    }
    return s;
}

std::uint64_t multinomial(const std::vector<int>& content)
{
    std::uint64_t r = 1;
    int n = 0;
    for (int c : content)
        for (int k = 1; k <= c; ++k) {
            ++n;
            r = r * static_cast<std::uint64_t>(n) / static_cast<std::uint64_t>(k);
        }
    return r;
}

namespace {

void fill_words(std::vector<int>& remaining, int left, std::uint64_t prefix, std::vector<std::uint64_t>& out)
{
    if (left == 0) {
        out.push_back(prefix);
        return;
    }
    for (std::size_t a = 0; a < remaining.size(); ++a) {
        if (remaining[a] == 0)
            continue;
        --remaining[a];
        fill_words(remaining, left - 1, (prefix << 4) | a, out);
        ++remaining[a];
    }
}

} // namespace

WordSpace::WordSpace(std::vector<int> content) : content_(std::move(content))
{
    for (int c : content_)
        check(c >= 0, "word space with negative content");
    length_ = std::accumulate(content_.begin(), content_.end(), 0);
    if (length_ > kMaxWordLength)
        throw BoundExceeded("weight of height " + std::to_string(length_) + " exceeds the word length bound");
    codes_.reserve(multinomial(content_));
    std::vector<int> rem = content_;
    fill_words(rem, length_, 0, codes_);
}

std::size_t WordSpace::index(const Word& w) const
{
    if (w.len != length_)
        return npos;
    auto it = std::lower_bound(codes_.begin(), codes_.end(), w.code);
    if (it == codes_.end() || *it != w.code)
        return npos;
    return static_cast<std::size_t>(it - codes_.begin());
}

RankTable::RankTable(std::vector<int> content) : content_(std::move(content))
{
    const std::size_t r = content_.size();
    strides_.assign(r, 1);
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < r; ++i) {
        strides_[i] = total;
        total *= static_cast<std::uint64_t>(content_[i] + 1);
    }
    table_.assign(total * r, 0);
    std::vector<int> rem(r, 0);
    for (std::uint64_t code = 0; code < total; ++code) {
        std::uint64_t x = code;
        for (std::size_t i = 0; i < r; ++i) {
            rem[i] = static_cast<int>(x % static_cast<std::uint64_t>(content_[i] + 1));
            x /= static_cast<std::uint64_t>(content_[i] + 1);
        }
        std::uint64_t acc = 0;
        for (std::size_t a = 0; a < r; ++a) {
            table_[code * r + a] = acc;
            if (rem[a] > 0) {
                --rem[a];
                acc += multinomial(rem);
                ++rem[a];
            }
        }
    }
}

std::uint64_t RankTable::encode(const std::vector<int>& remaining) const
{
    std::uint64_t c = 0;
    for (std::size_t i = 0; i < remaining.size(); ++i)
        c += strides_[i] * static_cast<std::uint64_t>(remaining[i]);
    return c;
}

std::uint64_t RankTable::offset(const std::vector<int>& remaining, int a) const
{
    return table_[encode(remaining) * content_.size() + static_cast<std::size_t>(a)];
}

} // namespace qunip
