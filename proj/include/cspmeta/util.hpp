#pragma once

#include <cstdint>
#include <deque>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace cspmeta {

inline constexpr long long kDefaultBudget = 100'000'000LL;

enum class Outcome { Found, None, Exhausted };

// Parse failure for any of the text formats; line is 1-based.
class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

// Dynamically sized bit set. Small enough for search domains and
// projection masks; no bounds checks beyond construction.
class Bits {
public:
    Bits() = default;
    explicit Bits(int size, bool ones = false)
        : size_(size), words_((size + 63) / 64, ones ? ~0ull : 0ull) {
        trim();
    }

    int size() const { return size_; }
    bool get(int i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
    void set(int i) { words_[i >> 6] |= 1ull << (i & 63); }
    void clear(int i) { words_[i >> 6] &= ~(1ull << (i & 63)); }

    bool any() const {
        for (auto w : words_)
            if (w) return true;
        return false;
    }
    int count() const {
        int c = 0;
        for (auto w : words_) c += __builtin_popcountll(w);
        return c;
    }
    int lowest() const {
        for (size_t i = 0; i < words_.size(); ++i)
            if (words_[i]) return int(i * 64 + __builtin_ctzll(words_[i]));
        return -1;
    }

    Bits& operator&=(const Bits& o) {
        for (size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
        return *this;
    }
    bool operator==(const Bits& o) const { return size_ == o.size_ && words_ == o.words_; }

    // true if *this is a subset of o
    bool subset_of(const Bits& o) const {
        for (size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~o.words_[i]) return false;
        return true;
    }

private:
    void trim() {
        if (size_ & 63 && !words_.empty()) words_.back() &= (1ull << (size_ & 63)) - 1;
    }
    int size_ = 0;
    std::vector<uint64_t> words_;
};

// Line-oriented tokenizer shared by all parsers. '#' starts a comment.
class LineReader {
public:
    explicit LineReader(const std::string& text) : text_(text) {}

    // Next non-blank line as whitespace-separated tokens, or nullopt at EOF.
    std::optional<std::vector<std::string>> next() {
        while (pos_ < text_.size()) {
            size_t eol = text_.find('\n', pos_);
            if (eol == std::string::npos) eol = text_.size();
            std::string line = text_.substr(pos_, eol - pos_);
            pos_ = eol + 1;
            ++line_;
            if (size_t hash = line.find('#'); hash != std::string::npos) line.resize(hash);
            std::vector<std::string> toks;
            size_t i = 0;
            while (i < line.size()) {
                while (i < line.size() && std::isspace((unsigned char)line[i])) ++i;
                size_t j = i;
                while (j < line.size() && !std::isspace((unsigned char)line[j])) ++j;
                if (j > i) toks.push_back(line.substr(i, j - i));
                i = j;
            }
            if (!toks.empty()) return toks;
        }
        return std::nullopt;
    }

    int line() const { return line_; }

private:
    const std::string& text_;
    size_t pos_ = 0;
    int line_ = 0;
};

int parse_int(const std::string& tok, int line);

// Union-find over 0..n-1, used to identify indicator variables.
class UnionFind {
public:
    explicit UnionFind(size_t n) : parent_(n) {
        for (size_t i = 0; i < n; ++i) parent_[i] = (long long)i;
    }
    long long find(long long x) {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }
    void unite(long long a, long long b) {
        a = find(a);
        b = find(b);
        if (a == b) return;
        if (a < b) parent_[b] = a;  // keep the lowest id as representative
        else parent_[a] = b;
    }

private:
    std::vector<long long> parent_;
};

}  // namespace cspmeta
