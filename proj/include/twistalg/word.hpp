#pragma once

#include <compare>
#include <cstddef>
#include <string>

namespace twistalg {

enum class Letter : char { A = 'A', B = 'B', C = 'C' };

/// A word over the alphabet {A, B, C}; the empty word is the unit I.
/// Letters are stored as their characters, so the derived ordering is plain
/// lexicographic with A < B < C.
class Word {
public:
    Word() = default;
    explicit Word(std::string letters);  // validates the alphabet
    static Word single(Letter l) { return run(l, 1); }
    static Word run(Letter l, int count);

    size_t size() const { return letters_.size(); }
    bool empty() const { return letters_.empty(); }
    char ch(size_t i) const { return letters_[i]; }
    Letter at(size_t i) const { return Letter(letters_[i]); }

    Word operator*(const Word& o) const;  // concatenation
    Word prefix(size_t n) const { return Word(letters_.substr(0, n), nullptr); }
    Word suffix_from(size_t i) const { return Word(letters_.substr(i), nullptr); }

    int count(Letter l) const;

    auto operator<=>(const Word& o) const = default;

    const std::string& plain() const { return letters_; }
    /// Run-length text form: "I" for the empty word, otherwise e.g. "C^2*A".
    std::string str() const;

private:
    Word(std::string letters, std::nullptr_t) : letters_(std::move(letters)) {}
    std::string letters_;
};

/// Letter count with C weighted 2 (consistently with C standing for a
/// two-letter commutator).
int filtration_degree(const Word& w);

/// Termination measure: length first, then the number of index pairs i < j
/// whose letters read (A,C) or (C,B). Every single rewrite step strictly
/// decreases it on each produced word.
struct Measure {
    size_t length = 0;
    size_t disorder = 0;
    auto operator<=>(const Measure&) const = default;
};
Measure measure(const Word& w);

/// Order used for printing and for polynomial term maps: filtration degree
/// descending, then length ascending, then lexicographic ascending.
struct CanonicalWordLess {
    bool operator()(const Word& a, const Word& b) const;
};

}  // namespace twistalg
