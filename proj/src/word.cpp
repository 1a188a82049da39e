#include "twistalg/word.hpp"

#include <stdexcept>

namespace twistalg {

Word::Word(std::string letters) : letters_(std::move(letters)) {
    for (char c : letters_)
        if (c != 'A' && c != 'B' && c != 'C')
            throw std::invalid_argument(std::string("invalid letter '") + c + "' in word");
}

Word Word::run(Letter l, int count) {
    if (count < 0) throw std::invalid_argument("negative run length");
    return Word(std::string(count, char(l)), nullptr);
}

Word Word::operator*(const Word& o) const {
    return Word(letters_ + o.letters_, nullptr);
}

int Word::count(Letter l) const {
    int n = 0;
    for (char c : letters_) n += (c == char(l));
    return n;
}

std::string Word::str() const {
    if (letters_.empty()) return "I";
    std::string out;
    size_t i = 0;
    while (i < letters_.size()) {
        size_t j = i;
        while (j < letters_.size() && letters_[j] == letters_[i]) ++j;
        if (!out.empty()) out += '*';
        out += letters_[i];
        if (j - i > 1) out += '^' + std::to_string(j - i);
        i = j;
    }
    return out;
}

int filtration_degree(const Word& w) {
    int d = 0;
    for (char c : w.plain()) d += (c == 'C') ? 2 : 1;
    return d;
}

Measure measure(const Word& w) {
    const std::string& s = w.plain();
    size_t disorder = 0;
    for (size_t i = 0; i < s.size(); ++i)
        for (size_t j = i + 1; j < s.size(); ++j)
            if ((s[i] == 'A' && s[j] == 'C') || (s[i] == 'C' && s[j] == 'B')) ++disorder;
    return Measure{s.size(), disorder};
}

bool CanonicalWordLess::operator()(const Word& a, const Word& b) const {
    int da = filtration_degree(a), db = filtration_degree(b);
    if (da != db) return da > db;
    if (a.size() != b.size()) return a.size() < b.size();
    return a.plain() < b.plain();
}

}  // namespace twistalg
