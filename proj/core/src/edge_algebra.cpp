#include "escher/edge_algebra.hpp"

#include "escher/error.hpp"

#include <algorithm>
#include <cctype>

namespace escher {

std::string_view to_string(Prototile p) noexcept {
    return p == Prototile::Alpha ? "alpha" : "beta";
}

EdgeSymbol::EdgeSymbol(Prototile prototile, int index) : prototile_(prototile) {
    if (index < 0 || index >= kPerPrototile) {
        throw Error(ErrorKind::InvalidArgument,
                    "edge index out of range: " + std::to_string(index));
    }
    index_ = static_cast<std::uint8_t>(index);
}

EdgeSymbol EdgeSymbol::from_ordinal(int ordinal) {
    if (ordinal < 0 || ordinal >= kCount) {
        throw Error(ErrorKind::InvalidArgument,
                    "edge ordinal out of range: " + std::to_string(ordinal));
    }
    return EdgeSymbol(ordinal < kPerPrototile ? Prototile::Alpha : Prototile::Beta,
                      ordinal % kPerPrototile);
}

EdgeSymbol EdgeSymbol::from_name(char name) {
    if (name < 'a' || name > 'p') {
        throw Error(ErrorKind::InvalidArgument, std::string("unknown edge symbol '") + name + "'");
    }
    return from_ordinal(name - 'a');
}

std::string EdgeTerm::to_string() const {
    std::string out;
    if (mirrored) out += '~';
    out += symbol.name();
    if (inverted) out += "^-1";
    return out;
}

Word::Word(std::vector<EdgeTerm> terms) : terms_(std::move(terms)) {
    if (terms_.empty()) throw Error(ErrorKind::InvalidArgument, "empty word");
}

Word Word::parse(std::string_view text) {
    std::vector<EdgeTerm> terms;
    std::size_t k = 0;
    while (k < text.size()) {
        if (std::isspace(static_cast<unsigned char>(text[k]))) {
            ++k;
            continue;
        }
        EdgeTerm term;
        if (text[k] == '~') {
            term.mirrored = true;
            ++k;
        }
        if (k >= text.size()) throw Error(ErrorKind::Parse, "dangling '~' in word");
        const char c = text[k++];
        if (c < 'a' || c > 'p') throw Error(ErrorKind::Parse, std::string("unexpected '") + c + "' in word");
        term.symbol = EdgeSymbol::from_name(c);
        if (text.substr(k, 3) == "^-1") {
            term.inverted = true;
            k += 3;
        }
        terms.push_back(term);
    }
    if (terms.empty()) throw Error(ErrorKind::Parse, "empty word");
    return Word(std::move(terms));
}

bool Word::is_plain() const noexcept {
    return std::all_of(terms_.begin(), terms_.end(), [](const EdgeTerm& t) { return t.is_plain(); });
}

std::string Word::to_string() const {
    std::string out;
    bool flagged = !is_plain();
    for (const auto& term : terms_) {
        if (flagged && !out.empty()) out += ' ';
        out += term.to_string();
    }
    return out;
}

Word mirror(const Word& w) {
    std::vector<EdgeTerm> terms;
    terms.reserve(w.size());
    for (const auto& t : w.terms()) terms.push_back(t.mirror());
    return Word(std::move(terms));
}

Word invert(const Word& w) {
    std::vector<EdgeTerm> terms;
    terms.reserve(w.size());
    for (auto it = w.terms().rbegin(); it != w.terms().rend(); ++it) terms.push_back(it->invert());
    return Word(std::move(terms));
}

Word dual(const Word& w) {
    return mirror(invert(w));
}

Word concat(const Word& lhs, const Word& rhs) {
    std::vector<EdgeTerm> terms(lhs.terms().begin(), lhs.terms().end());
    terms.insert(terms.end(), rhs.terms().begin(), rhs.terms().end());
    return Word(std::move(terms));
}

bool matches(const Word& lhs, const Word& rhs) {
    return lhs == dual(rhs);
}

namespace {

void require_same_length(const Word& lhs, const Word& rhs) {
    if (lhs.size() != rhs.size()) {
        throw Error(ErrorKind::Unsplittable,
                    "unsplittable product matching: " + lhs.to_string() + " vs " + rhs.to_string());
    }
}

} // namespace

std::vector<TermPair> split_match(const Word& lhs, const Word& rhs) {
    require_same_length(lhs, rhs);
    const std::size_t n = lhs.size();
    std::vector<TermPair> out;
    out.reserve(n);
    for (std::size_t k = 0; k < n; ++k) out.push_back({lhs[k], rhs[n - 1 - k]});
    return out;
}

std::vector<TermPair> split_equal(const Word& lhs, const Word& rhs) {
    require_same_length(lhs, rhs);
    if (!lhs.is_plain() || !rhs.is_plain()) {
        throw Error(ErrorKind::InvalidArgument, "split_equal needs unflagged terms");
    }
    std::vector<TermPair> out;
    out.reserve(lhs.size());
    for (std::size_t k = 0; k < lhs.size(); ++k) out.push_back({lhs[k], rhs[k]});
    return out;
}

} // namespace escher
