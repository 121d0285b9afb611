#pragma once

// Symbolic algebra of perturbed edges.
//
// A perturbed edge is named by an EdgeSymbol (a..h on the Alpha prototile,
// i..p on Beta). Two orientation operators act on it: mirror (left-right
// reflection, written ~a) and invert (upside-down reflection, written a^-1).
// A product of edges is a Word. The laws implemented here are
//
//   ~~w = w,  (w^-1)^-1 = w,  ~(uv) = ~u ~v,  (uv)^-1 = v^-1 u^-1,
//
// and two edges abut in a tiling (a "matching" a/b) exactly when a = ~(b^-1),
// i.e. a = dual(b).

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace escher {

enum class Prototile : std::uint8_t { Alpha = 0, Beta = 1 };

constexpr Prototile other(Prototile p) noexcept {
    return p == Prototile::Alpha ? Prototile::Beta : Prototile::Alpha;
}

std::string_view to_string(Prototile p) noexcept;

class EdgeSymbol {
public:
    static constexpr int kPerPrototile = 8;
    static constexpr int kCount = 16;

    constexpr EdgeSymbol() = default;
    EdgeSymbol(Prototile prototile, int index);

    /// 0..15 in canonical order a < b < ... < p.
    static EdgeSymbol from_ordinal(int ordinal);
    static EdgeSymbol from_name(char name);

    constexpr Prototile prototile() const noexcept { return prototile_; }
    constexpr int index() const noexcept { return index_; }
    constexpr int ordinal() const noexcept {
        return static_cast<int>(prototile_) * kPerPrototile + index_;
    }
    char name() const noexcept { return static_cast<char>('a' + ordinal()); }

    /// Same edge position on the given prototile.
    EdgeSymbol on(Prototile p) const { return EdgeSymbol(p, index_); }

    friend constexpr auto operator<=>(const EdgeSymbol&, const EdgeSymbol&) = default;

private:
    Prototile prototile_ = Prototile::Alpha;
    std::uint8_t index_ = 0;
};

struct EdgeTerm {
    EdgeSymbol symbol;
    bool mirrored = false;
    bool inverted = false;

    EdgeTerm mirror() const noexcept { return {symbol, !mirrored, inverted}; }
    EdgeTerm invert() const noexcept { return {symbol, mirrored, !inverted}; }
    EdgeTerm dual() const noexcept { return {symbol, !mirrored, !inverted}; }
    bool is_plain() const noexcept { return !mirrored && !inverted; }

    std::string to_string() const;

    friend constexpr auto operator<=>(const EdgeTerm&, const EdgeTerm&) = default;
};

/// Non-empty ordered product of edge terms.
class Word {
public:
    explicit Word(std::vector<EdgeTerm> terms);
    explicit Word(EdgeTerm term) : terms_{term} {}
    explicit Word(EdgeSymbol symbol) : terms_{EdgeTerm{symbol}} {}

    /// Parses a sequence of terms such as "ha", "~a b^-1" (spaces optional).
    static Word parse(std::string_view text);

    std::size_t size() const noexcept { return terms_.size(); }
    std::span<const EdgeTerm> terms() const noexcept { return terms_; }
    const EdgeTerm& operator[](std::size_t k) const { return terms_[k]; }
    bool is_plain() const noexcept;

    std::string to_string() const;

    friend bool operator==(const Word&, const Word&) = default;

private:
    std::vector<EdgeTerm> terms_;
};

Word mirror(const Word& w);
Word invert(const Word& w);
Word dual(const Word& w);
Word concat(const Word& lhs, const Word& rhs);

/// Word-level matching lhs/rhs, i.e. lhs == dual(rhs).
bool matches(const Word& lhs, const Word& rhs);

struct TermPair {
    EdgeTerm first;
    EdgeTerm second;

    friend constexpr auto operator<=>(const TermPair&, const TermPair&) = default;
};

/// Splits a matching of two equal-length products into per-term matchings:
/// (lhs[k], rhs[n-1-k]). Throws Error{Unsplittable} on a length mismatch.
std::vector<TermPair> split_match(const Word& lhs, const Word& rhs);

/// Splits an equality of two equal-length plain products componentwise:
/// (lhs[k], rhs[k]). Throws Error{Unsplittable} on a length mismatch and
/// Error{InvalidArgument} if a term carries an orientation flag.
std::vector<TermPair> split_equal(const Word& lhs, const Word& rhs);

} // namespace escher
