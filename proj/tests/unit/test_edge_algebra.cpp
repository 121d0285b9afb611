#include "escher/edge_algebra.hpp"
#include "escher/error.hpp"
#include "generators.hpp"

#include <gtest/gtest.h>

using namespace escher;

namespace {

EdgeSymbol sym(char c) { return EdgeSymbol::from_name(c); }

void expect_kind(ErrorKind kind, auto&& fn) {
    try {
        fn();
        ADD_FAILURE() << "no exception";
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), kind) << e.what();
    }
}

} // namespace

TEST(EdgeSymbol, NamesAndOrdinals) {
    EXPECT_EQ(sym('a').ordinal(), 0);
    EXPECT_EQ(sym('p').ordinal(), 15);
    EXPECT_EQ(sym('i').prototile(), Prototile::Beta);
    EXPECT_EQ(sym('i').index(), 0);
    EXPECT_EQ(sym('c').on(Prototile::Beta), sym('k'));
    EXPECT_LT(sym('a'), sym('b'));
    for (int k = 0; k < EdgeSymbol::kCount; ++k) EXPECT_EQ(EdgeSymbol::from_ordinal(k).ordinal(), k);
}

TEST(EdgeSymbol, RejectsOutOfRange) {
    expect_kind(ErrorKind::InvalidArgument, [] { EdgeSymbol::from_ordinal(16); });
    expect_kind(ErrorKind::InvalidArgument, [] { EdgeSymbol(Prototile::Alpha, 8); });
    expect_kind(ErrorKind::InvalidArgument, [] { EdgeSymbol::from_name('q'); });
}

TEST(Word, ParseAndPrint) {
    EXPECT_EQ(Word::parse("ha").to_string(), "ha");
    EXPECT_EQ(Word::parse("~a b^-1").to_string(), "~a b^-1");
    EXPECT_EQ(Word::parse("~ab^-1"), Word::parse("~a b^-1"));
    EXPECT_EQ(Word::parse("ha").size(), 2u);
    expect_kind(ErrorKind::Parse, [] { Word::parse(""); });
    expect_kind(ErrorKind::Parse, [] { Word::parse("a^"); });
    expect_kind(ErrorKind::Parse, [] { Word::parse("z"); });
}

TEST(Word, DualReversesAndFlips) {
    EXPECT_EQ(dual(Word::parse("ha")), Word::parse("~a^-1 ~h^-1"));
    EXPECT_EQ(mirror(Word::parse("ha")), Word::parse("~h ~a"));
    EXPECT_EQ(invert(Word::parse("ha")), Word::parse("a^-1 h^-1"));
    EXPECT_TRUE(matches(Word::parse("a"), Word::parse("~a^-1")));
    EXPECT_FALSE(matches(Word::parse("a"), Word::parse("a")));
}

TEST(Word, SplitMatchReversesIndex) {
    const auto parts = split_match(Word::parse("pa"), Word::parse("lm"));
    ASSERT_EQ(parts.size(), 2u);
    EXPECT_EQ(parts[0].first.symbol, sym('p'));
    EXPECT_EQ(parts[0].second.symbol, sym('m'));
    EXPECT_EQ(parts[1].first.symbol, sym('a'));
    EXPECT_EQ(parts[1].second.symbol, sym('l'));
    expect_kind(ErrorKind::Unsplittable, [] { split_match(Word::parse("pa"), Word::parse("l")); });
}

TEST(Word, SplitEqualIsComponentwise) {
    const auto parts = split_equal(Word::parse("pa"), Word::parse("lm"));
    ASSERT_EQ(parts.size(), 2u);
    EXPECT_EQ(parts[0].second.symbol, sym('l'));
    EXPECT_EQ(parts[1].second.symbol, sym('m'));
    expect_kind(ErrorKind::Unsplittable, [] { split_equal(Word::parse("abc"), Word::parse("ab")); });
    expect_kind(ErrorKind::InvalidArgument, [] { split_equal(Word::parse("~a b"), Word::parse("ab")); });
}

TEST(WordProperty, InvolutionsAndDistribution) {
    std::mt19937_64 rng(11);
    for (int n = 0; n < 2000; ++n) {
        const Word u = gen::random_word(rng);
        const Word v = gen::random_word(rng);
        EXPECT_EQ(mirror(mirror(u)), u);
        EXPECT_EQ(invert(invert(u)), u);
        EXPECT_EQ(dual(dual(u)), u);
        EXPECT_EQ(mirror(concat(u, v)), concat(mirror(u), mirror(v)));
        EXPECT_EQ(invert(concat(u, v)), concat(invert(v), invert(u)));
        EXPECT_EQ(dual(u), mirror(invert(u)));
        EXPECT_TRUE(matches(u, dual(u)));
    }
}

TEST(WordProperty, SplitMatchReassembles) {
    std::mt19937_64 rng(12);
    for (int n = 0; n < 2000; ++n) {
        const Word u = gen::random_word(rng);
        const Word v = dual(u);
        for (const auto& tp : split_match(u, v)) EXPECT_EQ(tp.first, tp.second.dual());
    }
}
