#include <gtest/gtest.h>

#include <random>

#include <orderaut/automaton.hpp>

using namespace orderaut;

namespace {

const Automaton nine_state = Automaton::unary({3, 5, 7, 7, 8, 8, 0, 1, 1});

} // namespace

TEST(ParseAutomaton, TwoStatesOneLetter)
{
    const Automaton a = parse_automaton("2 1\n0\n0\n");
    EXPECT_EQ(a.n_states(), 2u);
    EXPECT_EQ(a.n_letters(), 1u);
    EXPECT_EQ(a, Automaton::from_rows({{0}, {0}}));
}

TEST(ParseAutomaton, Singleton)
{
    EXPECT_EQ(parse_automaton("1 1\n0\n"), Automaton::from_rows({{0}}));
}

TEST(ParseAutomaton, CommentsAndBlankLines)
{
    const Automaton a = parse_automaton("# swap\n2 2   # header\n\n1 0\n  0 1 # row 1\n\n");
    EXPECT_EQ(a, Automaton::from_rows({{1, 0}, {0, 1}}));
}

TEST(ParseAutomaton, OutOfRangeEntryReportsLine)
{
    try {
        parse_automaton("2 1\n5\n0\n");
        FAIL() << "expected ParseError";
    } catch (const ParseError& e) {
        EXPECT_EQ(e.line(), 2u);
        EXPECT_NE(std::string(e.what()).find("entry 5 out of range"), std::string::npos);
    }
}

TEST(ParseAutomaton, Malformed)
{
    EXPECT_THROW(parse_automaton(""), ParseError);
    EXPECT_THROW(parse_automaton("2\n0\n0\n"), ParseError);
    EXPECT_THROW(parse_automaton("0 1\n"), ParseError);
    EXPECT_THROW(parse_automaton("2 1\n0\n"), ParseError);
    EXPECT_THROW(parse_automaton("2 1\n0\n0\n1\n"), ParseError);
    EXPECT_THROW(parse_automaton("2 2\n0 1\n0\n"), ParseError);
    EXPECT_THROW(parse_automaton("2 1\n-1\n0\n"), ParseError);
    EXPECT_THROW(parse_automaton("2 1\nx\n0\n"), ParseError);

    try {
        parse_automaton("3 1\n0\n0 1\n0\n");
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_EQ(e.line(), 3u);
    }
}

TEST(SerializeAutomaton, Canonical)
{
    EXPECT_EQ(serialize_automaton(Automaton::from_rows({{0}})), "1 1\n0\n");
    EXPECT_EQ(serialize_automaton(Automaton::from_rows({{1, 0}, {0, 1}})), "2 2\n1 0\n0 1\n");
    EXPECT_EQ(serialize_automaton(parse_automaton("#c\n2  1\n\n1 # x\n0\n")), "2 1\n1\n0\n");
}

TEST(SerializeAutomaton, RoundTripRandom)
{
    std::mt19937 rng(11);
    for (int t = 0; t < 200; ++t) {
        const std::size_t n = 1 + rng() % 12;
        const std::size_t k = 1 + rng() % 4;
        const Automaton a = random_automaton(n, k, rng());
        EXPECT_EQ(parse_automaton(serialize_automaton(a)), a);
    }
}

TEST(Automaton, ConstructorValidates)
{
    EXPECT_THROW(Automaton(0, 1, {}), std::invalid_argument);
    EXPECT_THROW(Automaton(1, 0, {}), std::invalid_argument);
    EXPECT_THROW(Automaton(2, 1, {0}), std::invalid_argument);
    EXPECT_THROW(Automaton(2, 1, {0, 2}), std::invalid_argument);
}

TEST(ApplyLetter, Basics)
{
    const Automaton id = Automaton::identity(4, 3);
    for (State q = 0; q < 4; ++q) {
        for (Letter l = 0; l < 3; ++l) {
            EXPECT_EQ(apply_letter(id, q, l), q);
        }
    }
    EXPECT_EQ(apply_letter(Automaton::unary({1, 0}), 0, 0), 1u);
    // v_2 -> v_6
    EXPECT_EQ(apply_letter(nine_state, 1, 0), 5u);
    EXPECT_THROW(apply_letter(id, 4, 0), std::out_of_range);
    EXPECT_THROW(apply_letter(id, 0, 3), std::out_of_range);
}

TEST(ApplyWord, Basics)
{
    const Automaton swap = Automaton::unary({1, 0});
    const Automaton sink = Automaton::unary({1, 1});
    EXPECT_EQ(apply_word(swap, 1, {}), 1u);
    const std::vector<Letter> aa{0, 0};
    const std::vector<Letter> aaa{0, 0, 0};
    EXPECT_EQ(apply_word(swap, 0, aa), 0u);
    EXPECT_EQ(apply_word(sink, 0, aaa), 1u);
    const std::vector<Letter> bad{0, 1};
    EXPECT_THROW(apply_word(swap, 0, bad), std::out_of_range);
}

TEST(ApplyWord, FoldIsAssociative)
{
    std::mt19937 rng(5);
    for (int t = 0; t < 300; ++t) {
        const std::size_t n = 1 + rng() % 8;
        const std::size_t k = 1 + rng() % 3;
        const Automaton a = random_automaton(n, k, rng());
        std::vector<Letter> u(rng() % 6), v(rng() % 6);
        for (auto& l : u) l = rng() % k;
        for (auto& l : v) l = rng() % k;
        std::vector<Letter> uv = u;
        uv.insert(uv.end(), v.begin(), v.end());
        const State q = rng() % n;
        EXPECT_EQ(apply_word(a, q, uv), apply_word(a, apply_word(a, q, u), v));
    }
}

TEST(RandomAutomaton, DeterministicAndValid)
{
    EXPECT_EQ(random_automaton(1, 1, 12345), Automaton::from_rows({{0}}));
    const Automaton x = random_automaton(5, 2, 7);
    const Automaton y = random_automaton(5, 2, 7);
    EXPECT_EQ(x, y);
    EXPECT_EQ(x.n_states(), 5u);
    EXPECT_EQ(x.n_letters(), 2u);
    EXPECT_EQ(parse_automaton(serialize_automaton(x)), x);
    EXPECT_NE(random_automaton(5, 2, 8), x);
    EXPECT_THROW(random_automaton(0, 2, 1), std::invalid_argument);
}
