#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace orderaut {

using State = std::uint32_t;
using Letter = std::uint32_t;

// Raised for malformed .aut / .nae text. line() is 1-based, 0 when unknown.
class ParseError : public std::runtime_error
{
public:
    ParseError(std::size_t line, const std::string& what);

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

// A complete deterministic semiautomaton: no initial or accepting states.
// The transition table is stored row-major, row q holding the images of q
// under every letter.
class Automaton
{
public:
    // Throws std::invalid_argument if a dimension is zero, the table has the
    // wrong size, or an entry is not a valid state.
    Automaton(std::size_t n_states, std::size_t n_letters, std::vector<State> table);

    // Convenience for tests and small literals: rows[q][letter].
    static Automaton from_rows(const std::vector<std::vector<State>>& rows);

    // n states, one letter, delta(q) = images[q].
    static Automaton unary(std::vector<State> images);

    static Automaton identity(std::size_t n_states, std::size_t n_letters = 1);

    std::size_t n_states() const noexcept { return n_states_; }
    std::size_t n_letters() const noexcept { return n_letters_; }

    State next(State q, Letter a) const noexcept { return table_[q * n_letters_ + a]; }

    std::span<const State> row(State q) const noexcept
    {
        return {table_.data() + q * n_letters_, n_letters_};
    }

    // Image of every state under letter a, indexed by state.
    std::vector<State> column(Letter a) const;

    const std::vector<State>& table() const noexcept { return table_; }

    friend bool operator==(const Automaton&, const Automaton&) = default;

private:
    std::size_t n_states_;
    std::size_t n_letters_;
    std::vector<State> table_;
};

Automaton parse_automaton(std::istream& in);
Automaton parse_automaton(std::string_view text);

std::string serialize_automaton(const Automaton& a);
void write_automaton(std::ostream& out, const Automaton& a);

// Bounds-checked single step. Throws std::out_of_range.
State apply_letter(const Automaton& a, State q, Letter letter);

// Left-to-right fold of apply_letter; the empty word leaves q unchanged.
State apply_word(const Automaton& a, State q, std::span<const Letter> word);

// Uniform table entries from a 64-bit Mersenne twister seeded by seed.
Automaton random_automaton(std::size_t n_states, std::size_t n_letters, std::uint64_t seed);

} // namespace orderaut
