#include <orderaut/automaton.hpp>

#include <numeric>
#include <ostream>
#include <random>
#include <sstream>

#include "text_lines.hpp"

namespace orderaut {

namespace {

std::string with_line(std::size_t line, const std::string& what)
{
    if (line == 0) {
        return what;
    }
    return "line " + std::to_string(line) + ": " + what;
}

} // namespace

ParseError::ParseError(std::size_t line, const std::string& what) :
    std::runtime_error(with_line(line, what)),
    line_(line)
{
}

Automaton::Automaton(std::size_t n_states, std::size_t n_letters, std::vector<State> table) :
    n_states_(n_states),
    n_letters_(n_letters),
    table_(std::move(table))
{
    if (n_states_ == 0 || n_letters_ == 0) {
        throw std::invalid_argument("automaton needs at least one state and one letter");
    }
    if (table_.size() != n_states_ * n_letters_) {
        throw std::invalid_argument("transition table size does not match dimensions");
    }
    for (State target : table_) {
        if (target >= n_states_) {
            throw std::invalid_argument("transition to state " + std::to_string(target) +
                                        " out of range");
        }
    }
}

Automaton Automaton::from_rows(const std::vector<std::vector<State>>& rows)
{
    if (rows.empty() || rows.front().empty()) {
        throw std::invalid_argument("automaton needs at least one state and one letter");
    }
    const std::size_t k = rows.front().size();
    std::vector<State> table;
    table.reserve(rows.size() * k);
    for (const auto& r : rows) {
        if (r.size() != k) {
            throw std::invalid_argument("ragged transition rows");
        }
        table.insert(table.end(), r.begin(), r.end());
    }
    return Automaton(rows.size(), k, std::move(table));
}

Automaton Automaton::unary(std::vector<State> images)
{
    const std::size_t n = images.size();
    return Automaton(n, 1, std::move(images));
}

Automaton Automaton::identity(std::size_t n_states, std::size_t n_letters)
{
    std::vector<State> table(n_states * n_letters);
    for (std::size_t q = 0; q < n_states; ++q) {
        for (std::size_t a = 0; a < n_letters; ++a) {
            table[q * n_letters + a] = static_cast<State>(q);
        }
    }
    return Automaton(n_states, n_letters, std::move(table));
}

std::vector<State> Automaton::column(Letter a) const
{
    std::vector<State> images(n_states_);
    for (std::size_t q = 0; q < n_states_; ++q) {
        images[q] = table_[q * n_letters_ + a];
    }
    return images;
}

Automaton parse_automaton(std::istream& in)
{
    const auto lines = detail::read_number_lines(in);
    if (lines.empty()) {
        throw ParseError(0, "empty input: expected header 'n k'");
    }
    const auto& header = lines.front();
    if (header.values.size() != 2) {
        throw ParseError(header.line_no, "header must be 'n k'");
    }
    const std::uint64_t n = header.values[0];
    const std::uint64_t k = header.values[1];
    if (n == 0 || k == 0) {
        throw ParseError(header.line_no, "state and letter counts must be positive");
    }
    if (n > (1u << 24) || k > (1u << 24) || n * k > (1u << 28)) {
        throw ParseError(header.line_no, "automaton too large");
    }
    if (lines.size() - 1 != n) {
        const std::size_t at = lines.size() - 1 > n ? lines[n + 1].line_no : lines.back().line_no;
        throw ParseError(at, "expected " + std::to_string(n) + " transition rows, found " +
                                 std::to_string(lines.size() - 1));
    }

    std::vector<State> table;
    table.reserve(n * k);
    for (std::size_t q = 0; q < n; ++q) {
        const auto& row = lines[q + 1];
        if (row.values.size() != k) {
            throw ParseError(row.line_no, "expected " + std::to_string(k) + " entries, found " +
                                              std::to_string(row.values.size()));
        }
        for (std::uint64_t target : row.values) {
            if (target >= n) {
                throw ParseError(row.line_no, "entry " + std::to_string(target) + " out of range");
            }
            table.push_back(static_cast<State>(target));
        }
    }
    return Automaton(n, k, std::move(table));
}

Automaton parse_automaton(std::string_view text)
{
    std::istringstream in{std::string(text)};
    return parse_automaton(in);
}

void write_automaton(std::ostream& out, const Automaton& a)
{
    out << a.n_states() << ' ' << a.n_letters() << '\n';
    for (State q = 0; q < a.n_states(); ++q) {
        const auto r = a.row(q);
        for (std::size_t i = 0; i < r.size(); ++i) {
            if (i != 0) {
                out << ' ';
            }
            out << r[i];
        }
        out << '\n';
    }
}

std::string serialize_automaton(const Automaton& a)
{
    std::ostringstream out;
    write_automaton(out, a);
    return out.str();
}

State apply_letter(const Automaton& a, State q, Letter letter)
{
    if (q >= a.n_states()) {
        throw std::out_of_range("state " + std::to_string(q) + " out of range");
    }
    if (letter >= a.n_letters()) {
        throw std::out_of_range("letter " + std::to_string(letter) + " out of range");
    }
    return a.next(q, letter);
}

State apply_word(const Automaton& a, State q, std::span<const Letter> word)
{
    if (q >= a.n_states()) {
        throw std::out_of_range("state " + std::to_string(q) + " out of range");
    }
    return std::accumulate(word.begin(), word.end(), q,
                           [&a](State cur, Letter l) { return apply_letter(a, cur, l); });
}

Automaton random_automaton(std::size_t n_states, std::size_t n_letters, std::uint64_t seed)
{
    if (n_states == 0 || n_letters == 0) {
        throw std::invalid_argument("automaton needs at least one state and one letter");
    }
    // Reduction by modulo rather than std::uniform_int_distribution keeps the
    // output identical across standard library implementations.
    std::mt19937_64 rng(seed);
    std::vector<State> table(n_states * n_letters);
    for (auto& entry : table) {
        entry = static_cast<State>(rng() % n_states);
    }
    return Automaton(n_states, n_letters, std::move(table));
}

} // namespace orderaut
