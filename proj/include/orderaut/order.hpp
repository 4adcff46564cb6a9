#pragma once

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <orderaut/automaton.hpp>

namespace orderaut {

// Order and automaton disagree on the number of states.
class DimensionMismatch : public std::invalid_argument
{
public:
    using std::invalid_argument::invalid_argument;
};

// A PartialOrderRelation that is not irreflexive, antisymmetric and
// transitively closed.
class InvalidRelation : public std::invalid_argument
{
public:
    using std::invalid_argument::invalid_argument;
};

// A total order on states given least-first: ranking()[r] is the state of
// rank r. Construction rejects anything that is not a permutation.
class LinearOrder
{
public:
    explicit LinearOrder(std::vector<State> ranking);

    static LinearOrder identity(std::size_t n);

    std::size_t size() const noexcept { return ranking_.size(); }
    const std::vector<State>& ranking() const noexcept { return ranking_; }
    std::size_t rank(State q) const { return rank_.at(q); }
    bool precedes(State p, State q) const { return rank(p) < rank(q); }

    friend bool operator==(const LinearOrder& x, const LinearOrder& y) { return x.ranking_ == y.ranking_; }

private:
    std::vector<State> ranking_;
    std::vector<std::size_t> rank_;
};

// A circular arrangement of all states. Equality is up to rotation.
class CyclicOrder
{
public:
    explicit CyclicOrder(std::vector<State> cycle);

    // Reads a linear order as a cycle (the greatest state wraps to the least).
    static CyclicOrder from_linear(const LinearOrder& ord);

    std::size_t size() const noexcept { return cycle_.size(); }
    const std::vector<State>& cycle() const noexcept { return cycle_; }
    std::size_t position(State q) const { return position_.at(q); }

    friend bool operator==(const CyclicOrder& x, const CyclicOrder& y);

private:
    std::vector<State> cycle_;
    std::vector<std::size_t> position_;
};

// Strict order on states as a dense relation matrix. The container itself
// does not enforce the order axioms so that verification can report them;
// propagate_closure only ever produces closed, consistent relations.
class PartialOrderRelation
{
public:
    explicit PartialOrderRelation(std::size_t n_states);

    // Raw edges, no closure taken.
    static PartialOrderRelation from_edges(std::size_t n_states,
                                           std::span<const std::pair<State, State>> edges);
    static PartialOrderRelation from_linear(const LinearOrder& ord);

    std::size_t size() const noexcept { return n_; }
    bool less(State p, State q) const noexcept { return rel_[p * n_ + q] != 0; }
    bool comparable(State p, State q) const noexcept { return less(p, q) || less(q, p); }
    void insert(State p, State q) noexcept { rel_[p * n_ + q] = 1; }

    std::size_t edge_count() const noexcept;
    bool empty() const noexcept { return edge_count() == 0; }

    // Lexicographically sorted (p, q) pairs with p < q in the relation.
    std::vector<std::pair<State, State>> edges() const;

    // Lexicographically least unordered pair {x, y}, x < y as indices, that is
    // not comparable; nullopt when the relation is total.
    std::optional<std::pair<State, State>> first_incomparable() const;

    // Human-readable description of the first violated axiom, if any.
    std::optional<std::string> invariant_violation() const;

    // For a total strict order: the induced ranking. nullopt otherwise.
    std::optional<LinearOrder> to_linear() const;

    friend bool operator==(const PartialOrderRelation&, const PartialOrderRelation&) = default;

private:
    std::size_t n_;
    std::vector<unsigned char> rel_;
};

// Adjacent-rank check, O(|letters| * |states|).
bool verify_linear_order(const Automaton& a, const LinearOrder& ord);

// Per letter: positions of the images read along the cycle, with cyclically
// adjacent duplicates removed, may descend at most once around the circle.
bool verify_cyclic_order(const Automaton& a, const CyclicOrder& ord);

// Every edge p < q maps to equal states or to another edge, under every letter.
// Throws DimensionMismatch or InvalidRelation for malformed input.
bool verify_partial_order(const Automaton& a, const PartialOrderRelation& rel);

// Rotation that starts with state 0.
CyclicOrder canonical_cyclic(const CyclicOrder& ord);

// Order text format: whitespace-separated state indices on one line.
std::vector<State> parse_state_list(std::string_view text);
std::string format_state_list(std::span<const State> states);
std::string format_order(const LinearOrder& ord);
// Emitted in canonical rotation.
std::string format_order(const CyclicOrder& ord);
// "p<q" tokens separated by spaces, lexicographic.
std::string format_relation(const PartialOrderRelation& rel);

} // namespace orderaut
