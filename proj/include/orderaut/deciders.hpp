#pragma once

#include <optional>
#include <string>
#include <utility>

#include <orderaut/automaton.hpp>
#include <orderaut/order.hpp>

namespace orderaut {

enum class Verdict
{
    yes,
    no,
    undecided, // resource limit reached before an answer
};

const char* to_string(Verdict v) noexcept;

// Answer plus certificate. A yes always carries a certificate that passes the
// matching verifier; note explains degenerate answers.
template <typename Certificate>
struct Witness
{
    Verdict verdict = Verdict::no;
    std::optional<Certificate> certificate;
    std::string note;

    bool yes() const noexcept { return verdict == Verdict::yes; }

    static Witness accept(Certificate c) { return {Verdict::yes, std::move(c), {}}; }
    static Witness reject(std::string why = {}) { return {Verdict::no, std::nullopt, std::move(why)}; }
};

using LinearWitness = Witness<LinearOrder>;
using CyclicWitness = Witness<CyclicOrder>;
using PartialWitness = Witness<PartialOrderRelation>;

inline constexpr std::size_t default_linear_limit = 10;
inline constexpr std::size_t default_cyclic_limit = 11;

// The requested brute force would exceed its configured state limit.
class LimitExceeded : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

// One letter only. Monotonic iff the letter's functional graph has no cycle
// of length >= 2; the certificate lists each tree (roots ascending) in
// reverse inverse-BFS order. O(|Q|).
LinearWitness decide_unary_monotonic(const Automaton& a);

// One letter only. Oriented iff all cycles have equal length; the certificate
// is the level-placement construction over the inverse BFS. O(|Q|).
CyclicWitness decide_unary_oriented(const Automaton& a);

// Lexicographically first preserved ranking among all n! permutations.
LinearWitness decide_monotonic_bruteforce(const Automaton& a, std::size_t limit = default_linear_limit);

// Lexicographically first preserved cycle among the (n-1)! cycles starting at 0.
CyclicWitness decide_oriented_bruteforce(const Automaton& a, std::size_t limit = default_cyclic_limit);

// Least preserved relation containing rel and seed = (p, q) meaning p < q.
// nullopt on contradiction (a cycle in the order would be required).
std::optional<PartialOrderRelation> propagate_closure(const PartialOrderRelation& rel,
                                                      const Automaton& a,
                                                      std::pair<State, State> seed);

// Branch on the least incomparable pair, x < y first, propagating each
// choice. Complete; exponential in the worst case.
LinearWitness decide_monotonic_backtracking(const Automaton& a);

// First ordered seed (p, q) whose closure is consistent. Polynomial.
PartialWitness find_nontrivial_partial_order(const Automaton& a);

LinearWitness decide_monotonic(const Automaton& a);

// Unary: exact. Otherwise a linear certificate if monotonic, else cyclic
// brute force up to cyclic_limit states, else undecided.
CyclicWitness decide_oriented(const Automaton& a, std::size_t cyclic_limit = default_cyclic_limit);

} // namespace orderaut
