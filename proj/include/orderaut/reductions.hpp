#pragma once

#include <array>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <orderaut/automaton.hpp>
#include <orderaut/order.hpp>

namespace orderaut {

// MONOTONE-NAE-3SAT: every clause is three distinct positive literals and is
// satisfied when they are not all equal. Variables are 1-based; the order of
// variables inside a clause matters to the gadget construction.
struct NaeInstance
{
    std::size_t n_vars = 0;
    std::vector<std::array<std::size_t, 3>> clauses;

    // Throws std::invalid_argument unless every index is in [1, n_vars], no
    // clause repeats a variable and every variable occurs somewhere.
    void validate() const;

    std::size_t n_clauses() const noexcept { return clauses.size(); }
};

// sigma[i] is the value of variable i + 1.
using Assignment = std::vector<bool>;

NaeInstance parse_nae(std::istream& in);
NaeInstance parse_nae(std::string_view text);
std::string serialize_nae(const NaeInstance& inst);

bool nae_satisfies(const NaeInstance& inst, const Assignment& sigma);

inline constexpr std::size_t nae_bruteforce_limit = 24;

// Least satisfying assignment in lexicographic order (variable 1 most
// significant), or nullopt. Throws LimitExceeded beyond nae_bruteforce_limit.
std::optional<Assignment> nae_bruteforce(const NaeInstance& inst);

// Index layout of the gadget automaton. Arguments are 1-based as in the
// instance (variable i, clause j).
//   p_i = 2(i-1), q_i = 2(i-1)+1
//   x_j = 2n+3(j-1), y_j = x_j+1, z_j = x_j+2
//   s   = 2n+3m
//   letters a_j = 3(j-1), b_j = a_j+1, c_j = a_j+2
struct GadgetLayout
{
    std::size_t n_vars;
    std::size_t n_clauses;

    explicit GadgetLayout(const NaeInstance& inst) :
        n_vars(inst.n_vars), n_clauses(inst.n_clauses())
    {
    }

    State p(std::size_t i) const noexcept { return static_cast<State>(2 * (i - 1)); }
    State q(std::size_t i) const noexcept { return static_cast<State>(2 * (i - 1) + 1); }
    State x(std::size_t j) const noexcept { return static_cast<State>(2 * n_vars + 3 * (j - 1)); }
    State y(std::size_t j) const noexcept { return x(j) + 1; }
    State z(std::size_t j) const noexcept { return x(j) + 2; }
    State sink() const noexcept { return static_cast<State>(2 * n_vars + 3 * n_clauses); }
    Letter a(std::size_t j) const noexcept { return static_cast<Letter>(3 * (j - 1)); }
    Letter b(std::size_t j) const noexcept { return a(j) + 1; }
    Letter c(std::size_t j) const noexcept { return a(j) + 2; }

    std::size_t n_states() const noexcept { return 2 * n_vars + 3 * n_clauses + 1; }
    std::size_t n_letters() const noexcept { return 3 * n_clauses; }

    // "p1", "q1", ..., "x1", "y1", "z1", ..., "s".
    std::vector<std::string> state_names() const;
};

// The clause-gadget automaton: monotonic iff the instance is satisfiable.
Automaton reduce_nae_to_automaton(const NaeInstance& inst);

// Preserved order on the gadget automaton built from a satisfying sigma.
// Throws std::invalid_argument if sigma does not satisfy inst.
LinearOrder assignment_to_order(const NaeInstance& inst, const Assignment& sigma);

// sigma(v_i) = 0 iff p_i precedes q_i. Throws std::invalid_argument unless
// ord is preserved by the gadget automaton.
Assignment order_to_assignment(const NaeInstance& inst, const LinearOrder& ord);

// Two-letter automaton with k*n + 1 states, monotonic iff a is. Letter 0
// shifts layer i to i + 1 (the last layer to the sink), letter 1 acts as
// letter i of a inside layer i. q^i_j sits at (i-1)*n + (j-1), the sink at k*n.
// Throws std::invalid_argument when a has fewer than three letters.
Automaton reduce_to_binary(const Automaton& a);
std::vector<std::string> binary_state_names(std::size_t n_states, std::size_t n_letters);

// a plus a new state n fixed by every letter.
Automaton add_sink(const Automaton& a);
std::vector<std::string> sink_state_names(std::size_t n_states);

// Sidecar map: one "index name" line per state.
void write_state_names(std::ostream& out, const std::vector<std::string>& names);

std::string format_assignment(const Assignment& sigma);

} // namespace orderaut
