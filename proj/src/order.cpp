#include <orderaut/order.hpp>

#include <algorithm>
#include <sstream>

#include "order_check.hpp"

namespace orderaut {

namespace {

std::vector<std::size_t> inverse_permutation(const std::vector<State>& perm, const char* what)
{
    constexpr auto unset = static_cast<std::size_t>(-1);
    std::vector<std::size_t> inv(perm.size(), unset);
    for (std::size_t i = 0; i < perm.size(); ++i) {
        const State q = perm[i];
        if (q >= perm.size()) {
            throw std::invalid_argument(std::string(what) + ": state " + std::to_string(q) +
                                        " out of range");
        }
        if (inv[q] != unset) {
            throw std::invalid_argument(std::string(what) + ": state " + std::to_string(q) +
                                        " repeated");
        }
        inv[q] = i;
    }
    return inv;
}

void check_dimensions(const Automaton& a, std::size_t order_size)
{
    if (a.n_states() != order_size) {
        throw DimensionMismatch("order covers " + std::to_string(order_size) +
                                " states, automaton has " + std::to_string(a.n_states()));
    }
}

} // namespace

namespace detail {

bool ranking_preserved(const Automaton& a, std::span<const State> ranking,
                       std::span<const std::size_t> rank)
{
    // Adjacent pairs suffice: the order is transitive.
    for (Letter l = 0; l < a.n_letters(); ++l) {
        for (std::size_t i = 0; i + 1 < ranking.size(); ++i) {
            if (rank[a.next(ranking[i], l)] > rank[a.next(ranking[i + 1], l)]) {
                return false;
            }
        }
    }
    return true;
}

bool cycle_preserved(const Automaton& a, std::span<const State> cycle,
                     std::span<const std::size_t> position, std::vector<std::size_t>& seq)
{
    seq.reserve(cycle.size());
    for (Letter l = 0; l < a.n_letters(); ++l) {
        seq.clear();
        for (State q : cycle) {
            const std::size_t pos = position[a.next(q, l)];
            if (seq.empty() || seq.back() != pos) {
                seq.push_back(pos);
            }
        }
        while (seq.size() > 1 && seq.back() == seq.front()) {
            seq.pop_back();
        }
        // Once adjacent repeats are gone, a repeated value would need a
        // second descent, so at most one descent means a strictly increasing
        // run around some rotation.
        std::size_t descents = 0;
        for (std::size_t i = 0; i < seq.size(); ++i) {
            if (seq[(i + 1) % seq.size()] < seq[i]) {
                ++descents;
            }
        }
        if (descents > 1) {
            return false;
        }
    }
    return true;
}

} // namespace detail

LinearOrder::LinearOrder(std::vector<State> ranking) :
    ranking_(std::move(ranking)),
    rank_(inverse_permutation(ranking_, "linear order"))
{
    if (ranking_.empty()) {
        throw std::invalid_argument("linear order: empty");
    }
}

LinearOrder LinearOrder::identity(std::size_t n)
{
    std::vector<State> r(n);
    for (std::size_t i = 0; i < n; ++i) {
        r[i] = static_cast<State>(i);
    }
    return LinearOrder(std::move(r));
}

CyclicOrder::CyclicOrder(std::vector<State> cycle) :
    cycle_(std::move(cycle)),
    position_(inverse_permutation(cycle_, "cyclic order"))
{
    if (cycle_.empty()) {
        throw std::invalid_argument("cyclic order: empty");
    }
}

CyclicOrder CyclicOrder::from_linear(const LinearOrder& ord)
{
    return CyclicOrder(ord.ranking());
}

bool operator==(const CyclicOrder& x, const CyclicOrder& y)
{
    return canonical_cyclic(x).cycle_ == canonical_cyclic(y).cycle_;
}

PartialOrderRelation::PartialOrderRelation(std::size_t n_states) :
    n_(n_states),
    rel_(n_states * n_states, 0)
{
}

PartialOrderRelation PartialOrderRelation::from_edges(std::size_t n_states,
                                                      std::span<const std::pair<State, State>> edges)
{
    PartialOrderRelation rel(n_states);
    for (auto [p, q] : edges) {
        if (p >= n_states || q >= n_states) {
            throw std::invalid_argument("relation edge out of range");
        }
        rel.insert(p, q);
    }
    return rel;
}

PartialOrderRelation PartialOrderRelation::from_linear(const LinearOrder& ord)
{
    PartialOrderRelation rel(ord.size());
    const auto& r = ord.ranking();
    for (std::size_t i = 0; i < r.size(); ++i) {
        for (std::size_t j = i + 1; j < r.size(); ++j) {
            rel.insert(r[i], r[j]);
        }
    }
    return rel;
}

std::size_t PartialOrderRelation::edge_count() const noexcept
{
    return static_cast<std::size_t>(std::count(rel_.begin(), rel_.end(), 1));
}

std::vector<std::pair<State, State>> PartialOrderRelation::edges() const
{
    std::vector<std::pair<State, State>> out;
    for (State p = 0; p < n_; ++p) {
        for (State q = 0; q < n_; ++q) {
            if (less(p, q)) {
                out.emplace_back(p, q);
            }
        }
    }
    return out;
}

std::optional<std::pair<State, State>> PartialOrderRelation::first_incomparable() const
{
    for (State x = 0; x < n_; ++x) {
        for (State y = x + 1; y < n_; ++y) {
            if (!comparable(x, y)) {
                return std::pair{x, y};
            }
        }
    }
    return std::nullopt;
}

std::optional<std::string> PartialOrderRelation::invariant_violation() const
{
    auto pair_str = [](State p, State q) {
        return "(" + std::to_string(p) + "," + std::to_string(q) + ")";
    };
    for (State p = 0; p < n_; ++p) {
        if (less(p, p)) {
            return "reflexive pair " + pair_str(p, p);
        }
    }
    for (State p = 0; p < n_; ++p) {
        for (State q = p + 1; q < n_; ++q) {
            if (less(p, q) && less(q, p)) {
                return "both " + pair_str(p, q) + " and " + pair_str(q, p);
            }
        }
    }
    for (State p = 0; p < n_; ++p) {
        for (State q = 0; q < n_; ++q) {
            if (!less(p, q)) {
                continue;
            }
            for (State r = 0; r < n_; ++r) {
                if (less(q, r) && !less(p, r)) {
                    return "not transitively closed: " + pair_str(p, q) + ", " + pair_str(q, r) +
                           " without " + pair_str(p, r);
                }
            }
        }
    }
    return std::nullopt;
}

std::optional<LinearOrder> PartialOrderRelation::to_linear() const
{
    if (first_incomparable() || invariant_violation()) {
        return std::nullopt;
    }
    // In a total strict order the rank of q is the number of states below it.
    std::vector<State> ranking(n_);
    for (State q = 0; q < n_; ++q) {
        std::size_t below = 0;
        for (State p = 0; p < n_; ++p) {
            below += less(p, q) ? 1 : 0;
        }
        ranking[below] = q;
    }
    return LinearOrder(std::move(ranking));
}

bool verify_linear_order(const Automaton& a, const LinearOrder& ord)
{
    check_dimensions(a, ord.size());
    std::vector<std::size_t> rank(ord.size());
    for (State q = 0; q < ord.size(); ++q) {
        rank[q] = ord.rank(q);
    }
    return detail::ranking_preserved(a, ord.ranking(), rank);
}

bool verify_cyclic_order(const Automaton& a, const CyclicOrder& ord)
{
    check_dimensions(a, ord.size());
    std::vector<std::size_t> position(ord.size());
    for (State q = 0; q < ord.size(); ++q) {
        position[q] = ord.position(q);
    }
    std::vector<std::size_t> scratch;
    return detail::cycle_preserved(a, ord.cycle(), position, scratch);
}

bool verify_partial_order(const Automaton& a, const PartialOrderRelation& rel)
{
    check_dimensions(a, rel.size());
    if (auto violation = rel.invariant_violation()) {
        throw InvalidRelation("invalid partial order: " + *violation);
    }
    const std::size_t n = rel.size();
    for (State p = 0; p < n; ++p) {
        for (State q = 0; q < n; ++q) {
            if (!rel.less(p, q)) {
                continue;
            }
            for (Letter l = 0; l < a.n_letters(); ++l) {
                const State pi = a.next(p, l);
                const State qi = a.next(q, l);
                if (pi != qi && !rel.less(pi, qi)) {
                    return false;
                }
            }
        }
    }
    return true;
}

CyclicOrder canonical_cyclic(const CyclicOrder& ord)
{
    std::vector<State> c = ord.cycle();
    std::rotate(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(ord.position(0)), c.end());
    return CyclicOrder(std::move(c));
}

std::vector<State> parse_state_list(std::string_view text)
{
    std::istringstream in{std::string(text)};
    std::vector<State> out;
    std::string tok;
    while (in >> tok) {
        std::size_t used = 0;
        unsigned long v = 0;
        try {
            if (tok.front() == '-' || tok.front() == '+') {
                throw std::invalid_argument(tok);
            }
            v = std::stoul(tok, &used);
        } catch (const std::exception&) {
            throw std::invalid_argument("not a state index: '" + tok + "'");
        }
        if (used != tok.size() || v > 0xffffffffUL) {
            throw std::invalid_argument("not a state index: '" + tok + "'");
        }
        out.push_back(static_cast<State>(v));
    }
    return out;
}

std::string format_state_list(std::span<const State> states)
{
    std::string out;
    for (std::size_t i = 0; i < states.size(); ++i) {
        if (i != 0) {
            out += ' ';
        }
        out += std::to_string(states[i]);
    }
    return out;
}

std::string format_order(const LinearOrder& ord)
{
    return format_state_list(ord.ranking());
}

std::string format_order(const CyclicOrder& ord)
{
    return format_state_list(canonical_cyclic(ord).cycle());
}

std::string format_relation(const PartialOrderRelation& rel)
{
    std::string out;
    for (auto [p, q] : rel.edges()) {
        if (!out.empty()) {
            out += ' ';
        }
        out += std::to_string(p) + "<" + std::to_string(q);
    }
    return out;
}

} // namespace orderaut
