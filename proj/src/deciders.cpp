#include <orderaut/deciders.hpp>

#include <algorithm>
#include <deque>
#include <numeric>

#include "order_check.hpp"

namespace orderaut {

const char* to_string(Verdict v) noexcept
{
    switch (v) {
    case Verdict::yes:
        return "yes";
    case Verdict::no:
        return "no";
    case Verdict::undecided:
        return "undecided";
    }
    return "?";
}

namespace {

void require_unary(const Automaton& a)
{
    if (a.n_letters() != 1) {
        throw std::invalid_argument("unary decider called on an automaton with " +
                                    std::to_string(a.n_letters()) + " letters");
    }
}

// Structure of the functional graph of a single letter.
struct FunctionalGraph
{
    std::vector<State> image;
    std::vector<bool> on_cycle;
    // Each cycle starts at its least state and follows the letter; cycles are
    // sorted by that least state.
    std::vector<std::vector<State>> cycles;
    // Preimages of p are preimage_list[preimage_begin[p] .. preimage_begin[p+1]),
    // ascending.
    std::vector<std::size_t> preimage_begin;
    std::vector<State> preimage_list;

    std::span<const State> preimages(State p) const
    {
        return {preimage_list.data() + preimage_begin[p], preimage_begin[p + 1] - preimage_begin[p]};
    }
};

FunctionalGraph analyze(const Automaton& a)
{
    const std::size_t n = a.n_states();
    FunctionalGraph g;
    g.image = a.column(0);
    g.on_cycle.assign(n, false);

    enum : unsigned char { fresh, on_path, done };
    std::vector<unsigned char> color(n, fresh);
    std::vector<State> path;
    for (State s = 0; s < n; ++s) {
        if (color[s] != fresh) {
            continue;
        }
        path.clear();
        State q = s;
        while (color[q] == fresh) {
            color[q] = on_path;
            path.push_back(q);
            q = g.image[q];
        }
        if (color[q] == on_path) {
            auto first = std::find(path.begin(), path.end(), q);
            std::vector<State> cycle(first, path.end());
            std::rotate(cycle.begin(), std::min_element(cycle.begin(), cycle.end()), cycle.end());
            for (State c : cycle) {
                g.on_cycle[c] = true;
            }
            g.cycles.push_back(std::move(cycle));
        }
        for (State p : path) {
            color[p] = done;
        }
    }
    std::sort(g.cycles.begin(), g.cycles.end(),
              [](const auto& x, const auto& y) { return x.front() < y.front(); });

    g.preimage_begin.assign(n + 1, 0);
    for (State q = 0; q < n; ++q) {
        ++g.preimage_begin[g.image[q] + 1];
    }
    std::partial_sum(g.preimage_begin.begin(), g.preimage_begin.end(), g.preimage_begin.begin());
    g.preimage_list.resize(n);
    std::vector<std::size_t> fill(g.preimage_begin.begin(), g.preimage_begin.end() - 1);
    for (State q = 0; q < n; ++q) {
        g.preimage_list[fill[g.image[q]]++] = q;
    }
    return g;
}

// Adds p < q and everything transitivity demands; newly ordered pairs go to
// work. False on contradiction.
bool order_pair(PartialOrderRelation& rel, State p, State q,
                std::vector<std::pair<State, State>>& work,
                std::vector<State>& lower, std::vector<State>& upper)
{
    if (p == q || rel.less(q, p)) {
        return false;
    }
    if (rel.less(p, q)) {
        return true;
    }
    const std::size_t n = rel.size();
    lower.assign(1, p);
    upper.assign(1, q);
    for (State z = 0; z < n; ++z) {
        if (rel.less(z, p)) {
            lower.push_back(z);
        }
        if (rel.less(q, z)) {
            upper.push_back(z);
        }
    }
    for (State x : lower) {
        for (State y : upper) {
            if (x == y || rel.less(y, x)) {
                return false;
            }
            if (!rel.less(x, y)) {
                rel.insert(x, y);
                work.emplace_back(x, y);
            }
        }
    }
    return true;
}

// Closes rel in place under the letters' consequences, starting from the
// pairs in work. False on contradiction (rel is then unusable).
bool close_consequences(PartialOrderRelation& rel, const Automaton& a,
                        std::vector<std::pair<State, State>>& work)
{
    std::vector<State> lower;
    std::vector<State> upper;
    while (!work.empty()) {
        const auto [x, y] = work.back();
        work.pop_back();
        for (Letter l = 0; l < a.n_letters(); ++l) {
            const State xi = a.next(x, l);
            const State yi = a.next(y, l);
            if (xi != yi && !order_pair(rel, xi, yi, work, lower, upper)) {
                return false;
            }
        }
    }
    return true;
}

// rel must already be closed; only the consequences of the seed are taken.
std::optional<PartialOrderRelation> extend_closed(const PartialOrderRelation& rel, const Automaton& a,
                                                  std::pair<State, State> seed)
{
    PartialOrderRelation next = rel;
    std::vector<std::pair<State, State>> work;
    std::vector<State> lower;
    std::vector<State> upper;
    if (!order_pair(next, seed.first, seed.second, work, lower, upper)) {
        return std::nullopt;
    }
    if (!close_consequences(next, a, work)) {
        return std::nullopt;
    }
    return next;
}

std::optional<LinearOrder> backtrack(const PartialOrderRelation& rel, const Automaton& a)
{
    const auto open = rel.first_incomparable();
    if (!open) {
        return rel.to_linear();
    }
    const auto [x, y] = *open;
    for (auto seed : {std::pair{x, y}, std::pair{y, x}}) {
        if (auto next = extend_closed(rel, a, seed)) {
            if (auto found = backtrack(*next, a)) {
                return found;
            }
        }
    }
    return std::nullopt;
}

void check_limit(const Automaton& a, std::size_t limit, const char* what)
{
    if (a.n_states() > limit) {
        throw LimitExceeded(std::string(what) + " brute force limited to " + std::to_string(limit) +
                            " states, automaton has " + std::to_string(a.n_states()));
    }
}

} // namespace

LinearWitness decide_unary_monotonic(const Automaton& a)
{
    require_unary(a);
    const FunctionalGraph g = analyze(a);
    for (const auto& cycle : g.cycles) {
        if (cycle.size() >= 2) {
            return LinearWitness::reject("the letter has a cycle of length " +
                                         std::to_string(cycle.size()));
        }
    }

    // Every component is an in-tree on a fixed point. Inverse BFS visits
    // children grouped by their parent's visit time, so "visited later is
    // smaller" is preserved by the parent map.
    std::vector<State> ranking;
    ranking.reserve(a.n_states());
    std::vector<State> visit;
    for (const auto& cycle : g.cycles) {
        const State root = cycle.front();
        visit.assign(1, root);
        for (std::size_t head = 0; head < visit.size(); ++head) {
            for (State child : g.preimages(visit[head])) {
                if (child != root) {
                    visit.push_back(child);
                }
            }
        }
        ranking.insert(ranking.end(), visit.rbegin(), visit.rend());
    }
    return LinearWitness::accept(LinearOrder(std::move(ranking)));
}

CyclicWitness decide_unary_oriented(const Automaton& a)
{
    require_unary(a);
    const FunctionalGraph g = analyze(a);
    const std::size_t n = a.n_states();
    const std::size_t k = g.cycles.front().size();
    const std::size_t m = g.cycles.size();
    for (const auto& cycle : g.cycles) {
        if (cycle.size() != k) {
            return CyclicWitness::reject("cycles of lengths " + std::to_string(k) + " and " +
                                         std::to_string(cycle.size()));
        }
    }

    // Anchor of q: the cycle (0-based) and 1-based position within it of the
    // first cycle state on q's forward path.
    std::vector<std::size_t> anchor_cycle(n);
    std::vector<std::size_t> anchor_pos(n);
    std::vector<State> current;
    current.reserve(n);
    for (std::size_t g_pos = 1; g_pos <= k; ++g_pos) {
        for (std::size_t f = 0; f < m; ++f) {
            const State c = g.cycles[f][g_pos - 1];
            anchor_cycle[c] = f;
            anchor_pos[c] = g_pos;
            current.push_back(c);
        }
    }

    // segments[f][j-1] is Q^f_j; new states go to the front.
    std::vector<std::vector<std::deque<State>>> segments(m, std::vector<std::deque<State>>(k));
    std::vector<State> visited;
    for (std::size_t step = 1; !current.empty(); ++step) {
        visited.clear();
        for (State p : current) {
            // Preimages are scanned in descending index order.
            const auto pre = g.preimages(p);
            for (auto it = pre.rbegin(); it != pre.rend(); ++it) {
                const State q = *it;
                if (g.on_cycle[q]) {
                    continue;
                }
                anchor_cycle[q] = anchor_cycle[p];
                anchor_pos[q] = anchor_pos[p];
                visited.push_back(q);
                const std::size_t j = (n * k + anchor_pos[q] - 1 - step) % k + 1;
                segments[anchor_cycle[q]][j - 1].push_front(q);
            }
        }
        current.swap(visited);
    }

    std::vector<State> cycle;
    cycle.reserve(n);
    for (std::size_t j = 1; j <= k; ++j) {
        for (std::size_t f = 0; f < m; ++f) {
            const auto& seg = segments[f][j - 1];
            cycle.insert(cycle.end(), seg.begin(), seg.end());
            cycle.push_back(g.cycles[f][j - 1]);
        }
    }
    return CyclicWitness::accept(CyclicOrder(std::move(cycle)));
}

LinearWitness decide_monotonic_bruteforce(const Automaton& a, std::size_t limit)
{
    check_limit(a, limit, "linear");
    const std::size_t n = a.n_states();
    std::vector<State> ranking(n);
    std::iota(ranking.begin(), ranking.end(), State{0});
    std::vector<std::size_t> rank(n);
    do {
        for (std::size_t r = 0; r < n; ++r) {
            rank[ranking[r]] = r;
        }
        if (detail::ranking_preserved(a, ranking, rank)) {
            return LinearWitness::accept(LinearOrder(ranking));
        }
    } while (std::next_permutation(ranking.begin(), ranking.end()));
    return LinearWitness::reject();
}

CyclicWitness decide_oriented_bruteforce(const Automaton& a, std::size_t limit)
{
    check_limit(a, limit, "cyclic");
    const std::size_t n = a.n_states();
    std::vector<State> cycle(n);
    std::iota(cycle.begin(), cycle.end(), State{0});
    std::vector<std::size_t> position(n);
    std::vector<std::size_t> scratch;
    do {
        for (std::size_t i = 0; i < n; ++i) {
            position[cycle[i]] = i;
        }
        if (detail::cycle_preserved(a, cycle, position, scratch)) {
            return CyclicWitness::accept(CyclicOrder(cycle));
        }
    } while (std::next_permutation(cycle.begin() + 1, cycle.end()));
    return CyclicWitness::reject();
}

std::optional<PartialOrderRelation> propagate_closure(const PartialOrderRelation& rel,
                                                      const Automaton& a,
                                                      std::pair<State, State> seed)
{
    if (rel.size() != a.n_states()) {
        throw DimensionMismatch("relation and automaton differ in state count");
    }
    if (seed.first >= rel.size() || seed.second >= rel.size()) {
        throw std::out_of_range("seed state out of range");
    }
    PartialOrderRelation next = rel;
    // Existing edges are re-examined so that the result is the least fixed
    // point even when rel itself was not closed under the letters.
    std::vector<std::pair<State, State>> work = rel.edges();
    if (!close_consequences(next, a, work)) {
        return std::nullopt;
    }
    std::vector<State> lower;
    std::vector<State> upper;
    if (!order_pair(next, seed.first, seed.second, work, lower, upper)) {
        return std::nullopt;
    }
    if (!close_consequences(next, a, work)) {
        return std::nullopt;
    }
    return next;
}

LinearWitness decide_monotonic_backtracking(const Automaton& a)
{
    if (auto found = backtrack(PartialOrderRelation(a.n_states()), a)) {
        return LinearWitness::accept(std::move(*found));
    }
    return LinearWitness::reject();
}

PartialWitness find_nontrivial_partial_order(const Automaton& a)
{
    const std::size_t n = a.n_states();
    if (n < 2) {
        return PartialWitness::reject("fewer than two states: no nontrivial partial order exists");
    }
    const PartialOrderRelation empty(n);
    for (State p = 0; p < n; ++p) {
        for (State q = 0; q < n; ++q) {
            if (p == q) {
                continue;
            }
            if (auto rel = extend_closed(empty, a, {p, q})) {
                return PartialWitness::accept(std::move(*rel));
            }
        }
    }
    return PartialWitness::reject();
}

LinearWitness decide_monotonic(const Automaton& a)
{
    if (a.n_letters() == 1) {
        return decide_unary_monotonic(a);
    }
    return decide_monotonic_backtracking(a);
}

CyclicWitness decide_oriented(const Automaton& a, std::size_t cyclic_limit)
{
    if (a.n_letters() == 1) {
        return decide_unary_oriented(a);
    }
    if (auto mono = decide_monotonic(a); mono.yes()) {
        return CyclicWitness::accept(CyclicOrder::from_linear(*mono.certificate));
    }
    if (a.n_states() > cyclic_limit) {
        return {Verdict::undecided, std::nullopt,
                "undecided at this scale: not monotonic, and " + std::to_string(a.n_states()) +
                    " states exceed the cyclic brute-force limit of " + std::to_string(cyclic_limit)};
    }
    return decide_oriented_bruteforce(a, cyclic_limit);
}

} // namespace orderaut
