#pragma once

// Reference checks written straight from the definitions. They share no code
// with the library's verifiers or deciders and are only used to cross-check
// them.

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <random>
#include <stdexcept>
#include <vector>

#include <orderaut/automaton.hpp>
#include <orderaut/reductions.hpp>

namespace orderaut::oracle {

// p <= q implies delta(p) <= delta(q), over all ordered pairs.
inline bool linear_preserved(const Automaton& a, const std::vector<State>& ranking)
{
    const std::size_t n = ranking.size();
    std::vector<std::size_t> rank(n);
    for (std::size_t r = 0; r < n; ++r) {
        rank[ranking[r]] = r;
    }
    for (Letter l = 0; l < a.n_letters(); ++l) {
        for (State p = 0; p < n; ++p) {
            for (State q = 0; q < n; ++q) {
                if (rank[p] <= rank[q] && rank[a.next(p, l)] > rank[a.next(q, l)]) {
                    return false;
                }
            }
        }
    }
    return true;
}

// Image sequence, adjacent duplicates removed (last adjacent to first), must
// be a subsequence of some rotation of the cycle.
inline bool cyclic_preserved(const Automaton& a, const std::vector<State>& cycle)
{
    const std::size_t n = cycle.size();
    for (Letter l = 0; l < a.n_letters(); ++l) {
        std::vector<State> seq;
        for (State q : cycle) {
            const State img = a.next(q, l);
            if (seq.empty() || seq.back() != img) {
                seq.push_back(img);
            }
        }
        while (seq.size() > 1 && seq.back() == seq.front()) {
            seq.pop_back();
        }
        bool found = false;
        for (std::size_t start = 0; start < n && !found; ++start) {
            std::size_t matched = 0;
            for (std::size_t t = 0; t < n && matched < seq.size(); ++t) {
                if (cycle[(start + t) % n] == seq[matched]) {
                    ++matched;
                }
            }
            found = matched == seq.size();
        }
        if (!found) {
            return false;
        }
    }
    return true;
}

inline std::optional<std::vector<State>> find_linear(const Automaton& a)
{
    std::vector<State> perm(a.n_states());
    std::iota(perm.begin(), perm.end(), State{0});
    do {
        if (linear_preserved(a, perm)) {
            return perm;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return std::nullopt;
}

// All n! arrangements, not only canonical rotations.
inline bool oriented_exists(const Automaton& a)
{
    std::vector<State> perm(a.n_states());
    std::iota(perm.begin(), perm.end(), State{0});
    do {
        if (cyclic_preserved(a, perm)) {
            return true;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

inline bool monotonic_exists(const Automaton& a) { return find_linear(a).has_value(); }

// Enumerates every relation over the off-diagonal pairs and keeps the strict
// partial orders. Feasible for n <= 4 (4096 relations).
inline bool nontrivial_partial_order_exists(const Automaton& a)
{
    const std::size_t n = a.n_states();
    std::vector<std::pair<State, State>> pairs;
    for (State p = 0; p < n; ++p) {
        for (State q = 0; q < n; ++q) {
            if (p != q) {
                pairs.emplace_back(p, q);
            }
        }
    }
    std::vector<std::vector<bool>> lt(n, std::vector<bool>(n));
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << pairs.size()); ++mask) {
        for (auto& row : lt) {
            std::fill(row.begin(), row.end(), false);
        }
        for (std::size_t i = 0; i < pairs.size(); ++i) {
            if ((mask >> i) & 1u) {
                lt[pairs[i].first][pairs[i].second] = true;
            }
        }
        bool order = true;
        for (State p = 0; p < n && order; ++p) {
            for (State q = 0; q < n && order; ++q) {
                if (!lt[p][q]) {
                    continue;
                }
                if (lt[q][p]) {
                    order = false;
                }
                for (State r = 0; r < n && order; ++r) {
                    if (lt[q][r] && !lt[p][r]) {
                        order = false;
                    }
                }
            }
        }
        if (!order) {
            continue;
        }
        bool preserved = true;
        for (State p = 0; p < n && preserved; ++p) {
            for (State q = 0; q < n && preserved; ++q) {
                if (!lt[p][q]) {
                    continue;
                }
                for (Letter l = 0; l < a.n_letters(); ++l) {
                    const State x = a.next(p, l);
                    const State y = a.next(q, l);
                    if (x != y && !lt[x][y]) {
                        preserved = false;
                        break;
                    }
                }
            }
        }
        if (preserved) {
            return true;
        }
    }
    return false;
}

inline bool nae_satisfiable(const NaeInstance& inst)
{
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << inst.n_vars); ++mask) {
        bool ok = true;
        for (const auto& c : inst.clauses) {
            const bool a = (mask >> (c[0] - 1)) & 1u;
            const bool b = (mask >> (c[1] - 1)) & 1u;
            const bool d = (mask >> (c[2] - 1)) & 1u;
            if (a == b && b == d) {
                ok = false;
                break;
            }
        }
        if (ok) {
            return true;
        }
    }
    return false;
}

// Lengths of the cycles of a single map, found by following every state n
// steps and then walking its cycle.
inline std::vector<std::size_t> cycle_lengths(const std::vector<State>& f)
{
    const std::size_t n = f.size();
    std::vector<bool> seen(n, false);
    std::vector<std::size_t> lengths;
    for (State s = 0; s < n; ++s) {
        State q = s;
        for (std::size_t i = 0; i < n; ++i) {
            q = f[q];
        }
        if (seen[q]) {
            continue;
        }
        std::size_t len = 0;
        State c = q;
        do {
            seen[c] = true;
            c = f[c];
            ++len;
        } while (c != q);
        lengths.push_back(len);
    }
    return lengths;
}

// A random automaton that is monotonic by construction: every letter is a
// nondecreasing map on ranks, then states are relabelled by a permutation.
template <typename Rng>
Automaton random_monotonic(std::size_t n, std::size_t k, Rng& rng)
{
    std::vector<State> label(n);
    std::iota(label.begin(), label.end(), State{0});
    std::shuffle(label.begin(), label.end(), rng);
    std::vector<State> table(n * k);
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    for (std::size_t l = 0; l < k; ++l) {
        std::vector<std::size_t> images(n);
        for (auto& v : images) {
            v = pick(rng);
        }
        std::sort(images.begin(), images.end());
        for (std::size_t r = 0; r < n; ++r) {
            table[label[r] * k + l] = label[images[r]];
        }
    }
    return Automaton(n, k, std::move(table));
}

template <typename Rng>
Automaton random_table(std::size_t n, std::size_t k, Rng& rng)
{
    std::uniform_int_distribution<State> pick(0, static_cast<State>(n - 1));
    std::vector<State> table(n * k);
    for (auto& v : table) {
        v = pick(rng);
    }
    return Automaton(n, k, std::move(table));
}

// Automaton number `index` in the enumeration of all n^(n*k) tables.
inline Automaton table_by_index(std::size_t n, std::size_t k, std::uint64_t index)
{
    std::vector<State> table(n * k);
    for (auto& v : table) {
        v = static_cast<State>(index % n);
        index /= n;
    }
    return Automaton(n, k, std::move(table));
}

inline std::uint64_t table_count(std::size_t n, std::size_t k)
{
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < n * k; ++i) {
        count *= n;
    }
    return count;
}

inline NaeInstance fano()
{
    NaeInstance inst;
    inst.n_vars = 7;
    inst.clauses = {{1, 2, 3}, {1, 4, 5}, {1, 6, 7}, {2, 4, 6}, {2, 5, 7}, {3, 4, 7}, {3, 5, 6}};
    return inst;
}

inline NaeInstance single_clause()
{
    NaeInstance inst;
    inst.n_vars = 3;
    inst.clauses = {{1, 2, 3}};
    return inst;
}

// Every instance over n variables whose clauses form a set of m distinct
// ordered triples (clause order ignored) and use every variable.
inline std::vector<NaeInstance> all_instances(std::size_t n, std::size_t m)
{
    std::vector<std::array<std::size_t, 3>> triples;
    for (std::size_t f = 1; f <= n; ++f) {
        for (std::size_t g = 1; g <= n; ++g) {
            for (std::size_t h = 1; h <= n; ++h) {
                if (f != g && f != h && g != h) {
                    triples.push_back({f, g, h});
                }
            }
        }
    }
    std::vector<NaeInstance> out;
    std::vector<std::size_t> pick(m);
    std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t depth, std::size_t from) {
        if (depth == m) {
            NaeInstance inst;
            inst.n_vars = n;
            for (std::size_t i : pick) {
                inst.clauses.push_back(triples[i]);
            }
            std::vector<bool> used(n + 1, false);
            for (const auto& c : inst.clauses) {
                for (std::size_t v : c) {
                    used[v] = true;
                }
            }
            if (std::all_of(used.begin() + 1, used.end(), [](bool b) { return b; })) {
                out.push_back(std::move(inst));
            }
            return;
        }
        for (std::size_t i = from; i < triples.size(); ++i) {
            pick[depth] = i;
            rec(depth + 1, i + 1);
        }
    };
    rec(0, 0);
    return out;
}

template <typename Rng>
NaeInstance random_instance(std::size_t n, std::size_t m, Rng& rng)
{
    if (n < 3 || 3 * m < n) {
        throw std::invalid_argument("no instance uses every variable");
    }
    std::uniform_int_distribution<std::size_t> var(1, n);
    while (true) {
        NaeInstance inst;
        inst.n_vars = n;
        for (std::size_t j = 0; j < m; ++j) {
            std::array<std::size_t, 3> c{};
            do {
                c = {var(rng), var(rng), var(rng)};
            } while (c[0] == c[1] || c[0] == c[2] || c[1] == c[2]);
            inst.clauses.push_back(c);
        }
        std::vector<bool> used(n + 1, false);
        for (const auto& c : inst.clauses) {
            for (std::size_t v : c) {
                used[v] = true;
            }
        }
        if (std::all_of(used.begin() + 1, used.end(), [](bool b) { return b; })) {
            return inst;
        }
    }
}

} // namespace orderaut::oracle
