#pragma once

#include <span>

#include <orderaut/automaton.hpp>

namespace orderaut::detail {

// rank[q] is the position of q in ranking.
bool ranking_preserved(const Automaton& a, std::span<const State> ranking,
                       std::span<const std::size_t> rank);

// position[q] is the index of q in cycle. scratch is reused between calls.
bool cycle_preserved(const Automaton& a, std::span<const State> cycle,
                     std::span<const std::size_t> position, std::vector<std::size_t>& scratch);

} // namespace orderaut::detail
