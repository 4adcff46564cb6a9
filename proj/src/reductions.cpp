#include <orderaut/reductions.hpp>

#include <algorithm>
#include <ostream>
#include <sstream>

#include <orderaut/deciders.hpp>

#include "text_lines.hpp"

namespace orderaut {

void NaeInstance::validate() const
{
    if (n_vars == 0) {
        throw std::invalid_argument("instance needs at least one variable");
    }
    std::vector<bool> used(n_vars + 1, false);
    for (std::size_t j = 0; j < clauses.size(); ++j) {
        const auto& c = clauses[j];
        const std::string where = "clause " + std::to_string(j + 1);
        for (std::size_t v : c) {
            if (v < 1 || v > n_vars) {
                throw std::invalid_argument(where + ": variable " + std::to_string(v) +
                                            " out of range");
            }
            used[v] = true;
        }
        if (c[0] == c[1] || c[0] == c[2] || c[1] == c[2]) {
            throw std::invalid_argument(where + ": repeated variable");
        }
    }
    for (std::size_t v = 1; v <= n_vars; ++v) {
        if (!used[v]) {
            throw std::invalid_argument("variable " + std::to_string(v) + " occurs in no clause");
        }
    }
}

NaeInstance parse_nae(std::istream& in)
{
    const auto lines = detail::read_number_lines(in);
    if (lines.empty()) {
        throw ParseError(0, "empty input: expected header 'n m'");
    }
    const auto& header = lines.front();
    if (header.values.size() != 2) {
        throw ParseError(header.line_no, "header must be 'n m'");
    }
    if (header.values[0] == 0 || header.values[0] > (1u << 20) || header.values[1] > (1u << 20)) {
        throw ParseError(header.line_no, "variable count must be positive and clause counts sane");
    }
    NaeInstance inst;
    inst.n_vars = header.values[0];
    const std::size_t m = header.values[1];
    if (lines.size() - 1 != m) {
        const std::size_t at = lines.size() - 1 > m ? lines[m + 1].line_no : lines.back().line_no;
        throw ParseError(at, "expected " + std::to_string(m) + " clauses, found " +
                                 std::to_string(lines.size() - 1));
    }
    std::vector<bool> used(inst.n_vars + 1, false);
    for (std::size_t j = 0; j < m; ++j) {
        const auto& line = lines[j + 1];
        if (line.values.size() != 3) {
            throw ParseError(line.line_no, "a clause has exactly 3 variables");
        }
        std::array<std::size_t, 3> c{};
        for (std::size_t t = 0; t < 3; ++t) {
            const auto v = line.values[t];
            if (v < 1 || v > inst.n_vars) {
                throw ParseError(line.line_no, "variable " + std::to_string(v) + " out of range");
            }
            c[t] = v;
            used[v] = true;
        }
        if (c[0] == c[1] || c[0] == c[2] || c[1] == c[2]) {
            throw ParseError(line.line_no, "repeated variable in clause");
        }
        inst.clauses.push_back(c);
    }
    for (std::size_t v = 1; v <= inst.n_vars; ++v) {
        if (!used[v]) {
            throw ParseError(header.line_no, "variable " + std::to_string(v) + " occurs in no clause");
        }
    }
    return inst;
}

NaeInstance parse_nae(std::string_view text)
{
    std::istringstream in{std::string(text)};
    return parse_nae(in);
}

std::string serialize_nae(const NaeInstance& inst)
{
    std::ostringstream out;
    out << inst.n_vars << ' ' << inst.n_clauses() << '\n';
    for (const auto& c : inst.clauses) {
        out << c[0] << ' ' << c[1] << ' ' << c[2] << '\n';
    }
    return out.str();
}

bool nae_satisfies(const NaeInstance& inst, const Assignment& sigma)
{
    if (sigma.size() != inst.n_vars) {
        throw std::invalid_argument("assignment length differs from variable count");
    }
    return std::all_of(inst.clauses.begin(), inst.clauses.end(), [&](const auto& c) {
        const bool first = sigma[c[0] - 1];
        return sigma[c[1] - 1] != first || sigma[c[2] - 1] != first;
    });
}

std::optional<Assignment> nae_bruteforce(const NaeInstance& inst)
{
    const std::size_t n = inst.n_vars;
    if (n > nae_bruteforce_limit) {
        throw LimitExceeded("NAE brute force limited to " + std::to_string(nae_bruteforce_limit) +
                            " variables, instance has " + std::to_string(n));
    }
    Assignment sigma(n);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        for (std::size_t i = 0; i < n; ++i) {
            sigma[i] = (mask >> (n - 1 - i)) & 1u;
        }
        if (nae_satisfies(inst, sigma)) {
            return sigma;
        }
    }
    return std::nullopt;
}

std::vector<std::string> GadgetLayout::state_names() const
{
    std::vector<std::string> names(n_states());
    for (std::size_t i = 1; i <= n_vars; ++i) {
        names[p(i)] = "p" + std::to_string(i);
        names[q(i)] = "q" + std::to_string(i);
    }
    for (std::size_t j = 1; j <= n_clauses; ++j) {
        names[x(j)] = "x" + std::to_string(j);
        names[y(j)] = "y" + std::to_string(j);
        names[z(j)] = "z" + std::to_string(j);
    }
    names[sink()] = "s";
    return names;
}

Automaton reduce_nae_to_automaton(const NaeInstance& inst)
{
    inst.validate();
    const GadgetLayout lay(inst);
    const std::size_t k = lay.n_letters();
    std::vector<State> table(lay.n_states() * k, lay.sink());
    auto set = [&](State from, Letter l, State to) { table[from * k + l] = to; };

    for (std::size_t j = 1; j <= inst.n_clauses(); ++j) {
        const auto [f, g, h] = inst.clauses[j - 1];
        // Each letter fixes the variable pairs below its own variable and
        // sends that variable's pair into the gadget.
        auto wire = [&](Letter l, std::size_t var, State from_p, State from_q) {
            for (std::size_t i = 1; i < var; ++i) {
                set(lay.p(i), l, lay.p(i));
                set(lay.q(i), l, lay.q(i));
            }
            set(lay.p(var), l, from_p);
            set(lay.q(var), l, from_q);
        };
        wire(lay.a(j), f, lay.x(j), lay.y(j));
        wire(lay.b(j), g, lay.y(j), lay.z(j));
        wire(lay.c(j), h, lay.z(j), lay.x(j));
    }
    return Automaton(lay.n_states(), k, std::move(table));
}

LinearOrder assignment_to_order(const NaeInstance& inst, const Assignment& sigma)
{
    inst.validate();
    if (!nae_satisfies(inst, sigma)) {
        throw std::invalid_argument("assignment does not satisfy the instance");
    }
    const GadgetLayout lay(inst);
    std::vector<State> ranking;
    ranking.reserve(lay.n_states());
    for (std::size_t i = 1; i <= inst.n_vars; ++i) {
        if (!sigma[i - 1]) {
            ranking.push_back(lay.p(i));
            ranking.push_back(lay.q(i));
        } else {
            ranking.push_back(lay.q(i));
            ranking.push_back(lay.p(i));
        }
    }
    for (std::size_t j = 1; j <= inst.n_clauses(); ++j) {
        const auto [f, g, h] = inst.clauses[j - 1];
        // The letters force x<y iff sigma(f)=0, y<z iff sigma(g)=0 and z<x
        // iff sigma(h)=0. A not-all-equal clause makes these three
        // comparisons acyclic, so counting wins sorts the triple.
        const std::array<State, 3> gadget{lay.x(j), lay.y(j), lay.z(j)};
        const std::array<bool, 3> wins_next{!sigma[f - 1], !sigma[g - 1], !sigma[h - 1]};
        std::array<int, 3> below{};
        for (std::size_t t = 0; t < 3; ++t) {
            const std::size_t u = (t + 1) % 3;
            ++below[wins_next[t] ? u : t];
        }
        std::array<State, 3> sorted{};
        for (std::size_t t = 0; t < 3; ++t) {
            sorted[below[t]] = gadget[t];
        }
        ranking.insert(ranking.end(), sorted.begin(), sorted.end());
    }
    ranking.push_back(lay.sink());
    return LinearOrder(std::move(ranking));
}

Assignment order_to_assignment(const NaeInstance& inst, const LinearOrder& ord)
{
    const Automaton gadget = reduce_nae_to_automaton(inst);
    if (ord.size() != gadget.n_states()) {
        throw DimensionMismatch("order size differs from the gadget automaton");
    }
    if (!verify_linear_order(gadget, ord)) {
        throw std::invalid_argument("order is not preserved by the gadget automaton");
    }
    const GadgetLayout lay(inst);
    Assignment sigma(inst.n_vars);
    for (std::size_t i = 1; i <= inst.n_vars; ++i) {
        sigma[i - 1] = !ord.precedes(lay.p(i), lay.q(i));
    }
    return sigma;
}

Automaton reduce_to_binary(const Automaton& a)
{
    const std::size_t n = a.n_states();
    const std::size_t k = a.n_letters();
    if (k < 3) {
        throw std::invalid_argument("binary reduction needs at least 3 letters, got " +
                                    std::to_string(k));
    }
    const State sink = static_cast<State>(k * n);
    auto layered = [n](std::size_t layer, State q) { return static_cast<State>(layer * n + q); };
    std::vector<State> table(2 * (k * n + 1));
    for (std::size_t layer = 0; layer < k; ++layer) {
        for (State q = 0; q < n; ++q) {
            const State from = layered(layer, q);
            table[2 * from] = layer + 1 < k ? layered(layer + 1, q) : sink;
            table[2 * from + 1] = layered(layer, a.next(q, static_cast<Letter>(layer)));
        }
    }
    table[2 * sink] = sink;
    table[2 * sink + 1] = sink;
    return Automaton(k * n + 1, 2, std::move(table));
}

std::vector<std::string> binary_state_names(std::size_t n_states, std::size_t n_letters)
{
    std::vector<std::string> names;
    names.reserve(n_states * n_letters + 1);
    for (std::size_t i = 1; i <= n_letters; ++i) {
        for (std::size_t j = 1; j <= n_states; ++j) {
            names.push_back("q^" + std::to_string(i) + "_" + std::to_string(j));
        }
    }
    names.emplace_back("s");
    return names;
}

Automaton add_sink(const Automaton& a)
{
    const std::size_t n = a.n_states();
    const std::size_t k = a.n_letters();
    std::vector<State> table = a.table();
    table.insert(table.end(), k, static_cast<State>(n));
    return Automaton(n + 1, k, std::move(table));
}

std::vector<std::string> sink_state_names(std::size_t n_states)
{
    std::vector<std::string> names;
    names.reserve(n_states + 1);
    for (std::size_t q = 0; q < n_states; ++q) {
        names.push_back(std::to_string(q));
    }
    names.emplace_back("s");
    return names;
}

void write_state_names(std::ostream& out, const std::vector<std::string>& names)
{
    for (std::size_t i = 0; i < names.size(); ++i) {
        out << i << ' ' << names[i] << '\n';
    }
}

std::string format_assignment(const Assignment& sigma)
{
    std::string out;
    for (std::size_t i = 0; i < sigma.size(); ++i) {
        if (i != 0) {
            out += ' ';
        }
        out += sigma[i] ? '1' : '0';
    }
    return out;
}

} // namespace orderaut
