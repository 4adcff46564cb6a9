#pragma once

#include <cctype>
#include <charconv>
#include <cstdint>
#include <istream>
#include <string>
#include <vector>

#include <orderaut/automaton.hpp>

namespace orderaut::detail {

// One non-blank line of a whitespace/'#'-comment text format.
struct NumberLine
{
    std::size_t line_no;
    std::vector<std::uint64_t> values;
};

inline std::vector<NumberLine> read_number_lines(std::istream& in)
{
    std::vector<NumberLine> lines;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string::npos) {
            line.erase(hash);
        }
        NumberLine parsed{line_no, {}};
        const char* p = line.data();
        const char* end = p + line.size();
        while (p != end) {
            if (*p == ' ' || *p == '\t' || *p == '\r' || *p == '\v' || *p == '\f') {
                ++p;
                continue;
            }
            std::uint64_t value = 0;
            auto [next, ec] = std::from_chars(p, end, value);
            if (ec != std::errc{} || (next != end && !std::isspace(static_cast<unsigned char>(*next)))) {
                const char* tok_end = p;
                while (tok_end != end && !std::isspace(static_cast<unsigned char>(*tok_end))) {
                    ++tok_end;
                }
                throw ParseError(line_no, "not a non-negative integer: '" + std::string(p, tok_end) + "'");
            }
            parsed.values.push_back(value);
            p = next;
        }
        if (!parsed.values.empty()) {
            lines.push_back(std::move(parsed));
        }
    }
    if (in.bad()) {
        throw ParseError(0, "read error");
    }
    return lines;
}

} // namespace orderaut::detail
