#pragma once

// Reference transition matrices at size 4. Row and column labels, in order:
//   (1)^4, (1)^1(1)^3, (1,1)^2, (1,1)^1(1)^2, (1,1,1,1)^1, (2)^1(1)^2,
//   (2,1,1)^1, (3,1)^1, (2)^2, (2,2)^1, (4)^1
// Each fixture is an 11x11 grid of rationals, rows top to bottom; column sigma
// holds the target-basis expansion of the source element sigma.

#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "psym/monomials.hpp"
#include "psym/rational.hpp"

namespace fixtures {

inline const std::vector<std::string>& size4_labels() {
    static const std::vector<std::string> labels = {
        "(1)^4",   "(1)^1(1)^3", "(1,1)^2", "(1,1)^1(1)^2", "(1,1,1,1)^1", "(2)^1(1)^2",
        "(2,1,1)^1", "(3,1)^1",  "(2)^2",   "(2,2)^1",      "(4)^1"};
    return labels;
}

inline std::vector<std::vector<psym::Rat>> parse_grid(const std::string& text) {
    std::vector<std::vector<psym::Rat>> grid;
    std::istringstream lines(text);
    std::string line;
    while (std::getline(lines, line)) {
        std::istringstream cells(line);
        std::vector<psym::Rat> row;
        std::string cell;
        while (cells >> cell) {
            auto slash = cell.find('/');
            if (slash == std::string::npos)
                row.emplace_back(psym::Int(cell));
            else
                row.emplace_back(psym::Int(cell.substr(0, slash)),
                                 psym::Int(cell.substr(slash + 1)));
        }
        if (!row.empty()) grid.push_back(std::move(row));
    }
    return grid;
}

inline const std::map<std::pair<psym::Basis, psym::Basis>, std::string>& size4_matrices() {
    using psym::Basis;
    static const std::map<std::pair<Basis, Basis>, std::string> m = {
        {{Basis::H, Basis::E}, R"(
-1 0 0 0 0 0 0 0 0 0 0
0 1 0 0 0 0 0 0 0 0 0
0 0 1 0 0 0 0 0 1 0 0
0 0 0 -1 0 -1 0 0 0 0 0
0 0 0 0 1 0 1 1 0 1 1
0 0 0 0 0 1 0 0 0 0 0
0 0 0 0 0 0 -1 -2 0 -2 -3
0 0 0 0 0 0 0 1 0 0 2
0 0 0 0 0 0 0 0 -1 0 0
0 0 0 0 0 0 0 0 0 1 1
0 0 0 0 0 0 0 0 0 0 -1
)"},
        {{Basis::E, Basis::H}, R"(
-1 0 0 0 0 0 0 0 0 0 0
0 1 0 0 0 0 0 0 0 0 0
0 0 1 0 0 0 0 0 1 0 0
0 0 0 -1 0 -1 0 0 0 0 0
0 0 0 0 1 0 1 1 0 1 1
0 0 0 0 0 1 0 0 0 0 0
0 0 0 0 0 0 -1 -2 0 -2 -3
0 0 0 0 0 0 0 1 0 0 2
0 0 0 0 0 0 0 0 -1 0 0
0 0 0 0 0 0 0 0 0 1 1
0 0 0 0 0 0 0 0 0 0 -1
)"},
        {{Basis::P, Basis::H}, R"(
1 0 0 0 0 0 0 0 0 0 0
0 1 0 0 0 0 0 0 0 0 0
0 0 1 0 0 0 0 0 -1 0 0
0 0 0 1 0 -1 0 0 0 0 0
0 0 0 0 1 0 -1 1 0 1 -1
0 0 0 0 0 2 0 0 0 0 0
0 0 0 0 0 0 2 -3 0 -4 4
0 0 0 0 0 0 0 3 0 0 -4
0 0 0 0 0 0 0 0 2 0 0
0 0 0 0 0 0 0 0 0 4 -2
0 0 0 0 0 0 0 0 0 0 4
)"},
        {{Basis::P, Basis::E}, R"(
-1 0 0 0 0 0 0 0 0 0 0
0 1 0 0 0 0 0 0 0 0 0
0 0 1 0 0 0 0 0 1 0 0
0 0 0 -1 0 -1 0 0 0 0 0
0 0 0 0 1 0 1 1 0 1 1
0 0 0 0 0 2 0 0 0 0 0
0 0 0 0 0 0 -2 -3 0 -4 -4
0 0 0 0 0 0 0 3 0 0 4
0 0 0 0 0 0 0 0 -2 0 0
0 0 0 0 0 0 0 0 0 4 2
0 0 0 0 0 0 0 0 0 0 -4
)"},
        {{Basis::H, Basis::P}, R"(
1 0 0 0 0 0 0 0 0 0 0
0 1 0 0 0 0 0 0 0 0 0
0 0 1 0 0 0 0 0 1/2 0 0
0 0 0 1 0 1/2 0 0 0 0 0
0 0 0 0 1 0 1/2 1/6 0 1/4 1/24
0 0 0 0 0 1/2 0 0 0 0 0
0 0 0 0 0 0 1/2 1/2 0 1/2 1/4
0 0 0 0 0 0 0 1/3 0 0 1/3
0 0 0 0 0 0 0 0 1/2 0 0
0 0 0 0 0 0 0 0 0 1/4 1/8
0 0 0 0 0 0 0 0 0 0 1/4
)"},
        {{Basis::E, Basis::P}, R"(
-1 0 0 0 0 0 0 0 0 0 0
0 1 0 0 0 0 0 0 0 0 0
0 0 1 0 0 0 0 0 1/2 0 0
0 0 0 -1 0 -1/2 0 0 0 0 0
0 0 0 0 1 0 1/2 1/6 0 1/4 1/24
0 0 0 0 0 1/2 0 0 0 0 0
0 0 0 0 0 0 -1/2 -1/2 0 -1/2 -1/4
0 0 0 0 0 0 0 1/3 0 0 1/3
0 0 0 0 0 0 0 0 -1/2 0 0
0 0 0 0 0 0 0 0 0 1/4 1/8
0 0 0 0 0 0 0 0 0 0 -1/4
)"},
        {{Basis::Eplus, Basis::E}, R"(
-1 0 0 0 0 0 0 0 1 0 0
0 1 0 0 0 0 0 0 0 0 0
0 0 1 0 0 -1 0 0 1 1 0
0 0 0 -1 0 -1 1 1 0 2 1
0 0 0 0 1 0 1 1 0 1 1
0 0 0 0 0 1 0 0 0 -2 -1
0 0 0 0 0 0 -1 -2 0 -2 -3
0 0 0 0 0 0 0 1 0 0 2
0 0 0 0 0 0 0 0 -1 0 1
0 0 0 0 0 0 0 0 0 1 1
0 0 0 0 0 0 0 0 0 0 -1
)"},
        {{Basis::Eplus, Basis::H}, R"(
1 0 0 0 0 0 0 0 -1 0 0
0 1 0 0 0 0 0 0 0 0 0
0 0 1 0 0 -1 0 0 0 1 1
0 0 0 1 0 0 -1 -1 0 0 0
0 0 0 0 1 0 0 0 0 0 0
0 0 0 0 0 1 0 0 0 -2 -1
0 0 0 0 0 0 1 0 0 0 0
0 0 0 0 0 0 0 1 0 0 0
0 0 0 0 0 0 0 0 1 0 -1
0 0 0 0 0 0 0 0 0 1 0
0 0 0 0 0 0 0 0 0 0 1
)"},
        {{Basis::Eplus, Basis::P}, R"(
1 0 0 0 0 0 0 0 -1 0 0
0 1 0 0 0 0 0 0 0 0 0
0 0 1 0 0 -1 0 0 1/2 1 1/2
0 0 0 1 0 1/2 -1 -1 0 -1 -1/2
0 0 0 0 1 0 1/2 1/6 0 1/4 1/24
0 0 0 0 0 1/2 0 0 0 -1 -1/2
0 0 0 0 0 0 1/2 1/2 0 1/2 1/4
0 0 0 0 0 0 0 1/3 0 0 1/3
0 0 0 0 0 0 0 0 1/2 0 -1/2
0 0 0 0 0 0 0 0 0 1/4 1/8
0 0 0 0 0 0 0 0 0 0 1/4
)"},
        {{Basis::E, Basis::Eplus}, R"(
-1 0 0 0 0 0 0 0 -1 0 -1
0 1 0 0 0 0 0 0 0 0 0
0 0 1 0 0 1 0 0 1 1 1
0 0 0 -1 0 -1 -1 -1 0 -2 -1
0 0 0 0 1 0 1 1 0 1 1
0 0 0 0 0 1 0 0 0 2 1
0 0 0 0 0 0 -1 -2 0 -2 -3
0 0 0 0 0 0 0 1 0 0 2
0 0 0 0 0 0 0 0 -1 0 -1
0 0 0 0 0 0 0 0 0 1 1
0 0 0 0 0 0 0 0 0 0 -1
)"},
        {{Basis::H, Basis::Eplus}, R"(
1 0 0 0 0 0 0 0 1 0 1
0 1 0 0 0 0 0 0 0 0 0
0 0 1 0 0 1 0 0 0 1 0
0 0 0 1 0 0 1 1 0 0 0
0 0 0 0 1 0 0 0 0 0 0
0 0 0 0 0 1 0 0 0 2 1
0 0 0 0 0 0 1 0 0 0 0
0 0 0 0 0 0 0 1 0 0 0
0 0 0 0 0 0 0 0 1 0 1
0 0 0 0 0 0 0 0 0 1 0
0 0 0 0 0 0 0 0 0 0 1
)"},
        {{Basis::P, Basis::Eplus}, R"(
1 0 0 0 0 0 0 0 2 0 4
0 1 0 0 0 0 0 0 0 0 0
0 0 1 0 0 2 0 0 -1 4 -2
0 0 0 1 0 -1 2 0 0 -4 0
0 0 0 0 1 0 -1 1 0 1 -1
0 0 0 0 0 2 0 0 0 8 0
0 0 0 0 0 0 2 -3 0 -4 4
0 0 0 0 0 0 0 3 0 0 -4
0 0 0 0 0 0 0 0 2 0 4
0 0 0 0 0 0 0 0 0 4 -2
0 0 0 0 0 0 0 0 0 0 4
)"},
    };
    return m;
}

}  // namespace fixtures
