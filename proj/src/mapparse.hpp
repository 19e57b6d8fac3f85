// Formula front end: exact rational-expression parsing, the three map
// grammars (affine pair, homogeneous triple, bihomogeneous quadruple) and
// canonical printing.
#pragma once

#include "jonquieres.hpp"

#include <stdexcept>

namespace cremona {

struct ParseError : std::runtime_error {
    ParseError(const std::string& what, int line, int col)
        : std::runtime_error("syntax error at line " + std::to_string(line) + ", column " +
                             std::to_string(col) + ": " + what),
          line(line),
          col(col) {}
    int line, col;
};

// Rational expression over +, -, *, /, ^int, parentheses, the variables of
// the given space, integer literals and the imaginary unit i.
RationalFunction parse_expression(const std::string& text, VarSet vars);

// Constant expression, e.g. "2/3", "-1+2*i".
GaussianRational parse_exact_scalar(const std::string& text);

enum class MapModel { Affine, Proj2, BiProj };

struct MapExpression {
    MapModel model;
    std::vector<RationalFunction> components; // 2, 3 or 4 entries

    std::string printed() const;
};

// "(x,y) -> (...)", "[x0:x1:x2] -> [..:..:..]" or
// "[x0:x1;y0:y1] -> [..:..;..:..]".
MapExpression parse_map(const std::string& text);

// Resolution into the working representations.
CremonaMap to_cremona_map(const MapExpression& m);
std::optional<JonquieresElement> to_jonquieres(const MapExpression& m);
P1xP1Map to_p1xp1_map(const MapExpression& m);

// Numeric complex literal in the CLI style: "3", "-2.5i", "1+2i".
std::complex<double> parse_complex(const std::string& text);

} // namespace cremona
