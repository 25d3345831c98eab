#pragma once

// Text formats of the command line: quiver specs, section literals and
// named map lists.
//
//   spec    := "cyclic" "t=" int "nodes=(" int ("," int)* ")"
//            | "k1" "t=" int "split=(" int ("," int)* ")" "tail=" int
//   section := "0" | rational | rational "*" point* | "[" rational ("," rational)* "]"
//   point   := "(" rational ":" rational ")" ["^" int] | "inf" ["^" int]
//   rep     := "phi" int "=" section (";" "phi" int "=" section)* [";"]
//
// Whitespace is ignored between tokens. Locations are reported as a 1-based
// line and a 0-based column.

#include "cyclic/divisor.hpp"
#include "cyclic/k1.hpp"
#include "cyclic/quiver.hpp"
#include "cyclic/representation.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace cyclic {

struct QuiverSpec {
    enum class Kind { Cyclic, K1 };
    Kind kind = Kind::Cyclic;
    int twist = 0;
    std::vector<int> degrees;  // node degrees, or the splitting for K1
    int tail = 0;              // K1 only

    CyclicQuiver cyclic() const;
    K1Quiver k1() const;

    friend bool operator==(const QuiverSpec&, const QuiverSpec&) = default;
};

/// Throws SyntaxError with a location, or SemanticError when the text parses
/// but does not describe a valid quiver.
QuiverSpec parse_spec(std::string_view text);
std::string to_string(const QuiverSpec& spec);

Rational parse_rational(std::string_view text);
std::vector<int> parse_int_list(std::string_view text);

/// A section of O(degree). A coefficient list must be rationally factorable
/// (IrrationalRoots otherwise); a point list must have the right degree
/// (DegreeMismatch otherwise).
Section parse_section(std::string_view text, int degree);
/// A binary form of the given degree, from any section literal.
CoeffForm parse_form(std::string_view text, int degree);

/// "0", "c*" for constants, otherwise "c*(a:1) (b:1)^2 inf".
std::string format_section(const Section& s);
/// Factored when possible, else the coefficient list "[c0,...,cd]".
std::string format_form(const CoeffForm& f);

/// Reps must name every map phi1..phiN exactly once (SemanticError otherwise).
CyclicRep parse_cyclic_rep(const CyclicQuiver& q, std::string_view text);
K1Rep parse_k1_rep(const K1Quiver& q, std::string_view text);

}  // namespace cyclic
