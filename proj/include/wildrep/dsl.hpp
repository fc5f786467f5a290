#pragma once

#include <string>

#include "wildrep/formal.hpp"

namespace wildrep {

/// A named global class as written in the text format.
struct SourceSpec {
    std::string name;
    GlobalClass cls;
};

/// Grammar:
///   spec  := "class" IDENT ["unmodified"] "{" block+ "}"
///   block := "at" point ":" entry ("," entry)* ";"
///   point := "inf" | rational
///   entry := "<" poly ">" ["#" int] ["{" eig (";" eig)* "}"]
///   poly  := "0" | ["-"] term (("+"|"-") term)*
///   term  := [rational "*"] "x" ["^" ("(" rational ")" | int)]
///   eig   := (rational | ["-"] IDENT) ":" "[" int ("," int)* "]"
/// `x` is z at inf and 1/(z-a) at a finite point a. A missing class means the identity.
/// Comments run from '//' to the end of the line.
SourceSpec parse_dsl(const std::string& text);
std::string print_dsl(const SourceSpec& s);

}  // namespace wildrep
