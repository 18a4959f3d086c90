// System-description input: a small JSON schema with exact "p/q" coefficient
// strings, plus builtin aliases ("cauchy-fueter", "wfamily:n,m,[(j0,j),...]").
#pragma once

#include "jetcomplex/jets.hpp"

#include <string>
#include <vector>

namespace jetcomplex {

// Input problems carry a location string ("equation 2, term 1" or a JSON
// byte offset); the CLI maps this exception to its input-error exit code.
class ParseError : public std::runtime_error {
  public:
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

struct ParsedSystem {
    PDESystem system;
    std::vector<std::string> variable_names;
    std::vector<std::string> unknown_names;
    std::vector<std::string> equation_names;
};

// JSON text or builtin alias.
ParsedSystem parse_system_text(const std::string& text);

// File path (when it exists on disk) or anything parse_system_text takes.
ParsedSystem parse_system_source(const std::string& arg);

// Canonical JSON; parse_system_text(print_system(s)) reproduces the
// coefficient tensor exactly.
std::string print_system(const ParsedSystem& s);

// "(1,1);(2,2)" or "[(1,1),(2,2)]" -> pair list
std::vector<std::pair<int, int>> parse_pair_list(const std::string& text);

ParsedSystem builtin_cauchy_fueter();
ParsedSystem builtin_wfamily(int n, int m, const std::vector<std::pair<int, int>>& pairs);

}  // namespace jetcomplex
