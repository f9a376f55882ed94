#pragma once

#include <filesystem>
#include <istream>
#include <string>
#include <string_view>

#include "biercert/simplicial_complex.hpp"

namespace bier {

/// Facet file grammar:
///   file    := header? line*
///   header  := "vertices:" WS+ INT NL
///   line    := (INT (WS+ INT)*)? COMMENT? NL
///   COMMENT := "#" any*
/// One facet per line as 1-based labels; blank and comment-only lines are
/// ignored. Without a header the ground set is the largest label seen. A
/// header followed by no facet lines denotes the empty-only complex. A file
/// with neither header nor facets is an error.
SimplicialComplex parse_facet_file(std::istream& in);
SimplicialComplex parse_facet_file(const std::filesystem::path& path);
SimplicialComplex parse_facet_string(std::string_view text);

/// Canonical serialization: header plus one facet line per facet in
/// canonical order. The void complex has no representation in the grammar
/// and raises InputError.
std::string to_facet_string(const SimplicialComplex& k);
void write_facet_file(const SimplicialComplex& k, const std::filesystem::path& path);

/// FNV-1a content hash of the canonical facet list (whitespace and comments
/// of the source file do not matter). Defined for every kind, including void.
std::string input_digest(const SimplicialComplex& k);

}  // namespace bier
