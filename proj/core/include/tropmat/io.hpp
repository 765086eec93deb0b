#pragma once

#include <string>

#include "tropmat/bool_linear.hpp"
#include "tropmat/matroid.hpp"
#include "tropmat/morphisms.hpp"
#include "tropmat/multivector.hpp"
#include "tropmat/suites.hpp"
#include "tropmat/transversal.hpp"

namespace tropmat {

// Matroids travel either as JSON {"n", "rank", "bases"} with 1-based element
// lists, or as the terse text form `n=<n> d=<d>` followed by one line of
// basis tokens (digit strings for n <= 9, comma-separated otherwise; "-" is
// the empty basis). Parsers auto-detect the form and validate the axioms.
Matroid parse_matroid(const std::string& text);
std::string matroid_to_json(const Matroid& m);
std::string matroid_to_terse(const Matroid& m);

SetSystem parse_set_system(const std::string& text);

// Matrices travel as '0'/'1' rows, one per line, or as JSON
// {"rows", "cols", "data": ["101", ...]}.
BMatrix parse_bmatrix(const std::string& text);
std::string bmatrix_to_text(const BMatrix& a);
std::string bmatrix_rows_string(const BMatrix& a);  // rows joined by '/'

Multivector parse_multivector(const std::string& text);  // {"n","d","terms"}
std::string multivector_to_json(const Multivector& v);

// {"source_n","target_n","images"}: integers with 0 for the point, or
// per-element arrays for a multivalued map.
PointedMap parse_pointed_map(const std::string& text);
MultiMap parse_multimap(const std::string& text);
bool looks_multivalued(const std::string& text);

std::string lattice_to_dot(const Matroid& m);   // cover digraph of flats
std::string lattice_to_json(const Matroid& m);  // nodes + cover edges

std::string fiber_report_to_json(const FiberReport& report);
std::string suite_report_to_json(const SuiteReport& report);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace tropmat
