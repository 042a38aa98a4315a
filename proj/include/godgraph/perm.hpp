#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace godgraph {

// A permutation of {0..n-1} stored as its image vector: p[i] is where i maps.
using Perm = std::vector<int>;

Perm identity_perm(int n);

// Function composition: (a * b)(i) = a(b(i)).
Perm compose(const Perm& a, const Perm& b);
Perm inverse(const Perm& p);
bool is_identity(const Perm& p);

// Lexicographic (Lehmer) rank over all n! permutations. identity -> 0,
// the descending permutation -> n!-1. Requires n <= 20.
std::uint64_t perm_rank(const Perm& p);
Perm perm_unrank(int n, std::uint64_t rank);
std::uint64_t factorial(int n);

// Canonical byte encoding used for interning: one byte per point when the
// degree fits, two little-endian bytes otherwise.
std::string pack_perm(const Perm& p);
Perm unpack_perm(const std::string& bytes, int n);

// Cycle lengths (>= 2 first, sorted descending, then 1s omitted).
std::vector<int> cycle_type(const Perm& p);

// Parses one permutation line. Accepts disjoint-cycle notation with 1-based
// points, e.g. "(1,28)(2,22)", or a whitespace-separated 1-based image list,
// e.g. "3 1 2". Fixed points outside the written support are filled up to
// `degree`. Throws SpecError on malformed input.
Perm parse_perm(const std::string& line, int degree);

// Reads a generator file: one permutation per line, blank lines and lines
// starting with '#' ignored. An optional first directive "degree N" pins the
// degree; otherwise the largest point mentioned anywhere decides it.
std::vector<Perm> parse_perm_lines(const std::vector<std::string>& lines);
std::vector<Perm> load_perm_file(const std::string& path);

}  // namespace godgraph
