#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "hue/arith.hpp"
#include "hue/complex.hpp"
#include "hue/hypergraph.hpp"
#include "hue/polynomial.hpp"
#include "hue/topology.hpp"

namespace hue {

// ordered_json keeps keys in insertion order, so repeated runs serialize
// byte-identically and the documents read in the order they were built.
using Json = nlohmann::ordered_json;

// All integer payload entries are decimal strings: arbitrary-precision values
// must survive consumers that only have doubles.
std::string int_string(const Int& v);
Json int_json(const Int& v);
Json rat_json(const Rat& v);  // "p/q" when the denominator is not 1

Json int_vector_json(const std::vector<Int>& v);
Json long_vector_json(const std::vector<long>& v);

// Power-basis coefficients, constant term first; the zero polynomial prints
// as ["0"] rather than [].
Json poly_json(const Poly& p);

// {"vertices": n, "edges": [[...], ...]} with plain JSON numbers, so a
// validated hypergraph can be fed straight back in as input format A.
Json hypergraph_json(const Hypergraph& H);

// {"vertices": [[1-based labels], ...], "faces": {"0": [[vertex indices]...}}
// with 0-based indices into the vertex list.
Json complex_json(const SimplicialComplex& K);

// Splits d >= 2 into prime powers, ascending by prime (6 -> 2, 3).
std::vector<Int> prime_power_factors(const Int& d);

// Torsion per degree as lists of prime powers; degrees without torsion are
// omitted. Keys are decimal degree strings.
Json torsion_json(const std::vector<std::vector<Int>>& torsion);

Json homology_json(const Homology& h);

// 64-bit FNV-1a of the raw input bytes, 16 lowercase hex digits.
std::string fnv1a_hex(std::string_view bytes);

}  // namespace hue
