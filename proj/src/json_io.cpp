#include "hue/json_io.hpp"

#include <algorithm>
#include <cstdint>

#include "hue/subset.hpp"

namespace hue {

std::string int_string(const Int& v) { return v.get_str(); }

Json int_json(const Int& v) { return Json(v.get_str()); }

Json rat_json(const Rat& v) {
  if (v.get_den() == 1) return Json(v.get_num().get_str());
  return Json(v.get_num().get_str() + "/" + v.get_den().get_str());
}

Json int_vector_json(const std::vector<Int>& v) {
  Json out = Json::array();
  for (const Int& x : v) out.push_back(int_json(x));
  return out;
}

Json long_vector_json(const std::vector<long>& v) {
  Json out = Json::array();
  for (long x : v) out.push_back(Json(std::to_string(x)));
  return out;
}

Json poly_json(const Poly& p) {
  Json out = Json::array();
  if (p.c.empty()) {
    out.push_back("0");
    return out;
  }
  for (const Rat& coeff : p.c) out.push_back(rat_json(coeff));
  return out;
}

Json hypergraph_json(const Hypergraph& H) {
  Json out;
  out["vertices"] = H.n;
  Json edges = Json::array();
  for (const auto& edge : H.edges_as_lists()) edges.push_back(edge);
  out["edges"] = std::move(edges);
  return out;
}

Json complex_json(const SimplicialComplex& K) {
  Json out;
  Json verts = Json::array();
  for (Mask label : K.vertex_labels) verts.push_back(mask_vertices(label));
  out["vertices"] = std::move(verts);
  Json faces = Json::object();
  for (std::size_t d = 0; d < K.faces.size(); ++d) {
    Json list = Json::array();
    for (const auto& tuple : K.faces[d]) list.push_back(tuple);
    faces[std::to_string(d)] = std::move(list);
  }
  out["faces"] = std::move(faces);
  return out;
}

std::vector<Int> prime_power_factors(const Int& d) {
  std::vector<Int> out;
  Int rest = d;
  for (Int p = 2; p * p <= rest; p += (p == 2 ? 1 : 2)) {
    if (rest % p != 0) continue;
    Int power(1);
    while (rest % p == 0) {
      power *= p;
      rest /= p;
    }
    out.push_back(power);
  }
  if (rest > 1) out.push_back(rest);
  return out;
}

Json torsion_json(const std::vector<std::vector<Int>>& torsion) {
  Json out = Json::object();
  for (std::size_t d = 0; d < torsion.size(); ++d) {
    if (torsion[d].empty()) continue;
    std::vector<Int> powers;
    for (const Int& factor : torsion[d]) {
      std::vector<Int> parts = prime_power_factors(factor);
      powers.insert(powers.end(), parts.begin(), parts.end());
    }
    std::sort(powers.begin(), powers.end());
    out[std::to_string(d)] = int_vector_json(powers);
  }
  return out;
}

Json homology_json(const Homology& h) {
  Json out;
  out["coefficients"] = h.integral ? "Z" : "Q";
  out["empty_complex"] = h.empty_complex;
  out["reduced_betti"] = long_vector_json(h.betti);
  // beta~_0 counts components minus one on nonempty complexes; print both so
  // nobody has to remember which convention this is.
  long components = 0;
  if (!h.empty_complex && !h.betti.empty()) components = h.betti[0] + 1;
  if (!h.empty_complex && h.betti.empty()) components = 1;  // a single point
  out["components"] = std::to_string(components);
  if (h.integral) out["torsion"] = torsion_json(h.torsion);
  out["euler_reduced"] = int_json(h.euler_reduced);
  return out;
}

std::string fnv1a_hex(std::string_view bytes) {
  std::uint64_t hash = 1469598103934665603ULL;
  for (unsigned char b : bytes) {
    hash ^= b;
    hash *= 1099511628211ULL;
  }
  static const char* digits = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[static_cast<std::size_t>(i)] = digits[hash & 0xF];
    hash >>= 4;
  }
  return out;
}

}  // namespace hue
