#include "hue/commands.hpp"

#include <chrono>
#include <optional>

#include "hue/complex.hpp"
#include "hue/enumerative.hpp"
#include "hue/hypergraph.hpp"
#include "hue/polynomial.hpp"
#include "hue/subset.hpp"
#include "hue/topology.hpp"
#include "hue/wedge.hpp"

namespace hue {
namespace {

std::size_t build_budget(const CommandOptions& opt) {
  return opt.budget ? opt.budget : kDefaultBuildBudget;
}

std::size_t link_budget(const CommandOptions& opt) {
  return opt.budget ? opt.budget : kDefaultLinkBudget;
}

CoefficientRing ring_from_name(const std::string& name) {
  if (name == "Q") return CoefficientRing::rational;
  if (name == "Z") return CoefficientRing::integral;
  throw ValidationError("unknown coefficient ring '" + name + "' (expected Q or Z)");
}

Json validate_payload(const ParsedHypergraph& parsed) {
  const Hypergraph& H = parsed.H;
  Json out;
  out["hypergraph"] = hypergraph_json(H);
  out["edge_count"] = H.edge_count();
  out["min_edge_cardinality"] = H.min_edge_card();
  out["max_edge_cardinality"] = H.max_edge_card();
  out["uniform"] = H.uniform();
  out["isolated_vertices"] = H.isolated_vertices();
  out["warnings"] = parsed.warnings;
  return out;
}

Json complex_payload(const Hypergraph& H, const SimplicialComplex& K) {
  (void)H;
  FHVectorOfComplex fh = f_h_vectors_of_complex(K);
  Json out = complex_json(K);
  out["dimension"] = K.dim();
  out["f_vector"] = int_vector_json(fh.f);
  out["h_vector"] = int_vector_json(fh.h);
  out["pure"] = K.is_pure();
  out["facet_count"] = K.empty_face_only() ? 0 : K.facet_list().size();
  return out;
}

Json chromatic_payload(const Hypergraph& H, const std::string& method_name, int normalization,
                       std::size_t budget) {
  Poly chi;
  if (method_name == "all") {
    Poly brute = chromatic_polynomial(H, ChromaticMethod::brute, budget);
    Poly faces = chromatic_polynomial(H, ChromaticMethod::faces, budget);
    Poly incl = chromatic_polynomial(H, ChromaticMethod::inclusion_exclusion, budget);
    if (!(brute == faces) || !(faces == incl))
      throw CrossCheckFailure("chromatic methods disagree");
    chi = faces;
  } else {
    chi = chromatic_polynomial(H, chromatic_method_from_name(method_name), budget);
  }
  // Face-count conventions live at the shifted polynomial chi(k+1), which
  // counts the i-faces of the cube triangulation missed by the box complex.
  Poly shifted = shift_argument(chi, Rat(1));
  PolyFVector f = poly_f_vector(shifted, H.n);
  const int np = normalization >= 0 ? normalization : H.n;
  PolyHVector h = poly_h_vector(shifted, np);
  Json out;
  out["power_basis"] = poly_json(chi);
  out["f_vector"] = int_vector_json(f.values);
  Json hj;
  hj["n_prime"] = h.n_prime;
  hj["values"] = int_vector_json(h.values);
  out["h_vector"] = std::move(hj);
  out["method"] = method_name;
  return out;
}

Json bounds_payload(const Hypergraph& H, int truncation) {
  STable st = s_table(H);
  if (truncation > st.edge_count)
    throw ValidationError("truncation level exceeds the edge count");
  Json out;
  out["n"] = H.n;
  out["edge_count"] = st.edge_count;
  std::vector<Int> exact;
  for (int i = 0; i <= H.n; ++i)
    exact.push_back(truncated_bound(H, st, i, st.edge_count).value);
  out["f_vector"] = int_vector_json(exact);
  Json table = Json::array();
  const int m_lo = truncation >= 0 ? truncation : 0;
  const int m_hi = truncation >= 0 ? truncation : st.edge_count;
  for (int i = 0; i <= H.n; ++i) {
    for (int m = m_lo; m <= m_hi; ++m) {
      TruncationBound tb = truncated_bound(H, st, i, m);
      Json row;
      row["i"] = tb.i;
      row["m"] = tb.m;
      if (tb.exact) {
        row["lower"] = int_json(tb.value);
        row["upper"] = int_json(tb.value);
      } else if (tb.upper_bound) {
        row["lower"] = nullptr;
        row["upper"] = int_json(tb.value);
      } else {
        row["lower"] = int_json(tb.value);
        row["upper"] = nullptr;
      }
      row["exact"] = tb.exact;
      table.push_back(std::move(row));
    }
  }
  out["table"] = std::move(table);
  return out;
}

Json homology_payload(const SimplicialComplex& K, CoefficientRing ring) {
  Homology h = ring == CoefficientRing::integral ? integral_homology(K) : rational_homology(K);
  Json out = homology_json(h);
  out["dimension"] = K.dim();
  return out;
}

Json cup_payload(const SimplicialComplex& K, CoefficientRing ring, std::size_t budget) {
  CupAnalysis c = cup_product_analysis(K, ring, budget);
  Json out;
  out["ring"] = c.ring == CoefficientRing::integral ? "Z" : "Q";
  out["cohomology_rank"] = long_vector_json(c.cohomology_rank);
  out["pairs_checked"] = c.pairs_checked;
  out["product_found"] = c.product_found;
  if (c.witness) {
    Json w;
    w["p"] = c.witness->p;
    w["q"] = c.witness->q;
    w["generator_p"] = c.witness->gen_p;
    w["generator_q"] = c.witness->gen_q;
    w["face"] = c.witness->face;
    out["witness"] = std::move(w);
  } else {
    out["witness"] = nullptr;
  }
  out["wedge_of_spheres"] = c.wedge_of_spheres;
  return out;
}

Json cm_payload(const SimplicialComplex& K, std::size_t budget, bool* budget_hit) {
  CMReport r = reisner_cm_check(K, budget);
  *budget_hit = (r.verdict == "budget-exceeded");
  Json out;
  out["verdict"] = r.verdict;
  out["pure"] = r.pure;
  out["witness_face"] = r.witness_face ? Json(*r.witness_face) : Json(nullptr);
  out["witness_degree"] = r.witness_degree ? Json(*r.witness_degree) : Json(nullptr);
  out["witness_betti"] =
      r.witness_betti ? Json(std::to_string(*r.witness_betti)) : Json(nullptr);
  out["links_checked"] = r.links_checked;
  return out;
}

Json connectedness_payload(const Hypergraph& H, std::size_t budget, bool* cross_fail) {
  ConnectednessReport r = connectedness_check(H, true, budget);
  *cross_fail = !r.cross_check_ok;
  Json out;
  Json edges = Json::array();
  for (const auto& e : H.edges_as_lists()) edges.push_back(e);
  out["edges"] = std::move(edges);
  out["compat_components"] = r.compat_components;  // indices into "edges"
  out["compat_count"] = r.compat_count;
  out["plain_rule_applies"] = r.plain_rule_applies;
  out["predicted_components"] = r.predicted_components;
  out["empty_complex"] = r.empty_complex ? Json(*r.empty_complex) : Json(nullptr);
  out["betti_0"] = r.betti0 ? Json(std::to_string(*r.betti0)) : Json(nullptr);
  out["components_from_homology"] =
      r.betti0 ? Json(std::to_string(*r.betti0 + 1))
               : (r.empty_complex && *r.empty_complex ? Json("0") : Json(nullptr));
  out["cross_check_ok"] = r.cross_check_ok;
  return out;
}

Json wedge_payload(const Hypergraph& H, std::size_t budget, bool* cross_fail) {
  WedgeReport w = wedge_decomposition(H, budget);
  *cross_fail = !(w.agree && w.euler_ok);
  Json out;
  Json elements = Json::array();
  for (const PosetElement& e : w.poset.elements) {
    Json el;
    Json pattern = Json::array();
    for (Mask blk : e.pattern) pattern.push_back(subset_to_string(blk, H.n));
    el["pattern"] = std::move(pattern);
    Json reps = Json::array();
    for (int j = 0; j < H.edge_count(); ++j)
      if (e.representative & (EdgeSet(1) << j))
        reps.push_back(subset_to_string(H.edges[static_cast<std::size_t>(j)], H.n));
    el["representative_edges"] = std::move(reps);
    el["block_count"] = e.block_count;
    el["sphere_dim"] = e.sphere_dim;
    el["below"] = e.below;
    elements.push_back(std::move(el));
  }
  Json poset;
  poset["elements"] = std::move(elements);
  poset["top_index"] = w.poset.top_index;
  out["poset"] = std::move(poset);
  Json summands = Json::array();
  for (const WedgeSummand& s : w.summands) {
    Json sj;
    sj["element"] = s.element;
    sj["sphere_dim"] = s.sphere_dim;
    sj["interval_empty"] = s.interval_empty;
    sj["interval_betti"] = long_vector_json(s.interval_betti);
    sj["interval_euler"] = int_json(s.interval_euler);
    summands.push_back(std::move(sj));
  }
  out["summands"] = std::move(summands);
  out["predicted_betti"] = long_vector_json(w.predicted_betti);
  out["predicted_minus_one"] = w.predicted_minus_one;
  out["direct_betti"] = long_vector_json(w.direct_betti);
  out["direct_minus_one"] = w.direct_minus_one;
  out["agree"] = w.agree;
  out["euler_ok"] = w.euler_ok;
  return out;
}

// The consolidated pipeline: everything the single commands expose, on one
// input, with the cross-checks promoted to exit codes.
Json report_payload(const CommandOptions& opt, const ParsedHypergraph& parsed,
                    std::vector<Json>& budget_notes, int* exit_code) {
  const Hypergraph& H = parsed.H;
  Json out;
  out["hypergraph"] = hypergraph_json(H);
  out["warnings"] = parsed.warnings;

  SimplicialComplex K = build_coloring_complex(H, VertexOrder::canonical, build_budget(opt));
  FHVectorOfComplex fh = f_h_vectors_of_complex(K);
  out["dimension"] = K.dim();
  out["pure"] = K.is_pure();
  out["f_vector"] = int_vector_json(fh.f);
  out["h_vector"] = int_vector_json(fh.h);
  bool obstructed = false;
  for (const Int& hi : fh.h) obstructed = obstructed || hi < 0;
  out["partitionable_obstructed"] = obstructed;

  out["chromatic"] = chromatic_payload(H, "all", opt.normalization, build_budget(opt));
  out["bounds"] = bounds_payload(H, -1);
  out["homology"] = homology_payload(K, CoefficientRing::integral);
  out["cup"] = cup_payload(K, CoefficientRing::rational, build_budget(opt));

  bool cm_budget_hit = false;
  out["cm"] = cm_payload(K, link_budget(opt), &cm_budget_hit);
  if (cm_budget_hit) {
    budget_notes.push_back("link enumeration budget exhausted during the CM check");
    *exit_code = std::max(*exit_code, 3);
  }

  bool conn_fail = false;
  out["connectedness"] = connectedness_payload(H, build_budget(opt), &conn_fail);
  if (conn_fail) *exit_code = 4;

  if (H.edge_count() <= kMaxWedgeEdges) {
    bool wedge_fail = false;
    out["wedge"] = wedge_payload(H, build_budget(opt), &wedge_fail);
    if (wedge_fail) *exit_code = 4;
  } else {
    out["wedge"] = nullptr;
    budget_notes.push_back("wedge comparison skipped: more than " +
                           std::to_string(kMaxWedgeEdges) + " edges");
  }
  return out;
}

Json parameters_json(const CommandOptions& opt) {
  Json p;
  p["method"] = opt.method;
  p["truncation"] = opt.truncation;
  p["coefficients"] = opt.coefficients;
  p["budget"] = opt.budget;
  p["reduce_to_minimal"] = opt.reduce_to_minimal;
  p["normalization"] = opt.normalization;
  return p;
}

void render_value(const Json& v, int indent, std::string& out);

bool all_scalar(const Json& arr) {
  for (const auto& v : arr)
    if (v.is_object() || v.is_array()) return false;
  return true;
}

std::string scalar_text(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_null()) return "-";
  return v.dump();
}

void render_value(const Json& v, int indent, std::string& out) {
  const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
  if (v.is_object()) {
    for (auto it = v.begin(); it != v.end(); ++it) {
      if (it.value().is_object() || (it.value().is_array() && !all_scalar(it.value()))) {
        out += pad + it.key() + ":\n";
        render_value(it.value(), indent + 1, out);
      } else if (it.value().is_array()) {
        out += pad + it.key() + ": [";
        bool first = true;
        for (const auto& x : it.value()) {
          if (!first) out += ", ";
          out += scalar_text(x);
          first = false;
        }
        out += "]\n";
      } else {
        out += pad + it.key() + ": " + scalar_text(it.value()) + "\n";
      }
    }
  } else if (v.is_array()) {
    int pos = 0;
    for (const auto& x : v) {
      out += pad + "[" + std::to_string(pos++) + "]\n";
      render_value(x, indent + 1, out);
    }
  } else {
    out += pad + scalar_text(v) + "\n";
  }
}

}  // namespace

std::string render_pretty(const Json& document) {
  std::string out;
  render_value(document, 0, out);
  return out;
}

CommandResult run_command(const CommandOptions& opt) {
  CommandResult res;
  Json doc;
  doc["version"] = kToolVersion;
  doc["command"] = opt.command;
  doc["input_hash"] = fnv1a_hex(opt.input_text);
  doc["parameters"] = parameters_json(opt);
  std::vector<Json> budget_notes;
  const auto t0 = std::chrono::steady_clock::now();

  try {
    ParsedHypergraph parsed = parse_hypergraph(opt.input_text, opt.reduce_to_minimal);
    for (const std::string& w : parsed.warnings) res.diagnostics.push_back("[warn] " + w);
    const Hypergraph& H = parsed.H;

    Json payload;
    if (opt.command == "validate") {
      payload = validate_payload(parsed);
    } else if (opt.command == "complex") {
      SimplicialComplex K = build_coloring_complex(H, VertexOrder::canonical, build_budget(opt));
      payload = complex_payload(H, K);
    } else if (opt.command == "chromatic") {
      payload = chromatic_payload(H, opt.method, opt.normalization, build_budget(opt));
    } else if (opt.command == "bounds") {
      payload = bounds_payload(H, opt.truncation);
    } else if (opt.command == "homology") {
      SimplicialComplex K = build_coloring_complex(H, VertexOrder::canonical, build_budget(opt));
      payload = homology_payload(K, ring_from_name(opt.coefficients));
    } else if (opt.command == "cup") {
      SimplicialComplex K = build_coloring_complex(H, VertexOrder::canonical, build_budget(opt));
      payload = cup_payload(K, ring_from_name(opt.coefficients), build_budget(opt));
    } else if (opt.command == "cm") {
      SimplicialComplex K = build_coloring_complex(H, VertexOrder::canonical, build_budget(opt));
      bool budget_hit = false;
      payload = cm_payload(K, link_budget(opt), &budget_hit);
      if (budget_hit) {
        budget_notes.push_back("link enumeration budget exhausted during the CM check");
        res.exit_code = 3;
      }
    } else if (opt.command == "connectedness") {
      bool cross_fail = false;
      payload = connectedness_payload(H, build_budget(opt), &cross_fail);
      if (cross_fail) res.exit_code = 4;
    } else if (opt.command == "wedge") {
      bool cross_fail = false;
      payload = wedge_payload(H, build_budget(opt), &cross_fail);
      if (cross_fail) res.exit_code = 4;
    } else if (opt.command == "report") {
      payload = report_payload(opt, parsed, budget_notes, &res.exit_code);
    } else {
      throw ValidationError("unknown command '" + opt.command + "'");
    }
    doc["payload"] = std::move(payload);
  } catch (const ValidationError& e) {
    res.exit_code = 2;
    doc["error"] = Json{{"type", "validation"}, {"message", e.what()}};
    res.diagnostics.push_back(std::string("[error] ") + e.what());
  } catch (const BudgetExceeded& e) {
    res.exit_code = 3;
    doc["error"] = Json{{"type", "budget"}, {"message", e.what()}};
    res.diagnostics.push_back(std::string("[error] ") + e.what());
  } catch (const CrossCheckFailure& e) {
    res.exit_code = 4;
    doc["error"] = Json{{"type", "cross-check"}, {"message", e.what()}};
    res.diagnostics.push_back(std::string("[error] ") + e.what());
  } catch (const std::exception& e) {
    res.exit_code = 1;
    doc["error"] = Json{{"type", "internal"}, {"message", e.what()}};
    res.diagnostics.push_back(std::string("[error] ") + e.what());
  }

  doc["budget_notes"] = budget_notes;
  const auto t1 = std::chrono::steady_clock::now();
  const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
  doc["wall_clock_ms"] = ms;
  res.diagnostics.push_back("[time] " + opt.command + " finished in " + std::to_string(ms) +
                            " ms");
  res.document = std::move(doc);
  return res;
}

}  // namespace hue
