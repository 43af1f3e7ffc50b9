#include "eisenfold/io.hpp"

#include <limits>

#include "eisenfold/errors.hpp"

namespace eisenfold {

Json bigint_json(const BigInt& n) {
  if (n.fits_slong_p()) return static_cast<std::int64_t>(n.get_si());
  return n.get_str();
}

BigInt bigint_from_json(const Json& j) {
  if (j.is_number_integer()) return BigInt(static_cast<long>(j.get<std::int64_t>()));
  if (j.is_string()) {
    BigInt n;
    if (n.set_str(j.get<std::string>(), 10) != 0) throw DomainError("not a decimal integer: " + j.get<std::string>());
    return n;
  }
  throw DomainError("expected an integer, got " + j.dump());
}

Json rational_json(const BigRational& q) { return Json::array({bigint_json(q.get_num()), bigint_json(q.get_den())}); }

Json lattice_json(const LatticePoint& p) { return Json::array({p.a, p.b}); }

Json surd_json(const QuadraticSurd& x) {
  Json j;
  j["r"] = rational_json(x.r());
  j["s"] = rational_json(x.s());
  j["rad"] = bigint_json(x.d());
  return j;
}

Json complex_json(const QuotientComplex& c) {
  Json j;
  j["schema"] = "complex.v1";
  j["beta"] = lattice_json(c.beta());
  j["delta"] = lattice_json(c.delta());
  Json faces = Json::array();
  for (const auto& t : c.faces())
    faces.push_back({{"anchor", lattice_json(t.anchor)}, {"orientation", t.orientation == Orientation::Up ? "up" : "down"}});
  j["faces"] = std::move(faces);
  Json pairing = Json::array();
  for (int f = 0; f < c.face_count(); ++f)
    for (int s = 0; s < 3; ++s) {
      const SideRef o = c.glued({f, s});
      if (SideRef{f, s} < o || SideRef{f, s} == o) pairing.push_back({f, s, o.face, o.side});
    }
  j["pairing"] = std::move(pairing);
  Json vertices = Json::array();
  for (const auto& v : c.vertices())
    vertices.push_back({{"degree", v.degree}, {"representative_lattice_point", lattice_json(v.representative)}});
  j["vertices"] = std::move(vertices);
  return j;
}

Json coloring_json(const FaceColoring& col) {
  Json j;
  j["schema"] = "coloring.v1";
  j["complex_ref"] = {{"schema", "complex.v1"}, {"beta", lattice_json(col.complex().beta())},
                      {"faces", col.face_count()}};
  j["colors"] = col.bitstring();
  j["fold_count"] = fold_count(col);
  j["eta"] = rational_json(eta(col));
  j["good"] = is_good(col).good;
  return j;
}

FaceColoring coloring_from_json(const Json& j) {
  try {
    const Json& ref = j.at("complex_ref");
    const Json& beta = ref.is_object() ? ref.at("beta") : ref;
    const EisensteinInt b{bigint_from_json(beta.at(0)), bigint_from_json(beta.at(1))};
    const auto c = make_complex(b);
    if (ref.is_object() && ref.contains("faces") && ref["faces"].get<int>() != c->face_count())
      throw DomainError("complex_ref face count does not match beta");
    return FaceColoring::from_bitstring(c, j.at("colors").get<std::string>());
  } catch (const nlohmann::json::exception& e) {
    throw DomainError(std::string("malformed coloring document: ") + e.what());
  }
}

Json search_json(const SearchReport& r, bool include_timing) {
  Json j;
  j["schema"] = "search.v1";
  j["beta"] = lattice_json(r.beta);
  j["mode"] = r.mode == SearchMode::Exact ? "exact" : "anytime";
  j["status"] = r.status == SearchStatus::ProvedOptimal ? "proved_optimal" : "incumbent";
  j["best_fold"] = r.best_fold;
  j["proven_lower_bound"] = r.proven_lower_bound;
  if (r.best_coloring) {
    j["best_coloring"] = r.best_coloring->bitstring();
    j["eta"] = rational_json(eta(*r.best_coloring));
  }
  j["nodes_explored"] = r.nodes_explored;
  if (include_timing) {
    j["wall_time"] = r.wall_time;
    j["threads"] = r.threads;
  }
  if (!r.note.empty()) j["note"] = r.note;
  return j;
}

Json eta_limit_json(const EtaLimitReport& r) {
  Json j;
  j["zeta"] = surd_json(r.zeta);
  j["zeta_text"] = r.zeta.str();
  Json approx = Json::array();
  for (const auto& a : r.approximants)
    approx.push_back({{"p", bigint_json(a.p)}, {"q", bigint_json(a.q)}, {"folds", bigint_json(a.folds)},
                      {"faces", bigint_json(a.faces)}});
  j["approximants"] = std::move(approx);
  j["digits_tried"] = r.digits_tried;
  j["reliable_terms"] = r.reliable_terms;
  if (r.eta) {
    j["eta_surd"] = surd_json(*r.eta);
    j["eta_text"] = r.eta->str();
    j["eta_value"] = r.eta->to_double();
    j["expansion"] = r.expansion->str();
  }
  j["status"] = r.status == EtaLimitReport::Status::Determined ? "determined" : "undetermined";
  if (!r.reason.empty()) j["reason"] = r.reason;
  return j;
}

Json ratio_scan_json(const QuadraticSurd& zeta, const std::vector<RatioRow>& rows) {
  Json j;
  j["zeta"] = surd_json(zeta);
  Json out = Json::array();
  for (const auto& r : rows)
    out.push_back({{"index", r.index},
                   {"p", bigint_json(r.approx.p)},
                   {"q", bigint_json(r.approx.q)},
                   {"folds", bigint_json(r.approx.folds)},
                   {"faces", bigint_json(r.approx.faces)},
                   {"eta", rational_json(r.approx.eta)},
                   {"fold_ratio", r.fold_ratio.get_d()}});
  j["rows"] = std::move(out);
  return j;
}

Json ie_sweep_json(const std::vector<IeEntry>& rows, std::int64_t b_max) {
  Json j;
  j["b_max"] = b_max;
  Json out = Json::array();
  std::int64_t total = 0;
  for (const auto& e : rows) {
    Json v = Json::array();
    for (const auto& p : e.violations) v.push_back(lattice_json(p));
    total += static_cast<std::int64_t>(e.violations.size());
    out.push_back({{"beta", lattice_json(e.beta)},
                   {"eta", rational_json(e.eta)},
                   {"competitors", e.competitors},
                   {"closest", lattice_json(e.closest)},
                   {"closest_eta", rational_json(e.closest_eta)},
                   {"violations", std::move(v)}});
  }
  j["entries"] = std::move(out);
  j["total_violations"] = total;
  return j;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace eisenfold
