#include "salemtwist/report.hpp"

#include <cstdio>

#include "salemtwist/error.hpp"
#include "salemtwist/parallel.hpp"

namespace salemtwist::report {

namespace {

const char* convention_name(family::Convention c) {
  return c == family::Convention::literal ? "literal" : "calibrated";
}

Json finish(Json doc, const Json& checks) {
  bool passed = true;
  for (const auto& [name, value] : checks.items()) passed = passed && value.get<bool>();
  doc["checks"] = checks;
  doc["passed"] = passed;
  return doc;
}


}  // namespace

Json to_json(const CertifiedReal& x) { return Json{{"value", x.value}, {"error_bound", x.error_bound}}; }

Json to_json(const IntPolynomial& p) {
  Json a = Json::array();
  for (const auto& c : p.coefficients()) a.push_back(c.get_str());
  return a;
}

IntPolynomial polynomial_from_json(const Json& j) {
  if (!j.is_array()) throw Error(ErrorCode::parse_error, "polynomial JSON must be an array of coefficient strings");
  std::vector<mpz_class> c;
  for (const auto& e : j) {
    if (!e.is_string()) throw Error(ErrorCode::parse_error, "polynomial coefficients must be decimal strings");
    mpz_class v;
    if (v.set_str(e.get<std::string>(), 10) != 0) throw Error(ErrorCode::parse_error, "bad coefficient '" + e.get<std::string>() + "'");
    c.push_back(v);
  }
  return IntPolynomial(std::move(c));
}

Json to_json(const IntMatrix& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.dimension(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.dimension(); ++c) row.push_back(m(r, c).get_str());
    rows.push_back(std::move(row));
  }
  return rows;
}

Json to_json(const SalemReport& r) {
  return Json{{"degree", r.degree},
              {"is_reciprocal", r.is_reciprocal},
              {"square_free", r.square_free},
              {"leading_root", r.leading_root ? to_json(*r.leading_root) : Json(nullptr)},
              {"real_root_count", r.real_root_count},
              {"real_roots_above_one", r.real_roots_above_one},
              {"unimodular_count", r.unimodular_count},
              {"residual", r.residual},
              {"max_error_radius", r.max_error_radius},
              {"roots_certified", r.roots_certified},
              {"is_salem", r.is_salem},
              {"coronal", r.coronal}};
}

Json to_json(const CyclotomicSplit& s) {
  Json factors = Json::array();
  for (const auto& f : s.factors) factors.push_back(Json{{"m", f.m}, {"multiplicity", f.multiplicity}});
  return Json{{"core", to_json(s.core)}, {"core_text", s.core.to_string()}, {"cyclotomic_factors", factors}};
}

Json to_json(const Endomorphism& phi) {
  Json j = Json::object();
  for (std::size_t g = 1; g <= phi.rank(); ++g)
    j[generator_name(phi.rank(), static_cast<int>(g))] = format_word(phi.image(static_cast<int>(g)));
  return j;
}

Endomorphism endomorphism_from_json(const Json& j, std::size_t rank) {
  if (!j.is_object()) throw Error(ErrorCode::parse_error, "endomorphism JSON must be an object");
  Endomorphism phi = Endomorphism::identity(rank);
  std::vector<bool> given(rank + 1, false);
  for (const auto& [name, value] : j.items()) {
    const Word g = parse_word(name, rank);
    if (g.length() != 1 || g.letters()[0].sign != 1) throw Error(ErrorCode::parse_error, "key '" + name + "' is not a generator");
    if (!value.is_string()) throw Error(ErrorCode::parse_error, "image of " + name + " must be a word string");
    const int index = g.letters()[0].generator;
    given[static_cast<std::size_t>(index)] = true;
    phi = phi.with_image(index, parse_word(value.get<std::string>(), rank));
  }
  for (std::size_t g = 1; g <= rank; ++g)
    if (!given[g]) throw Error(ErrorCode::parse_error, "missing image of " + generator_name(rank, static_cast<int>(g)));
  return phi;
}

Json to_json(const family::EndoDiff& d, std::size_t rank) {
  Json mismatches = Json::array();
  for (const auto& m : d.mismatches)
    mismatches.push_back(Json{{"generator", generator_name(rank, m.generator)},
                              {"lhs", format_word(m.lhs)},
                              {"rhs", format_word(m.rhs)}});
  return Json{{"equal", d.equal}, {"mismatches", mismatches}};
}

Json to_json(const family::IsotopyReport& r) {
  const auto rank = static_cast<std::size_t>(r.n + 2);
  return Json{{"n", r.n},
              {"table", r.table},
              {"passed", r.passed()},
              {"f_vs_composed", to_json(r.f_vs_t, rank)},
              {"composed_vs_closed_form", to_json(r.t_vs_closed, rank)},
              {"f_vs_closed_form", to_json(r.f_vs_closed, rank)}};
}

Json to_json(const family::ConventionReport& r) {
  Json candidates = Json::array();
  for (const auto& c : r.candidates) {
    candidates.push_back(Json{{"exponent", c.exponent},
                              {"offset", c.exponent - r.n},
                              {"chi", to_json(c.chi)},
                              {"chi_text", c.chi.to_string()},
                              {"split", to_json(c.split)},
                              {"core_degree", c.split.core.degree()},
                              {"salem", c.split.core.degree() >= 2 ? to_json(c.salem) : Json(nullptr)},
                              {"lehmer_match", c.lehmer_match}});
  }
  return Json{{"n", r.n},
              {"literal_exponent", r.literal_exponent},
              {"calibrated_exponent", r.calibrated_exponent ? Json(*r.calibrated_exponent) : Json(nullptr)},
              {"anchor_offset", r.anchor_offset},
              {"salem_core_degree", r.salem_core_degree},
              {"lehmer_match", r.lehmer_match},
              {"literal_degree_ok", r.literal_degree_ok},
              {"literal_agrees", r.literal_agrees},
              {"candidates", candidates}};
}

Json to_json(const family::MMatrixReport& r) {
  Json candidates = Json::array();
  for (const auto& c : r.candidates) {
    candidates.push_back(Json{{"exponent", c.exponent},
                              {"numerator", to_json(c.numerator)},
                              {"divisible_by_t_plus_1", c.divisible},
                              {"quotient", c.divisible ? to_json(c.quotient) : Json(nullptr)},
                              {"matches", c.matches},
                              {"matches_up_to_cyclotomic", c.matches_up_to_cyclotomic}});
  }
  return Json{{"n", r.n},
              {"computed_dimension", r.computed_dimension},
              {"printed_dimension", r.printed_dimension},
              {"char_poly", to_json(r.char_poly)},
              {"char_poly_text", r.char_poly.to_string()},
              {"split", to_json(r.split)},
              {"core_is_lehmer", r.core_is_lehmer},
              {"core_is_lehmer_at_minus_t", r.core_is_lehmer_reflected},
              {"claimed_expression", candidates},
              {"spectral_radius", to_json(r.spectral_radius)},
              {"lambda", to_json(r.lambda)},
              {"difference", r.difference}};
}

Json to_json(const family::SurfaceInfo& s) {
  return Json{{"n", s.n},
              {"genus", s.genus},
              {"punctures", s.punctures},
              {"euler_characteristic", s.euler_characteristic},
              {"cubic_sided", s.cubic_sided == family::Sidedness::one_sided ? "one-sided" : "two-sided"},
              {"ambient_nonorientable_genus", s.ambient_nonorientable_genus}};
}

Json salem_report(int n, double tol, family::Convention convention) {
  const family::ConventionReport conv = family::resolve_convention(n, tol, false);
  Json doc{{"n", n}, {"convention", convention_name(convention)}, {"convention_report", to_json(conv)}};
  Json checks = Json::object();
  std::optional<int> k;
  if (convention == family::Convention::literal)
    k = n - 2;
  else
    k = conv.calibrated_exponent;
  checks["exponent_resolved"] = k.has_value();
  if (k) {
    const IntPolynomial chi = family::chi_family(*k);
    const CyclotomicSplit split = strip_cyclotomic(chi);
    doc["exponent"] = *k;
    doc["chi"] = to_json(chi);
    doc["chi_text"] = chi.to_string();
    doc["split"] = to_json(split);
    doc["lambda"] = to_json(real_root_max(chi, tol));
    if (split.core.degree() >= 2) {
      const SalemReport s = salem_certify(split.core, tol);
      doc["salem"] = to_json(s);
      checks["core_is_salem"] = s.is_salem;
    } else {
      doc["salem"] = nullptr;
      checks["core_is_salem"] = false;
    }
  }
  return finish(std::move(doc), checks);
}

Json family_report(int n, double tol, family::Convention convention) {
  Json doc{{"n", n}, {"tolerance", tol}};
  const Json salem = salem_report(n, tol, convention);
  doc["salem"] = salem;
  doc["lambda"] = salem.contains("lambda") ? salem["lambda"] : Json(nullptr);
  doc["lambda_literal"] = to_json(family::lambda_n(n, tol, family::Convention::literal));
  const family::IsotopyReport iso = family::verify_isotopy(n, family::TwistTable::corrected);
  const family::IsotopyReport printed = family::verify_isotopy(n, family::TwistTable::printed);
  doc["isotopy"] = Json{{"corrected", to_json(iso)}, {"printed", to_json(printed)}};
  doc["surface"] = to_json(family::surface_info(n));
  const family::MMatrixReport m = family::m_matrix_comparison(n, tol);
  doc["abelianization"] = to_json(m);
  Json checks{{"salem", salem["passed"].get<bool>()},
              {"isotopy", iso.passed()},
              {"abelianization_spectral_radius", m.difference < 1e-8}};
  return finish(std::move(doc), checks);
}

Json isotopy_range(int first, int last, family::TwistTable table, unsigned threads) {
  if (first < 8 || last < first) throw Error(ErrorCode::invalid_argument, "n range must satisfy 8 <= first <= last");
  const auto count = static_cast<std::size_t>(last - first + 1);
  std::vector<Json> results(count);
  parallel_for(count, threads, [&](std::size_t i) {
    results[i] = to_json(family::verify_isotopy(first + static_cast<int>(i), table));
  });
  Json doc{{"first", first}, {"last", last}, {"table", table == family::TwistTable::printed ? "printed" : "corrected"}};
  Json list = Json::array();
  Json checks = Json::object();
  for (auto& r : results) {
    checks["n=" + std::to_string(r["n"].get<int>())] = r["passed"].get<bool>();
    list.push_back(std::move(r));
  }
  doc["results"] = std::move(list);
  return finish(std::move(doc), checks);
}

std::string isotopy_text(const Json& range) {
  std::string out;
  for (const auto& r : range["results"]) {
    out += "n=" + std::to_string(r["n"].get<int>()) + (r["passed"].get<bool>() ? " PASS" : " FAIL");
    if (!r["passed"].get<bool>()) {
      std::string gens;
      for (const auto& m : r["f_vs_composed"]["mismatches"]) gens += (gens.empty() ? "" : ",") + m["generator"].get<std::string>();
      out += " (" + r["table"].get<std::string>() + " table; differs at " + (gens.empty() ? std::string("closed form") : gens) + ")";
    }
    out += '\n';
  }
  return out;
}

Json penner_report(int n, const penner::Permutation& sigma, double tol) {
  const penner::CurveGraph g = penner::e_diagram(n + 2);
  const IntMatrix q = penner::q_product(g, sigma);
  const IntPolynomial p = char_poly(q);
  const CertifiedReal stretch = spectral_radius(q, tol);
  const IntPolynomial rec = penner::recurrence_charpoly(n);
  const penner::PennerSplit split = penner::multicurve_split(n);

  Json edges = Json::array();
  for (auto [u, v] : g.edges) edges.push_back(Json::array({u, v}));
  Json doc{{"n", n},
           {"sigma", sigma.to_cycles()},
           {"sigma_one_line", sigma.one_line()},
           {"curve_graph", Json{{"vertex_count", g.vertex_count}, {"edges", edges}}},
           {"split", Json{{"A", split.a}, {"B", split.b}}},
           {"product", to_json(q)},
           {"char_poly", to_json(p)},
           {"char_poly_text", p.to_string()},
           {"primitive", is_primitive(q)},
           {"stretch_factor", to_json(stretch)}};

  std::optional<double> printed;
  for (auto [m, v] : penner::printed_stretch_table())
    if (m == n) printed = v;
  doc["printed_value"] = printed ? Json(*printed) : Json(nullptr);
  doc["printed_difference"] = printed ? Json(std::abs(stretch.value - *printed)) : Json(nullptr);

  const IntMatrix d_next = penner::q_product(penner::d_diagram(n + 3), penner::Permutation::identity(n + 3));
  doc["recurrence"] = Json{{"char_poly", to_json(rec)},
                           {"char_poly_text", rec.to_string()},
                           {"degree", rec.degree()},
                           {"matches_product", penner::same_up_to_normalization(rec, p)},
                           {"matches_d_product_size_n_plus_3", penner::same_up_to_normalization(rec, char_poly(d_next))},
                           {"largest_real_root", to_json(real_root_max(rec, tol))}};
  doc["d_diagram_stretch_factor"] =
      to_json(spectral_radius(penner::q_product(penner::d_diagram(n + 2), penner::Permutation::identity(n + 2)), tol));

  Json checks{{"stretch_above_one", stretch.value > 1.0}, {"primitive", doc["primitive"].get<bool>()}};
  if (printed) checks["matches_printed_table"] = std::abs(stretch.value - *printed) < 1e-4;
  return finish(std::move(doc), checks);
}

Json growth_report(int n, int iterations, double tol) {
  const auto samples = growth_estimate(family::f_star(n), iterations);
  const CertifiedReal lambda = family::lambda_n(n, tol);
  Json list = Json::array();
  for (const auto& s : samples) {
    list.push_back(Json{{"k", s.k},
                        {"cyclic_length", s.cyclic_length},
                        {"raw_length", s.raw_length},
                        {"estimate", s.estimate},
                        {"raw_estimate", s.raw_estimate},
                        {"ratio", s.ratio}});
  }
  Json doc{{"n", n},
           {"iterations", iterations},
           {"lambda", to_json(lambda)},
           {"samples", list},
           {"final_estimate", samples.back().estimate},
           {"final_error", std::abs(samples.back().estimate - lambda.value)}};
  return finish(std::move(doc), Json::object());
}

Json sweep_summary(const SweepRequest& request, const penner::SweepReport& r) {
  const auto& o = request.options;
  Json doc{{"n", r.n},
           {"mode", o.mode == penner::SweepMode::sample ? "sample" : "exhaustive"},
           {"count", r.entries.size()},
           {"seed", o.mode == penner::SweepMode::sample ? Json(o.seed) : Json(nullptr)},
           {"tolerance", o.tol},
           {"min", r.min},
           {"max", r.max},
           {"spread", r.spread},
           {"distinct_char_polys", r.distinct_char_polys}};
  return finish(std::move(doc), Json{{"spread_within_tolerance", r.within_tol}});
}

std::string sweep_csv(const penner::SweepReport& r) {
  std::string out = "permutation,stretch_factor\n";
  char buf[64];
  for (const auto& e : r.entries) {
    std::snprintf(buf, sizeof buf, "%#.12g", e.stretch.value);
    out += e.sigma.to_cycles() + ',' + buf + '\n';
  }
  return out;
}

}  // namespace salemtwist::report
