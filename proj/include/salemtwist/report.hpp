#pragma once

#include <json.hpp>

#include <cstdint>
#include <string>

#include "salemtwist/family.hpp"
#include "salemtwist/freegroup.hpp"
#include "salemtwist/penner.hpp"

namespace salemtwist::report {

using Json = nlohmann::ordered_json;

Json to_json(const CertifiedReal& x);
// Decimal coefficient strings, constant term first.
Json to_json(const IntPolynomial& p);
IntPolynomial polynomial_from_json(const Json& j);
Json to_json(const IntMatrix& m);
Json to_json(const SalemReport& r);
Json to_json(const CyclotomicSplit& s);
// Generator name -> word text, in generator order.
Json to_json(const Endomorphism& phi);
Endomorphism endomorphism_from_json(const Json& j, std::size_t rank);
Json to_json(const family::EndoDiff& d, std::size_t rank);
Json to_json(const family::IsotopyReport& r);
Json to_json(const family::ConventionReport& r);
Json to_json(const family::MMatrixReport& r);
Json to_json(const family::SurfaceInfo& s);

// Every report carries "checks" (name -> bool) and "passed" (all checks).

Json family_report(int n, double tol, family::Convention convention);
Json isotopy_range(int first, int last, family::TwistTable table, unsigned threads);
Json salem_report(int n, double tol, family::Convention convention);
Json penner_report(int n, const penner::Permutation& sigma, double tol);
Json growth_report(int n, int iterations, double tol);

struct SweepRequest {
  int n = 8;
  penner::SweepOptions options;
};

Json sweep_summary(const SweepRequest& request, const penner::SweepReport& r);
// Header "permutation,stretch_factor"; values with 12 significant digits.
std::string sweep_csv(const penner::SweepReport& r);

// One "n=<n> PASS" or "n=<n> FAIL ..." line per entry of isotopy_range.
std::string isotopy_text(const Json& range);

}  // namespace salemtwist::report
