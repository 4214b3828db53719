#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "salemtwist/freegroup.hpp"
#include "salemtwist/polynomial.hpp"
#include "salemtwist/roots.hpp"
#include "salemtwist/salem.hpp"

namespace salemtwist::family {

// t^k (t^3 - t - 1) + t^3 + t^2 - 1
IntPolynomial chi_family(int k);
// t^10 + t^9 - t^7 - t^6 - t^5 - t^4 - t^3 + t + 1
IntPolynomial lehmer_polynomial();

// literal uses the exponent n - 2 as printed; calibrated uses the exponent
// selected by resolve_convention.
enum class Convention { literal, calibrated };

struct ConventionCandidate {
  int exponent = 0;
  IntPolynomial chi;
  CyclotomicSplit split;
  SalemReport salem;
  bool lehmer_match = false;  // core == Lehmer polynomial
};

struct ConventionReport {
  int n = 0;
  int literal_exponent = 0;  // n - 2
  std::optional<int> calibrated_exponent;
  int anchor_offset = 0;  // calibrated_exponent - n, fixed by the n = 8 anchor
  int salem_core_degree = 0;
  bool lehmer_match = false;
  // The literal polynomial has degree at least 10, so it could contain the
  // Lehmer polynomial.
  bool literal_degree_ok = false;
  bool literal_agrees = false;
  std::vector<ConventionCandidate> candidates;  // exponents n - 2 .. n + 1
};

// Offset k - n at which chi_family(k) strips to the Lehmer polynomial at
// n = 8. Scans the same four candidates and requires a unique hit.
int lehmer_anchor_offset(double tol);

// Without throw_on_failure the report is returned with no calibrated
// exponent; otherwise Error(no_convention) is thrown.
ConventionReport resolve_convention(int n, double tol, bool throw_on_failure = true);

CertifiedReal lambda_n(int n, double tol, Convention convention = Convention::calibrated);

// The printed action on the fundamental group of the cut surface.
Endomorphism f_star(int n);

// printed: the displayed twist actions. corrected: identical except that
// tau_3 sends a_i to b1 a_n c1^-1 a_i for i = 3, 4.
enum class TwistTable { printed, corrected };

Endomorphism twist_gen(int n, int i, TwistTable table = TwistTable::printed);
std::vector<Endomorphism> twist_list(int n, TwistTable table = TwistTable::printed);
// twists[last] o ... o twists[0]
Endomorphism compose_twists(int n, std::span<const Endomorphism> twists);
Endomorphism t_star(int n, TwistTable table = TwistTable::printed);
Endomorphism t_star_closed_form(int n);

struct GeneratorMismatch {
  int generator = 0;
  Word lhs;
  Word rhs;
};

struct EndoDiff {
  bool equal = true;
  std::vector<GeneratorMismatch> mismatches;  // ascending generator
};

EndoDiff diff(const Endomorphism& lhs, const Endomorphism& rhs);

struct IsotopyReport {
  int n = 0;
  std::string table;  // "printed", "corrected" or "custom"
  EndoDiff f_vs_t;        // f_star vs composed twists
  EndoDiff t_vs_closed;   // composed twists vs closed form
  EndoDiff f_vs_closed;   // f_star vs closed form
  bool passed() const { return f_vs_t.equal && t_vs_closed.equal && f_vs_closed.equal; }
};

IsotopyReport verify_isotopy(int n, TwistTable table = TwistTable::corrected);
IsotopyReport verify_isotopy(int n, std::span<const Endomorphism> twists);

struct ClaimCandidate {
  int exponent = 0;
  IntPolynomial numerator;  // (-t)^k (-t^3 + t - 1) - t^3 + t^2 - 1
  bool divisible = false;   // by t + 1
  IntPolynomial quotient;
  bool matches = false;                   // p_A = +-quotient
  bool matches_up_to_cyclotomic = false;  // cyclotomic-free cores agree up to sign
};

struct MMatrixReport {
  int n = 0;
  int computed_dimension = 0;  // n + 2
  int printed_dimension = 0;   // n + 3
  IntMatrix abelianization;
  IntPolynomial char_poly;
  CyclotomicSplit split;
  bool core_is_lehmer = false;
  bool core_is_lehmer_reflected = false;  // core == L(-t)
  std::vector<ClaimCandidate> candidates;
  CertifiedReal spectral_radius;
  CertifiedReal lambda;
  double difference = 0.0;
};

MMatrixReport m_matrix_comparison(int n, double tol);

enum class Sidedness { one_sided, two_sided };

struct SurfaceInfo {
  int n = 0;
  int genus = 0;
  int punctures = 0;
  int euler_characteristic = 0;
  Sidedness cubic_sided = Sidedness::one_sided;
  int ambient_nonorientable_genus = 0;
};

SurfaceInfo surface_info(int n);

}  // namespace salemtwist::family
