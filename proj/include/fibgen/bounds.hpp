#pragma once

// Lower and upper bounds on the fibering genus of a very general complex
// hypersurface X_{n,d} in P^{n+1}, each packaged as a certificate that can be
// mechanically re-verified from (n, d) alone.
//
// Bound families:
//   * DegenerationMin        min{(p-2)/2, 2*gamma-1}, gamma = p*e + e - n - 1,
//                            over primes p and e >= 1 with p*e <= d, gamma >= 2
//   * GenusThreshold         fib.gen >= g+1 once d >= p*ceil((n+floor((g+5)/2))/(p+1))
//                            for some prime p >= 2g+3
//   * ConicBundleRemark      fib.gen >= 1 once d >= 3*ceil((n+3)/4)
//   * ClosedForm             (-iota + sqrt(iota^2 + 4.5 d))/9 - 1, iota = n+2-d
//   * CalabiYau              sqrt(n+2)/(3*sqrt(2)) - 1 at the boundary d = n+2
//   * Jensen                 linear-in-(d-n-2) relaxation of ClosedForm
//   * TheoremB               sqrt(n+2)/5 - 1 when d >= n+2 - sqrt(n+2)/4
//   * GeneralTypeCovGon      2(d-n)-3 for any smooth hypersurface with d >= n+2
//   * RuledVarietyConditional 1 + sqrt(n+2)/8, valid only against fibrations
//                            whose general fiber has geometric genus >= 2
//   * ProjectionUpper*       fib.gen <= (d-1)(d-2)/2 and fib.gon <= d-1
//
// All rational quantities are exact (Rat); only the square-root closed forms
// use doubles, compared at the 1e-9 tolerance below.

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "fibgen/numeric.hpp"
#include "fibgen/primes.hpp"

namespace fibgen {

/// Absolute tolerance for every floating-point closed-form comparison.
inline constexpr double kClosedFormTolerance = 1e-9;

// The pair (n, d) defining X_{n,d} in P^{n+1}.
struct Hypersurface {
  std::int64_t n = 3;
  std::int64_t d = 1;

  Hypersurface(std::int64_t n_, std::int64_t d_) : n(n_), d(d_) {
    if (n < 1 || d < 1)
      throw std::invalid_argument("Hypersurface: requires n >= 1 and d >= 1");
  }

  std::int64_t fano_index() const { return n + 2 - d; }
};

enum class Direction { Lower, Upper };

enum class CertKind {
  DegenerationMin,
  GenusThreshold,
  ConicBundleRemark,
  ClosedForm,
  CalabiYau,
  Jensen,
  TheoremB,
  GeneralTypeCovGon,
  RuledVarietyConditional,
  ProjectionUpperGenus,
  ProjectionUpperGonality,
};

// Hypothesis class a certificate applies to.
enum class Hypothesis { VeryGeneral, AnySmooth, Any };

const char* cert_kind_name(CertKind k);
const char* hypothesis_name(Hypothesis h);

// A (p, e, gamma) triple validating one instance of the degeneration bound.
struct DegenerationWitness {
  std::int64_t p = 0;      // prime
  std::int64_t e = 0;      // >= 1, p*e <= d
  std::int64_t gamma = 0;  // p*e + e - n - 1, >= 2
  friend bool operator==(const DegenerationWitness&,
                         const DegenerationWitness&) = default;
};

// Parameters validating one instance of the genus-threshold bound; the
// conic-bundle case is the row g = 0, p = 3, r = 2.
struct ThresholdWitness {
  std::int64_t p = 0;  // prime >= 2g+3
  std::int64_t g = 0;
  std::int64_t r = 0;  // floor((g+3)/2) for g >= 1, 2 for g = 0
  std::int64_t e = 0;  // ceil((n+r+1)/(p+1)); p*e is the threshold degree
  friend bool operator==(const ThresholdWitness&,
                         const ThresholdWitness&) = default;
};

// Scalar parameters recorded by the closed-form bound.
struct ClosedFormParams {
  std::int64_t iota = 0;  // Fano index n+2-d
  double theta = 0.0;     // positive root of the balancing quadratic
  friend bool operator==(const ClosedFormParams&,
                         const ClosedFormParams&) = default;
};

using CertWitness = std::variant<std::monostate, DegenerationWitness,
                                 ThresholdWitness, ClosedFormParams>;

// One bound with everything needed to re-check it.
struct BoundCertificate {
  Direction direction = Direction::Lower;
  CertKind kind = CertKind::ClosedForm;
  std::variant<Rat, double> value;  // exact rational or closed-form double
  std::int64_t integer_value = 0;   // lower: max(0, ceil(value)); upper: floor
  Hypothesis hypothesis = Hypothesis::VeryGeneral;
  CertWitness witness;
  std::string conditional_note;  // nonempty only for RuledVarietyConditional

  bool exact() const { return std::holds_alternative<Rat>(value); }
  bool conditional() const { return !conditional_note.empty(); }
  double value_as_double() const {
    return exact() ? std::get<Rat>(value).to_double() : std::get<double>(value);
  }
};

// Aggregate of every certificate for one hypersurface.
struct Report {
  Hypersurface h{3, 1};
  std::vector<BoundCertificate> certificates;
  std::int64_t best_lower = 0;  // max integer_value over unconditional lowers
  CertKind best_kind = CertKind::ClosedForm;
  std::int64_t upper_genus = 0;
  std::int64_t upper_gonality = 0;
  bool sanity_ok = true;  // best_lower <= upper_genus
};

/// gamma = p*e + e - n - 1, the point-separation level of the degeneration.
std::int64_t gamma(std::int64_t n, std::int64_t p, std::int64_t e);

/// Degeneration bound for a specific (p, e): present iff p*e <= d and
/// gamma >= 2, with exact value min{(p-2)/2, 2*gamma-1}.
std::optional<BoundCertificate> degeneration_bound(const Hypersurface& h,
                                                   std::int64_t p,
                                                   std::int64_t e);

/// Maximum of degeneration_bound over all primes p <= d and 1 <= e <= d/p;
/// ties resolved by smallest p, then smallest e.
std::optional<BoundCertificate> best_degeneration_bound(const Hypersurface& h);
std::optional<BoundCertificate> best_degeneration_bound(const Hypersurface& h,
                                                        const PrimeTable& table);

/// True iff p >= 2g+3 and d >= p*ceil((n + floor((g+5)/2))/(p+1)).
bool genus_threshold_holds(std::int64_t n, std::int64_t d, std::int64_t g,
                           std::int64_t p);

/// Best integer bound of the form g+1 over feasible (g, prime p), with the
/// conic-bundle value 1 as the g = 0 fallback; witness records the
/// maximizing g and its smallest admissible prime.
std::optional<BoundCertificate> best_threshold_bound(const Hypersurface& h);
std::optional<BoundCertificate> best_threshold_bound(const Hypersurface& h,
                                                     const PrimeTable& table);

/// 3*ceil((n+3)/4): smallest degree at which conic bundle structures are
/// ruled out.
std::int64_t conic_bundle_threshold(std::int64_t n);

struct DegreePrime {
  std::int64_t d_min = 0;
  std::int64_t p = 0;
  friend bool operator==(const DegreePrime&, const DegreePrime&) = default;
};

/// Minimal degree guaranteeing fib.gen >= g+1, with the prime achieving it
/// (smallest prime on ties).
DegreePrime min_degree_for_genus(std::int64_t n, std::int64_t g);

/// Self-test identity: the threshold written with floor((g+5)/2) equals the
/// proof-side form with r = floor((g+3)/2) and offset r+1.
bool statement_proof_e_identity(std::int64_t n, std::int64_t g, std::int64_t p);

/// (-iota + sqrt(iota^2 + 4.5 d))/9 - 1 with iota = n+2-d; records iota and
/// theta, where the bound equals theta/4 - 1.
BoundCertificate closed_form_bound(const Hypersurface& h);

/// sqrt(n+2)/5 - 1 when d >= n+2 - sqrt(n+2)/4 (hypothesis checked exactly
/// in integers); absent otherwise.
std::optional<BoundCertificate> theorem_b_bound(const Hypersurface& h);

/// sqrt(n+2)/(3*sqrt(2)) - 1 for the Calabi-Yau boundary degree d = n+2.
BoundCertificate calabi_yau_bound(std::int64_t n);

/// ((1 + sign(d-n-2)/sqrt(2))/9)*(d-n-2) + sqrt(d/36) - 1; never exceeds the
/// closed-form bound.
BoundCertificate jensen_bound(const Hypersurface& h);

/// 2(d-n)-3 for d >= n+2; applies to any smooth hypersurface, not just very
/// general ones.
std::optional<BoundCertificate> general_type_bound(const Hypersurface& h);

/// 1 + sqrt(n+2)/8 when d > n+1 - sqrt(n+2)/4. Conditional: it only bounds
/// fibrations whose general fiber has geometric genus >= 2, so it never
/// enters the unconditional maximum.
std::optional<BoundCertificate> ruled_variety_conditional_bound(
    const Hypersurface& h);

struct UpperBounds {
  BoundCertificate genus;     // fib.gen <= (d-1)(d-2)/2
  BoundCertificate gonality;  // fib.gon <= d-1
};

/// Upper bounds from projecting away from a line.
UpperBounds projection_upper_bounds(std::int64_t d);

/// Brill-Noether gonality bound floor((g+3)/2) for a smooth genus-g curve.
std::int64_t gonality_from_genus(std::int64_t g);

/// Least genus forcing gonality >= c, i.e. 2c-3 for c >= 2 (0 for c < 2).
std::int64_t min_genus_with_gonality_at_least(std::int64_t c);

/// True iff p >= 2g+3, the threshold past which a regular genus-g curve over
/// an imperfect field of characteristic p is automatically smooth.
bool tate_smooth_guarantee(std::int64_t g, std::int64_t p);

// Families of regular-but-not-smooth curves showing the 2g+3 threshold is
// sharp.
enum class SharpnessKind { QuasiElliptic, Rosenlicht, Fermat };

/// Arithmetic genus of the sharpness example: 1 (quasi-elliptic, p in {2,3}),
/// (p-1)/2 (Rosenlicht, p >= 3), (p-1)(p-2)/2 (Fermat-type).
std::int64_t sharpness_example_genus(SharpnessKind kind, std::int64_t p);

/// Every certificate for (n, d), the best unconditional lower bound with its
/// winning kind, and the projection upper bounds.
Report combined_bound(const Hypersurface& h);
Report combined_bound(const Hypersurface& h, const PrimeTable& table);

/// Re-derives a certificate's claim from (n, d) alone; false on any mismatch.
bool replay_certificate(const Hypersurface& h, const BoundCertificate& cert);

/// Default sieve limit for the searches at (n, d), or the process-wide
/// override when one is set.
std::int64_t bound_search_sieve_limit(std::int64_t n, std::int64_t d);

}  // namespace fibgen
