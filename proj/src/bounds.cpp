#include "fibgen/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace fibgen {

namespace {

void require_dimension(std::int64_t n, const char* op) {
  if (n < 3)
    throw std::invalid_argument(std::string(op) +
                                ": requires dimension n >= 3");
}

std::int64_t integer_lower(const Rat& v) {
  return std::max<std::int64_t>(0, rat_ceil(v));
}

// Ceiling with a tolerance guard so floating-point noise at exact integers
// (e.g. the Calabi-Yau points) can never over-claim a bound.
std::int64_t integer_lower(double v) {
  const auto c =
      static_cast<std::int64_t>(std::ceil(v - kClosedFormTolerance));
  return std::max<std::int64_t>(0, c);
}

BoundCertificate lower_exact(CertKind kind, Rat value, Hypothesis hyp,
                             CertWitness witness = std::monostate{}) {
  BoundCertificate c;
  c.direction = Direction::Lower;
  c.kind = kind;
  c.value = value;
  c.integer_value = integer_lower(value);
  c.hypothesis = hyp;
  c.witness = std::move(witness);
  return c;
}

BoundCertificate lower_real(CertKind kind, double value,
                            CertWitness witness = std::monostate{}) {
  BoundCertificate c;
  c.direction = Direction::Lower;
  c.kind = kind;
  c.value = value;
  c.integer_value = integer_lower(value);
  c.hypothesis = Hypothesis::VeryGeneral;
  c.witness = std::move(witness);
  return c;
}

Rat degeneration_value(std::int64_t p, std::int64_t g) {
  return std::min(Rat(p - 2, 2), Rat(2 * g - 1));
}

// Threshold degree for (n, g) at prime p.
std::int64_t threshold_degree(std::int64_t n, std::int64_t g, std::int64_t p) {
  return p * ceil_div(n + (g + 5) / 2, p + 1);
}

ThresholdWitness make_threshold_witness(std::int64_t n, std::int64_t g,
                                        std::int64_t p) {
  const std::int64_t r = g >= 1 ? (g + 3) / 2 : 2;
  return ThresholdWitness{p, g, r, ceil_div(n + r + 1, p + 1)};
}

double closed_form_value(std::int64_t n, std::int64_t d) {
  const auto iota = static_cast<double>(n + 2 - d);
  return (-iota + std::sqrt(iota * iota + 4.5 * static_cast<double>(d))) / 9.0 -
         1.0;
}

double jensen_value(std::int64_t n, std::int64_t d) {
  const std::int64_t t = d - n - 2;
  const double sign = t > 0 ? 1.0 : t < 0 ? -1.0 : 0.0;
  return (1.0 + sign / std::sqrt(2.0)) / 9.0 * static_cast<double>(t) +
         std::sqrt(static_cast<double>(d) / 36.0) - 1.0;
}

double theorem_b_value(std::int64_t n) {
  return std::sqrt(static_cast<double>(n + 2)) / 5.0 - 1.0;
}

double calabi_yau_value(std::int64_t n) {
  return std::sqrt(static_cast<double>(n + 2) / 18.0) - 1.0;
}

double ruled_value(std::int64_t n) {
  return 1.0 + std::sqrt(static_cast<double>(n + 2)) / 8.0;
}

// d >= n+2 - sqrt(n+2)/4, checked exactly: with iota = n+2-d the condition
// is iota <= 0 or 16*iota^2 <= n+2.
bool theorem_b_applies(std::int64_t n, std::int64_t d) {
  const std::int64_t iota = n + 2 - d;
  return iota <= 0 || 16 * static_cast<__int128>(iota) * iota <= n + 2;
}

// d > n+1 - sqrt(n+2)/4, checked exactly (strict).
bool ruled_applies(std::int64_t n, std::int64_t d) {
  const std::int64_t m = n + 1 - d;
  return m <= 0 || 16 * static_cast<__int128>(m) * m < n + 2;
}

constexpr const char* kRuledNote =
    "bounds only fibrations whose general fiber has geometric genus >= 2; "
    "not an unconditional fibering-genus lower bound";

}  // namespace

const char* cert_kind_name(CertKind k) {
  switch (k) {
    case CertKind::DegenerationMin: return "DegenerationMin";
    case CertKind::GenusThreshold: return "GenusThreshold";
    case CertKind::ConicBundleRemark: return "ConicBundleRemark";
    case CertKind::ClosedForm: return "ClosedForm";
    case CertKind::CalabiYau: return "CalabiYau";
    case CertKind::Jensen: return "Jensen";
    case CertKind::TheoremB: return "TheoremB";
    case CertKind::GeneralTypeCovGon: return "GeneralTypeCovGon";
    case CertKind::RuledVarietyConditional: return "RuledVarietyConditional";
    case CertKind::ProjectionUpperGenus: return "ProjectionUpperGenus";
    case CertKind::ProjectionUpperGonality: return "ProjectionUpperGonality";
  }
  return "?";
}

const char* hypothesis_name(Hypothesis h) {
  switch (h) {
    case Hypothesis::VeryGeneral: return "very general";
    case Hypothesis::AnySmooth: return "any smooth";
    case Hypothesis::Any: return "any";
  }
  return "?";
}

std::int64_t gamma(std::int64_t n, std::int64_t p, std::int64_t e) {
  return p * e + e - n - 1;
}

std::optional<BoundCertificate> degeneration_bound(const Hypersurface& h,
                                                   std::int64_t p,
                                                   std::int64_t e) {
  require_dimension(h.n, "degeneration_bound");
  if (!is_prime(p))
    throw std::invalid_argument("degeneration_bound: p must be prime");
  if (e < 1)
    throw std::invalid_argument("degeneration_bound: e must be positive");
  if (p * e > h.d) return std::nullopt;
  const std::int64_t g = gamma(h.n, p, e);
  if (g < 2) return std::nullopt;
  return lower_exact(CertKind::DegenerationMin, degeneration_value(p, g),
                     Hypothesis::VeryGeneral, DegenerationWitness{p, e, g});
}

std::optional<BoundCertificate> best_degeneration_bound(
    const Hypersurface& h, const PrimeTable& table) {
  require_dimension(h.n, "best_degeneration_bound");
  std::optional<BoundCertificate> best;
  for (const std::int64_t p : table.primes()) {
    if (p > h.d) break;
    for (std::int64_t e = 1; p * e <= h.d; ++e) {
      const std::int64_t g = gamma(h.n, p, e);
      if (g < 2) continue;
      const Rat v = degeneration_value(p, g);
      // strict improvement keeps the first (smallest p, then e) maximizer
      if (!best || v > std::get<Rat>(best->value)) {
        best = lower_exact(CertKind::DegenerationMin, v,
                           Hypothesis::VeryGeneral,
                           DegenerationWitness{p, e, g});
      }
    }
  }
  return best;
}

std::optional<BoundCertificate> best_degeneration_bound(const Hypersurface& h) {
  return best_degeneration_bound(
      h, PrimeTable(bound_search_sieve_limit(h.n, h.d)));
}

bool genus_threshold_holds(std::int64_t n, std::int64_t d, std::int64_t g,
                           std::int64_t p) {
  require_dimension(n, "genus_threshold_holds");
  if (g < 1)
    throw std::invalid_argument(
        "genus_threshold_holds: requires g >= 1; the g = 0 case is the "
        "conic bundle threshold");
  return p >= 2 * g + 3 && d >= threshold_degree(n, g, p);
}

std::optional<BoundCertificate> best_threshold_bound(const Hypersurface& h,
                                                     const PrimeTable& table) {
  require_dimension(h.n, "best_threshold_bound");
  std::int64_t best_g = 0, best_p = 0;
  // p >= 2g+3 and (threshold >= p) <= d force g <= (d-3)/2.
  const std::int64_t g_max = (h.d - 3) / 2;
  for (std::int64_t g = 1; g <= g_max; ++g) {
    const auto p0 = table.next_at_least(2 * g + 3);
    if (!p0 || *p0 > h.d) continue;
    // Primes beyond the threshold reached by the smallest admissible prime
    // are dominated: their own threshold is at least p itself.
    const std::int64_t cap = std::min(threshold_degree(h.n, g, *p0), h.d);
    for (const std::int64_t p : table.primes()) {
      if (p < 2 * g + 3) continue;
      if (p > cap) break;
      if (h.d >= threshold_degree(h.n, g, p)) {
        best_g = g;  // g ascends, so this is a strict improvement
        best_p = p;  // first hit is the smallest admissible prime
        break;
      }
    }
  }
  if (best_g >= 1) {
    return lower_exact(CertKind::GenusThreshold, Rat(best_g + 1),
                       Hypothesis::VeryGeneral,
                       make_threshold_witness(h.n, best_g, best_p));
  }
  if (h.d >= conic_bundle_threshold(h.n)) {
    return lower_exact(CertKind::ConicBundleRemark, Rat(1),
                       Hypothesis::VeryGeneral,
                       make_threshold_witness(h.n, 0, 3));
  }
  return std::nullopt;
}

std::optional<BoundCertificate> best_threshold_bound(const Hypersurface& h) {
  return best_threshold_bound(h,
                              PrimeTable(bound_search_sieve_limit(h.n, h.d)));
}

std::int64_t conic_bundle_threshold(std::int64_t n) {
  require_dimension(n, "conic_bundle_threshold");
  return 3 * ceil_div(n + 3, 4);
}

DegreePrime min_degree_for_genus(std::int64_t n, std::int64_t g) {
  require_dimension(n, "min_degree_for_genus");
  if (g < 1)
    throw std::invalid_argument("min_degree_for_genus: requires g >= 1");
  // Bertrand: a prime >= 2g+3 exists below 2(2g+3).
  const PrimeTable seed(2 * (2 * g + 3));
  const auto p0 = seed.next_at_least(2 * g + 3);
  const std::int64_t cap = threshold_degree(n, g, *p0);
  const PrimeTable table(cap);
  DegreePrime best{cap, *p0};
  for (const std::int64_t p : table.primes()) {
    if (p < 2 * g + 3) continue;
    const std::int64_t t = threshold_degree(n, g, p);
    if (t < best.d_min) best = {t, p};
  }
  return best;
}

bool statement_proof_e_identity(std::int64_t n, std::int64_t g,
                                std::int64_t p) {
  require_dimension(n, "statement_proof_e_identity");
  if (g < 1)
    throw std::invalid_argument("statement_proof_e_identity: requires g >= 1");
  const std::int64_t r = (g + 3) / 2;
  return ceil_div(n + (g + 5) / 2, p + 1) == ceil_div(n + r + 1, p + 1);
}

BoundCertificate closed_form_bound(const Hypersurface& h) {
  require_dimension(h.n, "closed_form_bound");
  const std::int64_t iota = h.fano_index();
  const auto fiota = static_cast<double>(iota);
  const double root =
      std::sqrt(fiota * fiota + 4.5 * static_cast<double>(h.d));
  const double theta = (-fiota + root) / 2.25;
  return lower_real(CertKind::ClosedForm, closed_form_value(h.n, h.d),
                    ClosedFormParams{iota, theta});
}

std::optional<BoundCertificate> theorem_b_bound(const Hypersurface& h) {
  require_dimension(h.n, "theorem_b_bound");
  if (!theorem_b_applies(h.n, h.d)) return std::nullopt;
  return lower_real(CertKind::TheoremB, theorem_b_value(h.n));
}

BoundCertificate calabi_yau_bound(std::int64_t n) {
  require_dimension(n, "calabi_yau_bound");
  return lower_real(CertKind::CalabiYau, calabi_yau_value(n));
}

BoundCertificate jensen_bound(const Hypersurface& h) {
  require_dimension(h.n, "jensen_bound");
  return lower_real(CertKind::Jensen, jensen_value(h.n, h.d));
}

std::optional<BoundCertificate> general_type_bound(const Hypersurface& h) {
  if (h.d < h.n + 2) return std::nullopt;
  return lower_exact(CertKind::GeneralTypeCovGon, Rat(2 * (h.d - h.n) - 3),
                     Hypothesis::AnySmooth);
}

std::optional<BoundCertificate> ruled_variety_conditional_bound(
    const Hypersurface& h) {
  require_dimension(h.n, "ruled_variety_conditional_bound");
  if (!ruled_applies(h.n, h.d)) return std::nullopt;
  auto c = lower_real(CertKind::RuledVarietyConditional, ruled_value(h.n));
  c.conditional_note = kRuledNote;
  return c;
}

UpperBounds projection_upper_bounds(std::int64_t d) {
  if (d < 1)
    throw std::invalid_argument("projection_upper_bounds: requires d >= 1");
  UpperBounds ub;
  const Rat genus((d - 1) * (d - 2), 2);
  ub.genus.direction = Direction::Upper;
  ub.genus.kind = CertKind::ProjectionUpperGenus;
  ub.genus.value = genus;
  ub.genus.integer_value = genus.num();  // integral by parity
  ub.genus.hypothesis = Hypothesis::Any;
  ub.gonality.direction = Direction::Upper;
  ub.gonality.kind = CertKind::ProjectionUpperGonality;
  ub.gonality.value = Rat(d - 1);
  ub.gonality.integer_value = d - 1;
  ub.gonality.hypothesis = Hypothesis::Any;
  return ub;
}

std::int64_t gonality_from_genus(std::int64_t g) {
  if (g < 0)
    throw std::invalid_argument("gonality_from_genus: requires g >= 0");
  return (g + 3) / 2;
}

std::int64_t min_genus_with_gonality_at_least(std::int64_t c) {
  return c < 2 ? 0 : 2 * c - 3;
}

bool tate_smooth_guarantee(std::int64_t g, std::int64_t p) {
  return p >= 2 * g + 3;
}

std::int64_t sharpness_example_genus(SharpnessKind kind, std::int64_t p) {
  if (!is_prime(p))
    throw std::domain_error("sharpness_example_genus: p must be prime");
  switch (kind) {
    case SharpnessKind::QuasiElliptic:
      if (p != 2 && p != 3)
        throw std::domain_error(
            "sharpness_example_genus: quasi-elliptic fibrations exist only "
            "in characteristic 2 or 3");
      return 1;
    case SharpnessKind::Rosenlicht:
      if (p < 3)
        throw std::domain_error(
            "sharpness_example_genus: the Rosenlicht curve needs p >= 3");
      return (p - 1) / 2;
    case SharpnessKind::Fermat:
      return (p - 1) * (p - 2) / 2;
  }
  throw std::domain_error("sharpness_example_genus: unknown kind");
}

Report combined_bound(const Hypersurface& h, const PrimeTable& table) {
  require_dimension(h.n, "combined_bound");
  Report rep;
  rep.h = h;
  auto push = [&rep](std::optional<BoundCertificate> c) {
    if (c) rep.certificates.push_back(std::move(*c));
  };
  push(best_degeneration_bound(h, table));
  push(best_threshold_bound(h, table));
  rep.certificates.push_back(closed_form_bound(h));
  if (h.d == h.n + 2) rep.certificates.push_back(calabi_yau_bound(h.n));
  rep.certificates.push_back(jensen_bound(h));
  push(theorem_b_bound(h));
  push(general_type_bound(h));
  push(ruled_variety_conditional_bound(h));

  bool have = false;
  for (const auto& c : rep.certificates) {
    if (c.direction != Direction::Lower || c.conditional()) continue;
    if (!have || c.integer_value > rep.best_lower) {
      rep.best_lower = c.integer_value;
      rep.best_kind = c.kind;
      have = true;
    }
  }

  const auto uppers = projection_upper_bounds(h.d);
  rep.upper_genus = uppers.genus.integer_value;
  rep.upper_gonality = uppers.gonality.integer_value;
  rep.certificates.push_back(uppers.genus);
  rep.certificates.push_back(uppers.gonality);
  rep.sanity_ok = rep.best_lower <= rep.upper_genus;
  return rep;
}

Report combined_bound(const Hypersurface& h) {
  return combined_bound(h, PrimeTable(bound_search_sieve_limit(h.n, h.d)));
}

std::int64_t bound_search_sieve_limit(std::int64_t n, std::int64_t d) {
  if (const auto o = sieve_limit_override()) return *o;
  return std::max(d, 2 * (n + d)) + 1;
}

bool replay_certificate(const Hypersurface& h, const BoundCertificate& cert) {
  const std::int64_t n = h.n, d = h.d;
  const auto close = [](double a, double b) {
    return std::fabs(a - b) <= kClosedFormTolerance;
  };
  try {
    switch (cert.kind) {
      case CertKind::DegenerationMin: {
        const auto& w = std::get<DegenerationWitness>(cert.witness);
        if (!is_prime(w.p) || w.e < 1 || w.p * w.e > d) return false;
        if (w.gamma != gamma(n, w.p, w.e) || w.gamma < 2) return false;
        const Rat v = degeneration_value(w.p, w.gamma);
        return cert.exact() && std::get<Rat>(cert.value) == v &&
               cert.integer_value == integer_lower(v);
      }
      case CertKind::GenusThreshold: {
        const auto& w = std::get<ThresholdWitness>(cert.witness);
        if (w.g < 1 || !is_prime(w.p)) return false;
        if (!genus_threshold_holds(n, d, w.g, w.p)) return false;
        if (w != make_threshold_witness(n, w.g, w.p)) return false;
        if (w.p * w.e > d) return false;
        return cert.exact() && std::get<Rat>(cert.value) == Rat(w.g + 1) &&
               cert.integer_value == w.g + 1;
      }
      case CertKind::ConicBundleRemark: {
        const auto& w = std::get<ThresholdWitness>(cert.witness);
        if (w != make_threshold_witness(n, 0, 3)) return false;
        if (d < conic_bundle_threshold(n)) return false;
        return cert.exact() && std::get<Rat>(cert.value) == Rat(1) &&
               cert.integer_value == 1;
      }
      case CertKind::ClosedForm: {
        const auto& w = std::get<ClosedFormParams>(cert.witness);
        if (w.iota != n + 2 - d) return false;
        const double v = cert.value_as_double();
        if (!close(v, closed_form_value(n, d))) return false;
        if (!close(w.theta / 4.0 - 1.0, v)) return false;
        return cert.integer_value == integer_lower(v);
      }
      case CertKind::CalabiYau:
        return d == n + 2 &&
               close(cert.value_as_double(), calabi_yau_value(n)) &&
               cert.integer_value == integer_lower(cert.value_as_double());
      case CertKind::Jensen:
        return close(cert.value_as_double(), jensen_value(n, d)) &&
               cert.integer_value == integer_lower(cert.value_as_double());
      case CertKind::TheoremB:
        return theorem_b_applies(n, d) &&
               close(cert.value_as_double(), theorem_b_value(n)) &&
               cert.integer_value == integer_lower(cert.value_as_double());
      case CertKind::GeneralTypeCovGon:
        return d >= n + 2 && cert.hypothesis == Hypothesis::AnySmooth &&
               cert.exact() &&
               std::get<Rat>(cert.value) == Rat(2 * (d - n) - 3);
      case CertKind::RuledVarietyConditional:
        return ruled_applies(n, d) && cert.conditional() &&
               close(cert.value_as_double(), ruled_value(n));
      case CertKind::ProjectionUpperGenus:
        return cert.direction == Direction::Upper &&
               cert.integer_value == (d - 1) * (d - 2) / 2;
      case CertKind::ProjectionUpperGonality:
        return cert.direction == Direction::Upper &&
               cert.integer_value == d - 1;
    }
  } catch (const std::bad_variant_access&) {
    return false;
  }
  return false;
}

}  // namespace fibgen
