#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "weyr/pencil.hpp"

namespace weyr {

enum class PerturbationKind {
  /// λE - A + λ u v' - w v'  =>  (E + u v', A + w v'); compared on range representations.
  type_v,
  /// λE - A + λ u v' - u w'  =>  (E + u v', A + u w'); compared on kernel representations.
  type_u,
};

std::string to_string(PerturbationKind kind);

/// Rank-one perturbation data. Covectors (v', w') are stored as plain
/// coefficient vectors and act by the bilinear pairing.
struct PerturbationSpec {
  PerturbationKind kind = PerturbationKind::type_v;
  Vector u;
  /// type_v only.
  std::optional<Vector> w;
  Vector v_func;
  /// type_u only.
  std::optional<Vector> w_func;

  static PerturbationSpec make_type_v(Vector u, Vector w, Vector v_func);
  static PerturbationSpec make_type_u(Vector u, Vector v_func, Vector w_func);

  /// Throws DimensionError / PreconditionError on wrong lengths or slots.
  void validate(std::size_t n) const;
  bool is_zero() const;

  friend bool operator==(const PerturbationSpec&, const PerturbationSpec&) = default;
};

OperatorPencil apply_perturbation(const OperatorPencil& p, const PerturbationSpec& s);

/// max(dim l/(l∩m), dim m/(l∩m)).
std::size_t relation_distance(const LinearRelation& l, const LinearRelation& m);

struct DistanceCheck {
  std::size_t distance = 0;
  bool pass = true;
};

/// Distance between the representations of p and its perturbation on the side
/// matching the perturbation type (range side for type_v, kernel side for
/// type_u); pass iff distance <= 1.
DistanceCheck check_one_dimensional(const OperatorPencil& p, const PerturbationSpec& s);
/// Same distance on the opposite side; no bound holds there in general.
std::size_t off_side_distance(const OperatorPencil& p, const PerturbationSpec& s);

struct Violation {
  std::string check;
  std::optional<ExtendedScalar> point;
  std::size_t k = 0;
  long w_base = 0;
  long w_pert = 0;
  std::string detail;
};

struct PointComparison {
  ExtendedScalar point;
  WeyrTable base;
  WeyrTable perturbed;
};

struct TrialResult {
  std::uint64_t trial_id = 0;
  std::optional<OperatorPencil> base;
  std::optional<OperatorPencil> perturbed;
  std::vector<PointComparison> tables;
  std::optional<std::size_t> distance;
  std::vector<Violation> violations;
  /// Some |Δw_k| was nonzero.
  bool nonzero_delta = false;
  /// Irrational eigenvalues shared by both pencils (degree of the common
  /// square-free residual factor); these cannot be compared exactly.
  std::size_t unchecked_irrational = 0;
  std::size_t weyr_tables = 0;

  bool passed() const { return violations.empty(); }
};

/// Compares Weyr characteristics of two regular pencils at the given points
/// (default: union of both Q(i) spectra plus ∞) and records every k with
/// |Δw_k| > 1 or |Δ dim R^k| > k. Eigenvalues outside Q(i) belonging to only
/// one pencil are checked through w_1 <= 1 via the (n-1)-minor gcd.
/// Throws PreconditionError if either pencil is singular.
TrialResult weyr_delta_check(const OperatorPencil& base, const OperatorPencil& pert,
                             std::vector<ExtendedScalar> points = {});

}  // namespace weyr
