#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "cmon/actions.hpp"
#include "cmon/caps.hpp"
#include "cmon/congruence.hpp"
#include "cmon/functional.hpp"
#include "cmon/pairs.hpp"
#include "cmon/report.hpp"

namespace cmon {

/// S_bot / E_theta as a pointed set. Points 0..k-1 are the classes other
/// than bot's, by ascending least member; point k is the class of bot.
struct QuotientPointedSet {
  Partition classes;
  std::vector<ElemId> reps;  // least member of each point, bot's class last
  std::vector<std::uint32_t> point_of;

  std::size_t ground_size() const { return reps.size() - 1; }
  std::uint32_t base() const { return static_cast<std::uint32_t>(reps.size() - 1); }
};

QuotientPointedSet quotient_pointed_set(const ETheta& e, ElemId bot);

/// phi_theta and rho_theta for one maximal theta, as maps into the
/// functional C-monoid over the quotient.
struct ThetaHom {
  QuotientPointedSet quotient;
  std::vector<PointedSelfMap> phi;  // per program
  std::vector<PairOfSets> rho;      // per test
};

/// Throws ModelInconsistency when a value depends on the class
/// representative, or rho's sets overlap or contain the class of bot.
ThetaHom theta_hom(const CMonoid& cm, const Congruence& theta, const ETheta& e);
ThetaHom theta_hom(const CMonoid& cm, const Congruence& theta);

/// Monoid-with-zero and C-algebra preservation of (phi_theta, rho_theta),
/// then the action and composition against the functional model.
AxiomReport check_phi_rho_theta_hom(const CMonoid& cm, const Congruence& theta);

/// Every distinct pair of programs (tests) split by some phi_theta
/// (rho_theta), and rho_theta(a) = (S_theta, {}) or ({}, S_theta) only for
/// a in the class of T or F respectively.
AxiomReport check_separation(const CMonoid& cm, const SizeCaps& caps = default_caps());

/// A point of X: the class of `rep` under E of the theta at `theta`.
struct TaggedPoint {
  std::size_t theta = 0;
  ElemId rep = 0;

  friend auto operator<=>(const TaggedPoint&, const TaggedPoint&) = default;
};

struct Morphism {
  std::vector<PointedSelfMap> phi;  // over X_bot, base point |X|
  std::vector<PairOfSets> rho;      // over X
};

struct Embedding {
  ThetaFamily family;
  std::vector<ThetaHom> homs;
  std::vector<TaggedPoint> points;
  Morphism morphism;
  /// The functional C-monoid over X, when (|X|+1)^|X| fits the carrier cap.
  std::optional<CMonoid> target;

  std::size_t x_size() const { return points.size(); }
};

/// Requires ada tests with at least two elements.
Embedding build_embedding(const CMonoid& cm, const SizeCaps& caps = default_caps());

/// Injectivity and preservation of every operation, computed with the
/// functional semantics over X; agreement with `target` when present.
AxiomReport verify_embedding(const CMonoid& cm, const Embedding& emb);

/// "theta<i>:<rep>"
std::string point_name(const CMonoid& cm, const Embedding& emb, std::size_t point);

/// A copy of cm whose elements are named by their images in the
/// functional C-monoid over X.
CMonoid image_model(const CMonoid& cm, const Embedding& emb);

}  // namespace cmon
