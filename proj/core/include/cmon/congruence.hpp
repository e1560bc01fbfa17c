#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "cmon/actions.hpp"
#include "cmon/algebra.hpp"
#include "cmon/caps.hpp"
#include "cmon/report.hpp"

namespace cmon {

/// Equivalence on {0, ..., n-1}; block[i] is the least member of i's block.
class Partition {
 public:
  Partition() = default;
  /// Canonicalises any labelling: elements with equal labels share a block.
  explicit Partition(const std::vector<std::size_t>& labels);

  static Partition discrete(std::size_t n);
  static Partition full(std::size_t n);

  std::size_t size() const { return block_.size(); }
  ElemId rep(ElemId x) const { return block_[x]; }
  bool same(ElemId x, ElemId y) const { return block_[x] == block_[y]; }
  const std::vector<ElemId>& labels() const { return block_; }

  /// Least members, ascending.
  std::vector<ElemId> reps() const;
  std::vector<std::vector<ElemId>> blocks() const;
  std::size_t block_count() const;
  bool is_discrete() const { return block_count() == size(); }
  bool is_full() const { return block_count() <= 1; }
  /// Every block of *this lies inside a block of `coarser`.
  bool refines(const Partition& coarser) const;
  Partition meet(const Partition& other) const;

  /// Blocks as "{a,b}{c}" using the given names.
  std::string render(const Names& names) const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  std::vector<ElemId> block_;
};

/// A partition of an ada's carrier with the substitution property for
/// neg, and, or and down.
struct Congruence {
  Partition partition;

  bool related(ElemId a, ElemId b) const { return partition.same(a, b); }
  friend bool operator==(const Congruence&, const Congruence&) = default;
  friend auto operator<=>(const Congruence&, const Congruence&) = default;
};

/// First pair of related elements whose images under some operation are
/// unrelated, rendered for messages; nullopt if `p` is a congruence.
std::optional<std::string> congruence_violation(const Ada& a, const Partition& p);
bool is_congruence(const Ada& a, const Partition& p);

/// Least congruence containing `seed`.
Congruence congruence_closure(const Ada& a, const std::vector<std::pair<ElemId, ElemId>>& seed);

/// The whole lattice, ordered by block count descending, then by labels.
/// Throws SizeCapError above caps.lattice_limit elements.
std::vector<Congruence> all_congruences(const Ada& a, const SizeCaps& caps = default_caps());

/// Maximal proper congruences in label order. Uses the lattice when it is
/// within caps, the pair-adding search otherwise.
std::vector<Congruence> maximal_congruences(const Ada& a, const SizeCaps& caps = default_caps());
/// The search route alone: grow from the identity by adding pairs of blocks,
/// keeping a candidate when every further pair collapses it.
std::vector<Congruence> maximal_congruences_by_search(const Ada& a);

struct Quotient {
  Ada algebra;
  /// Element of `a` to its class in `algebra`.
  std::vector<ElemId> projection;
};

/// Classes are numbered by ascending least member and named after it.
Quotient quotient_ada(const Ada& a, const Congruence& theta);

/// The table-preserving bijection onto mk_three(), if any.
std::optional<std::vector<ElemId>> iso_to_three(const Ada& a);

/// T, F, U pairwise unrelated under theta.
AxiomReport check_prop_max_theta(const Ada& a, const Congruence& theta);

/// E_theta on S_bot with, for each related pair, the first beta in the
/// T-class of theta witnessing it.
struct ETheta {
  Partition partition;
  std::vector<std::optional<ElemId>> witness;  // index s * |S| + t

  bool related(ElemId s, ElemId t) const { return partition.same(s, t); }
};

/// Throws ModelInconsistency if the relation found is not an equivalence.
ETheta e_theta(const CSet& cs, const Congruence& theta);

/// (sigma, tau) against the two-sorted substitution property, one argument
/// position at a time.
AxiomReport check_cset_congruence(const CSet& cs, const Partition& sigma, const Partition& tau);

/// The maximal congruences of a C-set's ada together with their E_theta.
struct ThetaFamily {
  std::vector<Congruence> thetas;
  std::vector<ETheta> e;
  Names names;  // "theta0", "theta1", ...
};

/// Requires ada tests with at least two elements.
ThetaFamily theta_family(const CSet& cs, const SizeCaps& caps = default_caps());

/// Class trichotomy, (E_theta, theta) congruences, E_theta_M within theta,
/// and both intersections trivial.
AxiomReport check_collection_props(const CSet& cs, const SizeCaps& caps = default_caps());

/// The six properties of q o T, q o F and E_theta, for every maximal theta.
AxiomReport check_rho_hom_props(const CMonoid& cm, const SizeCaps& caps = default_caps());

}  // namespace cmon
