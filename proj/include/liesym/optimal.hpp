#pragma once

#include <cstdint>
#include <map>

#include "liesym/lie_algebra.hpp"

namespace liesym {

// One adjoint-orbit move: Ad(exp(s Y_generator)) specialized exactly.
// Scaling-type generators store sigma = e^s as an exact rational (> 0);
// translation-type generators store s itself.
struct GroupStep {
  std::size_t generator;  // 0-based index in the normalization labeling
  bool scaling = false;
  Rat parameter;
};

struct GroupWord {
  std::optional<Rat> prescale;  // one optional overall nonzero rescaling
  std::vector<GroupStep> steps;
};

struct Discrepancy {
  std::string case_label;
  std::string note;
};

struct NormalizationReport {
  RatVector input;
  RatVector achieved;
  int representative = 0;  // 1-based index, 0 = unmatched
  GroupWord word;
  std::string case_label;
  std::vector<Discrepancy> discrepancies;
};

struct SurveySummary {
  std::map<int, int> histogram;  // representative (0 = unmatched) -> count
  std::vector<NormalizationReport> reports;
  std::vector<std::string> notes;  // e.g. conjugate-representative classes
};

struct RepresentativeSpec {
  std::string label;       // "Y^12"
  RatVector combo;         // coefficients in the normalization labeling
  VectorField printed;     // operator form as printed
};

// Specializes Ad(exp(s Y_i)) of the given algebra at an exact parameter and
// applies it to a coefficient vector. Scaling-type generators take
// sigma = e^s > 0; identity-type generators accept either convention.
RatVector apply_adjoint(const LieAlgebraPresentation& alg, const RatVector& v, std::size_t i,
                        const Rat& parameter, bool scaling);

// The normalization procedure of the one-dimensional subalgebra
// classification, executed literally on exact adjoint matrices, with every
// claimed-but-impossible elimination recorded instead of silently skipped.
class OptimalSystem {
 public:
  // labeling_to_basis maps normalization-labeling indices to positions in the
  // algebra's declared basis order.
  OptimalSystem(const LieAlgebraPresentation& table_algebra,
                std::vector<std::size_t> labeling_to_basis,
                std::vector<RepresentativeSpec> representatives);

  const LieAlgebraPresentation& algebra() const { return *alg_; }
  const LieAlgebraPresentation& normalization_algebra() const { return norm_alg_; }
  const std::vector<std::size_t>& permutation() const { return perm_; }

  const std::vector<RepresentativeSpec>& representatives() const { return reps_; }
  // true iff the printed operator form expands to the stated combination
  bool representative_display_consistent(std::size_t index0) const;

  RatVector apply(const RatVector& v, const GroupStep& step) const;
  RatVector replay(const RatVector& v, const GroupWord& word) const;
  GroupWord inverse(const GroupWord& word) const;

  NormalizationReport normalize_printed(const RatVector& v) const;
  SurveySummary survey(int samples, std::uint64_t seed) const;

  // Partition of representative indices (1-based) into classes conjugate
  // under machine-found single adjoint steps.
  std::vector<std::vector<int>> conjugacy_classes() const;

 private:
  const LieAlgebraPresentation* alg_;
  LieAlgebraPresentation norm_alg_;
  std::vector<std::size_t> perm_;
  std::vector<RepresentativeSpec> reps_;
  std::vector<AdjointMatrix> adj_;  // per normalization-labeled generator
  SymbolId param_;

  int match_representative(const RatVector& v) const;
  bool attempt_eliminate(RatVector& v, std::size_t target, std::size_t printed_instrument,
                         const char* case_label, GroupWord& word,
                         std::vector<Discrepancy>& discrepancies) const;
  void scale_component_to_unit(RatVector& v, std::size_t target, GroupWord& word) const;
};

}  // namespace liesym
