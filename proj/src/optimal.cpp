#include "liesym/optimal.hpp"

#include <algorithm>
#include <functional>

namespace liesym {

namespace {

std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

std::string vec_str(const RatVector& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += rat_str(v[i]);
  }
  return out + ")";
}

}  // namespace

RatVector apply_adjoint(const LieAlgebraPresentation& alg, const RatVector& v, std::size_t i,
                        const Rat& parameter, bool scaling) {
  // specialization never renders the parameter, so any fresh id works
  SymbolId s = alg.table().find("s").value_or(static_cast<SymbolId>(alg.table().size()));
  AdjointMatrix m = adjoint_matrix(alg, i, s);
  RatMatrix spec = scaling ? m.at_scaling(parameter) : m.at_translation(parameter);
  return rm_apply(spec, v);
}

OptimalSystem::OptimalSystem(const LieAlgebraPresentation& table_algebra,
                             std::vector<std::size_t> labeling_to_basis,
                             std::vector<RepresentativeSpec> representatives)
    : alg_(&table_algebra),
      norm_alg_([&] {
        // fresh names: "Yk" means the k-th generator of the normalization
        // labeling; the permutation back to the declared basis is data
        std::vector<std::string> names;
        std::vector<VectorField> basis;
        for (std::size_t k = 0; k < labeling_to_basis.size(); ++k) {
          names.push_back("Y" + std::to_string(k + 1));
          basis.push_back(table_algebra.basis().at(labeling_to_basis[k]));
        }
        return LieAlgebraPresentation(table_algebra.table(), table_algebra.coords(),
                                      std::move(names), std::move(basis));
      }()),
      perm_(std::move(labeling_to_basis)),
      reps_(std::move(representatives)) {
  param_ = norm_alg_.table().require("s");
  for (std::size_t i = 0; i < norm_alg_.dim(); ++i) {
    adj_.push_back(adjoint_matrix(norm_alg_, i, param_));
  }
}

bool OptimalSystem::representative_display_consistent(std::size_t index0) const {
  const RepresentativeSpec& rep = reps_.at(index0);
  VectorField combo = norm_alg_.from_coefficients(rep.combo);
  return combo == rep.printed;
}

RatVector OptimalSystem::apply(const RatVector& v, const GroupStep& step) const {
  const AdjointMatrix& m = adj_.at(step.generator);
  RatMatrix spec = step.scaling ? m.at_scaling(step.parameter) : m.at_translation(step.parameter);
  return rm_apply(spec, v);
}

RatVector OptimalSystem::replay(const RatVector& v, const GroupWord& word) const {
  RatVector out = v;
  if (word.prescale) {
    for (auto& c : out) {
      c *= *word.prescale;
      c.canonicalize();
    }
  }
  for (const auto& step : word.steps) out = apply(out, step);
  return out;
}

GroupWord OptimalSystem::inverse(const GroupWord& word) const {
  GroupWord inv;
  for (auto it = word.steps.rbegin(); it != word.steps.rend(); ++it) {
    GroupStep step = *it;
    step.parameter = step.scaling ? Rat(1 / step.parameter) : Rat(-step.parameter);
    step.parameter.canonicalize();
    inv.steps.push_back(step);
  }
  if (word.prescale) {
    inv.prescale = 1 / *word.prescale;
    inv.prescale->canonicalize();
  }
  return inv;
}

int OptimalSystem::match_representative(const RatVector& v) const {
  for (std::size_t r = 0; r < reps_.size(); ++r) {
    if (reps_[r].combo == v) return static_cast<int>(r) + 1;
  }
  return 0;
}

// Eliminates v[target] by solving for the parameter of one exact adjoint
// matrix. Prefers the instrument named by the printed procedure; when that
// action fixes the component, every other basis adjoint is tried so the
// discrepancy note can state the exact obstruction.
bool OptimalSystem::attempt_eliminate(RatVector& v, std::size_t target,
                                      std::size_t printed_instrument, const char* case_label,
                                      GroupWord& word,
                                      std::vector<Discrepancy>& discrepancies) const {
  if (v[target] == 0) return true;  // nothing to do
  const std::size_t m = norm_alg_.dim();
  std::vector<std::size_t> order{printed_instrument};
  for (std::size_t i = 0; i < m; ++i) {
    if (i != printed_instrument) order.push_back(i);
  }
  for (std::size_t i : order) {
    if (adj_[i].kind() != AdjointMatrix::Kind::Translation) continue;
    // v'(s) = (I + sN + ...) v is affine in s for nilpotent actions of
    // degree 2; solve v'_target(s) = 0 from the derivative coefficient.
    RatMatrix n = rm_scale(rat(-1), norm_alg_.ad_matrix(i));
    RatVector nv = rm_apply(n, v);
    // require the action on this vector to be exactly affine
    RatVector nnv = rm_apply(n, nv);
    bool affine = true;
    for (const auto& c : nnv) affine = affine && c == 0;
    if (!affine || nv[target] == 0) continue;
    Rat s = -v[target] / nv[target];
    s.canonicalize();
    GroupStep step{i, false, s};
    v = apply(v, step);
    word.steps.push_back(step);
    if (i != printed_instrument) {
      discrepancies.push_back(
          {case_label, "component " + std::to_string(target + 1) +
                           " eliminated via Ad(exp(s*" + norm_alg_.names()[i] +
                           ")) instead of the printed Ad(exp(s*" +
                           norm_alg_.names()[printed_instrument] + "))"});
    }
    return true;
  }
  discrepancies.push_back(
      {case_label,
       "claimed elimination of component " + std::to_string(target + 1) + " at " + vec_str(v) +
           " is impossible: the printed instrument Ad(exp(s*" +
           norm_alg_.names()[printed_instrument] +
           ")) fixes it for every parameter, and so does every other basis adjoint"});
  return false;
}

void OptimalSystem::scale_component_to_unit(RatVector& v, std::size_t target,
                                            GroupWord& word) const {
  // scaling instrument: the generator whose adjoint is scaling-type and
  // moves this component (for the bundled algebra, Y4)
  for (std::size_t i = 0; i < norm_alg_.dim(); ++i) {
    if (adj_[i].kind() != AdjointMatrix::Kind::Scaling) continue;
    RatMatrix probe = adj_[i].at_scaling(rat(2));
    if (probe[target][target] == 1) continue;  // does not scale this slot
    Rat sigma = 1 / abs(v[target]);
    sigma.canonicalize();
    if (sigma == 1) return;
    GroupStep step{i, true, sigma};
    v = apply(v, step);
    word.steps.push_back(step);
    return;
  }
}

NormalizationReport OptimalSystem::normalize_printed(const RatVector& v) const {
  bool nonzero = false;
  for (const auto& c : v) nonzero = nonzero || c != 0;
  if (!nonzero) throw Error(Error::Kind::Domain, "cannot normalize the zero vector");

  NormalizationReport rep;
  rep.input = v;
  RatVector w = v;
  auto prescale = [&](const Rat& c) {
    if (c == 1) return;
    rep.word.prescale = c;
    for (auto& e : w) {
      e *= c;
      e.canonicalize();
    }
  };

  if (w[4] != 0) {
    // Case 1: a5 != 0, scaled to a5 = 1
    prescale(1 / w[4]);
    attempt_eliminate(w, 1, 1, "1", rep.word, rep.discrepancies);
    attempt_eliminate(w, 2, 2, "1", rep.word, rep.discrepancies);
    if (w[0] != 0 && w[3] != 0) {
      rep.case_label = "1a";
      scale_component_to_unit(w, 0, rep.word);
      if (abs(w[3]) != 1) {
        rep.discrepancies.push_back(
            {"1a", "claimed normalization of component 4 to +-1 at " + vec_str(w) +
                       " is impossible: every basis adjoint fixes it and the overall "
                       "rescaling is already spent on component 5"});
      }
    } else if (w[0] == 0 && w[3] != 0) {
      rep.case_label = "1b";
      if (abs(w[3]) != 1) {
        rep.discrepancies.push_back(
            {"1b", "claimed normalization of component 4 to +-1 at " + vec_str(w) +
                       " is impossible: every basis adjoint fixes it and the overall "
                       "rescaling is already spent on component 5"});
      }
    } else if (w[0] != 0) {
      rep.case_label = "1c";
      scale_component_to_unit(w, 0, rep.word);
    } else {
      rep.case_label = "1";
    }
  } else if (w[3] != 0) {
    // Case 2a: a5 = 0, a4 != 0, scaled to a4 = 1
    rep.case_label = "2a";
    prescale(1 / w[3]);
    attempt_eliminate(w, 1, 1, "2a", rep.word, rep.discrepancies);
    attempt_eliminate(w, 2, 2, "2a", rep.word, rep.discrepancies);
    if (w[0] != 0) scale_component_to_unit(w, 0, rep.word);
  } else if (w[1] != 0) {
    // Case 2b: a4 = a5 = 0, a2 != 0, scaled to a2 = 1
    prescale(1 / w[1]);
    attempt_eliminate(w, 2, 2, "2b", rep.word, rep.discrepancies);
    if (w[0] != 0) {
      rep.case_label = "2b-1";
      scale_component_to_unit(w, 0, rep.word);
    } else {
      rep.case_label = "2b-2";
    }
  } else {
    // Case 2c: only a1, a3 possibly nonzero; no printed simplification
    rep.case_label = "2c";
    if (w[0] != 0) {
      prescale(1 / w[0]);
    } else if (w[2] != 0) {
      prescale(1 / w[2]);
    }
    if (w[0] != 0 && w[2] != 0) {
      rep.discrepancies.push_back(
          {"2c", "no printed normalization applies at " + vec_str(w) +
                     ": the ratio of components 3 and 1 is invariant under every adjoint, "
                     "so the vector is not conjugate to any listed representative"});
    }
  }

  rep.achieved = w;
  rep.representative = match_representative(w);
  // certification: the stored word must replay input -> achieved exactly
  if (!(replay(rep.input, rep.word) == rep.achieved)) {
    throw Error(Error::Kind::Domain, "internal error: group word failed exact replay");
  }
  return rep;
}

SurveySummary OptimalSystem::survey(int samples, std::uint64_t seed) const {
  SurveySummary out;
  std::uint64_t state = seed;
  const std::size_t m = norm_alg_.dim();
  for (int k = 0; k < samples; ++k) {
    RatVector v(m, rat(0));
    bool nonzero = false;
    for (std::size_t i = 0; i < m; ++i) {
      long num = static_cast<long>(splitmix64(state) % 7) - 3;  // -3..3
      long den = static_cast<long>(splitmix64(state) % 3) + 1;  // 1..3
      v[i] = rat(num, den);
      nonzero = nonzero || num != 0;
    }
    if (!nonzero) {
      v[0] = rat(1);
    }
    out.reports.push_back(normalize_printed(v));
    out.histogram[out.reports.back().representative] += 1;
  }
  auto classes = conjugacy_classes();
  for (const auto& cls : classes) {
    if (cls.size() < 2) continue;
    std::string note = "representatives {";
    for (std::size_t i = 0; i < cls.size(); ++i) {
      if (i) note += ",";
      note += std::to_string(cls[i]);
    }
    note += "} are mutually conjugate under explicit adjoint steps; the printed list is redundant";
    out.notes.push_back(note);
  }
  return out;
}

std::vector<std::vector<int>> OptimalSystem::conjugacy_classes() const {
  const std::size_t n = reps_.size();
  std::vector<int> parent(n);
  for (std::size_t i = 0; i < n; ++i) parent[i] = static_cast<int>(i);
  std::function<int(int)> find = [&](int a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };

  auto single_step_reaches = [&](const RatVector& from, const RatVector& to) {
    for (std::size_t i = 0; i < norm_alg_.dim(); ++i) {
      if (adj_[i].kind() == AdjointMatrix::Kind::Translation) {
        RatMatrix nmat = rm_scale(rat(-1), norm_alg_.ad_matrix(i));
        RatVector nv = rm_apply(nmat, from);
        RatVector nnv = rm_apply(nmat, nv);
        bool affine = true;
        for (const auto& c : nnv) affine = affine && c == 0;
        if (!affine) continue;
        std::optional<Rat> s;
        bool ok = true;
        for (std::size_t kk = 0; kk < from.size(); ++kk) {
          if (nv[kk] == 0) {
            ok = ok && from[kk] == to[kk];
          } else if (!s) {
            Rat cand = (to[kk] - from[kk]) / nv[kk];
            cand.canonicalize();
            s = cand;
          }
        }
        if (!ok || !s) continue;
        RatVector got = from;
        for (std::size_t kk = 0; kk < from.size(); ++kk) {
          got[kk] += *s * nv[kk];
          got[kk].canonicalize();
        }
        if (got == to) return true;
      } else if (adj_[i].kind() == AdjointMatrix::Kind::Scaling) {
        // try sigma from the first scaled nonzero slot
        RatMatrix probe = adj_[i].at_scaling(rat(2));
        std::optional<Rat> sigma;
        for (std::size_t kk = 0; kk < from.size(); ++kk) {
          if (probe[kk][kk] != 1 && from[kk] != 0) {
            Rat cand = to[kk] / from[kk];
            cand.canonicalize();
            if (cand > 0) sigma = cand;
            break;
          }
        }
        if (!sigma || *sigma == 1) continue;
        RatVector got = rm_apply(adj_[i].at_scaling(*sigma), from);
        if (got == to) return true;
      }
    }
    return false;
  };

  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      if (find(static_cast<int>(a)) == find(static_cast<int>(b))) continue;
      if (single_step_reaches(reps_[a].combo, reps_[b].combo) ||
          single_step_reaches(reps_[b].combo, reps_[a].combo)) {
        parent[find(static_cast<int>(b))] = find(static_cast<int>(a));
      }
    }
  }
  std::map<int, std::vector<int>> groups;
  for (std::size_t i = 0; i < n; ++i) groups[find(static_cast<int>(i))].push_back(static_cast<int>(i) + 1);
  std::vector<std::vector<int>> out;
  for (auto& [root, members] : groups) out.push_back(members);
  return out;
}

}  // namespace liesym
