#ifndef JK_ORACLE_HPP
#define JK_ORACLE_HPP

/**
 * Closed-form predictions of Jordan-Kronecker invariants for every
 * representation family in the catalog, together with the plumbing that makes
 * computed invariants comparable to those predictions.
 *
 * Predictions are stated over an algebraically closed field, so they never
 * pin down eigenvalues (the eigenvalues of a random rational pencil are
 * algebraic numbers); they only assert how many distinct eigenvalues appear
 * and which block multiset each of them carries. The ComputedSummary /
 * compare pair mirrors that: a computed eigenvalue class of degree d counts
 * as d distinct eigenvalues, and classes must be uniform (same block multiset
 * each) whenever the prediction carries Jordan data.
 */

#include <algorithm>
#include <cstddef>
#include <string>
#include <vector>

#include "jk/jk_invariants.hpp"
#include "jk/pencil.hpp"
#include "jk/rep_spec.hpp"

namespace jk {

/** Jordan part of a prediction: every eigenvalue carries the same blocks. */
struct JordanSummary {
  std::size_t distinct_eigenvalues = 0;
  IndexMultiset blocks_per_eigenvalue;

  friend bool operator==(const JordanSummary& a, const JordanSummary& b) {
    return a.distinct_eigenvalues == b.distinct_eigenvalues &&
           a.blocks_per_eigenvalue == b.blocks_per_eigenvalue;
  }
};

/** Predicted invariants: Kronecker index multisets plus the Jordan summary. */
struct PredictedJK {
  IndexMultiset horizontal;
  IndexMultiset vertical;
  JordanSummary jordan;

  friend bool operator==(const PredictedJK& a, const PredictedJK& b) {
    return a.horizontal == b.horizontal && a.vertical == b.vertical &&
           a.jordan == b.jordan;
  }
};

/** Computed invariants collapsed to the comparable shape. */
struct ComputedSummary {
  IndexMultiset horizontal;
  IndexMultiset vertical;
  std::size_t distinct_eigenvalues = 0;
  bool blocks_uniform = true;
  IndexMultiset common_blocks;  // meaningful only when blocks_uniform
};

/** Verdict of a prediction-versus-computation comparison. */
struct MatchReport {
  bool match = false;
  std::vector<std::string> discrepancies;
};

namespace detail {

/** Appends `count` copies of `value`, rejecting malformed theorem
 * instantiations (negative counts, nonpositive index values). Zero counts are
 * dropped so multisets never contain phantom entries. */
inline void add_indices(IndexMultiset& out, long value, long count) {
  if (count < 0) {
    throw InternalError("oracle: negative index count " +
                        std::to_string(count) + " for value " +
                        std::to_string(value));
  }
  if (count == 0) {
    return;
  }
  if (value <= 0) {
    throw InternalError("oracle: nonpositive index value " +
                        std::to_string(value));
  }
  out.insert(out.end(), static_cast<std::size_t>(count),
             static_cast<int>(value));
}

inline std::string multiset_to_string(const IndexMultiset& values) {
  std::string out = "{";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) {
      out += ",";
    }
    out += std::to_string(values[i]);
  }
  out += "}";
  return out;
}

}  // namespace detail

/**
 * Sum of m standard representations of gl(n).
 *
 * m < n: divide m = q(n-m) + r; the invariants are n(n-m) horizontal indices,
 * n(n-m-r) of value q+1 and nr of value q+2. m = n: n distinct eigenvalues
 * with n size-1 blocks each. m > n: divide n = q(m-n) + r; the same counts
 * become vertical indices.
 */
inline PredictedJK predict_gl_sum(std::size_t n_in, std::size_t m_in) {
  const long n = static_cast<long>(n_in);
  const long m = static_cast<long>(m_in);
  PredictedJK pred;
  if (m < n) {
    const long d = n - m;
    const long q = m / d;
    const long r = m % d;
    detail::add_indices(pred.horizontal, q + 1, n * (d - r));
    detail::add_indices(pred.horizontal, q + 2, n * r);
  } else if (m == n) {
    pred.jordan.distinct_eigenvalues = n_in;
    detail::add_indices(pred.jordan.blocks_per_eigenvalue, 1, n);
  } else {
    const long d = m - n;
    const long q = n / d;
    const long r = n % d;
    detail::add_indices(pred.vertical, q + 1, n * (d - r));
    detail::add_indices(pred.vertical, q + 2, n * r);
  }
  return pred;
}

/**
 * Sum of m standard representations of sl(n), n >= 2.
 *
 * m < n: n(n-m)-1 horizontal indices, n(n-m-r)-(q+1) of value q+1 and nr+q of
 * value q+2 (m = q(n-m) + r). m = n: one vertical index n plus n distinct
 * eigenvalues with n-1 size-1 blocks each. m > n (n = q(m-n) + r): for r != 0
 * the vertical indices are n(m-n-r)+q+2 of value q+1 and nr-(q+1) of value
 * q+2; for r = 0 they are q+1 of value q and n(m-n)-q of value q+1.
 */
inline PredictedJK predict_sl_sum(std::size_t n_in, std::size_t m_in) {
  const long n = static_cast<long>(n_in);
  const long m = static_cast<long>(m_in);
  PredictedJK pred;
  if (m < n) {
    const long d = n - m;
    const long q = m / d;
    const long r = m % d;
    detail::add_indices(pred.horizontal, q + 1, n * (d - r) - (q + 1));
    detail::add_indices(pred.horizontal, q + 2, n * r + q);
  } else if (m == n) {
    detail::add_indices(pred.vertical, n, 1);
    pred.jordan.distinct_eigenvalues = n_in;
    detail::add_indices(pred.jordan.blocks_per_eigenvalue, 1, n - 1);
  } else {
    const long d = m - n;
    const long q = n / d;
    const long r = n % d;
    if (r != 0) {
      detail::add_indices(pred.vertical, q + 1, n * (d - r) + q + 2);
      detail::add_indices(pred.vertical, q + 2, n * r - (q + 1));
    } else {
      detail::add_indices(pred.vertical, q, q + 1);
      detail::add_indices(pred.vertical, q + 1, n * d - q);
    }
  }
  return pred;
}

/**
 * Sum of m standard representations of so(n) (eps = -1) or sp(n) (eps = +1).
 *
 * m < n (m = q(n-m) + r, d = n-m): horizontal indices 2q+1, 2q+2, 2q+3 with
 * counts (d-r)(d-r+eps)/2, (d-r)r, r(r+eps)/2, plus m(m-eps)/2 vertical 2s.
 * m = n: so gets n vertical 1s and n(n-1)/2 vertical 2s; sp gets n(n-1)/2
 * vertical 2s plus n distinct eigenvalues with one size-1 block each.
 * m > n: (m-n-eps)n vertical 1s and n(n+eps)/2 vertical 2s.
 */
inline PredictedJK predict_ortho_symp(std::size_t n_in, std::size_t m_in,
                                      int eps) {
  if (eps != 1 && eps != -1) {
    throw InputError("oracle: eps must be +1 or -1");
  }
  const long n = static_cast<long>(n_in);
  const long m = static_cast<long>(m_in);
  PredictedJK pred;
  if (m < n) {
    const long d = n - m;
    const long q = m / d;
    const long r = m % d;
    detail::add_indices(pred.horizontal, 2 * q + 1,
                        (d - r) * (d - r + eps) / 2);
    detail::add_indices(pred.horizontal, 2 * q + 2, (d - r) * r);
    detail::add_indices(pred.horizontal, 2 * q + 3, r * (r + eps) / 2);
    detail::add_indices(pred.vertical, 2, m * (m - eps) / 2);
  } else if (m == n) {
    if (eps < 0) {
      detail::add_indices(pred.vertical, 1, n);
      detail::add_indices(pred.vertical, 2, n * (n - 1) / 2);
    } else {
      detail::add_indices(pred.vertical, 2, n * (n - 1) / 2);
      pred.jordan.distinct_eigenvalues = n_in;
      detail::add_indices(pred.jordan.blocks_per_eigenvalue, 1, 1);
    }
  } else {
    detail::add_indices(pred.vertical, 1, (m - n - eps) * n);
    detail::add_indices(pred.vertical, 2, n * (n + eps) / 2);
  }
  return pred;
}

/**
 * Sum of m standard representations of the upper triangular algebra b(n).
 *
 * m <= n: for each j = 1..n-m divide m = q_j j + r_j and take j-r_j
 * horizontal indices q_j+1 plus r_j of q_j+2; m distinct eigenvalues with one
 * size-1 block each; for each j = 1..m-1 the same division gives j-r_j
 * vertical indices q_j and r_j of q_j+1. m > n: for each j = 1..n divide
 * m = q_j (m-j) + r_j and take m-j-r_j vertical indices q_j plus r_j of
 * q_j+1.
 */
inline PredictedJK predict_borel(std::size_t n_in, std::size_t m_in) {
  const long n = static_cast<long>(n_in);
  const long m = static_cast<long>(m_in);
  PredictedJK pred;
  if (m <= n) {
    for (long j = 1; j <= n - m; ++j) {
      const long q = m / j;
      const long r = m % j;
      detail::add_indices(pred.horizontal, q + 1, j - r);
      detail::add_indices(pred.horizontal, q + 2, r);
    }
    pred.jordan.distinct_eigenvalues = m_in;
    detail::add_indices(pred.jordan.blocks_per_eigenvalue, 1, 1);
    for (long j = 1; j <= m - 1; ++j) {
      const long q = m / j;
      const long r = m % j;
      detail::add_indices(pred.vertical, q, j - r);
      detail::add_indices(pred.vertical, q + 1, r);
    }
  } else {
    for (long j = 1; j <= n; ++j) {
      const long q = m / (m - j);
      const long r = m % (m - j);
      detail::add_indices(pred.vertical, q, m - j - r);
      detail::add_indices(pred.vertical, q + 1, r);
    }
  }
  std::sort(pred.horizontal.begin(), pred.horizontal.end());
  std::sort(pred.vertical.begin(), pred.vertical.end());
  return pred;
}

/**
 * Standard representation of the strictly upper triangular algebra n(n),
 * n >= 2: (n-3)(n-2)/2 horizontal 1s, n-2 horizontal 2s, one eigenvalue with
 * a single size-1 block, and one vertical index 1.
 */
inline PredictedJK predict_nilpotent(std::size_t n_in) {
  const long n = static_cast<long>(n_in);
  PredictedJK pred;
  detail::add_indices(pred.horizontal, 1, std::max(0L, (n - 3) * (n - 2) / 2));
  detail::add_indices(pred.horizontal, 2, n - 2);
  pred.jordan.distinct_eigenvalues = 1;
  detail::add_indices(pred.jordan.blocks_per_eigenvalue, 1, 1);
  detail::add_indices(pred.vertical, 1, 1);
  std::sort(pred.horizontal.begin(), pred.horizontal.end());
  return pred;
}

/**
 * Congruence action on symmetric (kSym) or skew-symmetric (kSkew) forms of a
 * dim_v-dimensional space, for the full (kGl) or special (kSl) linear
 * algebra.
 *
 * Symmetric: dim_v(dim_v-1)/2 horizontal 2s; GL adds dim_v distinct
 * eigenvalues with one size-1 block each, SL instead adds one vertical index
 * dim_v. Skew, dim_v = 2k: 3k horizontal 1s and 2k(k-1) horizontal 2s; GL
 * adds k eigenvalues with one size-1 block each, SL one vertical index k.
 * Skew, dim_v = 2k+1: 2k+delta horizontal 1s and k(2k+1) horizontal 2s, with
 * delta = 1 for GL and 0 for SL, and nothing else.
 */
enum class CongKind { kSym, kSkew };

inline PredictedJK predict_cong(GroupKind group, CongKind kind,
                                std::size_t dim_v) {
  const long nv = static_cast<long>(dim_v);
  PredictedJK pred;
  if (kind == CongKind::kSym) {
    detail::add_indices(pred.horizontal, 2, nv * (nv - 1) / 2);
    if (group == GroupKind::kGl) {
      pred.jordan.distinct_eigenvalues = dim_v;
      detail::add_indices(pred.jordan.blocks_per_eigenvalue, 1, 1);
    } else {
      detail::add_indices(pred.vertical, nv, 1);
    }
  } else if (nv % 2 == 0) {
    const long k = nv / 2;
    detail::add_indices(pred.horizontal, 1, 3 * k);
    detail::add_indices(pred.horizontal, 2, 2 * k * (k - 1));
    if (group == GroupKind::kGl) {
      pred.jordan.distinct_eigenvalues = static_cast<std::size_t>(k);
      detail::add_indices(pred.jordan.blocks_per_eigenvalue, 1, 1);
    } else {
      detail::add_indices(pred.vertical, k, 1);
    }
  } else {
    const long k = (nv - 1) / 2;
    const long delta = group == GroupKind::kGl ? 1 : 0;
    detail::add_indices(pred.horizontal, 1, 2 * k + delta);
    detail::add_indices(pred.horizontal, 2, k * (2 * k + 1));
  }
  std::sort(pred.horizontal.begin(), pred.horizontal.end());
  return pred;
}

/**
 * Verifies the block-size sum identity of a prediction against the ambient
 * sizes of the representation: summing block heights over all blocks must
 * give dim V and summing widths must give dim g. Throws InternalError on
 * violation (a malformed theorem instantiation, never bad user input).
 */
inline void check_predicted_totals(const RepSpec& spec,
                                   const PredictedJK& pred) {
  long height = 0;
  long width = 0;
  for (int h : pred.horizontal) {
    height += h - 1;
    width += h;
  }
  for (int v : pred.vertical) {
    height += v;
    width += v - 1;
  }
  long jordan_size = 0;
  for (int s : pred.jordan.blocks_per_eigenvalue) {
    jordan_size += s;
  }
  jordan_size *= static_cast<long>(pred.jordan.distinct_eigenvalues);
  height += jordan_size;
  width += jordan_size;
  if (height != static_cast<long>(module_dim(spec)) ||
      width != static_cast<long>(lie_dim(spec))) {
    throw InternalError("oracle: block-size identity failed for " +
                        describe(spec));
  }
}

/** Dispatches to the family prediction for a validated spec and checks the
 * block-size identity on the way out. */
inline PredictedJK predict_for(const RepSpec& spec) {
  validate_spec(spec);
  PredictedJK pred;
  switch (spec.family) {
    case RepFamily::kGlSum:
      pred = predict_gl_sum(spec.n, spec.m);
      break;
    case RepFamily::kSlSum:
      pred = predict_sl_sum(spec.n, spec.m);
      break;
    case RepFamily::kSoSum:
      pred = predict_ortho_symp(spec.n, spec.m, -1);
      break;
    case RepFamily::kSpSum:
      pred = predict_ortho_symp(spec.n, spec.m, +1);
      break;
    case RepFamily::kBSum:
      pred = predict_borel(spec.n, spec.m);
      break;
    case RepFamily::kNStd:
      pred = predict_nilpotent(spec.n);
      break;
    case RepFamily::kCongSym:
      pred = predict_cong(spec.group, CongKind::kSym, spec.n);
      break;
    case RepFamily::kCongSkew:
      pred = predict_cong(spec.group, CongKind::kSkew, spec.n);
      break;
  }
  check_predicted_totals(spec, pred);
  return pred;
}

/**
 * Collapses computed invariants into the comparable shape: an eigenvalue
 * class of degree d stands for d distinct eigenvalues (its polynomial is
 * squarefree and coprime to the other classes), the infinity class for one
 * more, and the Jordan part is uniform when every class carries the same
 * block multiset.
 */
inline ComputedSummary summarize(const JKInvariants& inv) {
  ComputedSummary summary;
  summary.horizontal = inv.horizontal;
  summary.vertical = inv.vertical;
  for (const EigenClass& cls : inv.jordan) {
    summary.distinct_eigenvalues +=
        cls.at_infinity ? 1 : static_cast<std::size_t>(cls.poly.degree());
    if (summary.common_blocks.empty() && summary.blocks_uniform) {
      summary.common_blocks = cls.sizes;
    } else if (cls.sizes != summary.common_blocks) {
      summary.blocks_uniform = false;
      summary.common_blocks.clear();
    }
  }
  return summary;
}

/** Field-by-field comparison; every discrepancy is reported by name. */
inline MatchReport compare(const PredictedJK& pred,
                           const ComputedSummary& comp) {
  MatchReport report;
  if (pred.horizontal != comp.horizontal) {
    report.discrepancies.push_back(
        "horizontal: predicted " + detail::multiset_to_string(pred.horizontal) +
        ", computed " + detail::multiset_to_string(comp.horizontal));
  }
  if (pred.vertical != comp.vertical) {
    report.discrepancies.push_back(
        "vertical: predicted " + detail::multiset_to_string(pred.vertical) +
        ", computed " + detail::multiset_to_string(comp.vertical));
  }
  if (pred.jordan.distinct_eigenvalues != comp.distinct_eigenvalues) {
    report.discrepancies.push_back(
        "distinct_eigenvalues: predicted " +
        std::to_string(pred.jordan.distinct_eigenvalues) + ", computed " +
        std::to_string(comp.distinct_eigenvalues));
  }
  if (pred.jordan.distinct_eigenvalues > 0) {
    if (!comp.blocks_uniform) {
      report.discrepancies.push_back(
          "blocks_per_eigenvalue: computed classes carry unequal block "
          "multisets");
    } else if (comp.common_blocks != pred.jordan.blocks_per_eigenvalue) {
      report.discrepancies.push_back(
          "blocks_per_eigenvalue: predicted " +
          detail::multiset_to_string(pred.jordan.blocks_per_eigenvalue) +
          ", computed " + detail::multiset_to_string(comp.common_blocks));
    }
  } else if (comp.distinct_eigenvalues == 0 && !comp.blocks_uniform) {
    throw InternalError("oracle: empty jordan part marked non-uniform");
  }
  report.match = report.discrepancies.empty();
  return report;
}

}  // namespace jk

#endif  // JK_ORACLE_HPP
