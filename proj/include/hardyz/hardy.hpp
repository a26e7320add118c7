#ifndef HARDYZ_HARDY_HPP
#define HARDYZ_HARDY_HPP

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "hardyz/rational.hpp"

namespace hardyz {

// Differentiation orders (k, l, m, n) of the four-fold product moment.
struct HardyIndex {
  int k = 0, l = 0, m = 0, n = 0;

  HardyIndex() = default;
  HardyIndex(int k_, int l_, int m_, int n_);

  int total() const { return k + l + m + n; }
  bool odd_total() const { return total() % 2 != 0; }
  std::array<int, 4> as_array() const { return {k, l, m, n}; }
  // Canonical representative with k >= l >= m >= n.
  HardyIndex sorted_desc() const;

  friend bool operator==(const HardyIndex& a, const HardyIndex& b) {
    return a.k == b.k && a.l == b.l && a.m == b.m && a.n == b.n;
  }
};

struct HardyValue {
  Rational value;
  bool odd_total = false;          // odd-sum tuples vanish identically
  int magnitude_sq = 0;            // |i^k + i^l + i^m + i^n|^2, an integer
  bool predicted_negative = false; // magnitude_sq == 4
};

// |i^k + i^l + i^m + i^n|^2 as an exact integer.
int root_of_unity_magnitude_sq(const HardyIndex& idx);

// Leading fourth-moment coefficient of Z^(k) Z^(l) Z^(m) Z^(n), computed as
// an exact 4-fold integral over the unit box:
//   (-1)^{m+n} i^{k+l+m+n} 3 * Int (u1-u2)^2
//     (1/2+(u1-u2)u3-u1)^k (1/2+(u2-u1)u3-u2)^l
//     (1/2+(u1-u2)u4-u1)^m (1/2+(u2-u1)u4-u2)^n du.
// Odd k+l+m+n gives exactly zero.
HardyValue hardy(const HardyIndex& idx);

struct HardyTableRow {
  HardyIndex idx;  // sorted descending
  Rational value;
};

// One row per multiset {k,l,m,n} with the given even sum, in descending
// lexicographic order of the sorted tuple.
std::vector<HardyTableRow> hardy_table(int total_degree);

// A value as printed in the source tables, kept verbatim so anomalies
// (double negatives, suspicious denominators) survive the comparison.
struct PrintedHardyValue {
  HardyIndex idx;
  std::string printed;   // e.g. "-(-173/92252160)" exactly as typeset
  Rational literal;      // the printed expression read literally
  bool suspicious;       // flagged already when transcribing
};

// The printed reference tables for sums 6, 8, 10; empty for other sums.
std::vector<PrintedHardyValue> printed_hardy_table(int total_degree);

struct HardyComparison {
  HardyIndex idx;
  Rational computed;
  std::string printed;
  Rational printed_literal;
  bool match;
  bool suspicious;
};

// Compares exact values against the printed table. Mismatches are
// reported, never asserted: the computation is authoritative.
std::vector<HardyComparison> compare_hardy_table(int total_degree);

struct ConjectureRow {
  HardyIndex idx;
  Rational value;
  int magnitude_sq;
  bool predicted_negative;
  bool agrees;  // sign(value) < 0 iff predicted_negative, and value != 0
};

struct ConjectureReport {
  std::vector<ConjectureRow> rows;
  int checked = 0;
  int agreements = 0;
  int disagreements = 0;
  int zero_values = 0;  // conjecture predicts none
};

// Scans every multiset with even sum <= max_total.
ConjectureReport conjecture_scan(int max_total);

// Empirical check whether the value is invariant under all 24 argument
// permutations (only pair swaps follow from the integral by inspection).
struct PermutationCheck {
  bool invariant;
  std::optional<HardyIndex> counterexample;
};
PermutationCheck permutation_invariance_check(int max_total);

}  // namespace hardyz

#endif  // HARDYZ_HARDY_HPP
