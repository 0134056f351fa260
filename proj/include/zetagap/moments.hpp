// Exact rational moment constants: b(k) of the Keating-Snaith conjecture,
// c(k) of the Conrey-Rubinstein-Snaith derivative-moment conjecture, the
// Hughes rational functions H(h,k), and the mixed constants b(h,k).
//
// The c(k) sum is stated over "partitions of 2k into nonnegative parts" with
// an index-range ambiguity in its pairwise product M_{i,j}; the reading is
// settled empirically by interpretation_lock_in(), which evaluates every
// candidate at k = 1,2,3 against the exact published b(k)/c(k) ratios and
// requires exactly one survivor.
#pragma once

#include "zetagap/rational.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace zetagap {

enum class OrderMode { ordered, nondecreasing };
enum class MRange { i_lt_j_1k, i_lt_j_0k, i_ne_j_1k };

std::string to_string(OrderMode m);
std::string to_string(MRange m);
std::optional<OrderMode> order_mode_from_string(const std::string& s);
std::optional<MRange> mrange_from_string(const std::string& s);

struct Composition {
  std::vector<int> parts;  // m_0..m_k, sum = 2k
  OrderMode order_mode = OrderMode::ordered;
};

struct CkOptions {
  OrderMode order_mode = OrderMode::ordered;
  MRange m_range = MRange::i_lt_j_1k;
  bool allow_long = false;    // gates k = 11..15
  int threads = 1;            // >1 splits the enumeration by m_0 prefix
  std::function<void(std::uint64_t done, std::uint64_t total)> progress;
};

// b(k) = prod_{j=0}^{k-1} j!/(j+k)!
ExactRational b_of_k(int k);

// Streams every tuple (m_0,...,m_k) of nonnegative integers with sum 2k;
// ordered mode emits all C(3k,k) compositions, nondecreasing mode the sorted
// ones only.
void enumerate_compositions(int k, OrderMode mode,
                            const std::function<void(const Composition&)>& visit);

// Number of tuples enumerate_compositions(k, ordered) emits: C(3k, k).
mpz_class composition_count(int k);

// c(k) under the given interpretation. Ordered mode with k > 10 requires
// allow_long (the refusal message carries the term-count estimate).
ExactRational c_of_k(int k, const CkOptions& opts = {});

// b(k)/c(k), exact.
ExactRational ratio_b_over_c(int k, const CkOptions& opts = {});

// Evaluates the tabulated Hughes function H(h,k) at K = 2k, exactly.
// h outside 0..7 is rejected (the table is the authority; no extrapolation).
ExactRational H_rational(int h, int k);

// b(h,k) = b(k) * (2h)!/(8^h h!) * H(h,k).
ExactRational b_mixed(int h, int k);

struct HFunctionData {
  std::vector<long long> numerator_coeffs;            // ascending in X = K^2
  std::vector<std::pair<int, int>> denominator_factors;  // (a, e): (K^2 - a^2)^e
};
// The embedded Table-1 data for H(h,.), h = 0..7.
const HFunctionData& h_function_data(int h);

namespace detail {
// H evaluated at an explicit even or odd K; used by the pole check and tests.
ExactRational H_eval_at_K(int h, long K);
}  // namespace detail

struct MonicAuditRow {
  int a;                   // odd root of the predicted factor (K^2 - a^2)
  int predicted_exponent;  // floor((sqrt(a^2+8h) - a)/2)
  int actual_exponent;     // exponent in the tabulated H(h,k) denominator
  bool match;
};

struct MonicAuditReport {
  int h;
  std::vector<MonicAuditRow> rows;
  bool all_match;
  std::string note;
};

// Compares the tabulated denominator of H(h,k) against the conjectured
// factorization prod (K^2-a^2)^{alpha(a,h)} with alpha read as its integer
// part. The known h = 3 anomaly (a missing K^2-9 factor) is annotated.
MonicAuditReport audit_monic_denominator(int h);

struct LockInResult {
  OrderMode order_mode;
  MRange m_range;
  std::string diagnostics;  // per-candidate outcomes at k = 1,2,3
};

// Evaluates all interpretation candidates at k = 1,2,3 against the exact
// published ratios; throws (with the full diagnostic table) unless exactly
// one candidate matches.
LockInResult interpretation_lock_in();

}  // namespace zetagap
