#include "zetagap/moments.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace zetagap {

std::string to_string(OrderMode m) {
  return m == OrderMode::ordered ? "ordered" : "nondecreasing";
}

std::string to_string(MRange m) {
  switch (m) {
    case MRange::i_lt_j_1k: return "1<=i<j<=k";
    case MRange::i_lt_j_0k: return "0<=i<j<=k";
    case MRange::i_ne_j_1k: return "1<=i!=j<=k";
  }
  return "?";
}

std::optional<OrderMode> order_mode_from_string(const std::string& s) {
  if (s == "ordered") return OrderMode::ordered;
  if (s == "nondecreasing") return OrderMode::nondecreasing;
  return std::nullopt;
}

std::optional<MRange> mrange_from_string(const std::string& s) {
  if (s == "1<=i<j<=k") return MRange::i_lt_j_1k;
  if (s == "0<=i<j<=k") return MRange::i_lt_j_0k;
  if (s == "1<=i!=j<=k") return MRange::i_ne_j_1k;
  return std::nullopt;
}

ExactRational b_of_k(int k) {
  if (k < 1) throw std::invalid_argument("b_of_k: require k >= 1");
  mpq_class r(1);
  for (int j = 0; j < k; ++j) {
    r *= mpq_class(factorial_z(j), factorial_z(j + k));
  }
  return ExactRational(r);
}

void enumerate_compositions(int k, OrderMode mode,
                            const std::function<void(const Composition&)>& visit) {
  if (k < 1) throw std::invalid_argument("enumerate_compositions: require k >= 1");
  Composition comp;
  comp.order_mode = mode;
  comp.parts.assign(k + 1, 0);
  const int total = 2 * k;
  // ordered: free choice at each slot; nondecreasing: each part >= previous
  std::function<void(int, int)> rec = [&](int idx, int remaining) {
    if (idx == k) {
      if (mode == OrderMode::nondecreasing && idx > 0 && remaining < comp.parts[idx - 1])
        return;
      comp.parts[idx] = remaining;
      visit(comp);
      return;
    }
    const int lo = (mode == OrderMode::nondecreasing && idx > 0) ? comp.parts[idx - 1] : 0;
    for (int v = lo; v <= remaining; ++v) {
      comp.parts[idx] = v;
      rec(idx + 1, remaining - v);
    }
  };
  rec(0, total);
}

mpz_class composition_count(int k) {
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), 3 * k, k);
  return r;
}

namespace {

struct PairList {
  std::vector<std::pair<int, int>> pairs;  // (i, j) index pairs into m_0..m_k
};

PairList make_pairs(int k, MRange range) {
  PairList out;
  switch (range) {
    case MRange::i_lt_j_1k:
      for (int i = 1; i <= k; ++i)
        for (int j = i + 1; j <= k; ++j) out.pairs.emplace_back(i, j);
      break;
    case MRange::i_lt_j_0k:
      for (int i = 0; i <= k; ++i)
        for (int j = i + 1; j <= k; ++j) out.pairs.emplace_back(i, j);
      break;
    case MRange::i_ne_j_1k:
      for (int i = 1; i <= k; ++i)
        for (int j = 1; j <= k; ++j)
          if (i != j) out.pairs.emplace_back(i, j);
      break;
  }
  return out;
}

// Per-term context for the common-denominator accumulation. Every term of
// the c(k) sum times D = 2^{2k} ((4k)!)^k is an integer:
//   multinom(2k; m) * (-1)^{m0} 2^{2k-m0} * prod_i (4k)!/(2k-i+m_i)! * M(m)
struct CkAccumulator {
  int k;
  MRange m_range;
  std::vector<mpz_class> fac;       // j! for j <= 4k
  std::vector<mpz_class> fac_comp;  // (4k)!/j!
  mpz_class two_pow_2k;

  explicit CkAccumulator(int k_, MRange range) : k(k_), m_range(range) {
    const int top = 4 * k;
    fac.resize(top + 1);
    fac_comp.resize(top + 1);
    for (int j = 0; j <= top; ++j) fac[j] = factorial_z(j);
    for (int j = 0; j <= top; ++j) fac_comp[j] = fac[top] / fac[j];
    mpz_class two(2);
    mpz_pow_ui(two_pow_2k.get_mpz_t(), two.get_mpz_t(), 2 * k);
  }

  mpz_class denominator() const {
    mpz_class d;
    mpz_pow_ui(d.get_mpz_t(), fac.back().get_mpz_t(), k);
    return d * two_pow_2k;
  }

  // Scaled integer term for one tuple (no pruning; reference path).
  mpz_class term(const std::vector<int>& m) const {
    mpz_class t = fac[2 * k];
    for (int v : m) t /= fac[v];  // multinomial, exact at every prefix
    t *= two_pow_2k;
    for (int i = 0; i < m[0]; ++i) t /= 2;
    if (m[0] % 2 == 1) t = -t;
    for (int i = 1; i <= k; ++i) t *= fac_comp[2 * k - i + m[i]];
    mpz_class M(1);
    for (auto [i, j] : make_pairs(k, m_range).pairs) {
      M *= (m[j] - m[i] + i - j);
      if (M == 0) return mpz_class(0);
    }
    return t * M;
  }
};

// Fast recursive enumeration for the locked-in ordered / 1<=i<j<=k reading:
// partial products are carried down the recursion and subtrees are pruned as
// soon as a vanishing M-factor is fixed.
class OrderedFastSum {
 public:
  OrderedFastSum(const CkAccumulator& ctx, int m0_lo, int m0_hi)
      : ctx_(ctx), m0_lo_(m0_lo), m0_hi_(m0_hi) {}

  mpz_class run() {
    const int k = ctx_.k;
    m_.assign(k + 1, 0);
    acc_ = 0;
    for (int m0 = m0_lo_; m0 <= m0_hi_; ++m0) {
      m_[0] = m0;
      mpz_class partial = ctx_.fac[2 * k] / ctx_.fac[m0];
      partial *= ctx_.two_pow_2k;
      for (int i = 0; i < m0; ++i) partial /= 2;
      if (m0 % 2 == 1) partial = -partial;
      rec(1, 2 * k - m0, partial, mpz_class(1));
    }
    return acc_;
  }

 private:
  // product of the new M-factors fixed by placing value v at position idx;
  // returns false when a factor vanishes. The running product is flushed
  // into `big` before it can overflow (factors are bounded by ~4k).
  bool new_m_factors(int idx, int v, long& small, mpz_class& big) const {
    small = 1;
    big = 1;
    for (int a = 1; a < idx; ++a) {
      const int d = v - m_[a] + a - idx;
      if (d == 0) return false;
      small *= d;
      if (small > (1L << 46) || small < -(1L << 46)) {
        big *= small;
        small = 1;
      }
    }
    return true;
  }

  void rec(int idx, int remaining, const mpz_class& partial, const mpz_class& Mpart) {
    const int k = ctx_.k;
    if (idx == k) {
      const int v = remaining;
      long f;
      mpz_class fbig;
      if (!new_m_factors(idx, v, f, fbig)) return;
      mpz_class t = partial / ctx_.fac[v];
      t *= ctx_.fac_comp[2 * k - idx + v];
      t *= Mpart;
      if (fbig != 1) t *= fbig;
      t *= f;
      acc_ += t;
      return;
    }
    for (int v = 0; v <= remaining; ++v) {
      long f;
      mpz_class fbig;
      if (!new_m_factors(idx, v, f, fbig))
        continue;  // every completion shares this vanishing factor
      m_[idx] = v;
      mpz_class t = partial / ctx_.fac[v];
      t *= ctx_.fac_comp[2 * k - idx + v];
      if (fbig != 1) rec(idx + 1, remaining - v, t, Mpart * f * fbig);
      else rec(idx + 1, remaining - v, t, Mpart * f);
    }
  }

  const CkAccumulator& ctx_;
  int m0_lo_, m0_hi_;
  std::vector<int> m_;
  mpz_class acc_;
};

}  // namespace

ExactRational c_of_k(int k, const CkOptions& opts) {
  if (k < 1) throw std::invalid_argument("c_of_k: require k >= 1");
  if (k > 15) throw std::invalid_argument("c_of_k: k > 15 unsupported");
  if (opts.order_mode == OrderMode::ordered && k > 10 && !opts.allow_long) {
    std::ostringstream msg;
    msg << "c_of_k: ordered enumeration for k = " << k << " needs the long-run flag ("
        << composition_count(k).get_str() << " terms, roughly "
        << composition_count(k).get_d() / 2.5e6 << " s)";
    throw std::invalid_argument(msg.str());
  }

  CkAccumulator ctx(k, opts.m_range);
  mpz_class total(0);

  const bool fast_path =
      opts.order_mode == OrderMode::ordered && opts.m_range == MRange::i_lt_j_1k;
  if (fast_path) {
    const int threads = std::max(1, opts.threads);
    if (threads == 1) {
      if (opts.progress) opts.progress(0, 2 * k + 1);
      OrderedFastSum sum(ctx, 0, 2 * k);
      total = sum.run();
      if (opts.progress) opts.progress(2 * k + 1, 2 * k + 1);
    } else {
      // split by m_0; exact integer partial sums merge deterministically
      std::vector<mpz_class> partials(2 * k + 1);
      std::vector<std::thread> pool;
      std::atomic<int> next{0};
      std::atomic<int> done{0};
      for (int w = 0; w < threads; ++w) {
        pool.emplace_back([&] {
          for (;;) {
            const int m0 = next.fetch_add(1);
            if (m0 > 2 * k) return;
            OrderedFastSum sum(ctx, m0, m0);
            partials[m0] = sum.run();
            done.fetch_add(1);
          }
        });
      }
      for (auto& th : pool) th.join();
      for (const auto& p : partials) total += p;
      if (opts.progress) opts.progress(2 * k + 1, 2 * k + 1);
    }
  } else {
    // generic (slow) path: used by the interpretation sweep at small k
    enumerate_compositions(k, opts.order_mode, [&](const Composition& comp) {
      total += ctx.term(comp.parts);
    });
  }

  const int sign = (static_cast<long>(k) * (k + 1) / 2) % 2 == 0 ? 1 : -1;
  mpq_class value(total * sign, ctx.denominator());
  value.canonicalize();
  return ExactRational(value);
}

ExactRational ratio_b_over_c(int k, const CkOptions& opts) {
  ExactRational c = c_of_k(k, opts);
  if (c.is_zero()) throw std::runtime_error("ratio_b_over_c: c(k) = 0");
  return b_of_k(k) / c;
}

namespace {

const HFunctionData kHTable[8] = {
    {{1}, {}},
    {{1}, {{1, 1}}},
    {{1}, {{1, 1}, {3, 1}}},
    {{1}, {{1, 2}, {5, 1}}},
    {{-33, 1}, {{1, 2}, {3, 1}, {5, 1}, {7, 1}}},
    {{1497, -90, 1}, {{1, 2}, {3, 2}, {5, 1}, {7, 1}, {9, 1}}},
    {{-27177, 6867, -171, 1}, {{1, 3}, {3, 2}, {5, 1}, {7, 1}, {9, 1}, {11, 1}}},
    {{6973305, -982572, 30702, -316, 1},
     {{1, 3}, {3, 2}, {5, 2}, {7, 1}, {9, 1}, {11, 1}, {13, 1}}},
};

}  // namespace

const HFunctionData& h_function_data(int h) {
  if (h < 0 || h > 7) throw std::invalid_argument("h_function_data: h outside 0..7");
  return kHTable[h];
}

namespace detail {

ExactRational H_eval_at_K(int h, long K) {
  const HFunctionData& data = h_function_data(h);
  const mpz_class X = mpz_class(K) * K;
  mpz_class num(0), xp(1);
  for (long long c : data.numerator_coeffs) {
    num += mpz_class(static_cast<long>(c)) * xp;
    xp *= X;
  }
  mpz_class den(1);
  for (auto [a, e] : data.denominator_factors) {
    const mpz_class factor = X - static_cast<long>(a) * a;
    if (factor == 0) {
      std::ostringstream msg;
      msg << "H(" << h << ",k): pole at K^2 = " << a << "^2 (factor K^2-" << a * a << ")";
      throw std::invalid_argument(msg.str());
    }
    for (int i = 0; i < e; ++i) den *= factor;
  }
  mpq_class q(num, den);
  q.canonicalize();
  return ExactRational(q);
}

}  // namespace detail

ExactRational H_rational(int h, int k) {
  if (h < 0 || h > 7) throw std::invalid_argument("H_rational: h outside the tabulated 0..7");
  if (k < 1) throw std::invalid_argument("H_rational: require k >= 1");
  return detail::H_eval_at_K(h, 2L * k);
}

ExactRational b_mixed(int h, int k) {
  if (k < 1) throw std::invalid_argument("b_mixed: require k >= 1");
  if (h < 0 || h > std::min(k, 7))
    throw std::invalid_argument("b_mixed: require 0 <= h <= min(k, 7)");
  mpz_class eight_pow;
  mpz_class eight(8);
  mpz_pow_ui(eight_pow.get_mpz_t(), eight.get_mpz_t(), h);
  mpq_class hughes(factorial_z(2 * h), eight_pow * factorial_z(h));
  hughes.canonicalize();
  return b_of_k(k) * ExactRational(hughes) * H_rational(h, k);
}

namespace {

long isqrt_long(long n) {
  long r = static_cast<long>(std::sqrt(static_cast<double>(n)));
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

}  // namespace

MonicAuditReport audit_monic_denominator(int h) {
  if (h < 1 || h > 7) throw std::invalid_argument("audit_monic_denominator: h outside 1..7");
  MonicAuditReport report;
  report.h = h;
  report.all_match = true;

  const HFunctionData& data = h_function_data(h);
  auto actual_exp = [&](int a) {
    for (auto [fa, e] : data.denominator_factors)
      if (fa == a) return e;
    return 0;
  };

  // alpha(a,h) = 4h/(a + sqrt(a^2+8h)) = (sqrt(a^2+8h) - a)/2; integer part
  // via exact integer sqrt.
  for (int a = 1; a <= 2 * h + 3; a += 2) {
    const int predicted = static_cast<int>((isqrt_long(1L * a * a + 8L * h) - a) / 2);
    const int actual = actual_exp(a);
    if (predicted == 0 && actual == 0) continue;
    MonicAuditRow row{a, predicted, actual, predicted == actual};
    if (!row.match) report.all_match = false;
    report.rows.push_back(row);
  }
  if (h == 3) {
    report.note =
        "h = 3: the tabulated H(3,k) lacks the predicted K^2-9 factor; the literature "
        "records that H(3,k) requires a K^2-9 adjustment in numerator and denominator "
        "to fit the monic-denominator pattern.";
  }
  return report;
}

LockInResult interpretation_lock_in() {
  // exact targets: c(k) = b(k) / (published exact ratio), k = 1,2,3
  const ExactRational targets[3] = {
      b_of_k(1) / ExactRational(12),
      b_of_k(2) / ExactRational(560),
      b_of_k(3) / (ExactRational(172480) / ExactRational(3)),
  };

  std::ostringstream diag;
  std::vector<std::pair<OrderMode, MRange>> winners;
  for (OrderMode om : {OrderMode::ordered, OrderMode::nondecreasing}) {
    for (MRange mr : {MRange::i_lt_j_1k, MRange::i_lt_j_0k, MRange::i_ne_j_1k}) {
      bool ok = true;
      diag << to_string(om) << " / " << to_string(mr) << ":";
      for (int k = 1; k <= 3; ++k) {
        CkOptions opts;
        opts.order_mode = om;
        opts.m_range = mr;
        const ExactRational got = c_of_k(k, opts);
        const bool match = got == targets[k - 1];
        ok = ok && match;
        diag << " c(" << k << ")=" << got.to_string() << (match ? " [ok]" : " [no]");
      }
      diag << "\n";
      if (ok) winners.emplace_back(om, mr);
    }
  }
  if (winners.size() != 1) {
    throw std::runtime_error(
        "interpretation_lock_in: expected exactly one matching interpretation, found " +
        std::to_string(winners.size()) + "\n" + diag.str());
  }
  return {winners[0].first, winners[0].second, diag.str()};
}

}  // namespace zetagap
