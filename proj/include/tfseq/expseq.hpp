#ifndef TFSEQ_EXPSEQ_HPP
#define TFSEQ_EXPSEQ_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <memory>
#include <mutex>
#include <optional>
#include <queue>
#include <tuple>
#include <variant>
#include <vector>

#include "tfseq/errors.hpp"
#include "tfseq/weights.hpp"

namespace tfseq {

// Exponent sequences: non-decreasing, non-negative, tending to infinity.
//
//   from_weight(w)        a_n = w(n)
//   from_weight_pair(w,h) a_n = (w^{-1} h^{-1})^{-1}(n)
//   explicit_terms(v)     a finite known prefix of an otherwise unknown sequence
//   sharp(l, r)           the non-decreasing rearrangement of { l_k + r_n }
//
// Sequences are immutable value handles; the materialized prefix cache is append-only
// and mutex-guarded, so concurrent readers are safe.

inline constexpr std::int64_t kCountingCap = 100'000'000;  // hard cap for exact counting

class ExponentSequence {
 public:
  static ExponentSequence from_weight(WeightFunction w);
  static ExponentSequence from_weight_pair(WeightFunction w, WeightFunction h);
  static ExponentSequence explicit_terms(std::vector<double> terms);
  static ExponentSequence sharp(ExponentSequence left, ExponentSequence right);

  // n-th term (0-based). Throws resource_error past the certified prefix of
  // explicit-backed sequences.
  double term(std::size_t n) const;

  // Copy of the first `count` terms, materializing as needed (one lock, not one
  // per index).
  std::vector<double> terms_prefix(std::size_t count) const;

  // nu(s) = #{ n : a_n <= s }, exact; throws resource_error if the count would
  // exceed kCountingCap or s lies beyond the certified horizon.
  std::int64_t counting(double s) const;

  // Sound enclosure of nu(s) without materialization; `exact` when lo == hi holds
  // as a verified integer count. For sharp products beyond the exact budget the
  // enclosure is nu_l(s/2) nu_r(s/2) <= nu(s) <= nu_l(s) nu_r(s).
  struct CountBounds {
    long double lo = 0.0L;
    long double hi = 0.0L;
    bool exact = false;
  };
  CountBounds counting_bounds(double s) const;

  // Largest value below which term/counting are certain; +inf unless a finite
  // explicit prefix is involved.
  double horizon() const;

  // Number of directly indexable terms (explicit prefixes); SIZE_MAX otherwise.
  std::size_t known_size() const;

  bool is_sharp() const;

 private:
  struct State;
  std::shared_ptr<State> state_;
  explicit ExponentSequence(std::shared_ptr<State> s) : state_(std::move(s)) {}
};

struct ExponentSequence::State {
  struct FromWeight {
    WeightFunction w;
  };
  struct FromWeightPair {
    WeightFunction w, h;
  };
  struct Explicit {
    std::vector<double> terms;
  };
  struct Sharp {
    ExponentSequence left, right;
  };
  std::variant<FromWeight, FromWeightPair, Explicit, Sharp> source;

  mutable std::mutex mu;
  mutable std::vector<double> prefix;  // sharp cache
  // sharp merge frontier: min-heap on (value, k, n); ties popped in (k, n)
  // lexicographic order
  struct Node {
    double value;
    std::uint32_t k;
    std::uint32_t n;
    bool operator>(const Node& o) const {
      if (value != o.value) return value > o.value;
      if (k != o.k) return k > o.k;
      return n > o.n;
    }
  };
  mutable std::priority_queue<Node, std::vector<Node>, std::greater<Node>> frontier;
  mutable bool frontier_seeded = false;

  // loser-tree merge over the rows k of (left_k + right_n), used when both factors
  // are explicit prefixes and all rows are known up front. Rows advance in n, so the
  // replay path is fixed and branch-light; ties resolve to the smaller row id, which
  // reproduces the (value, k, n) pop order of the heap.
  struct LoserTree {
    std::uint32_t pad = 0;                // leaf count (power of two >= rows)
    std::vector<std::uint32_t> losers;    // internal nodes
    std::vector<std::uint32_t> next;      // per-row right index
    std::vector<double> key;              // per-row current value (+inf = exhausted)
    std::uint32_t winner = 0;
    bool initialized = false;

    bool before(std::uint32_t a, std::uint32_t b) const {
      if (key[a] != key[b]) return key[a] < key[b];
      return a < b;
    }
    void build(const std::vector<double>& lv, const std::vector<double>& rv) {
      const std::uint32_t rows = static_cast<std::uint32_t>(lv.size());
      pad = 1;
      while (pad < rows) pad <<= 1;
      key.assign(pad, std::numeric_limits<double>::infinity());
      next.assign(pad, 0);
      for (std::uint32_t r = 0; r < rows; ++r) {
        key[r] = lv[r] + rv[0];
        next[r] = 1;
      }
      losers.assign(pad, 0);
      std::vector<std::uint32_t> winners(2 * pad);
      for (std::uint32_t i = 0; i < pad; ++i) winners[pad + i] = i;
      for (std::uint32_t node = pad - 1; node >= 1; --node) {
        const std::uint32_t a = winners[2 * node], b = winners[2 * node + 1];
        winners[node] = before(a, b) ? a : b;
        losers[node] = before(a, b) ? b : a;
      }
      winner = winners[1];
      initialized = true;
    }
    // advance the winner's row and replay its path
    void step(const std::vector<double>& lv, const std::vector<double>& rv) {
      const std::uint32_t r = winner;
      key[r] = (next[r] < rv.size()) ? lv[r] + rv[next[r]] : std::numeric_limits<double>::infinity();
      ++next[r];
      std::uint32_t cur = r;
      for (std::uint32_t node = (pad + r) >> 1; node >= 1; node >>= 1) {
        if (before(losers[node], cur)) std::swap(cur, losers[node]);
      }
      winner = cur;
    }
  };
  mutable LoserTree ltree;
};

inline ExponentSequence ExponentSequence::from_weight(WeightFunction w) {
  auto st = std::make_shared<State>();
  st->source = State::FromWeight{std::move(w)};
  return ExponentSequence(std::move(st));
}

inline ExponentSequence ExponentSequence::from_weight_pair(WeightFunction w, WeightFunction h) {
  auto st = std::make_shared<State>();
  st->source = State::FromWeightPair{std::move(w), std::move(h)};
  return ExponentSequence(std::move(st));
}

inline ExponentSequence ExponentSequence::explicit_terms(std::vector<double> terms) {
  if (terms.empty()) throw validation_error("explicit sequence: need at least one term");
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (!std::isfinite(terms[i]) || terms[i] < 0.0)
      throw validation_error("explicit sequence: terms must be finite and non-negative");
    if (i > 0 && terms[i] < terms[i - 1])
      throw validation_error("explicit sequence: terms must be non-decreasing");
  }
  auto st = std::make_shared<State>();
  st->source = State::Explicit{std::move(terms)};
  return ExponentSequence(std::move(st));
}

inline ExponentSequence ExponentSequence::sharp(ExponentSequence left, ExponentSequence right) {
  auto st = std::make_shared<State>();
  st->source = State::Sharp{std::move(left), std::move(right)};
  return ExponentSequence(std::move(st));
}

inline bool ExponentSequence::is_sharp() const {
  return std::holds_alternative<State::Sharp>(state_->source);
}

inline std::size_t ExponentSequence::known_size() const {
  if (const auto* e = std::get_if<State::Explicit>(&state_->source)) return e->terms.size();
  return std::numeric_limits<std::size_t>::max();
}

inline double ExponentSequence::horizon() const {
  constexpr double inf = std::numeric_limits<double>::infinity();
  if (const auto* e = std::get_if<State::Explicit>(&state_->source)) return e->terms.back();
  if (const auto* s = std::get_if<State::Sharp>(&state_->source)) {
    const double hl = s->left.horizon();
    const double hr = s->right.horizon();
    if (hl == inf && hr == inf) return inf;
    const double via_left = (hl == inf) ? inf : hl + s->right.term(0);
    const double via_right = (hr == inf) ? inf : s->left.term(0) + hr;
    return std::min(via_left, via_right);
  }
  return inf;
}

namespace detail {

inline std::optional<double> safe_term(const ExponentSequence& s, std::size_t n) {
  if (n >= s.known_size()) return std::nullopt;
  try {
    return s.term(n);
  } catch (const resource_error&) {
    return std::nullopt;
  }
}

}  // namespace detail

inline double ExponentSequence::term(std::size_t n) const {
  State& st = *state_;
  if (const auto* fw = std::get_if<State::FromWeight>(&st.source))
    return eval(fw->w, static_cast<double>(n));
  if (const auto* e = std::get_if<State::Explicit>(&st.source)) {
    if (n >= e->terms.size())
      throw resource_error("explicit sequence: index beyond the known prefix");
    return e->terms[n];
  }
  if (const auto* p = std::get_if<State::FromWeightPair>(&st.source)) {
    // each term is an independent bisection; no sequential prefix is needed
    return inverse_product_inverse(p->w, p->h, static_cast<double>(n));
  }
  const auto& sp = std::get<State::Sharp>(st.source);
  {
    std::lock_guard<std::mutex> lock(st.mu);
    if (n < st.prefix.size()) return st.prefix[n];
  }
  const double hor = horizon();
  std::lock_guard<std::mutex> lock(st.mu);

  // fast path: both factors explicit, merge all rows through the loser tree
  const auto* le = std::get_if<State::Explicit>(&sp.left.state_->source);
  const auto* re = std::get_if<State::Explicit>(&sp.right.state_->source);
  if (le && re) {
    const auto& lv = le->terms;
    const auto& rv = re->terms;
    if (!st.ltree.initialized) st.ltree.build(lv, rv);
    if (st.prefix.size() <= n) st.prefix.reserve(n + 1);
    while (st.prefix.size() <= n) {
      if (st.prefix.size() > static_cast<std::size_t>(kCountingCap))
        throw resource_error("sharp product: materialization cap reached");
      const double v = st.ltree.key[st.ltree.winner];
      if (v >= hor)
        throw resource_error(
            "sharp product: index beyond the horizon certified by finite factors");
      st.prefix.push_back(v);
      st.ltree.step(lv, rv);
    }
    return st.prefix[n];
  }

  if (!st.frontier_seeded) {
    st.frontier_seeded = true;
    auto l0 = detail::safe_term(sp.left, 0);
    auto r0 = detail::safe_term(sp.right, 0);
    if (l0 && r0) st.frontier.push(State::Node{*l0 + *r0, 0, 0});
  }
  while (st.prefix.size() <= n) {
    if (st.frontier.empty())
      throw resource_error("sharp product: prefix exhausted (finite factors)");
    if (st.prefix.size() > static_cast<std::size_t>(kCountingCap))
      throw resource_error("sharp product: materialization cap reached");
    const State::Node top = st.frontier.top();
    if (top.value >= hor)
      throw resource_error("sharp product: index beyond the horizon certified by finite factors");
    st.frontier.pop();
    st.prefix.push_back(top.value);
    const double lk = sp.left.term(top.k);
    if (auto rn = detail::safe_term(sp.right, top.n + 1))
      st.frontier.push(State::Node{lk + *rn, top.k, top.n + 1});
    if (top.n == 0) {
      if (auto lk1 = detail::safe_term(sp.left, top.k + 1))
        st.frontier.push(State::Node{*lk1 + sp.right.term(0), top.k + 1, 0});
    }
  }
  return st.prefix[n];
}

inline std::vector<double> ExponentSequence::terms_prefix(std::size_t count) const {
  std::vector<double> out;
  out.reserve(count);
  if (count == 0) return out;
  term(count - 1);  // materialize
  const State& st = *state_;
  if (std::holds_alternative<State::Sharp>(st.source)) {
    std::lock_guard<std::mutex> lock(st.mu);
    out.assign(st.prefix.begin(), st.prefix.begin() + static_cast<std::ptrdiff_t>(count));
    return out;
  }
  for (std::size_t n = 0; n < count; ++n) out.push_back(term(n));
  return out;
}

namespace detail {

// Largest integer n with w(n) <= s, as (value, certainty); -1 when w(0) > s.
inline std::pair<long double, bool> weight_count_boundary(const WeightFunction& w, double s) {
  if (eval(w, 0.0) > s) return {-1.0L, true};
  // doubling + binary search over exact integers while possible
  std::uint64_t lo = 0, hi = 1;
  const std::uint64_t exact_limit = (1ull << 52);
  bool overflow = false;
  while (eval(w, static_cast<double>(hi)) <= s) {
    if (hi >= exact_limit) {
      overflow = true;
      break;
    }
    lo = hi;
    hi *= 2;
  }
  if (!overflow) {
    while (hi - lo > 1) {
      const std::uint64_t mid = lo + (hi - lo) / 2;
      (eval(w, static_cast<double>(mid)) <= s ? lo : hi) = mid;
    }
    return {static_cast<long double>(lo), true};
  }
  // counting beyond 2^52: continuous bisection, certainty lost
  long double flo = static_cast<long double>(hi), fhi = 2.0L * flo;
  while (eval(w, static_cast<double>(fhi)) <= s) {
    flo = fhi;
    fhi *= 2.0L;
    if (fhi > 1e300L) throw resource_error("counting: weight sequence does not exceed s");
  }
  for (int i = 0; i < 200 && (fhi - flo) > 1e-12L * fhi; ++i) {
    const long double mid = 0.5L * (flo + fhi);
    (eval(w, static_cast<double>(mid)) <= s ? flo : fhi) = mid;
  }
  return {std::floor(flo), false};
}

}  // namespace detail

inline ExponentSequence::CountBounds ExponentSequence::counting_bounds(double s) const {
  if (!(s >= 0.0)) throw domain_error("counting: s must be >= 0");
  CountBounds out;
  const State& st = *state_;
  if (const auto* fw = std::get_if<State::FromWeight>(&st.source)) {
    auto [boundary, certain] = detail::weight_count_boundary(fw->w, s);
    const long double count = boundary + 1.0L;
    out.lo = certain ? count : std::max(0.0L, count - 1.0L);
    out.hi = certain ? count : count + 1.0L;
    out.exact = certain;
    return out;
  }
  if (const auto* p = std::get_if<State::FromWeightPair>(&st.source)) {
    // a_n <= s  <=>  n <= F(s) with F = w^{-1} h^{-1}
    const double log_f = (s > 0.0)
                             ? log_inverse_log(p->w, std::log(s)) + log_inverse_log(p->h, std::log(s))
                             : -std::numeric_limits<double>::infinity();
    if (log_f == -std::numeric_limits<double>::infinity()) {
      // F(s) could still be 0 < 1; count of n = 0 depends on a_0 <= s
      const long double c = (term(0) <= s) ? 1.0L : 0.0L;
      out.lo = out.hi = c;
      out.exact = true;
      return out;
    }
    const long double f = std::exp(static_cast<long double>(log_f));
    const long double count = std::floor(f * (1.0L + 1e-15L)) + 1.0L;
    if (f < 9e15L) {
      // verify the boundary against the actual terms (a few bisections at most)
      std::int64_t c = static_cast<std::int64_t>(count);
      int guard = 0;
      while (c > 0 && term(static_cast<std::size_t>(c - 1)) > s * (1.0 + 1e-12) && guard++ < 64)
        --c;
      while (term(static_cast<std::size_t>(c)) <= s * (1.0 + 1e-12) && guard++ < 64) ++c;
      if (guard < 64) {
        out.lo = out.hi = static_cast<long double>(c);
        out.exact = true;
        return out;
      }
    }
    out.lo = std::max(0.0L, count * (1.0L - 1e-9L) - 1.0L);
    out.hi = count * (1.0L + 1e-9L) + 1.0L;
    out.exact = false;
    return out;
  }
  if (const auto* e = std::get_if<State::Explicit>(&st.source)) {
    if (s >= e->terms.back())
      throw resource_error("explicit sequence: counting beyond the known prefix");
    const auto it = std::upper_bound(e->terms.begin(), e->terms.end(), s);
    out.lo = out.hi = static_cast<long double>(it - e->terms.begin());
    out.exact = true;
    return out;
  }
  const auto& sp = std::get<State::Sharp>(st.source);
  {
    std::lock_guard<std::mutex> lock(st.mu);
    if (!st.prefix.empty() && st.prefix.back() > s) {
      const auto it = std::upper_bound(st.prefix.begin(), st.prefix.end(), s);
      out.lo = out.hi = static_cast<long double>(it - st.prefix.begin());
      out.exact = true;
      return out;
    }
  }
  const auto bl = sp.left.counting_bounds(s);
  const auto br = sp.right.counting_bounds(s);
  const long double upper_est = bl.hi * br.hi;
  if (upper_est <= 2'000'000.0L && s < horizon()) {
    std::int64_t c = counting(s);  // materializes exactly
    out.lo = out.hi = static_cast<long double>(c);
    out.exact = true;
    return out;
  }
  const auto bl2 = sp.left.counting_bounds(s / 2.0);
  const auto br2 = sp.right.counting_bounds(s / 2.0);
  out.lo = bl2.lo * br2.lo;
  out.hi = bl.hi * br.hi;
  out.exact = false;
  return out;
}

inline std::int64_t ExponentSequence::counting(double s) const {
  if (!(s >= 0.0)) throw domain_error("counting: s must be >= 0");
  const State& st = *state_;
  if (std::holds_alternative<State::FromWeight>(st.source) ||
      std::holds_alternative<State::FromWeightPair>(st.source)) {
    auto cb = counting_bounds(s);
    if (!cb.exact)
      throw resource_error("counting: count exceeds the exactly representable range");
    if (cb.lo > static_cast<long double>(kCountingCap))
      throw resource_error("counting: count exceeds the hard cap");
    return static_cast<std::int64_t>(cb.lo);
  }
  if (const auto* e = std::get_if<State::Explicit>(&st.source)) {
    if (s >= e->terms.back())
      throw resource_error("explicit sequence: counting beyond the known prefix");
    return static_cast<std::int64_t>(
        std::upper_bound(e->terms.begin(), e->terms.end(), s) - e->terms.begin());
  }
  // sharp: extend the materialized prefix until a term exceeds s
  if (s >= horizon())
    throw resource_error("sharp product: counting beyond the horizon certified by finite factors");
  std::size_t n = 0;
  {
    std::lock_guard<std::mutex> lock(st.mu);
    n = st.prefix.size();
  }
  if (n == 0 || term(n - 1) <= s) {
    std::size_t probe = std::max<std::size_t>(n, 16);
    for (;;) {
      if (probe > static_cast<std::size_t>(kCountingCap))
        throw resource_error("counting: count exceeds the hard cap");
      try {
        if (term(probe - 1) > s) break;
      } catch (const resource_error&) {
        break;  // prefix ends (finite factors); everything known is <= s handled below
      }
      probe *= 2;
    }
  }
  std::lock_guard<std::mutex> lock(st.mu);
  const auto it = std::upper_bound(st.prefix.begin(), st.prefix.end(), s);
  if (it == st.prefix.end() && !st.prefix.empty() && st.prefix.back() <= s)
    throw resource_error("sharp product: counting beyond the materializable prefix");
  return static_cast<std::int64_t>(it - st.prefix.begin());
}

// ---------------------------------------------------------------------------
// finite-range certificates for the counting-function lemmas
//
// All verdicts below are probe-range certificates with capped constant searches,
// not asymptotic proofs; every report carries its probe range.

enum class domination_mode { big_o, little_o };

struct DominationReport {
  bool holds = false;
  std::optional<double> witness_L;
  std::optional<double> threshold_s;  // little-o: largest per-L threshold used
  double probe_lo = 0.0;
  double probe_hi = 0.0;
  bool exact = true;  // all counting values were exact integers
};

struct StabilityReport {
  bool holds = false;
  std::optional<double> witness_L;
  double probe_lo = 0.0;
  double probe_hi = 0.0;
  bool exact = true;
};

struct EquivalenceReport {
  bool holds = false;
  double L = 0.0;
  double probe_lo = 0.0;
  double probe_hi = 0.0;
  bool exact = true;
};

namespace detail {

inline void validate_probes(const std::vector<double>& probes) {
  if (probes.empty()) throw validation_error("probes must be non-empty");
  for (std::size_t i = 0; i < probes.size(); ++i) {
    if (!(probes[i] >= 0.0)) throw validation_error("probes must be >= 0");
    if (i > 0 && !(probes[i] > probes[i - 1]))
      throw validation_error("probes must be strictly increasing");
  }
}

}  // namespace detail

// Certifies nu_b(s) <= nu_a(L s) on the probes (i.e. "a = O(b)" / "a = o(b)" through
// Lemma-style counting inequalities).
inline DominationReport dominates(const ExponentSequence& a, const ExponentSequence& b,
                                  domination_mode mode, const std::vector<double>& probes) {
  detail::validate_probes(probes);
  DominationReport rep;
  rep.probe_lo = probes.front();
  rep.probe_hi = probes.back();
  if (mode == domination_mode::big_o) {
    for (int e = 0; e <= 10; ++e) {
      const double L = std::ldexp(1.0, e);
      bool ok = true;
      bool exact = true;
      for (double s : probes) {
        const auto nb = b.counting_bounds(s);
        const auto na = a.counting_bounds(L * s);
        exact = exact && nb.exact && na.exact;
        if (!(nb.hi <= na.lo)) {
          ok = false;
          break;
        }
      }
      if (ok) {
        rep.holds = true;
        rep.witness_L = L;
        rep.exact = exact;
        return rep;
      }
    }
    rep.holds = false;
    return rep;
  }
  // little-o: every L in {1, 1/2, ..., 2^-10} must hold above some per-L threshold
  double worst_threshold = probes.front();
  bool exact = true;
  for (int e = 0; e <= 10; ++e) {
    const double L = std::ldexp(1.0, -e);
    std::size_t first_ok = probes.size();
    for (std::size_t i = probes.size(); i-- > 0;) {
      const auto nb = b.counting_bounds(probes[i]);
      const auto na = a.counting_bounds(L * probes[i]);
      exact = exact && nb.exact && na.exact;
      if (nb.hi <= na.lo)
        first_ok = i;
      else
        break;
    }
    if (first_ok >= probes.size()) {
      rep.holds = false;
      rep.exact = exact;
      return rep;
    }
    worst_threshold = std::max(worst_threshold, probes[first_ok]);
  }
  rep.holds = true;
  rep.threshold_s = worst_threshold;
  rep.exact = exact;
  return rep;
}

// Certifies 2 nu_a(s) <= nu_a(L s) on the probes.
inline StabilityReport is_stable(const ExponentSequence& a, const std::vector<double>& probes) {
  detail::validate_probes(probes);
  StabilityReport rep;
  rep.probe_lo = probes.front();
  rep.probe_hi = probes.back();
  for (int e = 0; e <= 10; ++e) {
    const double L = std::ldexp(1.0, e);
    bool ok = true;
    bool exact = true;
    for (double s : probes) {
      const auto n1 = a.counting_bounds(s);
      const auto n2 = a.counting_bounds(L * s);
      exact = exact && n1.exact && n2.exact;
      if (!(2.0L * n1.hi <= n2.lo)) {
        ok = false;
        break;
      }
    }
    if (ok) {
      rep.holds = true;
      rep.witness_L = L;
      rep.exact = exact;
      return rep;
    }
  }
  rep.holds = false;
  return rep;
}

// nu_a(s/2) nu_b(s/2) <= nu_{a sharp b}(s) <= nu_a(s) nu_b(s), exact integer comparisons.
inline bool check_fundamental(const ExponentSequence& a, const ExponentSequence& b,
                              const std::vector<double>& probes) {
  detail::validate_probes(probes);
  const ExponentSequence ab = ExponentSequence::sharp(a, b);
  for (double s : probes) {
    const std::int64_t lo = a.counting(s / 2.0) * b.counting(s / 2.0);
    const std::int64_t mid = ab.counting(s);
    const std::int64_t hi = a.counting(s) * b.counting(s);
    if (!(lo <= mid && mid <= hi)) return false;
  }
  return true;
}

// alpha(w) sharp alpha(h) ~ alpha(w, h): both domination directions, combined witness.
inline EquivalenceReport check_explicit_lemma(const WeightFunction& w, const WeightFunction& h,
                                              const std::vector<double>& probes) {
  detail::validate_probes(probes);
  const ExponentSequence prod =
      ExponentSequence::sharp(ExponentSequence::from_weight(w), ExponentSequence::from_weight(h));
  const ExponentSequence pair = ExponentSequence::from_weight_pair(w, h);
  const auto d1 = dominates(prod, pair, domination_mode::big_o, probes);
  const auto d2 = dominates(pair, prod, domination_mode::big_o, probes);
  EquivalenceReport rep;
  rep.holds = d1.holds && d2.holds;
  rep.L = std::max(d1.witness_L.value_or(0.0), d2.witness_L.value_or(0.0));
  rep.probe_lo = probes.front();
  rep.probe_hi = probes.back();
  rep.exact = d1.exact && d2.exact;
  return rep;
}

// log n <= r a_n on the prefix for some r in a doubling ladder (nuclearity probe).
inline bool nuclear_probe(const ExponentSequence& a, std::size_t n_terms) {
  for (double r = 0.25; r <= 64.0; r *= 2.0) {
    bool ok = true;
    for (std::size_t n = 2; n < n_terms; ++n) {
      if (std::log(static_cast<double>(n)) > r * a.term(n)) {
        ok = false;
        break;
      }
    }
    if (ok) return true;
  }
  return false;
}

}  // namespace tfseq

#endif
