#include "fitems/verify.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>

#include <json.hpp>

#include "fitems/generators.hpp"
#include "fitems/optimal.hpp"
#include "fitems/report.hpp"
#include "fitems/worst_order.hpp"

namespace fitems::verify {

namespace {

using A = AlgorithmId;
constexpr A kOnline[] = {A::naive, A::eager, A::majority};
constexpr A kAll[] = {A::naive, A::eager, A::majority, A::opt};

Rational R(std::int64_t p, std::int64_t q = 1) { return Rational(p, q); }
Rational RN(std::size_t n) { return Rational(static_cast<std::int64_t>(n)); }

// Largest length whose full canonical enumeration the checks need, and the
// largest permutation count they brute force (8! for the all-distinct
// multiset of size 8).
constexpr std::size_t kCheckN = 8;
constexpr std::uint64_t kCheckPerms = 40320;

class Recorder {
 public:
  Recorder(int id, std::string name, std::string claim) {
    result_.id = id;
    result_.name = std::move(name);
    result_.claim = std::move(claim);
  }

  template <typename T>
  void expect_eq(const std::string& what, const T& got, const T& expected) {
    if (!(got == expected)) fail(what + ": expected " + show(expected) + ", got " + show(got));
  }
  void expect(bool ok, const std::string& what) {
    if (!ok) fail(what);
  }
  void fail(std::string message) {
    // Cap the list so a systematic fault does not flood the report.
    if (result_.failures.size() < 20) result_.failures.push_back(std::move(message));
    else if (result_.failures.size() == 20) result_.failures.push_back("...");
    result_.status = Status::fail;
  }
  void note(std::string message) { result_.notes.push_back(std::move(message)); }

  bool skip_unless(const Options& options, std::size_t canonical_n, std::uint64_t perms) {
    if (options.limits.canonical_limit < canonical_n) {
      skip("needs canonical enumeration up to n = " + std::to_string(canonical_n) +
           " (--limit-canonical is " + std::to_string(options.limits.canonical_limit) + ")");
      return true;
    }
    if (options.limits.permutation_limit < perms) {
      skip("needs " + std::to_string(perms) + " permutations (--limit-perms is " +
           std::to_string(options.limits.permutation_limit) + ")");
      return true;
    }
    return false;
  }

  CheckResult finish() { return std::move(result_); }

 private:
  void skip(std::string reason) {
    result_.status = Status::skip;
    result_.skip_reason = std::move(reason);
  }
  static std::string show(const Rational& r) { return r.str(); }
  static std::string show(const Profit& p) { return p.str(); }
  static std::string show(const std::string& s) { return s; }
  static std::string show(const std::vector<std::uint32_t>& v) {
    std::string out = "{";
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
    return out + "}";
  }
  template <typename T>
  static std::string show(const T& v) {
    return std::to_string(v);
  }

  CheckResult result_;
};

std::string label(A alg, const std::string& family, std::size_t n) {
  return std::string(to_string(alg)) + "(" + family + "_" + std::to_string(n) + ")";
}

Rational value(const Options& options, A alg, const Sequence& seq) {
  return options.profit(alg, seq).value();
}

std::vector<std::uint32_t> shape_of(const Sequence& seq) { return frequency_table(seq).shape(); }

}  // namespace

std::string_view to_string(Status status) {
  switch (status) {
    case Status::pass: return "PASS";
    case Status::fail: return "FAIL";
    case Status::skip: return "SKIP";
  }
  return "?";
}

CheckResult check_closed_forms(const Options& options) {
  Recorder rec(1, "closed-form profits on E_n and W_n",
               "profits of nai/eag/maj/opt on E_n and W_n match their closed forms for n in 3..24");
  for (std::size_t n = 3; n <= 24; ++n) {
    const auto e = gen_E(n);
    const Rational nai_e = RN(n) - 4 + R(8, static_cast<std::int64_t>(n));
    rec.expect_eq(label(A::naive, "E", n), value(options, A::naive, e), nai_e);
    rec.expect_eq(label(A::eager, "E", n), value(options, A::eager, e), R(2));
    if (n >= 4) {
      rec.expect_eq(label(A::majority, "E", n), value(options, A::majority, e), RN(n) - 6 + R(16, static_cast<std::int64_t>(n)));
      rec.expect_eq(label(A::opt, "E", n), value(options, A::opt, e), nai_e);
    } else {
      // E_3 = a,a,b: majority never gets past a, and a (twice) beats b
      // (once) for the optimum. The E_n closed forms assume n >= 4.
      rec.expect_eq(label(A::majority, "E", n), value(options, A::majority, e), R(2));
      rec.expect_eq(label(A::opt, "E", n), value(options, A::opt, e), R(2));
      rec.note("E_3 is degenerate: maj = opt = 2 where the closed forms give 7/3 and 5/3");
    }

    const auto w = gen_W(n);
    const bool even = n % 2 == 0;
    const Rational nai_w = even ? R(static_cast<std::int64_t>(n), 4) + R(1, 2) : R(static_cast<std::int64_t>(n), 4) + R(3, 4 * static_cast<std::int64_t>(n));
    const Rational opt_w = even ? R(static_cast<std::int64_t>(n), 2) - R(1, 2) + R(1, static_cast<std::int64_t>(n)) : R(static_cast<std::int64_t>(n), 2) - 1 + R(3, 2 * static_cast<std::int64_t>(n));
    rec.expect_eq(label(A::naive, "W", n), value(options, A::naive, w), nai_w);
    rec.expect_eq(label(A::eager, "W", n), value(options, A::eager, w), nai_w);
    rec.expect_eq(label(A::majority, "W", n), value(options, A::majority, w), R(1));
    rec.expect_eq(label(A::opt, "W", n), value(options, A::opt, w), opt_w);
  }
  rec.expect_eq(std::string("nai(E_8)"), value(options, A::naive, gen_E(8)), R(5));
  rec.expect_eq(std::string("maj(E_8)"), value(options, A::majority, gen_E(8)), R(4));
  rec.expect_eq(std::string("opt(W_8)"), value(options, A::opt, gen_W(8)), R(29, 8));
  rec.expect_eq(std::string("nai(W_7)"), value(options, A::naive, gen_W(7)), R(13, 7));
  return rec.finish();
}

CheckResult check_majority_worst_order(const Options& options) {
  Recorder rec(2, "majority worst order",
               "brute-force maj worst order equals the closed form and the folded D(I) attains it, n <= 8");
  if (rec.skip_unless(options, kCheckN, kCheckPerms)) return rec.finish();
  for (std::size_t n = 1; n <= kCheckN; ++n) {
    for (const auto& table : canonical_multisets(n)) {
      const auto brute = worst_permutation_bruteforce(A::majority, table, options.limits.permutation_limit,
                                                      options.limits.jobs);
      const auto closed = maj_worst_value(table);
      const std::string tag = "multiset " + std::to_string(n) + " shape#" + std::to_string(table.distinct());
      rec.expect_eq(tag + " brute force vs closed form", brute.value, closed);
      rec.expect_eq(tag + " maj on constructed order", options.profit(A::majority, maj_worst_permutation(table)), closed);
      rec.expect_eq(tag + " witness", options.profit(A::majority, brute.witness), brute.value);
    }
  }
  return rec.finish();
}

CheckResult check_opt_worst_order(const Options& options) {
  Recorder rec(3, "opt worst order collapses to naive",
               "brute-force opt worst order equals the naive profit for every multiset, n <= 8");
  if (rec.skip_unless(options, kCheckN, kCheckPerms)) return rec.finish();
  for (std::size_t n = 1; n <= kCheckN; ++n) {
    for (const auto& table : canonical_multisets(n)) {
      const auto brute =
          worst_permutation_bruteforce(A::opt, table, options.limits.permutation_limit, options.limits.jobs);
      const Profit naive(table.sum_of_squares(), table.n());
      rec.expect_eq("n=" + std::to_string(n) + " distinct=" + std::to_string(table.distinct()), brute.value, naive);
      rec.expect_eq(std::string("opt on D(I)"), options.profit(A::opt, opt_worst_permutation(table)), naive);
    }
  }
  return rec.finish();
}

CheckResult check_opt_oracle(const Options& options) {
  Recorder rec(4, "opt dynamic program vs exhaustive search",
               "run_opt equals run_opt_exhaustive on all canonical sequences n <= 8 and all families n <= 12");
  if (rec.skip_unless(options, kCheckN, 0)) return rec.finish();
  for (std::size_t n = 1; n <= kCheckN; ++n) {
    CanonicalSequences seqs(n, options.limits.canonical_limit);
    seqs.for_each([&](std::span<const Item> items) {
      const Sequence seq(std::vector<Item>(items.begin(), items.end()));
      const auto dp = run_opt(seq);
      const auto brute = run_opt_exhaustive(seq);
      if (!(dp.profit == brute.profit))
        rec.fail(format_ids(seq) + ": dp " + dp.profit.str() + ", exhaustive " + brute.profit.str());
    });
  }
  for (std::size_t n = 2; n <= kDefaultExhaustiveLimit; ++n) {
    std::vector<std::pair<std::string, Sequence>> cases;
    for (auto family : fixed_families())
      if (family_valid(family, n)) cases.emplace_back(std::string(to_string(family)), generate(family, n));
    if (family_valid(FamilyId::competitive_adversary, n))
      for (auto target : kOnline)
        cases.emplace_back("adversary/" + std::string(to_string(target)), gen_competitive_adversary(target, n));
    for (const auto& [name, seq] : cases)
      rec.expect_eq(name + "_" + std::to_string(n), run_opt(seq).profit, run_opt_exhaustive(seq).profit);
  }
  return rec.finish();
}

CheckResult check_naive_competitive(const Options& options) {
  Recorder rec(5, "naive competitive upper bound",
               "enumerated sup of opt/nai is at most sqrt(n)/(2 - 1/sqrt(n)) for n in 2..9");
  if (rec.skip_unless(options, 9, 0)) return rec.finish();
  for (std::size_t n = 2; n <= 9; ++n) {
    const auto p = competitive_sup(A::naive, n, options.limits);
    rec.expect(within_naive_competitive_bound(p.value, n),
               "n=" + std::to_string(n) + ": sup " + p.value.str() + " exceeds the bound");
    rec.note("n=" + std::to_string(n) + " sup opt/nai = " + p.value.str());
  }
  return rec.finish();
}

CheckResult check_adversary(const Options& options) {
  Recorder rec(6, "adaptive adversary lower bound",
               "adversary sequence gives opt/alg >= (n+sqrt(n)-1)/(2 sqrt(n)+1) >= sqrt(n)/2");
  for (auto alg : kOnline) {
    for (std::size_t n : {4u, 9u, 16u, 25u}) {
      const auto root = static_cast<std::int64_t>(*exact_sqrt(n));
      const auto seq = gen_competitive_adversary(alg, n);
      const Rational ratio = value(options, A::opt, seq) / value(options, alg, seq);
      const Rational bound = R(static_cast<std::int64_t>(n) + root - 1, 2 * root + 1);
      const std::string tag = std::string(to_string(alg)) + " n=" + std::to_string(n);
      rec.expect(ratio >= bound, tag + ": ratio " + ratio.str() + " below " + bound.str());
      rec.expect(ratio >= R(root, 2), tag + ": ratio " + ratio.str() + " below sqrt(n)/2");
    }
  }
  return rec.finish();
}

CheckResult check_relative_interval(const Options& options) {
  Recorder rec(7, "relative interval at n = 8",
               "enumerated Min/Max of profit differences at n = 8 within the proven bounds");
  if (rec.skip_unless(options, kCheckN, 0)) return rec.finish();
  const CanonicalSweep sweep(8, options.limits);
  const auto nai_eag = sweep.interval(A::naive, A::eager);
  rec.expect_eq(std::string("Min nai-eag"), nai_eag.min_diff, R(-3, 2));

  const auto nai_maj = sweep.interval(A::naive, A::majority);
  rec.expect(nai_maj.max_diff >= R(3, 2) && nai_maj.max_diff <= R(2),
             "Max nai-maj " + nai_maj.max_diff.str() + " outside [3/2, 2]");
  const auto w8 = gen_W(8);
  rec.expect_eq(std::string("nai-maj on W_8"), value(options, A::naive, w8) - value(options, A::majority, w8), R(3, 2));
  rec.expect_eq(std::string("Max nai-maj golden"), nai_maj.max_diff, R(3, 2));

  const auto maj_eag = sweep.interval(A::majority, A::eager);
  const auto e8 = gen_E(8);
  rec.expect_eq(std::string("maj-eag on E_8"), value(options, A::majority, e8) - value(options, A::eager, e8), R(2));
  rec.expect(maj_eag.max_diff >= R(2), "Max maj-eag " + maj_eag.max_diff.str() + " below 2");
  rec.expect_eq(std::string("Max maj-eag golden"), maj_eag.max_diff, R(5, 2));

  const auto eag_maj = sweep.interval(A::eager, A::majority);
  const auto killer = gen_eager_killer(8);
  rec.expect_eq(std::string("eag-maj on eager_killer_8"),
                value(options, A::eager, killer) - value(options, A::majority, killer), R(3, 2));
  rec.expect(eag_maj.max_diff >= R(3, 2) && eag_maj.max_diff <= R(7, 2),
             "Max eag-maj " + eag_maj.max_diff.str() + " outside [3/2, 7/2]");
  rec.expect_eq(std::string("Max eag-maj golden"), eag_maj.max_diff, R(15, 8));
  rec.expect_eq(std::string("antisymmetry maj/eag"), eag_maj.max_diff, -maj_eag.min_diff);

  rec.note("Min nai-eag(8) = " + nai_eag.min_diff.str() + ", Max nai-maj(8) = " + nai_maj.max_diff.str() +
           ", Max maj-eag(8) = " + maj_eag.max_diff.str() + ", Max eag-maj(8) = " + eag_maj.max_diff.str());
  return rec.finish();
}

CheckResult check_relative_worst_order(const Options& options) {
  Recorder rec(8, "relative worst order at small n",
               "WR(opt,nai) = 1 for n <= 8; sups of nai/eag and nai/maj at n = 8 on E_8 and W_8");
  if (rec.skip_unless(options, kCheckN, kCheckPerms)) return rec.finish();
  for (std::size_t n = 1; n <= kCheckN; ++n) {
    const auto p = relative_worst_order_exact(A::opt, A::naive, n, options.limits);
    rec.expect_eq("WR(opt,nai) sup n=" + std::to_string(n), p.sup_ratio, R(1));
    rec.expect_eq("WR(opt,nai) inf n=" + std::to_string(n), p.inf_ratio, R(1));
  }
  const auto eag = relative_worst_order_exact(A::naive, A::eager, 8, options.limits);
  rec.expect_eq(std::string("WR(nai,eag) sup n=8"), eag.sup_ratio, R(5, 2));
  rec.expect_eq(std::string("WR(nai,eag) witness"), eag.sup_witness.shape(), shape_of(gen_E(8)));
  rec.expect(eag.sup_ratio <= R(4), "WR(nai,eag) sup exceeds n/2");

  const auto maj = relative_worst_order_exact(A::naive, A::majority, 8, options.limits);
  rec.expect_eq(std::string("WR(nai,maj) sup n=8"), maj.sup_ratio, R(8, 4) + R(1, 2));
  rec.expect_eq(std::string("WR(nai,maj) witness"), maj.sup_witness.shape(), shape_of(gen_W(8)));

  // Odd n: the upper bound n/4 + 1 - 1/(4n) and the W_7 value differ;
  // record which, if either, the enumeration attains.
  const auto odd = relative_worst_order_exact(A::naive, A::majority, 7, options.limits);
  const Rational w7 = R(7, 4) + R(3, 28);
  const Rational odd_bound = R(7, 4) + 1 - R(1, 28);
  rec.expect(odd.sup_ratio <= odd_bound, "WR(nai,maj) sup at n=7 exceeds " + odd_bound.str());
  std::string shape;
  for (auto c : odd.sup_witness.shape()) shape += (shape.empty() ? "" : ",") + std::to_string(c);
  rec.note("WR(nai,maj) sup at n=7 is " + odd.sup_ratio.str() + " on shape {" + shape + "}; W_7 gives " +
           w7.str() + (odd.sup_ratio == w7 ? " (attained)" : " (not attained)") + ", upper bound " +
           odd_bound.str() + (odd.sup_ratio == odd_bound ? " (attained)" : " (not attained)"));
  return rec.finish();
}

CheckResult check_incomparability(const Options& options) {
  Recorder rec(9, "majority and eager are incomparable",
               "maj_W(E_8) = 2 eag_W(E_8) and eag_W(W_8) >= 2 maj_W(W_8)");
  if (rec.skip_unless(options, 0, 1680)) return rec.finish();
  const auto e8 = frequency_table(gen_E(8));
  const auto w8 = frequency_table(gen_W(8));
  const auto maj_e = maj_worst_value(e8).value();
  const auto eag_e = worst_permutation_bruteforce(A::eager, e8, options.limits.permutation_limit);
  const auto maj_w = maj_worst_value(w8).value();
  const auto eag_w = worst_permutation_bruteforce(A::eager, w8, options.limits.permutation_limit);
  rec.expect_eq(std::string("maj_W(E_8)"), maj_e, R(4));
  rec.expect_eq(std::string("eag_W(E_8)"), eag_e.value.value(), R(2));
  rec.expect_eq(std::string("maj_W(E_8) / eag_W(E_8)"), maj_e / eag_e.value.value(), R(2));
  rec.expect_eq(std::string("eag_W(W_8)"), eag_w.value.value(), R(5, 2));
  rec.expect_eq(std::string("maj_W(W_8)"), maj_w, R(1));
  rec.expect(eag_w.value.value() >= 2 * maj_w, "eag_W(W_8) below twice maj_W(W_8)");
  rec.expect_eq(std::string("eag on W'_8"), value(options, A::eager, gen_W_prime(8)), R(5, 2));
  rec.expect_eq(std::string("eag on E_8"), value(options, A::eager, gen_E(8)), R(2));
  rec.expect_eq(std::string("maj on E_8"), value(options, A::majority, gen_E(8)), R(4));
  rec.expect_eq(std::string("maj on W_8"), value(options, A::majority, gen_W(8)), R(1));
  return rec.finish();
}

CheckResult check_properties(const Options& options) {
  Recorder rec(10, "property suites",
               "renaming invariance, naive permutation invariance, eager = naive without repeats, "
               "opt dominance, profit range, deterministic parallel sweeps");
  if (rec.skip_unless(options, kCheckN, 0)) return rec.finish();

  // Renaming invariance over 1000 random bijections.
  std::mt19937_64 rng(0x5eed);
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t n = std::uniform_int_distribution<std::size_t>(1, kCheckN)(rng);
    const CanonicalSequences seqs(n, options.limits.canonical_limit);
    const auto seq = seqs.at(std::uniform_int_distribution<std::uint64_t>(0, seqs.size() - 1)(rng));
    std::vector<std::uint32_t> pool(1000);
    std::iota(pool.begin(), pool.end(), 0u);
    std::shuffle(pool.begin(), pool.end(), rng);
    pool.resize(n);
    const auto renamed = rename(seq, pool);
    for (auto alg : kAll) {
      if (!(profit_of(alg, renamed) == profit_of(alg, seq)))
        rec.fail(std::string(to_string(alg)) + " changes under renaming of " + format_ids(seq));
    }
    if (!(canonicalize(renamed) == seq)) rec.fail("canonical form changes under renaming of " + format_ids(seq));
  }

  for (std::size_t n = 1; n <= kCheckN; ++n) {
    const CanonicalSequences seqs(n, options.limits.canonical_limit);
    seqs.for_each([&](std::span<const Item> items) {
      const Sequence seq(std::vector<Item>(items.begin(), items.end()));
      const auto table = frequency_table(seq);
      const std::string tag = format_ids(seq);
      std::array<AlgorithmRun, 4> runs{run_naive(seq), run_eager(seq), run_majority(seq), run_algorithm(A::opt, seq)};
      if (!(runs[0].profit == Profit(table.sum_of_squares(), n)))
        rec.fail("naive profit depends on order: " + tag);
      bool repeat_free = true;
      for (std::size_t t = 1; t < n; ++t) repeat_free = repeat_free && seq[t] != seq[t - 1];
      if (repeat_free && !(runs[1].profit == runs[0].profit)) rec.fail("eager differs from naive without repeats: " + tag);
      for (const auto& run : runs) {
        if (run.profit.numerator() < n || run.profit.numerator() > n * n) rec.fail("profit outside [1, n]: " + tag);
        if (run.profit > runs[3].profit) rec.fail("online profit exceeds opt: " + tag);
      }
    });
  }

  // Naive permutation invariance over every ordering of small multisets.
  for (std::size_t n = 1; n <= 6; ++n) {
    for (const auto& table : canonical_multisets(n)) {
      const Profit expected(table.sum_of_squares(), n);
      MultisetPermutations(table).for_each([&](std::span<const Item> items) {
        const std::vector<std::uint32_t> counts = [&] {
          std::vector<std::uint32_t> c(n, 0);
          for (const auto& it : items) ++c[it.id];
          return c;
        }();
        if (!(Profit(profit_sum(A::naive, items, counts), n) == expected)) rec.fail("naive not permutation invariant");
        return true;
      });
    }
  }

  // Sweeps must not depend on the worker count.
  auto render = [&](std::size_t jobs) {
    SweepOptions o = options.limits;
    o.jobs = jobs;
    std::string out;
    out += to_csv(sweep(Measure::competitive, A::majority, std::nullopt, 2, 8, SweepMode::exact, o));
    out += to_csv(sweep(Measure::interval, A::naive, A::majority, 2, 8, SweepMode::exact, o));
    out += to_json(sweep(Measure::worst_order, A::naive, A::eager, 2, 7, SweepMode::exact, o));
    return out;
  };
  rec.expect(render(1) == render(4), "sweep output differs between 1 and 4 workers");
  return rec.finish();
}

std::vector<CheckResult> run_all(const Options& options) {
  return {check_closed_forms(options),        check_majority_worst_order(options),
          check_opt_worst_order(options),     check_opt_oracle(options),
          check_naive_competitive(options),   check_adversary(options),
          check_relative_interval(options),   check_relative_worst_order(options),
          check_incomparability(options),     check_properties(options)};
}

bool all_passed(const std::vector<CheckResult>& results) {
  return std::none_of(results.begin(), results.end(), [](const auto& r) { return r.status == Status::fail; });
}

std::string summary_text(const std::vector<CheckResult>& results) {
  std::ostringstream out;
  for (const auto& r : results) {
    out << to_string(r.status) << "  " << (r.id < 10 ? " " : "") << r.id << "  " << r.name << '\n';
    for (const auto& f : r.failures) out << "        fail: " << f << '\n';
    for (const auto& nt : r.notes) out << "        note: " << nt << '\n';
    if (r.status == Status::skip) out << "        skip: " << r.skip_reason << '\n';
  }
  return out.str();
}

std::string summary_json(const std::vector<CheckResult>& results) {
  nlohmann::ordered_json checks = nlohmann::ordered_json::array();
  int passed = 0, failed = 0, skipped = 0;
  for (const auto& r : results) {
    switch (r.status) {
      case Status::pass: ++passed; break;
      case Status::fail: ++failed; break;
      case Status::skip: ++skipped; break;
    }
    checks.push_back({{"id", r.id},
                      {"name", r.name},
                      {"claim", r.claim},
                      {"status", to_string(r.status)},
                      {"failures", r.failures},
                      {"notes", r.notes},
                      {"skip_reason", r.skip_reason}});
  }
  nlohmann::ordered_json out{{"passed", passed}, {"failed", failed}, {"skipped", skipped}, {"checks", checks}};
  return out.dump(2) + "\n";
}

}  // namespace fitems::verify
