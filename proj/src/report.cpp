#include "fitems/report.hpp"

#include <cmath>
#include <cstdio>

#include <json.hpp>

#include "fitems/worst_order.hpp"

namespace fitems {

namespace {

std::string decimal(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

Rational of(std::size_t n) { return Rational(static_cast<std::int64_t>(n)); }

std::string witness_of(const FrequencyTable& table) {
  return format_ids(canonicalize(sorted_by_frequency(table)));
}

// Limits of Min/n and Max/n for the pairs with known intervals.
std::optional<std::pair<std::string, std::string>> interval_target(AlgorithmId a, AlgorithmId b) {
  using A = AlgorithmId;
  if (a == b) return std::pair{"0", "0"};
  struct Known {
    A a, b;
    const char* lo;
    const char* hi;
  };
  static constexpr Known kKnown[] = {
      {A::naive, A::eager, "-1/4", "1"},
      {A::naive, A::majority, "-1/4", "1/4"},
      {A::majority, A::eager, "-1/2", "1"},
  };
  auto negate = [](std::string s) { return s == "0" ? s : s[0] == '-' ? s.substr(1) : "-" + s; };
  for (const auto& k : kKnown) {
    if (k.a == a && k.b == b) return std::pair{std::string(k.lo), std::string(k.hi)};
    if (k.a == b && k.b == a) return std::pair{negate(k.hi), negate(k.lo)};
  }
  return std::nullopt;
}

// Growth of the relative worst order function: 0 means constant, 1 linear.
struct WorstOrderScale {
  int power;
  std::string target;
};

WorstOrderScale worst_order_scale(AlgorithmId a, AlgorithmId b) {
  using A = AlgorithmId;
  if (a == b) return {0, "1"};
  if ((a == A::opt && b == A::naive) || (a == A::naive && b == A::opt)) return {0, "1"};
  if (a == A::naive && b == A::eager) return {1, "1/2"};
  if (a == A::naive && b == A::majority) return {1, "1/4"};
  if ((a == A::majority && b == A::eager) || (a == A::eager && b == A::majority))
    return {1, "incomparable"};
  return {1, ""};
}

std::string competitive_normalized(AlgorithmId alg, const Rational& value, std::size_t n) {
  if (alg == AlgorithmId::naive) return decimal(value.to_double() / std::sqrt(static_cast<double>(n)));
  if (alg == AlgorithmId::opt) return value.decimal();
  return (value / of(n)).decimal();
}

std::string competitive_target(AlgorithmId alg) {
  return alg == AlgorithmId::opt ? "1" : "1/2";
}

void competitive_rows(std::vector<ReportRow>& rows, AlgorithmId a, std::size_t n, SweepMode mode,
                      const SweepOptions& options) {
  if (mode == SweepMode::exact) {
    const auto p = competitive_sup(a, n, options);
    rows.push_back({"competitive", a, AlgorithmId::opt, n, p.value, format_ids(p.witness),
                    "enumerated", competitive_normalized(a, p.value, n), competitive_target(a)});
  } else {
    const auto p = competitive_family(a, n);
    rows.push_back({"competitive", a, AlgorithmId::opt, n, p.point.value,
                    format_ids(canonicalize(p.point.witness)),
                    "family:" + std::string(to_string(p.family)),
                    competitive_normalized(a, p.point.value, n), competitive_target(a)});
  }
}

void interval_rows(std::vector<ReportRow>& rows, AlgorithmId a, AlgorithmId b, std::size_t n,
                   SweepMode mode, const SweepOptions& options) {
  const auto target = interval_target(a, b);
  const std::string lo_target = target ? target->first : "";
  const std::string hi_target = target ? target->second : "";
  if (mode == SweepMode::exact) {
    const auto p = relative_interval_exact(a, b, n, options);
    rows.push_back({"interval_min", a, b, n, p.min_diff, format_ids(p.min_witness), "enumerated",
                    p.normalized_min().decimal(), lo_target});
    rows.push_back({"interval_max", a, b, n, p.max_diff, format_ids(p.max_witness), "enumerated",
                    p.normalized_max().decimal(), hi_target});
  } else {
    const std::size_t ns[] = {n};
    const auto fp = relative_interval_family(a, b, ns).front();
    const auto& p = fp.point;
    rows.push_back({"interval_min", a, b, n, p.min_diff, format_ids(canonicalize(p.min_witness)),
                    "family:" + std::string(to_string(fp.min_family)),
                    p.normalized_min().decimal(), lo_target});
    rows.push_back({"interval_max", a, b, n, p.max_diff, format_ids(canonicalize(p.max_witness)),
                    "family:" + std::string(to_string(fp.max_family)),
                    p.normalized_max().decimal(), hi_target});
  }
}

void worst_order_rows(std::vector<ReportRow>& rows, AlgorithmId a, AlgorithmId b, std::size_t n,
                      SweepMode mode, const SweepOptions& options) {
  const auto scale = worst_order_scale(a, b);
  auto normalize = [&](const Rational& r) {
    return scale.power == 0 ? r.decimal() : (r / of(n)).decimal();
  };
  if (mode == SweepMode::exact) {
    const auto p = relative_worst_order_exact(a, b, n, options);
    rows.push_back({"worst_order_sup", a, b, n, p.sup_ratio, witness_of(p.sup_witness),
                    "enumerated", normalize(p.sup_ratio), scale.target});
    rows.push_back({"worst_order_inf", a, b, n, p.inf_ratio, witness_of(p.inf_witness),
                    "enumerated", normalize(p.inf_ratio), scale.target});
    return;
  }
  // Family mode: worst orders of the families' multisets. Eager falls back to
  // the heuristic upper bound when brute force is out of budget.
  struct Entry {
    Rational ratio;
    std::string witness;
    std::string provenance;
  };
  std::optional<Entry> sup, inf;
  for (auto family : fixed_families()) {
    if (!family_valid(family, n)) continue;
    const auto table = frequency_table(generate(family, n));
    bool heuristic = false;
    auto value = [&](AlgorithmId alg) {
      try {
        return worst_order(alg, table, options.permutation_limit, options.jobs).value;
      } catch (const LimitExceeded&) {
        heuristic = true;
        return eager_worst_heuristic(table).value;
      }
    };
    const auto va = value(a);
    const auto vb = value(b);
    Entry e{Rational(static_cast<std::int64_t>(va.numerator()),
                     static_cast<std::int64_t>(vb.numerator())),
            witness_of(table),
            "family:" + std::string(to_string(family)) + (heuristic ? "+heuristic" : "")};
    if (!sup || e.ratio > sup->ratio) sup = e;
    if (!inf || e.ratio < inf->ratio) inf = e;
  }
  if (!sup) throw InvalidInput("no family is defined at n = " + std::to_string(n));
  rows.push_back({"worst_order_sup", a, b, n, sup->ratio, sup->witness, sup->provenance,
                  normalize(sup->ratio), scale.target});
  rows.push_back({"worst_order_inf", a, b, n, inf->ratio, inf->witness, inf->provenance,
                  normalize(inf->ratio), scale.target});
}

}  // namespace

std::optional<Measure> parse_measure(std::string_view text) {
  if (text == "competitive") return Measure::competitive;
  if (text == "interval") return Measure::interval;
  if (text == "worst-order" || text == "worst_order") return Measure::worst_order;
  return std::nullopt;
}

std::string_view to_string(Measure measure) {
  switch (measure) {
    case Measure::competitive: return "competitive";
    case Measure::interval: return "interval";
    case Measure::worst_order: return "worst_order";
  }
  return "?";
}

std::optional<SweepMode> parse_mode(std::string_view text) {
  if (text == "exact") return SweepMode::exact;
  if (text == "family") return SweepMode::family;
  return std::nullopt;
}

std::vector<ReportRow> sweep(Measure measure, AlgorithmId a, std::optional<AlgorithmId> b,
                             std::size_t n_lo, std::size_t n_hi, SweepMode mode,
                             const SweepOptions& options) {
  if (n_lo == 0 || n_lo > n_hi) throw InvalidInput("sweep range must satisfy 1 <= lo <= hi");
  if (measure != Measure::competitive && !b) throw InvalidInput("this measure compares two algorithms");
  if (measure == Measure::competitive && !is_online(a))
    throw InvalidInput("competitive sweeps need an online algorithm");
  std::vector<ReportRow> rows;
  for (std::size_t n = n_lo; n <= n_hi; ++n) {
    switch (measure) {
      case Measure::competitive: competitive_rows(rows, a, n, mode, options); break;
      case Measure::interval: interval_rows(rows, a, *b, n, mode, options); break;
      case Measure::worst_order: worst_order_rows(rows, a, *b, n, mode, options); break;
    }
  }
  return rows;
}

std::string to_csv(const std::vector<ReportRow>& rows) {
  std::string out = kCsvHeader;
  out += '\n';
  for (const auto& r : rows) {
    out += r.measure + ',' + std::string(to_string(r.alg_a)) + ',' + std::string(to_string(r.alg_b)) +
           ',' + std::to_string(r.n) + ',' + r.value.str() + ',' + r.value.decimal() + ',' +
           r.witness + ',' + r.provenance + ',' + r.normalized + ',' + r.target + '\n';
  }
  return out;
}

std::string to_json(const std::vector<ReportRow>& rows) {
  auto out = nlohmann::ordered_json::array();
  for (const auto& r : rows) {
    out.push_back({{"measure", r.measure},
                   {"alg_a", to_string(r.alg_a)},
                   {"alg_b", to_string(r.alg_b)},
                   {"n", r.n},
                   {"value_exact", r.value.str()},
                   {"value_decimal", r.value.decimal()},
                   {"witness", r.witness},
                   {"provenance", r.provenance},
                   {"normalized", r.normalized},
                   {"asymptotic_target", r.target}});
  }
  return out.dump(2) + "\n";
}

}  // namespace fitems
