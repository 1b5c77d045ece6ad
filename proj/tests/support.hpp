#pragma once

#include <string>
#include <vector>

#include "fitems/core.hpp"
#include "fitems/rational.hpp"
#include "oracles.hpp"

namespace test {

inline oracle::Seq ids(const fitems::Sequence& seq) {
  oracle::Seq out;
  for (const auto& item : seq) out.push_back(static_cast<int>(item.id));
  return out;
}

inline fitems::Sequence seq(const oracle::Seq& s) {
  std::vector<std::uint32_t> v(s.begin(), s.end());
  return fitems::Sequence::from_ids(v);
}

inline fitems::Rational ratio(std::uint64_t num, std::size_t n) {
  return fitems::Rational(static_cast<std::int64_t>(num), static_cast<std::int64_t>(n));
}

inline fitems::Rational q(std::int64_t p, std::int64_t d = 1) { return fitems::Rational(p, d); }

inline std::string tokens(const fitems::Sequence& s) {
  std::string out;
  for (const auto& item : s) out += (out.empty() ? "" : " ") + s.name_of(item);
  return out;
}

}  // namespace test
