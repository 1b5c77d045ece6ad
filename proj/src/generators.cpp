#include "fitems/generators.hpp"

#include <array>
#include <cmath>
#include <string>

namespace fitems {

namespace {

void require(bool ok, const std::string& message) {
  if (!ok) throw InvalidInput(message);
}

// Builds a sequence from display tokens, interning in first-occurrence order.
Sequence from_tokens(const std::vector<std::string>& tokens) {
  auto names = std::make_shared<Sequence::Names>();
  std::vector<Item> items;
  items.reserve(tokens.size());
  for (const auto& token : tokens) {
    std::uint32_t id = 0;
    while (id < names->size() && (*names)[id] != token) ++id;
    if (id == names->size()) names->push_back(token);
    items.push_back(Item{id});
  }
  return Sequence(std::move(items), std::move(names));
}

std::string indexed(std::size_t i) { return "a" + std::to_string(i); }

constexpr std::array kFixed{FamilyId::E, FamilyId::W, FamilyId::W_prime, FamilyId::half_half,
                            FamilyId::eager_killer};

}  // namespace

std::string_view to_string(FamilyId family) {
  switch (family) {
    case FamilyId::E: return "E";
    case FamilyId::W: return "W";
    case FamilyId::W_prime: return "W_prime";
    case FamilyId::half_half: return "half_half";
    case FamilyId::eager_killer: return "eager_killer";
    case FamilyId::competitive_adversary: return "adversary";
  }
  return "?";
}

std::optional<FamilyId> parse_family(std::string_view text) {
  if (text == "E") return FamilyId::E;
  if (text == "W") return FamilyId::W;
  if (text == "W_prime" || text == "W'" || text == "Wprime") return FamilyId::W_prime;
  if (text == "half_half" || text == "half-half") return FamilyId::half_half;
  if (text == "eager_killer" || text == "eager-killer") return FamilyId::eager_killer;
  if (text == "adversary" || text == "competitive_adversary") return FamilyId::competitive_adversary;
  return std::nullopt;
}

std::span<const FamilyId> fixed_families() { return kFixed; }

std::optional<std::size_t> exact_sqrt(std::size_t n) {
  auto r = static_cast<std::size_t>(std::sqrt(static_cast<double>(n)));
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  if (r * r != n) return std::nullopt;
  return r;
}

bool family_valid(FamilyId family, std::size_t n) {
  switch (family) {
    case FamilyId::E: return n >= 3;
    case FamilyId::W:
    case FamilyId::W_prime:
    case FamilyId::half_half: return n >= 2;
    case FamilyId::eager_killer: return n >= 4;
    case FamilyId::competitive_adversary: return n >= 4 && exact_sqrt(n).has_value();
  }
  return false;
}

Sequence gen_E(std::size_t n) {
  require(n >= 3, "family E needs n >= 3 (two copies of a and at least one b)");
  std::vector<std::string> tokens{"a", "a"};
  tokens.insert(tokens.end(), n - 2, "b");
  return from_tokens(tokens);
}

Sequence gen_W(std::size_t n) {
  require(n >= 2, "family W needs n >= 2");
  std::vector<std::string> tokens;
  for (std::size_t i = 1; i <= n / 2; ++i) {
    tokens.push_back(indexed(i));
    tokens.push_back("a0");
  }
  if (n % 2 == 1) tokens.push_back(indexed(n / 2 + 1));
  return from_tokens(tokens);
}

Sequence gen_W_prime(std::size_t n) {
  require(n >= 2, "family W_prime needs n >= 2");
  std::vector<std::string> tokens;
  for (std::size_t i = 1; i <= (n + 1) / 2; ++i) tokens.push_back(indexed(i));
  tokens.insert(tokens.end(), n / 2, "a0");
  return from_tokens(tokens);
}

Sequence gen_half_half(std::size_t n) {
  require(n >= 2, "family half_half needs n >= 2");
  std::vector<std::string> tokens((n + 1) / 2, "a0");
  for (std::size_t i = 1; i <= n / 2; ++i) tokens.push_back(indexed(i));
  return from_tokens(tokens);
}

Sequence gen_eager_killer(std::size_t n) {
  require(n >= 4, "family eager_killer needs n >= 4");
  const std::size_t core = n - n % 2;
  // The displayed pattern a,a,a1,a2,a3,a,... needs six steps; at length 4
  // the alternation starts right after a1.
  std::vector<std::string> tokens{"a", "a", "a1", core == 4 ? "a" : "a2"};
  for (std::size_t i = 3; tokens.size() < core; ++i) {
    tokens.push_back(indexed(i));
    tokens.push_back("a");
  }
  if (n % 2 == 1) tokens.push_back("a");
  return from_tokens(tokens);
}

Sequence gen_competitive_adversary(const OnlineStep& target, std::size_t n) {
  const auto root = exact_sqrt(n);
  require(n >= 4 && root.has_value(),
          "adversary family needs a perfect square n >= 4, got " + std::to_string(n));
  // Probe phase: the target is deterministic, so its buffer after two
  // distinct arrivals is known in advance.
  const Item first{0};
  const Item second{1};
  OnlineState state;
  state = target(state, first);
  state = target(state, second);
  Item repeated;
  if (state.buffered == second) {
    repeated = first;
  } else if (state.buffered == first) {
    repeated = second;
  } else {
    throw InvalidInput("target algorithm holds neither of the two items it has seen");
  }
  // Commit phase.
  const std::size_t distinct = n - *root;
  std::vector<std::string> tokens;
  tokens.reserve(n);
  for (std::size_t i = 1; i <= distinct; ++i) tokens.push_back(indexed(i));
  tokens.insert(tokens.end(), *root, indexed(repeated.id + 1));
  return from_tokens(tokens);
}

Sequence gen_competitive_adversary(AlgorithmId target, std::size_t n) {
  return gen_competitive_adversary(stepper(target), n);
}

Sequence generate(FamilyId family, std::size_t n, std::optional<AlgorithmId> target) {
  switch (family) {
    case FamilyId::E: return gen_E(n);
    case FamilyId::W: return gen_W(n);
    case FamilyId::W_prime: return gen_W_prime(n);
    case FamilyId::half_half: return gen_half_half(n);
    case FamilyId::eager_killer: return gen_eager_killer(n);
    case FamilyId::competitive_adversary:
      if (!target) throw InvalidInput("adversary family needs a target algorithm");
      return gen_competitive_adversary(*target, n);
  }
  throw InvalidInput("unknown family");
}

}  // namespace fitems
