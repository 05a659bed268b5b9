#include "superformat/rootspace.hpp"

#include <stdexcept>

namespace superformat {

std::string WeightSymbol::to_string() const {
  return (kind == Kind::eps ? "eps" : "delta") + std::to_string(index);
}

std::string SimpleRoot::to_string() const { return positive.to_string() + "-" + negative.to_string(); }

std::vector<WeightSymbol> weight_symbols(const Format& fmt) {
  std::vector<WeightSymbol> out;
  int eps = 0;
  int delta = 0;
  for (int i = 1; i <= fmt.size(); ++i) {
    if (fmt.parity(i) == 0) {
      out.push_back({WeightSymbol::Kind::eps, ++eps});
    } else {
      out.push_back({WeightSymbol::Kind::delta, ++delta});
    }
  }
  return out;
}

std::vector<SimpleRoot> simple_root_system(const Format& fmt) {
  if (fmt.size() < 2) throw std::invalid_argument("a simple root system needs at least two labels");
  const auto w = weight_symbols(fmt);
  std::vector<SimpleRoot> roots;
  for (int i = 1; i < fmt.size(); ++i) {
    roots.push_back({w[i - 1], w[i], fmt.entry_degree(i, i + 1)});
  }
  return roots;
}

Rational evaluate_root(const SimpleRoot& root, const Format& fmt, std::span<const Rational> diagonal) {
  if (static_cast<int>(diagonal.size()) != fmt.size()) throw std::invalid_argument("diagonal length differs from format");
  const auto w = weight_symbols(fmt);
  const auto value = [&](const WeightSymbol& s) -> const Rational& {
    for (std::size_t k = 0; k < w.size(); ++k) {
      if (w[k] == s) return diagonal[k];
    }
    throw std::invalid_argument("weight symbol " + s.to_string() + " does not occur in the format");
  };
  return value(root.positive) - value(root.negative);
}

int sign_changes(const Format& fmt) {
  int changes = 0;
  for (int i = 1; i < fmt.size(); ++i) changes += fmt.sign(i) != fmt.sign(i + 1) ? 1 : 0;
  return changes;
}

int odd_simple_root_count(const Format& fmt) {
  const int by_signs = sign_changes(fmt);
  if (fmt.size() < 2) return by_signs;
  int by_roots = 0;
  for (const auto& r : simple_root_system(fmt)) by_roots += r.parity;
  if (by_roots != by_signs) throw std::logic_error("odd root count disagrees with the sign-change count");
  return by_roots;
}

bool admits_fermionic_srs(const Format& fmt) { return sign_changes(fmt) == fmt.size() - 1; }

}  // namespace superformat
