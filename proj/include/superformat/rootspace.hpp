#pragma once

#include "superformat/graded.hpp"

#include <span>
#include <string>
#include <vector>

namespace superformat {

/// Formal weight of one basis label: eps_a numbers the even labels in order,
/// delta_b the odd ones.
struct WeightSymbol {
  enum class Kind { eps, delta };
  Kind kind = Kind::eps;
  int index = 1;

  std::string to_string() const;
  friend bool operator==(const WeightSymbol&, const WeightSymbol&) = default;
};

/// Root w(i) - w(i+1) of the generator E_{i,i+1}.
struct SimpleRoot {
  WeightSymbol positive;
  WeightSymbol negative;
  int parity = 0;

  std::string to_string() const;
  friend bool operator==(const SimpleRoot&, const SimpleRoot&) = default;
};

/// Weight symbol attached to each label of the format.
std::vector<WeightSymbol> weight_symbols(const Format& fmt);

/// The p-1 simple roots of e_i = E_{i,i+1}. Throws std::invalid_argument for p < 2.
std::vector<SimpleRoot> simple_root_system(const Format& fmt);

/// Value of a root on the diagonal Cartan element diag(h_1, ..., h_p), where
/// `diagonal` lists h in label order and `fmt` fixes the symbol of each label.
Rational evaluate_root(const SimpleRoot& root, const Format& fmt, std::span<const Rational> diagonal);

/// Number of adjacent sign changes in the involution.
int sign_changes(const Format& fmt);

/// Number of odd simple roots. Computed both from the root parities and from
/// sign_changes; throws std::logic_error if they disagree.
int odd_simple_root_count(const Format& fmt);

/// True when every simple root is odd, i.e. the signs alternate strictly.
bool admits_fermionic_srs(const Format& fmt);

}  // namespace superformat
