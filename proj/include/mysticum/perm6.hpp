// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace mysticum {

/// The two six-element sets the outer automorphism relates. Permutations of
/// letters and of numbers are different types.
enum class Alphabet { kLetters, kNumbers };

using Symbol = std::uint8_t;

template <Alphabet A>
class Perm {
 public:
  static constexpr int kOrder = 720;

  Perm();  // identity

  /// Throws std::invalid_argument unless `images` is a bijection of 0..5.
  explicit Perm(const std::array<Symbol, 6>& images);

  static Perm transposition(int i, int j);

  /// Cycle notation in the compact style "21.53.04" (groups separated by
  /// '.', single symbols are fixed points) or "(ace)(bd)"; each group is one
  /// cycle. Letters a-f or digits 0-5 depending on the alphabet.
  static Perm parse(std::string_view text);

  static Perm unrank(int rank);
  int rank() const;

  int operator()(int x) const { return images_[x]; }
  const std::array<Symbol, 6>& images() const { return images_; }

  /// Composition: (p * q)(x) = p(q(x)), i.e. q acts first.
  Perm operator*(const Perm& q) const;
  Perm inverse() const;

  /// All cycles including fixed points, each starting at its least symbol,
  /// ordered by that symbol.
  std::vector<std::vector<Symbol>> cycles() const;

  /// Cycle lengths in descending order, fixed points included.
  std::vector<int> cycle_type() const;

  /// Compact cycle notation with fixed points omitted, e.g. "04.153";
  /// the identity prints as "e".
  std::string str() const;

  static char symbol_char(int s) {
    return A == Alphabet::kLetters ? static_cast<char>('a' + s)
                                   : static_cast<char>('0' + s);
  }
  static int symbol_of(char c);

  friend bool operator==(const Perm&, const Perm&) = default;

 private:
  std::array<Symbol, 6> images_;
};

using LetterPerm = Perm<Alphabet::kLetters>;
using NumberPerm = Perm<Alphabet::kNumbers>;

/// Sylvester's outer automorphism S6(letters) -> S6(numbers), fixed by its
/// values on the fifteen transpositions.
NumberPerm zeta(const LetterPerm& p);
LetterPerm zeta_inv(const NumberPerm& q);

/// The generator table: image of the transposition (i j), i < j, as printed
/// in compact cycle notation.
std::string_view zeta_table_entry(int i, int j);

extern template class Perm<Alphabet::kLetters>;
extern template class Perm<Alphabet::kNumbers>;

}  // namespace mysticum
