// SPDX-License-Identifier: Apache-2.0
#include "mysticum/perm6.hpp"

#include <algorithm>
#include <deque>
#include <optional>
#include <stdexcept>

namespace mysticum {

template <Alphabet A>
Perm<A>::Perm() : images_{0, 1, 2, 3, 4, 5} {}

template <Alphabet A>
Perm<A>::Perm(const std::array<Symbol, 6>& images) : images_(images) {
  std::array<bool, 6> seen{};
  for (Symbol s : images_) {
    if (s > 5 || seen[s]) {
      throw std::invalid_argument("not a permutation of six symbols");
    }
    seen[s] = true;
  }
}

template <Alphabet A>
Perm<A> Perm<A>::transposition(int i, int j) {
  Perm p;
  std::swap(p.images_[i], p.images_[j]);
  return p;
}

template <Alphabet A>
int Perm<A>::symbol_of(char c) {
  const int s = A == Alphabet::kLetters ? c - 'a' : c - '0';
  if (s < 0 || s > 5) {
    throw std::invalid_argument(std::string("bad symbol '") + c + "'");
  }
  return s;
}

template <Alphabet A>
Perm<A> Perm<A>::parse(std::string_view text) {
  Perm result;
  std::array<bool, 6> used{};
  std::vector<int> cycle;
  const auto flush = [&] {
    for (std::size_t k = 0; k < cycle.size(); ++k) {
      result.images_[cycle[k]] =
          static_cast<Symbol>(cycle[(k + 1) % cycle.size()]);
    }
    cycle.clear();
  };
  for (char c : text) {
    if (c == '.' || c == '(' || c == ')' || c == ' ') {
      flush();
      continue;
    }
    const int s = symbol_of(c);
    if (used[s]) {
      throw std::invalid_argument("symbol repeated in '" + std::string(text) +
                                  "'");
    }
    used[s] = true;
    cycle.push_back(s);
  }
  flush();
  return result;
}

template <Alphabet A>
int Perm<A>::rank() const {
  // Lehmer code.
  int rank = 0;
  for (int i = 0; i < 6; ++i) {
    int smaller = 0;
    for (int j = i + 1; j < 6; ++j) smaller += images_[j] < images_[i];
    rank = rank * (6 - i) + smaller;
  }
  return rank;
}

template <Alphabet A>
Perm<A> Perm<A>::unrank(int rank) {
  if (rank < 0 || rank >= kOrder) throw std::out_of_range("rank");
  std::array<int, 6> digits{};
  for (int i = 5; i >= 0; --i) {
    digits[i] = rank % (6 - i);
    rank /= 6 - i;
  }
  std::vector<Symbol> pool{0, 1, 2, 3, 4, 5};
  std::array<Symbol, 6> images{};
  for (int i = 0; i < 6; ++i) {
    images[i] = pool[digits[i]];
    pool.erase(pool.begin() + digits[i]);
  }
  return Perm(images);
}

template <Alphabet A>
Perm<A> Perm<A>::operator*(const Perm& q) const {
  Perm r;
  for (int x = 0; x < 6; ++x) r.images_[x] = images_[q.images_[x]];
  return r;
}

template <Alphabet A>
Perm<A> Perm<A>::inverse() const {
  Perm r;
  for (int x = 0; x < 6; ++x) r.images_[images_[x]] = static_cast<Symbol>(x);
  return r;
}

template <Alphabet A>
std::vector<std::vector<Symbol>> Perm<A>::cycles() const {
  std::vector<std::vector<Symbol>> out;
  std::array<bool, 6> seen{};
  for (int start = 0; start < 6; ++start) {
    if (seen[start]) continue;
    std::vector<Symbol> cycle;
    for (int x = start; !seen[x]; x = images_[x]) {
      seen[x] = true;
      cycle.push_back(static_cast<Symbol>(x));
    }
    out.push_back(std::move(cycle));
  }
  return out;
}

template <Alphabet A>
std::vector<int> Perm<A>::cycle_type() const {
  std::vector<int> type;
  for (const auto& c : cycles()) type.push_back(static_cast<int>(c.size()));
  std::sort(type.rbegin(), type.rend());
  return type;
}

template <Alphabet A>
std::string Perm<A>::str() const {
  std::string s;
  for (const auto& c : cycles()) {
    if (c.size() == 1) continue;
    if (!s.empty()) s += '.';
    for (Symbol x : c) s += symbol_char(x);
  }
  return s.empty() ? "e" : s;
}

template class Perm<Alphabet::kLetters>;
template class Perm<Alphabet::kNumbers>;

namespace {

// Row letter, column letter, image of the transposition.
constexpr std::string_view kZetaTable[6][6] = {
    {"", "21.53.04", "24.51.03", "20.54.13", "25.01.34", "23.50.14"},
    {"", "", "23.54.01", "25.03.14", "24.50.13", "20.51.34"},
    {"", "", "", "21.50.34", "20.53.14", "25.04.13"},
    {"", "", "", "", "23.51.04", "24.53.01"},
    {"", "", "", "", "", "21.54.03"},
    {"", "", "", "", "", ""},
};

struct ZetaMaps {
  std::array<NumberPerm, 720> forward;
  std::array<LetterPerm, 720> backward;
};

// Extends the table multiplicatively by a breadth-first walk over S6,
// checking that every element receives a single consistent image.
ZetaMaps build_zeta() {
  std::vector<std::pair<LetterPerm, NumberPerm>> generators;
  for (int i = 0; i < 6; ++i) {
    for (int j = i + 1; j < 6; ++j) {
      generators.emplace_back(LetterPerm::transposition(i, j),
                              NumberPerm::parse(kZetaTable[i][j]));
    }
  }
  std::array<std::optional<NumberPerm>, 720> image;
  image[LetterPerm().rank()] = NumberPerm();
  std::deque<LetterPerm> queue{LetterPerm()};
  while (!queue.empty()) {
    const LetterPerm p = queue.front();
    queue.pop_front();
    const NumberPerm zp = *image[p.rank()];
    for (const auto& [t, zt] : generators) {
      const LetterPerm q = t * p;
      const NumberPerm zq = zt * zp;
      auto& slot = image[q.rank()];
      if (!slot) {
        slot = zq;
        queue.push_back(q);
      } else if (!(*slot == zq)) {
        throw std::logic_error("zeta generator table is not a homomorphism");
      }
    }
  }
  ZetaMaps maps;
  std::array<bool, 720> hit{};
  for (int r = 0; r < 720; ++r) {
    maps.forward[r] = *image[r];
    const int target = image[r]->rank();
    if (hit[target]) throw std::logic_error("zeta is not injective");
    hit[target] = true;
    maps.backward[target] = LetterPerm::unrank(r);
  }
  return maps;
}

const ZetaMaps& zeta_maps() {
  static const ZetaMaps maps = build_zeta();
  return maps;
}

}  // namespace

std::string_view zeta_table_entry(int i, int j) {
  if (i > j) std::swap(i, j);
  if (i < 0 || j > 5 || i == j) throw std::out_of_range("zeta table index");
  return kZetaTable[i][j];
}

NumberPerm zeta(const LetterPerm& p) { return zeta_maps().forward[p.rank()]; }

LetterPerm zeta_inv(const NumberPerm& q) {
  return zeta_maps().backward[q.rank()];
}

}  // namespace mysticum
