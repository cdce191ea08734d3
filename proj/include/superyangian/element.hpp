#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "superyangian/field.hpp"

namespace sy {

/// A generator letter packed as (r << 8) | (i-1) << 4 | (j-1). Numeric order is the
/// lexicographic order on (r, i, j), which is the fixed PBW order.
using Gen = std::uint16_t;
using Word = std::u16string;

inline Gen make_gen(int i, int j, int r) {
  if (i < 1 || i > 16 || j < 1 || j > 16) throw ConfigError("generator index outside 1..16");
  if (r < 1 || r > 255) throw ConfigError("generator level " + std::to_string(r) + " outside 1..255");
  return static_cast<Gen>((r << 8) | ((i - 1) << 4) | (j - 1));
}
inline int gen_i(Gen g) { return ((g >> 4) & 0xF) + 1; }
inline int gen_j(Gen g) { return (g & 0xF) + 1; }
inline int gen_r(Gen g) { return g >> 8; }

/// Sum of (r_k - 1) over the letters.
int loop_degree(const Word& w);

/// Finite GF(p)-linear combination of normal words; zero coefficients are never stored.
/// `tag` identifies the owning algebra (0 = not yet bound, compatible with everything).
struct Element {
  std::unordered_map<Word, Coeff> terms;
  std::uint64_t tag = 0;

  bool is_zero() const { return terms.empty(); }
  std::size_t size() const { return terms.size(); }
  Coeff coeff(const Word& w) const {
    auto it = terms.find(w);
    return it == terms.end() ? 0 : it->second;
  }
  /// Coefficient of the empty word.
  Coeff scalar_part() const { return coeff(Word{}); }
  bool operator==(const Element& o) const { return terms == o.terms; }
};

Element scalar_element(const PrimeField& F, std::int64_t c);
Element word_element(const Word& w, Coeff c = 1);

/// acc += c * x
void add_scaled(const PrimeField& F, Element& acc, const Element& x, Coeff c);
void add_term(const PrimeField& F, Element& acc, const Word& w, Coeff c);
Element add(const PrimeField& F, const Element& a, const Element& b);
Element sub(const PrimeField& F, const Element& a, const Element& b);
Element scale(const PrimeField& F, const Element& a, Coeff c);
Element negate(const PrimeField& F, const Element& a);

/// Max loop degree over words; 0 for the zero element.
int loop_degree(const Element& e);

/// Words in canonical (descending) order.
std::vector<Word> sorted_words(const Element& e);

/// Canonical text. `letter` names each factor, e.g. "t" gives `2*t(1,2,1)*t(2,1,1)`.
/// The level printed is r for "t" style and r-1 for "e" style (current algebra).
std::string to_text(const Element& e, const char* letter = "t");
std::string word_text(const Word& w, const char* letter = "t");

}  // namespace sy
