#include "superyangian/element.hpp"

#include <algorithm>
#include <cstring>

namespace sy {

int loop_degree(const Word& w) {
  int d = 0;
  for (Gen g : w) d += gen_r(g) - 1;
  return d;
}

Element scalar_element(const PrimeField& F, std::int64_t c) {
  Element e;
  Coeff v = F.reduce(c);
  if (v) e.terms.emplace(Word{}, v);
  return e;
}

Element word_element(const Word& w, Coeff c) {
  Element e;
  if (c) e.terms.emplace(w, c);
  return e;
}

void add_term(const PrimeField& F, Element& acc, const Word& w, Coeff c) {
  if (c == 0) return;
  auto [it, inserted] = acc.terms.try_emplace(w, c);
  if (!inserted) {
    it->second = F.add(it->second, c);
    if (it->second == 0) acc.terms.erase(it);
  }
}

void add_scaled(const PrimeField& F, Element& acc, const Element& x, Coeff c) {
  if (c == 0) return;
  if (acc.tag == 0) acc.tag = x.tag;
  for (const auto& [w, v] : x.terms) add_term(F, acc, w, F.mul(v, c));
}

Element add(const PrimeField& F, const Element& a, const Element& b) {
  Element r = a;
  add_scaled(F, r, b, 1);
  return r;
}

Element sub(const PrimeField& F, const Element& a, const Element& b) {
  Element r = a;
  add_scaled(F, r, b, F.neg(1));
  return r;
}

Element scale(const PrimeField& F, const Element& a, Coeff c) {
  Element r;
  r.tag = a.tag;
  add_scaled(F, r, a, c);
  return r;
}

Element negate(const PrimeField& F, const Element& a) { return scale(F, a, F.neg(1)); }

int loop_degree(const Element& e) {
  int d = 0;
  for (const auto& kv : e.terms) d = std::max(d, loop_degree(kv.first));
  return d;
}

std::vector<Word> sorted_words(const Element& e) {
  std::vector<Word> ws;
  ws.reserve(e.terms.size());
  for (const auto& kv : e.terms) ws.push_back(kv.first);
  std::sort(ws.begin(), ws.end(), std::greater<>());
  return ws;
}

std::string word_text(const Word& w, const char* letter) {
  const bool current = std::strcmp(letter, "e") == 0;
  std::string out;
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (k) out += '*';
    Gen g = w[k];
    out += letter;
    out += '(' + std::to_string(gen_i(g)) + ',' + std::to_string(gen_j(g)) + ',' +
           std::to_string(gen_r(g) - (current ? 1 : 0)) + ')';
  }
  return out;
}

std::string to_text(const Element& e, const char* letter) {
  if (e.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const Word& w : sorted_words(e)) {
    if (!first) out += " + ";
    first = false;
    out += std::to_string(e.terms.at(w));
    if (!w.empty()) out += '*' + word_text(w, letter);
  }
  return out;
}

}  // namespace sy
