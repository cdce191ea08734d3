#include "superyangian/pbw.hpp"

#include <map>
#include <stdexcept>
#include <tuple>

namespace sy {

namespace {

struct Measure {
  int degree;
  std::size_t length;
  std::size_t inversions;
  auto tie() const { return std::tie(degree, length, inversions); }
};

Measure measure_of(const Word& w) {
  std::size_t inv = 0;
  for (std::size_t a = 0; a < w.size(); ++a)
    for (std::size_t b = a + 1; b < w.size(); ++b)
      if (w[a] > w[b]) ++inv;
  return {loop_degree(w), w.size(), inv};
}

}  // namespace

PbwAlgebra::PbwAlgebra(AlgebraContext ctx) : ctx_(std::move(ctx)) {
  if (ctx_.p() != 2) inv2_ = field().inv(2);
  swap_fault_ = current_faults().straighten_sign;
}

unsigned PbwAlgebra::word_parity(const Word& w) const {
  unsigned p = 0;
  for (Gen g : w) p ^= letter_parity(g);
  return p;
}

bool PbwAlgebra::is_homogeneous(const Element& e) const {
  int seen = -1;
  for (const auto& kv : e.terms) {
    int p = static_cast<int>(word_parity(kv.first));
    if (seen >= 0 && seen != p) return false;
    seen = p;
  }
  return true;
}

unsigned PbwAlgebra::parity(const Element& e) const {
  if (!is_homogeneous(e)) throw std::domain_error("element is not parity-homogeneous");
  return e.is_zero() ? 0 : word_parity(e.terms.begin()->first);
}

Element PbwAlgebra::zero() const {
  Element e;
  e.tag = tag();
  return e;
}

Element PbwAlgebra::scalar(std::int64_t c) const {
  Element e = scalar_element(field(), c);
  e.tag = tag();
  return e;
}

void PbwAlgebra::check_tag(const Element& e) const {
  if (e.tag != 0 && e.tag != tag()) throw ConfigError("element belongs to a different algebra context");
}

bool PbwAlgebra::needs_rewrite(Gen x, Gen y) const {
  if (x > y) return true;
  return x == y && letter_parity(x) && ctx_.p() != 2;
}

const Element& PbwAlgebra::mul_word_gen(const Word& a, Gen g) {
  Word key = a;
  key.push_back(g);
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;

  const PrimeField& F = field();
  Element res;
  res.tag = tag();
  if (a.empty() || !needs_rewrite(a.back(), g)) {
    res.terms.emplace(key, 1);
  } else {
    const Gen x = a.back();
    const Word rest = a.substr(0, a.size() - 1);
    if (x == g) {
      // odd square, p odd: x^2 = [x,x]/2
      for (const auto& [w, c] : raw_bracket(x, x)) mul_word_word(rest, w, F.mul(c, inv2_), res);
    } else {
      // rest*x*g = sign * (rest*g)*x + rest*[x,g]
      unsigned sbit = letter_parity(x) & letter_parity(g);
      if (swap_fault_) sbit ^= 1U;
      const Coeff sgn = F.sign(sbit);
      const Element& left = mul_word_gen(rest, g);
      for (const auto& [w, c] : left.terms) {
        if (w.empty() || !needs_rewrite(w.back(), x)) {
          Word wx = w;
          wx.push_back(x);
          add_term(F, res, wx, F.mul(c, sgn));
        } else {
          add_scaled(F, res, mul_word_gen(w, x), F.mul(c, sgn));
        }
      }
      for (const auto& [w, c] : raw_bracket(x, g)) mul_word_word(rest, w, c, res);
    }
  }
  return memo_.emplace(std::move(key), std::move(res)).first->second;
}

void PbwAlgebra::mul_word_word(const Word& a, const Word& w, Coeff c, Element& out) {
  const PrimeField& F = field();
  if (c == 0) return;
  Element cur;
  cur.terms.emplace(a, c);
  for (Gen g : w) {
    Element next;
    for (const auto& [b, cb] : cur.terms) {
      if (b.empty() || !needs_rewrite(b.back(), g)) {
        Word bg = b;
        bg.push_back(g);
        add_term(F, next, bg, cb);
      } else {
        add_scaled(F, next, mul_word_gen(b, g), cb);
      }
    }
    cur = std::move(next);
    if (cur.is_zero()) return;
  }
  for (const auto& [b, cb] : cur.terms) add_term(F, out, b, cb);
}

Element PbwAlgebra::straighten(const Word& w) {
  Element out = zero();
  mul_word_word(Word{}, w, 1, out);
  return out;
}

Element PbwAlgebra::mul(const Element& a, const Element& b) {
  check_tag(a);
  check_tag(b);
  const PrimeField& F = field();
  Element out = zero();
  for (const auto& [wa, ca] : a.terms)
    for (const auto& [wb, cb] : b.terms) mul_word_word(wa, wb, F.mul(ca, cb), out);
  return out;
}

Element PbwAlgebra::supercommutator(const Element& a, const Element& b) {
  check_tag(a);
  check_tag(b);
  const PrimeField& F = field();
  Element out = zero();
  for (const auto& [wa, ca] : a.terms) {
    const unsigned pa = word_parity(wa);
    for (const auto& [wb, cb] : b.terms) {
      const Coeff c = F.mul(ca, cb);
      mul_word_word(wa, wb, c, out);
      const Coeff s = F.sign(pa & word_parity(wb));
      mul_word_word(wb, wa, F.neg(F.mul(c, s)), out);
    }
  }
  return out;
}

Element PbwAlgebra::straighten_reference(const Word& w, Strategy s, std::size_t* steps) {
  const PrimeField& F = field();
  constexpr std::size_t kBudget = 20'000'000;
  std::map<Word, Coeff> pending;
  pending[w] = 1;
  Element out = zero();
  std::size_t count = 0;

  auto push = [&](const Word& from, Word to, Coeff c) {
    if (!(measure_of(to).tie() < measure_of(from).tie()))
      throw std::logic_error("rewrite did not decrease the termination measure");
    Coeff& slot = pending[to];
    slot = F.add(slot, c);
    if (slot == 0) pending.erase(to);
  };

  while (!pending.empty()) {
    auto node = pending.extract(pending.begin());
    const Word cur = node.key();
    const Coeff c = node.mapped();
    if (++count > kBudget) throw std::logic_error("straightening exceeded its step budget");

    std::ptrdiff_t pos = -1;
    if (s == Strategy::leftmost) {
      for (std::size_t k = 0; k + 1 < cur.size(); ++k)
        if (needs_rewrite(cur[k], cur[k + 1])) { pos = static_cast<std::ptrdiff_t>(k); break; }
    } else {
      for (std::size_t k = cur.size(); k-- > 1;)
        if (needs_rewrite(cur[k - 1], cur[k])) { pos = static_cast<std::ptrdiff_t>(k - 1); break; }
    }
    if (pos < 0) {
      add_term(F, out, cur, c);
      continue;
    }
    const auto k = static_cast<std::size_t>(pos);
    const Gen x = cur[k], y = cur[k + 1];
    const Word pre = cur.substr(0, k), post = cur.substr(k + 2);
    if (x == y) {
      for (const auto& [bw, bc] : raw_bracket(x, x)) push(cur, pre + bw + post, F.mul(c, F.mul(bc, inv2_)));
    } else {
      unsigned sbit = letter_parity(x) & letter_parity(y);
      if (swap_fault_) sbit ^= 1U;
      Word swapped = cur;
      std::swap(swapped[k], swapped[k + 1]);
      push(cur, swapped, F.mul(c, F.sign(sbit)));
      for (const auto& [bw, bc] : raw_bracket(x, y)) push(cur, pre + bw + post, F.mul(c, bc));
    }
  }
  if (steps) *steps = count;
  return out;
}

Element Yangian::generator(int i, int j, int r) const {
  context().check_index(i);
  context().check_index(j);
  if (r < 0) throw ConfigError("negative level");
  if (r == 0) return scalar(i == j ? 1 : 0);
  Element e = word_element(Word(1, make_gen(i, j, r)));
  e.tag = tag();
  return e;
}

RawTerms Yangian::raw_bracket(Gen x, Gen y) const {
  const AlgebraContext& C = context();
  const PrimeField& F = field();
  const int i = gen_i(x), j = gen_j(x), r = gen_r(x);
  const int k = gen_i(y), l = gen_j(y), s = gen_r(y);
  const unsigned pi = C.parity(i), pj = C.parity(j), pk = C.parity(k);
  const Coeff sg = F.sign((pi & pj) ^ (pi & pk) ^ (pj & pk));
  const Coeff msg = F.neg(sg);
  RawTerms out;
  for (int t = 0; t < std::min(r, s); ++t) {
    const int hi = r + s - 1 - t;
    // t_kj^(t) t_il^(hi)
    if (t == 0) {
      if (k == j) out.emplace_back(Word(1, make_gen(i, l, hi)), sg);
    } else {
      out.emplace_back(Word{make_gen(k, j, t), make_gen(i, l, hi)}, sg);
    }
    // - t_kj^(hi) t_il^(t)
    if (t == 0) {
      if (i == l) out.emplace_back(Word(1, make_gen(k, j, hi)), msg);
    } else {
      out.emplace_back(Word{make_gen(k, j, hi), make_gen(i, l, t)}, msg);
    }
  }
  return out;
}

Element Yangian::rtt_bracket(int i, int j, int r, int k, int l, int s) {
  for (int x : {i, j, k, l}) context().check_index(x);
  if (r < 1 || s < 1) throw ConfigError("rtt_bracket needs levels r, s >= 1");
  const PrimeField& F = field();
  Element out = zero();
  for (const auto& [w, c] : raw_bracket(make_gen(i, j, r), make_gen(k, l, s))) add_scaled(F, out, straighten(w), c);
  return out;
}

Element CurrentAlgebra::basis(int i, int j, int m) const {
  context().check_index(i);
  context().check_index(j);
  if (m < 0) throw ConfigError("negative degree");
  Element e = word_element(Word(1, make_gen(i, j, m + 1)));
  e.tag = tag();
  return e;
}

RawTerms CurrentAlgebra::raw_bracket(Gen x, Gen y) const {
  const AlgebraContext& C = context();
  const PrimeField& F = field();
  const int i = gen_i(x), j = gen_j(x), k = gen_i(y), l = gen_j(y);
  const int level = gen_r(x) + gen_r(y) - 1;
  RawTerms out;
  if (k == j) out.emplace_back(Word(1, make_gen(i, l, level)), 1);
  if (l == i) {
    const unsigned s = (C.parity(i) ^ C.parity(j)) & (C.parity(k) ^ C.parity(l));
    out.emplace_back(Word(1, make_gen(k, j, level)), F.neg(F.sign(s)));
  }
  return out;
}

namespace {

Word tensor_key(const Word& a, const Word& b) {
  Word k = a;
  k.push_back(u'\0');
  k += b;
  return k;
}

std::pair<Word, Word> split_key(const Word& k) {
  auto pos = k.find(u'\0');
  return {k.substr(0, pos), k.substr(pos + 1)};
}

void add_tensor(const PrimeField& F, TensorElement& t, const Word& k, Coeff c) {
  if (c == 0) return;
  auto [it, ins] = t.terms.try_emplace(k, c);
  if (!ins) {
    it->second = F.add(it->second, c);
    if (it->second == 0) t.terms.erase(it);
  }
}

}  // namespace

TensorElement tensor_mul(Yangian& Y, const TensorElement& a, const TensorElement& b) {
  const PrimeField& F = Y.field();
  TensorElement out;
  for (const auto& [ka, ca] : a.terms) {
    auto [a1, a2] = split_key(ka);
    for (const auto& [kb, cb] : b.terms) {
      auto [b1, b2] = split_key(kb);
      const Coeff c = F.mul(F.mul(ca, cb), F.sign(Y.word_parity(a2) & Y.word_parity(b1)));
      Element left = Y.straighten(a1 + b1);
      Element right = Y.straighten(a2 + b2);
      for (const auto& [wl, cl] : left.terms)
        for (const auto& [wr, cr] : right.terms) add_tensor(F, out, tensor_key(wl, wr), F.mul(c, F.mul(cl, cr)));
    }
  }
  return out;
}

TensorElement delta(Yangian& Y, const Element& e) {
  const PrimeField& F = Y.field();
  const int n = Y.context().dim();
  TensorElement out;
  for (const auto& [w, c] : e.terms) {
    TensorElement acc;
    acc.terms.emplace(tensor_key(Word{}, Word{}), 1);
    for (Gen g : w) {
      const int i = gen_i(g), j = gen_j(g), r = gen_r(g);
      TensorElement dg;
      add_tensor(F, dg, tensor_key(Word(1, g), Word{}), 1);
      add_tensor(F, dg, tensor_key(Word{}, Word(1, g)), 1);
      for (int s = 1; s < r; ++s)
        for (int k = 1; k <= n; ++k)
          add_tensor(F, dg, tensor_key(Word(1, make_gen(i, k, r - s)), Word(1, make_gen(k, j, s))), 1);
      acc = tensor_mul(Y, acc, dg);
    }
    for (const auto& [k, v] : acc.terms) add_tensor(F, out, k, F.mul(v, c));
  }
  return out;
}

std::string to_text(const TensorElement& t) {
  if (t.is_zero()) return "0";
  std::map<Word, Coeff, std::greater<>> sorted(t.terms.begin(), t.terms.end());
  std::string out;
  for (const auto& [k, c] : sorted) {
    auto [l, r] = split_key(k);
    if (!out.empty()) out += " + ";
    out += std::to_string(c) + "*(" + (l.empty() ? "1" : word_text(l)) + ")@(" + (r.empty() ? "1" : word_text(r)) + ")";
  }
  return out;
}

Element gr_leading_symbol(Yangian& Y, CurrentAlgebra& U, const Element& e, int d) {
  const PrimeField& F = Y.field();
  const AlgebraContext& C = Y.context();
  Element out = U.zero();
  for (const auto& [w, c] : e.terms) {
    const int deg = loop_degree(w);
    if (deg > d) throw std::domain_error("element has a word above the requested filtration degree");
    if (deg < d) continue;
    unsigned s = 0;
    for (Gen g : w) s ^= C.parity(gen_i(g));
    add_scaled(F, out, U.straighten(w), F.mul(c, F.sign(s)));
  }
  return out;
}

Element ev(Yangian& Y, CurrentAlgebra& U, const Element& e) {
  const PrimeField& F = Y.field();
  const AlgebraContext& C = Y.context();
  Element out = U.zero();
  for (const auto& [w, c] : e.terms) {
    unsigned s = 0;
    bool killed = false;
    for (Gen g : w) {
      if (gen_r(g) >= 2) { killed = true; break; }
      s ^= C.parity(gen_i(g));
    }
    if (!killed) add_scaled(F, out, U.straighten(w), F.mul(c, F.sign(s)));
  }
  return out;
}

}  // namespace sy
