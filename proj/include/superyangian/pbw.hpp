#pragma once

#include <cstddef>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "superyangian/context.hpp"
#include "superyangian/element.hpp"
#include "superyangian/faults.hpp"

namespace sy {

enum class Strategy { leftmost, rightmost };

/// Unstraightened linear combination of words.
using RawTerms = std::vector<std::pair<Word, Coeff>>;

/// A PBW-presented superalgebra: generators in a fixed total order plus a rule
/// for the supercommutator of two letters. Normal forms are ordered words; for
/// odd p an odd letter never repeats, for p = 2 odd squares are kept as basis words.
///
/// Not thread-safe: each instance owns a memo table. Use one engine per thread.
class PbwAlgebra {
 public:
  explicit PbwAlgebra(AlgebraContext ctx);
  virtual ~PbwAlgebra() = default;
  PbwAlgebra(const PbwAlgebra&) = delete;
  PbwAlgebra& operator=(const PbwAlgebra&) = delete;

  const AlgebraContext& context() const { return ctx_; }
  const PrimeField& field() const { return ctx_.field(); }
  std::uint64_t tag() const { return ctx_.tag(); }

  unsigned letter_parity(Gen g) const { return ctx_.parity(gen_i(g)) ^ ctx_.parity(gen_j(g)); }
  unsigned word_parity(const Word& w) const;
  /// Parity of a homogeneous element; throws std::domain_error on mixed parity.
  unsigned parity(const Element& e) const;
  bool is_homogeneous(const Element& e) const;

  Element zero() const;
  Element scalar(std::int64_t c) const;

  /// Normal form of the product of the letters of w.
  Element straighten(const Word& w);
  Element mul(const Element& a, const Element& b);
  /// ab - (-1)^{|a||b|} ba, distributed over homogeneous parts.
  Element supercommutator(const Element& a, const Element& b);

  /// Independent worklist straightener used as an oracle. Throws std::logic_error if
  /// a rewrite fails to decrease the termination measure or the step budget runs out.
  Element straighten_reference(const Word& w, Strategy s, std::size_t* steps = nullptr);

  /// Unstraightened [x, y] for letters x, y.
  virtual RawTerms raw_bracket(Gen x, Gen y) const = 0;

  std::size_t memo_size() const { return memo_.size(); }

 protected:
  void check_tag(const Element& e) const;

 private:
  const Element& mul_word_gen(const Word& a, Gen g);
  void mul_word_word(const Word& a, const Word& w, Coeff c, Element& out);
  bool needs_rewrite(Gen x, Gen y) const;

  AlgebraContext ctx_;
  Coeff inv2_ = 0;
  bool swap_fault_ = false;
  std::unordered_map<Word, Element> memo_;
};

/// Y_{M|N}(sigma) in the RTT presentation.
class Yangian : public PbwAlgebra {
 public:
  explicit Yangian(AlgebraContext ctx) : PbwAlgebra(std::move(ctx)) {}

  /// t_{i,j}^{(r)}; r = 0 gives the scalar delta_{ij}.
  Element generator(int i, int j, int r) const;
  /// Right-hand side of the RTT relation for [t_ij^(r), t_kl^(s)], straightened.
  Element rtt_bracket(int i, int j, int r, int k, int l, int s);

  RawTerms raw_bracket(Gen x, Gen y) const override;
};

/// U(gl_{M|N}[x]). The basis symbol e_{i,j} x^m is stored as the letter with level m+1,
/// so the PBW order and loop degree agree with the Yangian side.
class CurrentAlgebra : public PbwAlgebra {
 public:
  explicit CurrentAlgebra(AlgebraContext ctx) : PbwAlgebra(std::move(ctx)) {}

  Element basis(int i, int j, int m) const;
  RawTerms raw_bracket(Gen x, Gen y) const override;
};

/// Element of Y (x) Y: key is left + u'\0' + right (letter 0 never occurs in words).
struct TensorElement {
  std::unordered_map<Word, Coeff> terms;
  bool is_zero() const { return terms.empty(); }
  bool operator==(const TensorElement& o) const { return terms == o.terms; }
};

TensorElement tensor_mul(Yangian& Y, const TensorElement& a, const TensorElement& b);
TensorElement delta(Yangian& Y, const Element& e);
std::string to_text(const TensorElement& t);

/// Image in U(gl_{M|N}[x]) of the degree-d part of e under the loop-filtration map.
Element gr_leading_symbol(Yangian& Y, CurrentAlgebra& U, const Element& e, int d);
/// Evaluation homomorphism into U(gl_{M|N}) (degree-0 letters of U).
Element ev(Yangian& Y, CurrentAlgebra& U, const Element& e);

}  // namespace sy
