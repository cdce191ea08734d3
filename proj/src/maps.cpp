#include "superyangian/maps.hpp"

#include <algorithm>

#include "superyangian/faults.hpp"

namespace sy {

namespace {

bool needs_tprime(MapKind k) {
  return k == MapKind::antipode || k == MapKind::omega || k == MapKind::zeta || k == MapKind::psi_shift;
}

std::string idx(std::initializer_list<int> xs) {
  std::string out;
  for (int x : xs) {
    if (!out.empty()) out += ',';
    out += std::to_string(x);
  }
  return out;
}

void compare(CheckOutcome& out, const PrimeField& F, const Element& got, const Element& want, const std::string& where) {
  Element d = sub(F, got, want);
  out.record(d.is_zero(), where, d);
}

}  // namespace

const char* map_name(MapKind k) {
  switch (k) {
    case MapKind::rho: return "rho";
    case MapKind::sigma_anti: return "sigma";
    case MapKind::antipode: return "antipode";
    case MapKind::omega: return "omega";
    case MapKind::zeta: return "zeta";
    case MapKind::phi_shift: return "phi";
    case MapKind::psi_shift: return "psi";
  }
  return "?";
}

MapDescriptor make_map(MapKind kind, const AlgebraContext& source, const std::string& prefix) {
  MapDescriptor d{kind, source, source, 0, false};
  switch (kind) {
    case MapKind::rho:
    case MapKind::zeta:
      d.target = AlgebraContext(source.p(), source.N(), source.M(),
                                sequence_transform(source.sigma(), SeqTransform::flip_reverse));
      break;
    case MapKind::sigma_anti:
    case MapKind::antipode:
      d.anti = true;
      break;
    case MapKind::omega:
      break;
    case MapKind::phi_shift:
    case MapKind::psi_shift: {
      if (!prefix.empty()) validate_sequence(prefix);
      const int zeros = static_cast<int>(std::count(prefix.begin(), prefix.end(), '0'));
      const int ones = static_cast<int>(prefix.size()) - zeros;
      d.target = AlgebraContext(source.p(), source.M() + zeros, source.N() + ones, prefix + source.sigma());
      d.shift = static_cast<int>(prefix.size());
      break;
    }
  }
  if (kind != MapKind::phi_shift && kind != MapKind::psi_shift && !prefix.empty())
    throw ConfigError("only shift maps take a sequence prefix");
  return d;
}

MapApplier::MapApplier(MapDescriptor d, Yangian& source, Yangian& target, int R)
    : d_(std::move(d)), src_(source), dst_(target), R_(R) {
  if (!(source.context() == d_.source)) throw ConfigError("map source context mismatch");
  if (!(target.context() == d_.target)) throw ConfigError("map target context mismatch");
  if (R < 1) throw ConfigError("map order must be >= 1");
  if (d_.kind == MapKind::psi_shift) {
    const std::string prefix = d_.target.sigma().substr(0, static_cast<std::size_t>(d_.shift));
    inner_omega_ = std::make_unique<MapApplier>(make_map(MapKind::omega, d_.source), src_, src_, R);
    inner_phi_ = std::make_unique<MapApplier>(make_map(MapKind::phi_shift, d_.source, prefix), src_, dst_, R);
    outer_omega_ = std::make_unique<MapApplier>(make_map(MapKind::omega, d_.target), dst_, dst_, R);
    psi_fault_ = current_faults().psi_sign;
  }
}

MapApplier::~MapApplier() = default;

const Element& MapApplier::tprime(int i, int j, int r) {
  if (!tinv_) tinv_ = std::make_unique<MatrixSeries>(mat_inverse(dst_, t_matrix(dst_, R_)));
  return (*tinv_)(i, j).coeff(r);
}

Element MapApplier::compute_letter(Gen g) {
  const int i = gen_i(g), j = gen_j(g), r = gen_r(g);
  const int n = d_.source.dim();
  if (i > n || j > n) throw ConfigError("generator outside the source context");
  if (needs_tprime(d_.kind) && r > R_)
    throw ConfigError(std::string(map_name(d_.kind)) + " is only defined up to level " + std::to_string(R_));
  const PrimeField& F = dst_.field();
  const Coeff sg = F.sign(static_cast<unsigned>(r));
  switch (d_.kind) {
    case MapKind::rho: return scale(F, dst_.generator(n + 1 - i, n + 1 - j, r), sg);
    case MapKind::sigma_anti: return scale(F, dst_.generator(i, j, r), sg);
    case MapKind::antipode: return tprime(i, j, r);
    case MapKind::omega: return scale(F, tprime(i, j, r), sg);
    case MapKind::zeta: return tprime(n + 1 - i, n + 1 - j, r);
    case MapKind::phi_shift: return dst_.generator(d_.shift + i, d_.shift + j, r);
    case MapKind::psi_shift: {
      Element img = outer_omega_->apply(inner_phi_->apply(inner_omega_->letter_image(g)));
      if (psi_fault_ && (r & 1)) img = negate(F, img);
      return img;
    }
  }
  throw std::logic_error("unknown map kind");
}

const Element& MapApplier::letter_image(Gen g) {
  if (auto it = cache_.find(g); it != cache_.end()) return it->second;
  Element img = compute_letter(g);
  img.tag = dst_.tag();
  return cache_.emplace(g, std::move(img)).first->second;
}

Element MapApplier::apply_word(const Word& w) {
  const PrimeField& F = dst_.field();
  Word order = w;
  unsigned sbit = 0;
  if (d_.anti) {
    std::reverse(order.begin(), order.end());
    for (std::size_t a = 0; a < w.size(); ++a)
      for (std::size_t b = a + 1; b < w.size(); ++b) sbit ^= src_.letter_parity(w[a]) & src_.letter_parity(w[b]);
  }
  Element cur = dst_.scalar(1);
  for (Gen g : order) {
    cur = dst_.mul(cur, letter_image(g));
    if (cur.is_zero()) break;
  }
  return scale(F, cur, F.sign(sbit));
}

Element MapApplier::apply(const Element& e) {
  if (e.tag != 0 && e.tag != src_.tag()) throw ConfigError("element is not in the map's source context");
  const PrimeField& F = dst_.field();
  Element out = dst_.zero();
  for (const auto& [w, c] : e.terms) add_scaled(F, out, apply_word(w), c);
  return out;
}

MatrixSeries psi_quasideterminant(Yangian& big, int L, int R) {
  const int n = big.context().dim();
  if (L < 1 || L >= n) throw ConfigError("shift L must satisfy 1 <= L < M+N");
  MatrixSeries T = t_matrix(big, R);
  return quasideterminant(big, T.block(0, L, 0, L), T.block(0, L, L, n - L), T.block(L, n - L, 0, L),
                          T.block(L, n - L, L, n - L));
}

AlgebraContext suffix_context(const AlgebraContext& big, int L) {
  if (L < 0 || L >= big.dim()) throw ConfigError("suffix needs 0 <= L < M+N");
  const std::string s = big.sigma().substr(static_cast<std::size_t>(L));
  const int zeros = static_cast<int>(std::count(s.begin(), s.end(), '0'));
  return AlgebraContext(big.p(), zeros, static_cast<int>(s.size()) - zeros, s);
}

CheckOutcome psi_dual_path(Yangian& small, Yangian& big, int R) {
  const auto& sc = small.context();
  const auto& bc = big.context();
  const int L = bc.dim() - sc.dim();
  if (L < 0 || sc.p() != bc.p() || bc.sigma().substr(static_cast<std::size_t>(L)) != sc.sigma())
    throw ConfigError("big context sequence must end with the small context sequence");
  MapApplier psi(make_map(MapKind::psi_shift, sc, bc.sigma().substr(0, static_cast<std::size_t>(L))), small, big, R);
  MatrixSeries Q = psi_quasideterminant(big, L, R);
  const PrimeField& F = big.field();
  CheckOutcome out;
  const int n = sc.dim();
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      compare(out, F, Q(i, j).coeff(0), big.scalar(i == j ? 1 : 0), "psi u^0 " + idx({i, j}));
      for (int r = 1; r <= R; ++r)
        compare(out, F, psi.letter_image(make_gen(i, j, r)), Q(i, j).coeff(r), "psi " + idx({L, i, j, r}));
    }
  return out;
}

CheckOutcome psi_on_parabolic(Yangian& Y, const GaussData& g, int a) {
  const int n = g.n();
  if (a < 2 || a > n) throw ConfigError("psi_on_parabolic needs 2 <= a <= n");
  const int L = g.mu.offset(a);
  Yangian small(suffix_context(Y.context(), L));
  std::vector<int> parts(g.mu.parts().begin() + (a - 1), g.mu.parts().end());
  GaussData gs = gauss_decompose(small, Composition(parts), g.R);
  const std::string prefix = Y.context().sigma().substr(0, static_cast<std::size_t>(L));
  MapApplier psi(make_map(MapKind::psi_shift, small.context(), prefix), small, Y, g.R);
  const PrimeField& F = Y.field();
  CheckOutcome out;
  for (int i = 1; i <= g.mu.size(a); ++i)
    for (int j = 1; j <= g.mu.size(a); ++j)
      for (int r = 0; r <= g.R; ++r)
        compare(out, F, psi.apply(gs.d(1, i, j, r)), g.d(a, i, j, r), "D " + idx({a, i, j, r}));
  if (a < n) {
    for (int r = 1; r <= g.R; ++r) {
      for (int i = 1; i <= g.mu.size(a); ++i)
        for (int j = 1; j <= g.mu.size(a + 1); ++j)
          compare(out, F, psi.apply(gs.ea(1, i, j, r)), g.ea(a, i, j, r), "E " + idx({a, i, j, r}));
      for (int i = 1; i <= g.mu.size(a + 1); ++i)
        for (int j = 1; j <= g.mu.size(a); ++j)
          compare(out, F, psi.apply(gs.fa(1, i, j, r)), g.fa(a, i, j, r), "F " + idx({a, i, j, r}));
    }
  }
  return out;
}

CheckOutcome zeta_on_parabolic(Yangian& Y, const GaussData& g) {
  MapDescriptor d = make_map(MapKind::zeta, Y.context());
  Yangian Z(d.target);
  GaussData gt = gauss_decompose(Z, g.mu.reversed(), g.R);
  MapApplier zeta(d, Y, Z, g.R);
  // zeta swaps E and F~ (resp. F and E~); for adjacent blocks F~ = -F
  const PrimeField& F = Z.field();
  const int n = g.n();
  CheckOutcome out;
  for (int a = 1; a <= n; ++a) {
    const int ma = g.mu.size(a);
    for (int i = 1; i <= ma; ++i)
      for (int j = 1; j <= ma; ++j)
        for (int r = 0; r <= g.R; ++r)
          compare(out, F, zeta.apply(g.d(a, i, j, r)), gt.dp(n + 1 - a, ma + 1 - i, ma + 1 - j, r),
                  "zeta D " + idx({a, i, j, r}));
    for (int b = a + 1; b <= n; ++b) {
      const int mb = g.mu.size(b);
      for (int r = 1; r <= g.R; ++r) {
        for (int i = 1; i <= ma; ++i)
          for (int j = 1; j <= mb; ++j)
            compare(out, F, zeta.apply(g.e(a, b, i, j, r)),
                    gt.Ftblock(n + 1 - a, n + 1 - b)(ma + 1 - i, mb + 1 - j).coeff(r),
                    "zeta E " + idx({a, b, i, j, r}));
        for (int i = 1; i <= mb; ++i)
          for (int j = 1; j <= ma; ++j)
            compare(out, F, zeta.apply(g.f(b, a, i, j, r)),
                    gt.Etblock(n + 1 - b, n + 1 - a)(mb + 1 - i, ma + 1 - j).coeff(r),
                    "zeta F " + idx({b, a, i, j, r}));
      }
    }
  }
  return out;
}

CheckOutcome corner_commute_check(Yangian& big, int L, int R) {
  const int n = big.context().dim();
  if (L < 1) throw ConfigError("corner check needs L >= 1");
  CheckOutcome out;
  if (L >= n) return out;  // empty small context: nothing to check
  Yangian small(suffix_context(big.context(), L));
  const std::string prefix = big.context().sigma().substr(0, static_cast<std::size_t>(L));
  MapApplier psi(make_map(MapKind::psi_shift, small.context(), prefix), small, big, R);
  const int m = n - L;
  for (int k = 1; k <= m; ++k)
    for (int l = 1; l <= m; ++l)
      for (int s = 1; s <= R; ++s) {
        const Element& img = psi.letter_image(make_gen(k, l, s));
        for (int i = 1; i <= L; ++i)
          for (int j = 1; j <= L; ++j)
            for (int r = 1; r <= R; ++r) {
              Element c = big.supercommutator(big.generator(i, j, r), img);
              out.record(c.is_zero(), "corner " + idx({i, j, r, k, l, s}), c);
            }
      }
  return out;
}

CheckOutcome involution_check(Yangian& Y, int R) {
  const int n = Y.context().dim();
  const PrimeField& F = Y.field();
  MapApplier sg(make_map(MapKind::sigma_anti, Y.context()), Y, Y, R);
  MapApplier om(make_map(MapKind::omega, Y.context()), Y, Y, R);
  CheckOutcome out;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      for (int r = 1; r <= R; ++r) {
        const Gen g = make_gen(i, j, r);
        compare(out, F, sg.apply(sg.letter_image(g)), Y.generator(i, j, r), "sigma^2 " + idx({i, j, r}));
        compare(out, F, om.apply(om.letter_image(g)), Y.generator(i, j, r), "omega^2 " + idx({i, j, r}));
      }
  return out;
}

CheckOutcome factorization_check(Yangian& Y, int R) {
  const int n = Y.context().dim();
  MapDescriptor zd = make_map(MapKind::zeta, Y.context());
  Yangian Z(zd.target);
  MapApplier zeta(zd, Y, Z, R);
  MapApplier rho(make_map(MapKind::rho, Y.context()), Y, Z, R);
  MapApplier om(make_map(MapKind::omega, Y.context()), Y, Y, R);
  CheckOutcome out;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      for (int r = 1; r <= R; ++r) {
        const Gen g = make_gen(i, j, r);
        compare(out, Z.field(), zeta.letter_image(g), rho.apply(om.letter_image(g)), "zeta=rho*omega " + idx({i, j, r}));
      }
  return out;
}

CheckOutcome antipode_antihom_check(Yangian& Y, int R) {
  const int n = Y.context().dim();
  const PrimeField& F = Y.field();
  MapApplier S(make_map(MapKind::antipode, Y.context()), Y, Y, R);
  CheckOutcome out;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      for (int k = 1; k <= n; ++k)
        for (int l = 1; l <= n; ++l)
          for (int r = 1; r <= R; ++r)
            for (int s = 1; r + s <= R; ++s) {
              const Gen x = make_gen(i, j, r), y = make_gen(k, l, s);
              Element lhs = S.apply(Y.straighten(Word{x, y}));
              Element rhs = scale(F, Y.mul(S.letter_image(y), S.letter_image(x)),
                                  F.sign(Y.letter_parity(x) & Y.letter_parity(y)));
              compare(out, F, lhs, rhs, "S(xy) " + idx({i, j, r, k, l, s}));
            }
  return out;
}

CheckOutcome well_defined_check(MapApplier& m, int R) {
  const MapDescriptor& d = m.descriptor();
  Yangian src(d.source);
  Yangian dst(d.target);
  (void)dst;
  const int n = d.source.dim();
  const PrimeField& F = d.target.field();
  const bool bounded = needs_tprime(d.kind);
  CheckOutcome out;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      for (int k = 1; k <= n; ++k)
        for (int l = 1; l <= n; ++l)
          for (int r = 1; r <= R - 1; ++r)
            for (int s = 1; s <= R - 1; ++s) {
              if (bounded && r + s - 1 > m.order()) continue;
              const Gen x = make_gen(i, j, r), y = make_gen(k, l, s);
              const Coeff sg = F.sign(src.letter_parity(x) & src.letter_parity(y));
              Element lhs = m.apply_word(Word{x, y});
              add_scaled(F, lhs, m.apply_word(Word{y, x}), F.neg(sg));
              Element rhs = m.apply(src.rtt_bracket(i, j, r, k, l, s));
              rhs.tag = lhs.tag;
              compare(out, F, lhs, rhs, std::string(map_name(d.kind)) + " rtt " + idx({i, j, r, k, l, s}));
            }
  return out;
}

CheckOutcome parity_preservation_check(MapApplier& m, int R) {
  const MapDescriptor& d = m.descriptor();
  Yangian src(d.source), dst(d.target);
  const int n = d.source.dim();
  CheckOutcome out;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      for (int r = 1; r <= R; ++r) {
        const Gen g = make_gen(i, j, r);
        const Element& img = m.letter_image(g);
        const bool ok = dst.is_homogeneous(img) && (img.is_zero() || dst.parity(img) == src.letter_parity(g));
        out.record(ok, std::string(map_name(d.kind)) + " parity " + idx({i, j, r}), img);
      }
  return out;
}

}  // namespace sy
