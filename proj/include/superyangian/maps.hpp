#pragma once

#include <memory>
#include <string>
#include <unordered_map>

#include "superyangian/gauss.hpp"

namespace sy {

enum class MapKind { rho, sigma_anti, antipode, omega, zeta, phi_shift, psi_shift };

const char* map_name(MapKind k);

struct MapDescriptor {
  MapKind kind = MapKind::omega;
  AlgebraContext source;
  AlgebraContext target;
  int shift = 0;  // L for phi/psi
  bool anti = false;
};

/// Builds the descriptor and its target context. For phi/psi, `prefix` is the
/// 01-sequence sigma_1 prepended to the source sequence (L = prefix length).
MapDescriptor make_map(MapKind kind, const AlgebraContext& source, const std::string& prefix = "");

/// Applies a map to Elements, caching generator images. Maps that need entries of
/// T(u)^{-1} are only defined up to level R; higher levels throw ConfigError.
class MapApplier {
 public:
  MapApplier(MapDescriptor d, Yangian& source, Yangian& target, int R);
  ~MapApplier();

  const MapDescriptor& descriptor() const { return d_; }
  int order() const { return R_; }

  /// Image of an arbitrary (not necessarily ordered) word, straightened in the target.
  Element apply_word(const Word& w);
  Element apply(const Element& e);
  const Element& letter_image(Gen g);

 private:
  const Element& tprime(int i, int j, int r);
  Element compute_letter(Gen g);

  MapDescriptor d_;
  Yangian& src_;
  Yangian& dst_;
  int R_;
  std::unordered_map<Gen, Element> cache_;
  std::unique_ptr<MatrixSeries> tinv_;
  // psi is built literally as omega_big o phi o omega_small
  std::unique_ptr<MapApplier> inner_omega_, inner_phi_, outer_omega_;
  bool psi_fault_ = false;
};

/// Entries of D - C A^{-1} B for the big T(u) split at L: the quasideterminant image of psi_L.
MatrixSeries psi_quasideterminant(Yangian& big, int L, int R);

/// Context of the last M+N-L digits of sigma (the source of psi_L).
AlgebraContext suffix_context(const AlgebraContext& big, int L);

CheckOutcome psi_dual_path(Yangian& small, Yangian& big, int R);
CheckOutcome psi_on_parabolic(Yangian& Y, const GaussData& g, int a);
CheckOutcome zeta_on_parabolic(Yangian& Y, const GaussData& g);
CheckOutcome corner_commute_check(Yangian& big, int L, int R);

/// Generator-level identities: sigma^2, omega^2, zeta = rho o omega, S anti-multiplicative,
/// parity preservation, and well-definedness (images satisfy the RTT relation).
CheckOutcome involution_check(Yangian& Y, int R);
CheckOutcome factorization_check(Yangian& Y, int R);
CheckOutcome antipode_antihom_check(Yangian& Y, int R);
CheckOutcome well_defined_check(MapApplier& m, int R);
CheckOutcome parity_preservation_check(MapApplier& m, int R);

}  // namespace sy
