#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "superyangian/field.hpp"

namespace sy {

enum class SeqTransform { flip, reverse, flip_reverse };

/// Checks that s is a nonempty string of '0'/'1'; throws ConfigError otherwise.
void validate_sequence(const std::string& s);
std::string sequence_transform(const std::string& s, SeqTransform kind);

/// Ordered tuple of positive block sizes. Blocks are 1-based externally.
class Composition {
 public:
  Composition() = default;
  explicit Composition(std::vector<int> parts);
  static Composition parse(const std::string& csv);

  int n() const { return static_cast<int>(parts_.size()); }
  int total() const { return offsets_.empty() ? 0 : offsets_.back(); }
  int size(int a) const;
  /// n_{a-1}: number of rows strictly before block a.
  int offset(int a) const;
  const std::vector<int>& parts() const { return parts_; }
  Composition reversed() const;
  std::string str() const;

  bool operator==(const Composition& o) const { return parts_ == o.parts_; }

 private:
  std::vector<int> parts_;
  std::vector<int> offsets_;  // offsets_[a] = mu_1 + ... + mu_a
};

/// The ambient Y_{M|N}(sigma) over GF(p). Immutable after construction.
class AlgebraContext {
 public:
  AlgebraContext(std::uint32_t p, int M, int N, std::string sigma);

  const PrimeField& field() const { return field_; }
  std::uint32_t p() const { return field_.modulus(); }
  int M() const { return M_; }
  int N() const { return N_; }
  int dim() const { return M_ + N_; }
  const std::string& sigma() const { return sigma_; }

  /// |i| for 1 <= i <= M+N.
  unsigned parity(int i) const { return par_[static_cast<std::size_t>(i)]; }
  void check_index(int i) const;
  std::string key() const;
  std::uint64_t tag() const { return tag_; }

  bool operator==(const AlgebraContext& o) const {
    return field_ == o.field_ && sigma_ == o.sigma_;
  }

 private:
  PrimeField field_;
  int M_ = 0, N_ = 0;
  std::string sigma_;
  std::vector<std::uint8_t> par_;  // 1-based
  std::uint64_t tag_ = 0;
};

AlgebraContext make_context(std::uint32_t p, int M, int N, const std::string& sigma);

/// |i|_a = |n_{a-1} + i|.
unsigned restricted_parity(const Composition& mu, const std::string& sigma, int a, int i);

/// Every composition of total into positive parts, in lexicographic order.
std::vector<Composition> all_compositions(int total);

}  // namespace sy
