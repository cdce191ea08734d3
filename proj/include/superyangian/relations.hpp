#pragma once

#include <string>
#include <utility>
#include <vector>

#include "superyangian/gauss.hpp"

namespace sy {

/// Level caps. `R` is the series truncation order; the others bound generator levels in
/// coefficient-form families (quadratic, cubic Serre, quartic Serre) and r+s in gr checks.
struct Levels {
  int R = 3;
  int gen = 3;
  int cubic = 2;
  int quartic = 2;
  int inj_sum = 4;
};

/// Order the Gauss data must have so that every family can read the levels it needs.
int gauss_order(const Levels& lv);

/// How the formulas with ambiguous or suspicious indices are read. Defaults are the
/// readings that were confirmed by computation; the alternatives stay selectable so the
/// literal forms can be re-tested.
struct Readings {
  bool d3f31_sum_r = false;   // D3F31: r fixed (checked for every r) instead of summed
  bool f2f3_sum_g = false;    // F2F3: g fixed
  bool f1f31_sum_g = false;   // F1F31: g fixed
  bool c61_sum_g = false;     // 61c: g fixed
  bool d61_sum_g = false;     // 61d: g fixed, LHS sum over q dropped
  bool d3e13_sum_q = false;   // D3E13: q fixed, g summed, sign uses |q|_2
  bool d1e13_sum_q = false;   // D1E13: q fixed, sign uses |q|_2
  bool d1e13_e1_at_u = true;  // D1E13: the inner E_1 is taken at u
  bool dafb_delta_ik = true;  // p-dafb: first term carries delta_{ik}
  bool dafb_first_minus = true;  // p-dafb: first term enters with a minus sign
  bool gef_j_next = true;     // gef: first sign uses |j|_{a+1}
  bool gdf_mu_a = true;       // gdf: first sum runs over mu_a
};

std::vector<std::pair<std::string, std::string>> describe(const Readings& rd);

struct FamilyInfo {
  std::string id;
  std::string group;  // rtt, dd0, n2, n3, lemma, theorem, gr, invariant
  int min_blocks;     // smallest n = len(mu) for which the family has admissible tuples
};

const std::vector<FamilyInfo>& family_registry();
const FamilyInfo* find_family(const std::string& id);
bool family_applicable(const std::string& id, const Composition& mu);

struct FamilyResult {
  std::string id;
  std::size_t checked = 0;
  std::size_t failed = 0;
  std::vector<std::pair<std::string, std::string>> failures;  // first few (indices, delta)
  double millis = 0;
  bool passed() const { return failed == 0; }
};

/// Runs one family. The Gauss data must come from a context equal to Y's and have order
/// at least gauss_order(lv). Throws ConfigError for unknown or inapplicable families.
FamilyResult check_family(Yangian& Y, const GaussData& g, const std::string& id, const Levels& lv,
                          const Readings& rd = {});

/// gr of the RTT bracket against the gl[x] bracket of the images, generator levels <= R.
FamilyResult gr_structure_check(const AlgebraContext& ctx, int R);

struct RunConfig {
  std::uint32_t p = 3;
  int M = 1, N = 1;
  std::string sigma = "01";
  Composition mu;  // empty means (M+N)
  Levels levels;
  std::vector<std::string> families;  // empty or {"all"} means every applicable family
  int jobs = 1;
  bool deterministic = false;  // zero timings so reports are byte-identical
  Readings readings;
};

struct Report {
  std::string version;
  RunConfig config;
  std::vector<FamilyResult> families;
  std::size_t checked() const;
  std::size_t failed() const;
  bool passed() const { return failed() == 0; }
};

/// Validates the config, decomposes once and runs the selected families on `jobs` threads.
/// Results keep registry order whatever the thread count.
Report full_suite(const RunConfig& cfg);

std::string report_json(const Report& r);

}  // namespace sy
