// One PASS/FAIL line per acceptance criterion. Exit status is the number of failed criteria.
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <iostream>
#include <set>
#include <sstream>
#include <thread>

#include "cli.hpp"
#include "superyangian/faults.hpp"
#include "superyangian/relations.hpp"

using namespace sy;

namespace {

using Clock = std::chrono::steady_clock;

struct Cfg {
  std::uint32_t p;
  int M, N;
  std::string sigma;
  std::string str() const { return "p=" + std::to_string(p) + " " + std::to_string(M) + "|" + std::to_string(N) + " " + sigma; }
};

std::vector<Cfg> base_configs() {
  std::vector<Cfg> out;
  for (std::uint32_t p : {2U, 3U, 5U}) {
    for (const char* s : {"01", "10"}) out.push_back({p, 1, 1, s});
    for (const char* s : {"001", "010", "100"}) out.push_back({p, 2, 1, s});
    for (const char* s : {"011", "101", "110"}) out.push_back({p, 1, 2, s});
  }
  return out;
}

std::vector<Cfg> configs_22(std::vector<std::uint32_t> primes) {
  std::vector<Cfg> out;
  for (std::uint32_t p : primes)
    for (const char* s : {"0011", "0101", "0110", "1001", "1010", "1100"}) out.push_back({p, 2, 2, s});
  return out;
}

int jobs() { return static_cast<int>(std::max(1U, std::min(8U, std::thread::hardware_concurrency()))); }

class Tally {
 public:
  void add(const Cfg& c, const Composition& mu, const Report& r, double secs) {
    ++runs_;
    checked_ += r.checked();
    worst_ = std::max(worst_, secs);
    total_ += secs;
    for (const auto& f : r.families) {
      families_.insert(f.id);
      if (f.passed()) continue;
      failed_ += f.failed;
      if (notes_.size() < 5)
        notes_.push_back(c.str() + " mu=(" + mu.str() + ") " + f.id + " failed=" + std::to_string(f.failed) +
                         (f.failures.empty() ? "" : " first: " + f.failures[0].first + " : " + f.failures[0].second));
    }
  }
  void fail(const std::string& note) {
    ++failed_;
    if (notes_.size() < 5) notes_.push_back(note);
  }
  void count(std::size_t n) { checked_ += n; }

  std::size_t failed() const { return failed_; }
  std::size_t checked() const { return checked_; }
  double worst() const { return worst_; }
  double total() const { return total_; }
  std::string summary() const {
    std::ostringstream s;
    s << runs_ << " runs, " << families_.size() << " families, " << checked_ << " checks, " << failed_ << " failures";
    return s.str();
  }
  const std::vector<std::string>& notes() const { return notes_; }

 private:
  std::size_t runs_ = 0, checked_ = 0, failed_ = 0;
  double worst_ = 0, total_ = 0;
  std::set<std::string> families_;
  std::vector<std::string> notes_;
};

std::vector<std::string> in_groups(const Composition& mu, std::initializer_list<const char*> groups,
                                   std::initializer_list<const char*> extra = {}) {
  std::vector<std::string> ids;
  for (const auto& f : family_registry()) {
    bool want = std::any_of(groups.begin(), groups.end(), [&](const char* g) { return f.group == g; }) ||
                std::any_of(extra.begin(), extra.end(), [&](const char* g) { return f.id == g; });
    if (want && family_applicable(f.id, mu)) ids.push_back(f.id);
  }
  return ids;
}

void run(Tally& t, const Cfg& c, const Composition& mu, std::vector<std::string> ids, const Levels& lv) {
  if (ids.empty()) return;
  RunConfig rc;
  rc.p = c.p;
  rc.M = c.M;
  rc.N = c.N;
  rc.sigma = c.sigma;
  rc.mu = mu;
  rc.levels = lv;
  rc.families = std::move(ids);
  rc.jobs = jobs();
  const auto t0 = Clock::now();
  Report r = full_suite(rc);
  t.add(c, mu, r, std::chrono::duration<double>(Clock::now() - t0).count());
}

std::vector<Composition> compositions_of_length(int total, int len) {
  std::vector<Composition> out;
  for (const auto& mu : all_compositions(total))
    if (mu.n() == len) out.push_back(mu);
  return out;
}

int failures = 0;

void report(int id, const std::string& name, bool ok, const std::string& detail, const Tally* t = nullptr) {
  std::cout << (ok ? "PASS" : "FAIL") << " " << id << " " << name << ": " << detail << std::endl;
  if (t)
    for (const auto& n : t->notes()) std::cout << "       " << n << std::endl;
  if (!ok) ++failures;
}

std::string secs(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2fs", s);
  return buf;
}

// 1. RTT relation and the T/T^{-1} commutation relation, r,s <= 3, R = 4
void criterion1() {
  Tally t;
  Levels lv;
  lv.R = 4;
  lv.gen = 3;
  for (const auto& c : base_configs()) run(t, c, Composition({c.M + c.N}), {"rtt", "rtt-series", "commurelation"}, lv);
  const bool ok = t.failed() == 0 && t.worst() <= 120;
  report(1, "RTT well-formedness", ok, t.summary() + ", slowest config " + secs(t.worst()), &t);
}

// 2. n = 2 relations for every two-block composition
void criterion2() {
  Tally t;
  Levels lv;
  for (const auto& c : base_configs())
    for (const auto& mu : compositions_of_length(c.M + c.N, 2)) run(t, c, mu, in_groups(mu, {"n2"}), lv);
  report(2, "n=2 suite", t.failed() == 0 && t.checked() > 0, t.summary(), &t);
}

// 3. n = 3 relations on three-block compositions, including the 2|2 ones
void criterion3() {
  Tally t;
  Levels lv;
  for (const auto& c : base_configs())
    if (c.M + c.N == 3)
      for (const auto& mu : compositions_of_length(3, 3)) run(t, c, mu, in_groups(mu, {"n3"}), lv);
  for (const auto& c : configs_22({2, 3, 5}))
    for (std::vector<int> parts : {std::vector<int>{1, 1, 2}, {1, 2, 1}, {2, 1, 1}, {1, 1, 1, 1}}) {
      Composition mu(parts);
      run(t, c, mu, in_groups(mu, {"n3"}), lv);
    }
  report(3, "n=3 suite", t.failed() == 0 && t.checked() > 0, t.summary(), &t);
}

// 4. coefficient relations on every composition; quartic Serre and the full 2|2 run
void criterion4() {
  Tally t;
  Levels lv;
  lv.gen = 3;
  lv.cubic = 2;
  lv.quartic = 2;
  for (const auto& c : base_configs())
    for (const auto& mu : all_compositions(c.M + c.N)) run(t, c, mu, in_groups(mu, {"theorem", "lemma"}), lv);
  Tally q;
  const Composition four({1, 1, 1, 1});
  const auto t0 = Clock::now();
  for (const auto& c : configs_22({2, 3, 5}))
    run(q, c, four, {"superserre-E", "superserre-F", "coeffi-superserre-E", "coeffi-superserre-F"}, lv);
  // every family at once on 2|2 in characteristic 2
  for (const auto& c : configs_22({2})) run(q, c, four, in_groups(four, {"rtt", "dd0", "n2", "n3", "lemma", "theorem", "gr", "invariant"}), lv);
  const double full = std::chrono::duration<double>(Clock::now() - t0).count();
  const bool ok = t.failed() == 0 && q.failed() == 0 && q.checked() > 0 && full <= 900;
  report(4, "theorem suite", ok, "small configs: " + t.summary() + "; 2|2: " + q.summary() + " in " + secs(full), &t);
  for (const auto& n : q.notes()) std::cout << "       " << n << std::endl;
}

// 5. Gauss roundtrip, uniqueness, parity and the E/F recursion
void criterion5() {
  Tally t;
  Levels lv;
  lv.R = 3;
  lv.gen = 2;
  std::vector<Cfg> all = base_configs();
  for (const auto& c : configs_22({2, 3, 5})) all.push_back(c);
  for (const auto& c : all)
    for (const auto& mu : all_compositions(c.M + c.N)) run(t, c, mu, in_groups(mu, {}, {"roundtrip", "uniqueness", "recursion", "gauss-parity"}), lv);
  report(5, "Gauss roundtrip and uniqueness", t.failed() == 0, t.summary(), &t);
}

// 6. map identities
void criterion6() {
  Tally t;
  Levels lv;
  lv.R = 3;
  lv.gen = 2;
  const std::initializer_list<const char*> maps = {"map-involution", "map-factorization", "map-antipode", "map-well-defined",
                                                   "map-parity",     "psi-dual-path",     "psi-parabolic", "corner",
                                                   "zeta-parabolic"};
  for (const auto& c : base_configs())
    for (const auto& mu : all_compositions(c.M + c.N)) run(t, c, mu, in_groups(mu, {}, maps), lv);
  report(6, "map identities", t.failed() == 0 && t.checked() > 0, t.summary(), &t);
}

// 7. gr bracket against gl[x], and the gr-level relations on 2|2
void criterion7() {
  Tally t;
  for (const auto& c : base_configs()) {
    FamilyResult r = gr_structure_check(make_context(c.p, c.M, c.N, c.sigma), 3);
    t.count(r.checked);
    if (!r.passed()) t.fail(c.str() + " gr-hom " + (r.failures.empty() ? "" : r.failures[0].first));
  }
  Levels lv;
  lv.inj_sum = 4;
  lv.gen = 2;
  const Composition four({1, 1, 1, 1});
  for (const auto& c : configs_22({2, 3, 5})) run(t, c, four, in_groups(four, {"gr"}), lv);
  report(7, "gr checks", t.failed() == 0 && t.checked() > 0, t.summary(), &t);
}

// 8. confluence, odd squares in characteristic 2, and fault injection through the CLI
void criterion8() {
  Tally t;
  Levels lv;
  lv.gen = 2;
  for (const auto& c : base_configs()) run(t, c, Composition({c.M + c.N}), {"confluence", "odd-square"}, lv);
  for (const auto& c : configs_22({2})) run(t, c, Composition({4}), {"confluence", "odd-square"}, lv);

  std::string faults = "fault hooks not compiled in";
  bool faults_ok = false;
  if (fault_hooks_enabled()) {
    struct Case {
      const char* fault;
      std::vector<std::string> args;
    };
    const std::vector<Case> cases = {
        {"straighten_sign", {"--size", "2,1", "--sigma", "010", "--mu", "1,1,1", "--families", "rtt,confluence"}},
        {"psi_sign", {"--size", "2,1", "--sigma", "010", "--mu", "1,1,1", "--families", "psi-dual-path,psi-parabolic"}},
        {"gauss_d2", {"--size", "2,1", "--sigma", "010", "--mu", "1,1,1", "--families", "roundtrip,gde"}},
        {"recursion_sign", {"--size", "2,1", "--sigma", "010", "--mu", "1,1,1", "--families", "recursion"}},
    };
    faults_ok = true;
    faults.clear();
    for (const auto& fc : cases) {
      std::vector<std::string> args = {"verify", "--p", "3", "--series-order", "3", "--gen-order", "2", "--fault", fc.fault};
      args.insert(args.end(), fc.args.begin(), fc.args.end());
      std::ostringstream out, err;
      const int code = run_cli(args, out, err);
      const bool reported = out.str().find("FAIL ") != std::string::npos;
      faults += std::string(faults.empty() ? "" : ", ") + fc.fault + "->exit " + std::to_string(code);
      if (code != 1 || !reported) faults_ok = false;
    }
  }
  report(8, "engine health", t.failed() == 0 && faults_ok, t.summary() + "; faults: " + faults, &t);
}

}  // namespace

int main() {
  const auto t0 = Clock::now();
  criterion1();
  criterion2();
  criterion3();
  criterion4();
  criterion5();
  criterion6();
  criterion7();
  criterion8();
  std::cout << (failures == 0 ? "ALL PASS" : std::to_string(failures) + " criteria failed") << " in "
            << secs(std::chrono::duration<double>(Clock::now() - t0).count()) << std::endl;
  return failures;
}
