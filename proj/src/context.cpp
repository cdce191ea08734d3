#include "superyangian/context.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace sy {

void validate_sequence(const std::string& s) {
  if (s.empty()) throw ConfigError("01-sequence is empty");
  for (char c : s) {
    if (c != '0' && c != '1') throw ConfigError("01-sequence '" + s + "' has a character other than 0/1");
  }
}

std::string sequence_transform(const std::string& s, SeqTransform kind) {
  std::string out = s;
  if (kind == SeqTransform::flip || kind == SeqTransform::flip_reverse) {
    for (char& c : out) c = (c == '0') ? '1' : '0';
  }
  if (kind == SeqTransform::reverse || kind == SeqTransform::flip_reverse) {
    std::reverse(out.begin(), out.end());
  }
  return out;
}

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts)) {
  if (parts_.empty()) throw ConfigError("composition has no parts");
  offsets_.push_back(0);
  for (int x : parts_) {
    if (x <= 0) throw ConfigError("composition parts must be positive");
    offsets_.push_back(offsets_.back() + x);
  }
}

Composition Composition::parse(const std::string& csv) {
  std::vector<int> parts;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      int v = std::stoi(item, &used);
      if (used != item.size()) throw ConfigError("bad composition entry '" + item + "'");
      parts.push_back(v);
    } catch (const std::logic_error&) {
      throw ConfigError("bad composition entry '" + item + "'");
    }
  }
  return Composition(std::move(parts));
}

int Composition::size(int a) const {
  if (a < 1 || a > n()) throw ConfigError("block index " + std::to_string(a) + " out of range");
  return parts_[static_cast<std::size_t>(a - 1)];
}

int Composition::offset(int a) const {
  if (a < 1 || a > n()) throw ConfigError("block index " + std::to_string(a) + " out of range");
  return offsets_[static_cast<std::size_t>(a - 1)];
}

Composition Composition::reversed() const {
  std::vector<int> r(parts_.rbegin(), parts_.rend());
  return Composition(std::move(r));
}

std::string Composition::str() const {
  std::string out;
  for (std::size_t k = 0; k < parts_.size(); ++k) {
    if (k) out += ',';
    out += std::to_string(parts_[k]);
  }
  return out;
}

AlgebraContext::AlgebraContext(std::uint32_t p, int M, int N, std::string sigma)
    : field_(p), M_(M), N_(N), sigma_(std::move(sigma)) {
  if (M < 0 || N < 0 || M + N == 0) throw ConfigError("need M, N >= 0 with M+N >= 1");
  if (M + N > 16) throw ConfigError("M+N above 16 is not supported");
  validate_sequence(sigma_);
  if (static_cast<int>(sigma_.size()) != M + N) {
    throw ConfigError("sigma '" + sigma_ + "' has length " + std::to_string(sigma_.size()) +
                      ", expected M+N = " + std::to_string(M + N));
  }
  auto zeros = std::count(sigma_.begin(), sigma_.end(), '0');
  if (zeros != M) throw ConfigError("sigma '" + sigma_ + "' must contain exactly M zeros and N ones");
  par_.assign(static_cast<std::size_t>(M + N + 1), 0);
  for (int i = 1; i <= M + N; ++i) par_[static_cast<std::size_t>(i)] = sigma_[static_cast<std::size_t>(i - 1)] == '1';
  tag_ = std::hash<std::string>{}(key()) | 1U;
}

void AlgebraContext::check_index(int i) const {
  if (i < 1 || i > dim()) {
    throw ConfigError("index " + std::to_string(i) + " outside 1.." + std::to_string(dim()));
  }
}

std::string AlgebraContext::key() const {
  return "p=" + std::to_string(p()) + " " + std::to_string(M_) + "|" + std::to_string(N_) + " sigma=" + sigma_;
}

AlgebraContext make_context(std::uint32_t p, int M, int N, const std::string& sigma) {
  return AlgebraContext(p, M, N, sigma);
}

unsigned restricted_parity(const Composition& mu, const std::string& sigma, int a, int i) {
  validate_sequence(sigma);
  if (mu.total() != static_cast<int>(sigma.size())) throw ConfigError("composition does not match sigma length");
  if (i < 1 || i > mu.size(a)) throw ConfigError("row " + std::to_string(i) + " outside block " + std::to_string(a));
  return sigma[static_cast<std::size_t>(mu.offset(a) + i - 1)] == '1';
}

std::vector<Composition> all_compositions(int total) {
  std::vector<Composition> out;
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int left) {
    if (left == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int x = 1; x <= left; ++x) {
      cur.push_back(x);
      rec(left - x);
      cur.pop_back();
    }
  };
  if (total > 0) rec(total);
  return out;
}

}  // namespace sy
