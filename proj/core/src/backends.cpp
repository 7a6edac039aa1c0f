#include "fusioncat/backends.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace fcat {

namespace {
constexpr std::size_t kMaterializeLimit = 3'000'000;
}

long IrrBackend::mult(const std::string& s, const std::string& t, const std::string& r) const {
  for (const auto& [w, m] : fuse(s, t))
    if (w == r) return m;
  return 0;
}

double IrrBackend::object_dim(const RingObject& x) const {
  double d = 0;
  for (const auto& [s, n] : x) d += static_cast<double>(n) * dim(s);
  return d;
}

// ---------------------------------------------------------------------------
// finite backend

namespace {

class FiniteBackend final : public IrrBackend {
 public:
  FiniteBackend(std::string name, FusionRules rules, std::vector<double> dims)
      : name_(std::move(name)), rules_(std::move(rules)), dims_(std::move(dims)) {
    if (dims_.size() != rules_.size()) throw InputError("dimension data must cover every label");
  }

  std::string name() const override { return name_; }
  bool finite() const override { return true; }
  std::string unit() const override { return rules_.name(rules_.unit()); }
  std::string dual(const std::string& s) const override {
    return rules_.name(rules_.dual(rules_.id(s)));
  }
  double dim(const std::string& s) const override { return dims_.at(rules_.id(s)); }

  std::vector<std::pair<std::string, long>> fuse(const std::string& s,
                                                 const std::string& t) const override {
    std::vector<std::pair<std::string, long>> out;
    const LabelId si = rules_.id(s), ti = rules_.id(t);
    for (LabelId r = 0; r < rules_.size(); ++r) {
      const long m = rules_.mult(si, ti, r);
      if (m > 0) out.emplace_back(rules_.name(r), m);
    }
    return out;
  }

  std::size_t truncation_size(long level) const override {
    if (level <= 0) return 0;
    return std::min<std::size_t>(static_cast<std::size_t>(level), rules_.size());
  }
  std::vector<std::string> truncation(long level) const override {
    const std::size_t n = truncation_size(level);
    return {rules_.labels().begin(), rules_.labels().begin() + n};
  }

  const FusionRules& rules() const { return rules_; }

 private:
  std::string name_;
  FusionRules rules_;
  std::vector<double> dims_;
};

// ---------------------------------------------------------------------------
// Temperley-Lieb chain, generic loop weight

class TLBackend final : public IrrBackend {
 public:
  explicit TLBackend(double delta) : delta_(delta) {
    if (delta < 2.0) throw InputError("TL backend needs loop weight >= 2 for positive dims");
  }

  std::string name() const override {
    std::ostringstream os;
    os << "TL(delta=" << delta_ << ")";
    return os.str();
  }
  bool finite() const override { return false; }
  std::string unit() const override { return "0"; }
  std::string dual(const std::string& s) const override { return s; }

  double dim(const std::string& s) const override { return dim_of(std::stol(s)); }

  std::vector<std::pair<std::string, long>> fuse(const std::string& s,
                                                 const std::string& t) const override {
    const long j = std::stol(s), k = std::stol(t);
    std::vector<std::pair<std::string, long>> out;
    for (long l = std::llabs(j - k); l <= j + k; l += 2) out.emplace_back(std::to_string(l), 1);
    return out;
  }

  std::size_t truncation_size(long level) const override {
    return level <= 0 ? 0 : static_cast<std::size_t>(level);
  }
  std::vector<std::string> truncation(long level) const override {
    if (truncation_size(level) > kMaterializeLimit)
      throw CapabilityError("TL truncation too large to materialize");
    std::vector<std::string> out;
    for (long i = 0; i < level; ++i) out.push_back(std::to_string(i));
    return out;
  }

 private:
  double dim_of(long j) const {
    double prev = 1.0, cur = delta_;
    if (j == 0) return prev;
    for (long i = 1; i < j; ++i) {
      const double next = delta_ * cur - prev;
      prev = cur;
      cur = next;
    }
    return cur;
  }
  double delta_;
};

// ---------------------------------------------------------------------------
// SU(2) level k

class SU2kBackend final : public IrrBackend {
 public:
  explicit SU2kBackend(int k) : k_(k) {
    if (k < 1 || k > 10) throw InputError("SU(2) level out of the supported range 1..10");
  }
  std::string name() const override { return "SU2k" + std::to_string(k_); }
  bool finite() const override { return true; }
  std::string unit() const override { return "0"; }
  std::string dual(const std::string& s) const override { return s; }
  double dim(const std::string& s) const override {
    const double x = M_PI / (k_ + 2);
    return std::sin((std::stol(s) + 1) * x) / std::sin(x);
  }
  std::vector<std::pair<std::string, long>> fuse(const std::string& s,
                                                 const std::string& t) const override {
    const long j = std::stol(s), l = std::stol(t);
    std::vector<std::pair<std::string, long>> out;
    for (long m = std::llabs(j - l); m <= std::min(j + l, 2L * k_ - j - l); m += 2)
      out.emplace_back(std::to_string(m), 1);
    return out;
  }
  std::size_t truncation_size(long level) const override {
    return std::min<std::size_t>(level <= 0 ? 0 : level, k_ + 1);
  }
  std::vector<std::string> truncation(long level) const override {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < truncation_size(level); ++i) out.push_back(std::to_string(i));
    return out;
  }

 private:
  int k_;
};

// ---------------------------------------------------------------------------
// free group

class FreeGroupBackend final : public IrrBackend {
 public:
  explicit FreeGroupBackend(int k) : k_(k) {
    if (k < 1 || k > 3) throw InputError("free group rank out of the supported range 1..3");
  }
  std::string name() const override { return "FreeGroup" + std::to_string(k_); }
  bool finite() const override { return false; }
  std::string unit() const override { return "1"; }

  std::string dual(const std::string& s) const override {
    if (s == "1") return s;
    std::string out;
    for (auto it = s.rbegin(); it != s.rend(); ++it) out.push_back(flip(*it));
    return out;
  }

  double dim(const std::string&) const override { return 1.0; }

  std::vector<std::pair<std::string, long>> fuse(const std::string& s,
                                                 const std::string& t) const override {
    return {{reduce_concat(s, t), 1}};
  }

  std::size_t truncation_size(long level) const override {
    // |B_r| = 1 + 2k ((2k-1)^r - 1)/(2k-2), with the degenerate k=1 chain
    if (level < 0) return 0;
    const std::size_t q = 2 * k_ - 1;
    std::size_t total = 1, sphere = 2 * k_;
    for (long r = 1; r <= level; ++r) {
      if (total > kMaterializeLimit * 4) return SIZE_MAX;
      total += sphere;
      sphere *= q;
    }
    return total;
  }

  std::vector<std::string> truncation(long level) const override {
    if (truncation_size(level) > kMaterializeLimit)
      throw CapabilityError("free-group ball too large to materialize; radial profile only");
    std::vector<std::string> out{"1"};
    std::vector<std::string> shell{"1"};
    for (long r = 1; r <= level; ++r) {
      std::vector<std::string> next;
      for (const auto& w : shell)
        for (char g : gens()) {
          if (w != "1" && w.back() == flip(g)) continue;
          next.push_back(w == "1" ? std::string(1, g) : w + g);
        }
      out.insert(out.end(), next.begin(), next.end());
      shell = std::move(next);
    }
    return out;
  }

  std::optional<RMat> radial_profile(const RingObject& x, long level) const override {
    // valid exactly for the generator-sum object, whose ball-truncated top
    // eigenvector is radial
    RingObject gen;
    for (char g : gens()) gen[std::string(1, g)] = 1;
    if (x != gen || level < 1) return std::nullopt;
    const long n = level + 1;
    RMat t = RMat::Zero(n, n);
    for (long j = 0; j + 1 < n; ++j) {
      const double b = (j == 0) ? std::sqrt(2.0 * k_) : std::sqrt(2.0 * k_ - 1.0);
      t(j, j + 1) = t(j + 1, j) = b;
    }
    return t;
  }

 private:
  std::vector<char> gens() const {
    std::vector<char> g;
    for (int i = 0; i < k_; ++i) {
      g.push_back(static_cast<char>('a' + i));
      g.push_back(static_cast<char>('A' + i));
    }
    return g;
  }
  static char flip(char c) { return std::isupper(c) ? std::tolower(c) : std::toupper(c); }

  std::string reduce_concat(const std::string& a, const std::string& b) const {
    std::string w = (a == "1") ? "" : a;
    const std::string v = (b == "1") ? "" : b;
    for (char c : v) {
      if (!w.empty() && w.back() == flip(c))
        w.pop_back();
      else
        w.push_back(c);
    }
    return w.empty() ? "1" : w;
  }

  int k_;
};

// ---------------------------------------------------------------------------
// Z x Z

class ZxZBackend final : public IrrBackend {
 public:
  std::string name() const override { return "ZxZ"; }
  bool finite() const override { return false; }
  std::string unit() const override { return "0,0"; }
  std::string dual(const std::string& s) const override {
    auto [x, y] = parse(s);
    return fmt(-x, -y);
  }
  double dim(const std::string&) const override { return 1.0; }
  std::vector<std::pair<std::string, long>> fuse(const std::string& s,
                                                 const std::string& t) const override {
    auto [x1, y1] = parse(s);
    auto [x2, y2] = parse(t);
    return {{fmt(x1 + x2, y1 + y2), 1}};
  }
  std::size_t truncation_size(long level) const override {
    if (level < 0) return 0;
    const std::size_t side = 2 * static_cast<std::size_t>(level) + 1;
    return side * side;
  }
  std::vector<std::string> truncation(long level) const override {
    if (truncation_size(level) > kMaterializeLimit)
      throw CapabilityError("ZxZ ball too large to materialize");
    std::vector<std::string> out;
    for (long r = 0; r <= level; ++r)
      for (long x = -r; x <= r; ++x)
        for (long y = -r; y <= r; ++y)
          if (std::max(std::llabs(x), std::llabs(y)) == r) out.push_back(fmt(x, y));
    return out;
  }

 private:
  static std::pair<long, long> parse(const std::string& s) {
    const auto comma = s.find(',');
    if (comma == std::string::npos) throw InputError("bad ZxZ label '" + s + "'");
    return {std::stol(s.substr(0, comma)), std::stol(s.substr(comma + 1))};
  }
  static std::string fmt(long x, long y) {
    return std::to_string(x) + "," + std::to_string(y);
  }
};

}  // namespace

std::shared_ptr<IrrBackend> make_finite_backend(std::string name, FusionRules rules,
                                                std::vector<double> dims) {
  return std::make_shared<FiniteBackend>(std::move(name), std::move(rules), std::move(dims));
}
std::shared_ptr<IrrBackend> make_tl_backend(double delta) {
  return std::make_shared<TLBackend>(delta);
}
std::shared_ptr<IrrBackend> make_su2k_backend(int k) { return std::make_shared<SU2kBackend>(k); }
std::shared_ptr<IrrBackend> make_free_group_backend(int k) {
  return std::make_shared<FreeGroupBackend>(k);
}
std::shared_ptr<IrrBackend> make_zxz_backend() { return std::make_shared<ZxZBackend>(); }

}  // namespace fcat
