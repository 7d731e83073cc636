#include "symcon/partition.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <sstream>

#include "symcon/errors.hpp"
#include "symcon/rational.hpp"

namespace symcon {

Partition::Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (int p : parts_) {
    if (p < 0) throw ParameterError("partition parts must be nonnegative");
  }
  std::erase(parts_, 0);
  std::sort(parts_.begin(), parts_.end(), std::greater<>());
  size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

int Partition::multiplicity(int i) const {
  return static_cast<int>(std::count(parts_.begin(), parts_.end(), i));
}

std::vector<int> Partition::multiplicities() const {
  std::vector<int> m(static_cast<std::size_t>(largest()) + 1, 0);
  for (int p : parts_) ++m[static_cast<std::size_t>(p)];
  return m;
}

Partition Partition::conjugate() const {
  std::vector<int> out(static_cast<std::size_t>(largest()), 0);
  for (int p : parts_) {
    for (int j = 0; j < p; ++j) ++out[static_cast<std::size_t>(j)];
  }
  return Partition(std::move(out));
}

Partition Partition::join(const Partition& other) const {
  std::vector<int> merged;
  merged.reserve(parts_.size() + other.parts_.size());
  std::merge(parts_.begin(), parts_.end(), other.parts_.begin(), other.parts_.end(),
             std::back_inserter(merged), std::greater<>());
  Partition out;
  out.parts_ = std::move(merged);
  out.size_ = size_ + other.size_;
  return out;
}

Partition Partition::scaled(int a) const {
  Partition out = *this;
  for (int& p : out.parts_) p *= a;
  out.size_ *= a;
  return out;
}

Partition Partition::without_part(int value) const {
  auto it = std::find(parts_.begin(), parts_.end(), value);
  if (it == parts_.end()) throw ParameterError("partition has no part " + std::to_string(value));
  Partition out = *this;
  out.parts_.erase(out.parts_.begin() + (it - parts_.begin()));
  out.size_ -= value;
  return out;
}

bool Partition::all_parts_odd() const {
  return std::all_of(parts_.begin(), parts_.end(), [](int p) { return p % 2 == 1; });
}

bool Partition::distinct_parts() const {
  return std::adjacent_find(parts_.begin(), parts_.end()) == parts_.end();
}

bool Partition::is_self_conjugate() const { return conjugate() == *this; }

int Partition::num_distinct_part_sizes() const {
  int count = 0;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i == 0 || parts_[i] != parts_[i - 1]) ++count;
  }
  return count;
}

std::string Partition::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(parts_[i]);
  }
  return s + ")";
}

std::string Partition::to_json_key() const {
  std::string s = "[";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(parts_[i]);
  }
  return s + "]";
}

bool revlex_less(const Partition& a, const Partition& b) {
  const auto& x = a.parts();
  const auto& y = b.parts();
  const std::size_t common = std::min(x.size(), y.size());
  for (std::size_t i = 0; i < common; ++i) {
    if (x[i] != y[i]) return x[i] > y[i];
  }
  return x.size() > y.size();
}

namespace {

void generate(int remaining, int max_part, std::vector<int>& prefix, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(prefix);
    return;
  }
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    prefix.push_back(p);
    generate(remaining - p, p, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of(int n) {
  if (n < 0) throw ParameterError("partitions_of: n must be nonnegative");
  std::vector<Partition> out;
  std::vector<int> prefix;
  generate(n, n, prefix, out);
  return out;
}

const std::vector<Partition>& partitions_cached(int n) {
  static std::mutex mutex;
  static std::map<int, std::unique_ptr<std::vector<Partition>>> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto& slot = cache[n];
  if (!slot) slot = std::make_unique<std::vector<Partition>>(partitions_of(n));
  return *slot;
}

int revlex_index(const Partition& lambda) {
  const auto& all = partitions_cached(lambda.size());
  auto it = std::lower_bound(all.begin(), all.end(), lambda, revlex_less);
  if (it == all.end() || !(*it == lambda)) throw ParameterError("revlex_index: not found");
  return static_cast<int>(it - all.begin());
}

std::uint64_t partition_count(int n) {
  if (n < 0) return 0;
  std::vector<std::uint64_t> p(static_cast<std::size_t>(n) + 1, 0);
  p[0] = 1;
  for (int part = 1; part <= n; ++part) {
    for (int s = part; s <= n; ++s) p[static_cast<std::size_t>(s)] += p[static_cast<std::size_t>(s - part)];
  }
  return p[static_cast<std::size_t>(n)];
}

std::uint64_t factorial(int n) {
  if (n < 0 || n > 20) throw CapacityError("factorial: n outside 0..20");
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

std::uint64_t z_lambda(const Partition& lambda) {
  if (lambda.size() > 20) throw CapacityError("z_lambda: |lambda| > 20");
  std::uint64_t z = 1;
  const auto m = lambda.multiplicities();
  for (std::size_t i = 1; i < m.size(); ++i) {
    for (int j = 0; j < m[i]; ++j) z *= i;
    z *= factorial(m[i]);
  }
  return z;
}

std::uint64_t syt_count(const Partition& lambda) {
  const Partition conj = lambda.conjugate();
  Integer hooks = 1;
  for (int i = 0; i < lambda.length(); ++i) {
    for (int j = 0; j < lambda[i]; ++j) {
      hooks *= (lambda[i] - j - 1) + (conj[j] - i - 1) + 1;
    }
  }
  Integer total = 1;
  for (int i = 2; i <= lambda.size(); ++i) total *= i;
  Integer q = total / hooks;
  return q.get_ui();
}

std::uint64_t maj_multiplicity(const Partition& lambda, int n, int r) {
  if (lambda.size() != n) throw ParameterError("maj_multiplicity: |lambda| != n");
  if (n < 1 || r < 0 || r >= n) throw ParameterError("maj_multiplicity: residue out of range");
  // Grow tableaux one cell at a time. The state is the current shape and
  // the row holding the largest entry; the value is the count of partial
  // tableaux per residue of the partial major index.
  using Shape = std::vector<int>;
  using Key = std::pair<Shape, int>;
  std::map<Key, std::vector<std::uint64_t>> layer;
  const int rows = lambda.length();
  Shape start(static_cast<std::size_t>(rows), 0);
  if (rows == 0) return r == 0 ? 1 : 0;
  start[0] = 1;
  std::vector<std::uint64_t> init(static_cast<std::size_t>(n), 0);
  init[0] = 1;
  layer[{start, 0}] = init;
  for (int placed = 1; placed < n; ++placed) {
    std::map<Key, std::vector<std::uint64_t>> next;
    for (const auto& [key, counts] : layer) {
      const auto& [shape, last_row] = key;
      for (int row = 0; row < rows; ++row) {
        const auto ur = static_cast<std::size_t>(row);
        if (shape[ur] >= lambda[row]) continue;
        if (row > 0 && shape[ur - 1] <= shape[ur]) continue;
        Shape grown = shape;
        ++grown[ur];
        // Entry `placed` is a descent when placed+1 sits in a lower row.
        const int shift = row > last_row ? placed % n : 0;
        auto& dst = next[{grown, row}];
        if (dst.empty()) dst.assign(static_cast<std::size_t>(n), 0);
        for (int res = 0; res < n; ++res) {
          dst[static_cast<std::size_t>((res + shift) % n)] += counts[static_cast<std::size_t>(res)];
        }
      }
    }
    layer = std::move(next);
  }
  std::uint64_t total = 0;
  for (const auto& [key, counts] : layer) total += counts[static_cast<std::size_t>(r)];
  return total;
}

Partition parse_partition(const std::string& text) {
  std::string body;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) body += c;
  }
  if (!body.empty() && (body.front() == '(' || body.front() == '[')) {
    const char close = body.front() == '(' ? ')' : ']';
    if (body.back() != close) throw ParameterError("unbalanced partition text: " + text);
    body = body.substr(1, body.size() - 2);
  }
  std::vector<int> parts;
  if (body.empty()) return Partition();
  std::stringstream ss(body);
  std::string token;
  while (std::getline(ss, token, ',')) {
    if (token.empty()) throw ParameterError("empty part in: " + text);
    const auto caret = token.find('^');
    try {
      std::size_t used = 0;
      const int value = std::stoi(token.substr(0, caret), &used);
      if (used != token.substr(0, caret).size() || value <= 0) throw ParameterError("");
      int times = 1;
      if (caret != std::string::npos) {
        const std::string exp = token.substr(caret + 1);
        times = std::stoi(exp, &used);
        if (used != exp.size() || times <= 0) throw ParameterError("");
      }
      for (int i = 0; i < times; ++i) parts.push_back(value);
    } catch (const std::exception&) {
      throw ParameterError("bad partition text: " + text);
    }
  }
  for (std::size_t i = 1; i < parts.size(); ++i) {
    if (parts[i] > parts[i - 1]) throw ParameterError("parts must be weakly decreasing: " + text);
  }
  return Partition(std::move(parts));
}

}  // namespace symcon
