#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace symcon {

// A weakly decreasing sequence of positive integers. The constructor
// canonicalises its input: parts are sorted descending and zeros dropped.
class Partition {
 public:
  Partition() = default;
  Partition(std::initializer_list<int> parts);
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int size() const { return size_; }
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }
  int operator[](int i) const { return parts_[static_cast<std::size_t>(i)]; }
  int largest() const { return parts_.empty() ? 0 : parts_.front(); }

  // m_i(λ): how many parts equal i.
  int multiplicity(int i) const;

  // Multiplicities indexed 0..largest(); index 0 is unused and holds 0.
  std::vector<int> multiplicities() const;

  Partition conjugate() const;

  // Multiset union λ ∪ μ.
  Partition join(const Partition& other) const;

  // Every part multiplied by a (used by p_a[p_λ] = p_{aλ}).
  Partition scaled(int a) const;

  // Removes one part equal to `value`; throws ParameterError if absent.
  Partition without_part(int value) const;

  bool all_parts_odd() const;
  bool distinct_parts() const;
  bool is_self_conjugate() const;
  int num_distinct_part_sizes() const;

  // "(4,2,1,1)" style, with "()" for the empty partition.
  std::string to_string() const;
  // JSON array form "[4,2,1,1]".
  std::string to_json_key() const;

  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

// Reverse-lexicographic comparison: true when a precedes b in L_n, i.e. at
// the first differing index a has the larger part. A proper prefix comes
// after its extensions, which matches (n) first and (1^n) last within a size.
bool revlex_less(const Partition& a, const Partition& b);

// Map ordering used everywhere: by size ascending, then reverse-lex.
struct GradedRevLex {
  bool operator()(const Partition& a, const Partition& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return revlex_less(a, b);
  }
};

// All partitions of n in reverse-lex order.
std::vector<Partition> partitions_of(int n);

// Cached version of partitions_of; the returned reference lives for the
// whole process. Thread-safe.
const std::vector<Partition>& partitions_cached(int n);

// Position of λ in partitions_cached(|λ|).
int revlex_index(const Partition& lambda);

std::uint64_t partition_count(int n);

// z_λ = ∏ i^{m_i} m_i!. Exact for |λ| ≤ 20.
std::uint64_t z_lambda(const Partition& lambda);

std::uint64_t factorial(int n);

// Number of standard Young tableaux by the hook-length formula.
std::uint64_t syt_count(const Partition& lambda);

// Number of SYT of shape λ whose major index is ≡ r (mod n). |λ| must be n.
std::uint64_t maj_multiplicity(const Partition& lambda, int n, int r);

// Parses "(4,2,1,1)", "[4,2,1,1]", "4,2,1,1" or exponent shorthand such as
// "(2^2,1^3)". Throws ParameterError on malformed text.
Partition parse_partition(const std::string& text);

}  // namespace symcon
