#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "symcon/partition.hpp"
#include "symcon/rational.hpp"
#include "symcon/symfunc.hpp"

namespace symcon {

// χ^ν(μ) for all ν, μ ⊢ n. Rows (ν) and columns (μ) follow reverse-lex
// order, so row/column indices agree with partitions_cached(n).
class CharacterTable {
 public:
  CharacterTable(int n, std::vector<std::int64_t> values);

  int n() const { return n_; }
  int dim() const { return static_cast<int>(partitions_cached(n_).size()); }
  const std::vector<Partition>& labels() const { return partitions_cached(n_); }
  std::int64_t at(int row, int col) const {
    return values_[static_cast<std::size_t>(row) * static_cast<std::size_t>(dim()) +
                   static_cast<std::size_t>(col)];
  }
  std::int64_t value(const Partition& nu, const Partition& mu) const;
  const std::vector<std::int64_t>& raw() const { return values_; }

 private:
  int n_;
  std::vector<std::int64_t> values_;
};

// Single character value by memoised border-strip removal.
std::int64_t mn_character(const Partition& nu, const Partition& mu);

// Process-wide cached table, built at most once per n. Thread-safe.
const CharacterTable& character_table(int n);

// Independent oracle for n ≤ 6: coefficient of x^{ν+δ} in p_μ·a_δ.
std::int64_t alternant_oracle(const Partition& nu, const Partition& mu);

enum class Verdict { Positive, Nonnegative, Mixed, NonIntegral };

std::string to_string(Verdict v);

struct SchurExpansion {
  int n = 0;
  // Every ν ⊢ n appears, including zero multiplicities, in reverse-lex order.
  std::vector<std::pair<Partition, Rational>> mults;
  Verdict verdict = Verdict::Positive;

  Rational mult(const Partition& nu) const;
};

Verdict classify(const std::vector<std::pair<Partition, Rational>>& mults);

// Power-sum to Schur conversion. f must be homogeneous of degree n ≥ 0
// (the zero expression is accepted for any n).
SchurExpansion to_schur(const PowerSumExpr& f, int n);
SchurExpansion to_schur(const PowerSumExpr& f);

// s_ν = Σ_λ z_λ^{-1} χ^ν(λ) p_λ.
PowerSumExpr schur_to_power(const Partition& nu);

// {"n":6,"mults":{"[4,2]":14,...},"verdict":"POSITIVE"}; zero entries omitted.
std::string to_json(const SchurExpansion& s);

// "3·(3) + 1·(2,1) + 1·(1,1,1)"; zero entries omitted.
std::string to_pretty(const SchurExpansion& s);

}  // namespace symcon
