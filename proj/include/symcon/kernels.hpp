#pragma once

// Hot loops in two flavours. The serial versions are the reference
// implementations used by the tests; the omp versions split the same work
// across OpenMP threads and must return identical results.

#include <cstdint>
#include <vector>

#include "symcon/partition.hpp"
#include "symcon/rational.hpp"
#include "symcon/symfunc.hpp"

namespace symcon {
class CharacterTable;
}

namespace symcon::kernels {

namespace serial {
// Row-major χ^ν(μ) matrix for all ν, μ ⊢ n.
std::vector<std::int64_t> character_values(int n);
// mult(ν) = Σ_λ c_λ χ^ν(λ) for every ν, in reverse-lex order.
std::vector<Rational> schur_multiplicities(const CharacterTable& table, const PowerSumExpr& f);
// Σ_{λ ⊢ n} H_λ[F] (or E_λ[F]).
PowerSumExpr sum_plethystic(int n, const GradedSeries& F, bool elementary);
}  // namespace serial

namespace omp {
std::vector<std::int64_t> character_values(int n);
std::vector<Rational> schur_multiplicities(const CharacterTable& table, const PowerSumExpr& f);
PowerSumExpr sum_plethystic(int n, const GradedSeries& F, bool elementary);
}  // namespace omp

// Threads used by omp kernels; 0 means the OpenMP default.
void set_threads(int threads);
int threads();

}  // namespace symcon::kernels
