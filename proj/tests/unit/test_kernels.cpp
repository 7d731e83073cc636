#include "doctest.h"

#include "symcon/characters.hpp"
#include "symcon/kernels.hpp"
#include "symcon/repmodels.hpp"

using namespace symcon;

TEST_CASE("parallel character values match the serial kernel") {
  for (int n = 1; n <= 11; ++n) CHECK(kernels::omp::character_values(n) == kernels::serial::character_values(n));
}

TEST_CASE("serial character values match the cached table") {
  for (int n = 1; n <= 9; ++n) CHECK(kernels::serial::character_values(n) == character_table(n).raw());
}

TEST_CASE("parallel Schur multiplicities match the serial kernel") {
  for (int n = 2; n <= 10; ++n) {
    const auto f = module_char(ModuleSpec(ModuleId::PsiA), n);
    const auto& t = character_table(n);
    CHECK(kernels::omp::schur_multiplicities(t, f) == kernels::serial::schur_multiplicities(t, f));
  }
}

TEST_CASE("parallel plethystic sums match the serial kernel") {
  const auto F = foulkes_series(0, 10);
  for (int n = 1; n <= 9; ++n) {
    CHECK(kernels::omp::sum_plethystic(n, F, false) == kernels::serial::sum_plethystic(n, F, false));
    CHECK(kernels::omp::sum_plethystic(n, F, true) == kernels::serial::sum_plethystic(n, F, true));
  }
}

TEST_CASE("thread count setting is observable") {
  kernels::set_threads(2);
  CHECK(kernels::threads() == 2);
  CHECK(kernels::omp::character_values(8) == kernels::serial::character_values(8));
  kernels::set_threads(0);
  CHECK(kernels::threads() == 0);
}
