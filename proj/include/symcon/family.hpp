#pragma once

#include <string>
#include <vector>

#include "symcon/partition.hpp"

namespace symcon {

enum class FamilyKind {
  All,
  OddParts,
  EvenSign,        // n - ℓ(λ) even
  OddSign,         // n - ℓ(λ) odd
  NotDO,           // not (distinct and all odd)
  NotDOEvenSign,
  DO,              // distinct odd parts
  Distinct,
  PartsOneOrK,     // every part is 1 or k
  PartsDivideK,    // every part divides k
  WeightedEvenParts,        // odd parts divide k; each even part once, e∤k, (e/2)|k
  PrimePFamily,    // parts in {1,2,p,2p}, each even part at most once
  LexSegment,      // [μ, (1^n)] in reverse-lex order
  Explicit,        // a user supplied list
};

// Symbolic description of a subset T_n of Par_n.
struct FamilySpec {
  FamilyKind kind = FamilyKind::All;
  int param = 0;                       // k or p where relevant
  Partition start;                     // LexSegment only
  std::vector<Partition> explicit_list;  // Explicit only

  static FamilySpec make(FamilyKind kind, int param = 0) {
    FamilySpec s;
    s.kind = kind;
    s.param = param;
    return s;
  }
  static FamilySpec all() { return make(FamilyKind::All); }
  static FamilySpec odd_parts() { return make(FamilyKind::OddParts); }
  static FamilySpec even_sign() { return make(FamilyKind::EvenSign); }
  static FamilySpec odd_sign() { return make(FamilyKind::OddSign); }
  static FamilySpec not_do() { return make(FamilyKind::NotDO); }
  static FamilySpec not_do_even_sign() { return make(FamilyKind::NotDOEvenSign); }
  static FamilySpec distinct_odd() { return make(FamilyKind::DO); }
  static FamilySpec distinct() { return make(FamilyKind::Distinct); }
  static FamilySpec parts_one_or_k(int k);
  static FamilySpec parts_divide_k(int k);
  static FamilySpec weighted_even_parts(int k);
  static FamilySpec prime_p_family(int p);
  static FamilySpec lex_segment(Partition mu);
  static FamilySpec explicit_set(std::vector<Partition> members);

  // CLI spelling, e.g. "divides-k:3" or "lex-from:[3,1]".
  std::string name() const;
};

// Validates parameters for degree n (n < 0 skips the size checks of
// LexSegment). Throws ParameterError.
void validate(const FamilySpec& spec, int n = -1);

bool in_family(const Partition& lambda, const FamilySpec& spec);

// Members of the family among partitions of n, in reverse-lex order.
std::vector<Partition> members(const FamilySpec& spec, int n);

// Parses the CLI family names. "explicit:<file>" reads a JSON array of
// partitions from the file. Throws ParameterError.
FamilySpec parse_family(const std::string& text);

bool is_prime(int p);

}  // namespace symcon
