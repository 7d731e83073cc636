#pragma once

#include <string>
#include <utility>
#include <vector>

#include "symcon/partition.hpp"
#include "symcon/rational.hpp"
#include "symcon/report.hpp"

namespace symcon {

// T1: conjugation action ψ(S_n). T2: twisted conjugation ε(S_n).
// T3: ψ(S_n, A_n) and ψ(S_n, Ā_n). T4: ε(S_n, A_n) and ε(S_n, Ā_n).
enum class TableKind { T1, T2, T3, T4 };

std::string to_string(TableKind kind);          // "T1"
TableKind parse_table_kind(const std::string&);  // "t1" or "T1"; ParameterError

struct TableBlock {
  std::string title;  // e.g. "psi(S4,A4)"
  int n = 0;
  // Reverse-lex order. Complete blocks list every partition of n (zeros
  // included); partial blocks list only the transcribed entries.
  std::vector<std::pair<Partition, long>> entries;
  bool complete = false;
};

// Degrees for which transcribed data exists.
int fixture_min_n(TableKind kind);
int fixture_max_n(TableKind kind);

// Transcribed blocks for degree n (one block for T1/T2, two for T3/T4).
// Throws ParameterError when n is outside the transcribed range.
std::vector<TableBlock> table_fixture(TableKind kind, int n);

// The same blocks computed from the characteristics, always complete.
std::vector<TableBlock> compute_table(TableKind kind, int n);

// Σ f^ν · mult over the block, and the value it must take for a complete
// block: n! for T1/T2, n!/2 for each T3/T4 block.
Integer block_checksum(const TableBlock& block);
Integer expected_checksum(TableKind kind, int n);

// Checksum guard on the fixture, then exact comparison with the computed
// multiplicities. Id "table.T1" etc.
CheckResult reproduce_table(TableKind kind, int n);

}  // namespace symcon
