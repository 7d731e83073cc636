#pragma once

#include <string>
#include <vector>

#include "symcon/partition.hpp"
#include "symcon/rational.hpp"
#include "symcon/symfunc.hpp"

namespace symcon {

enum class Status { Pass, Fail, Report };

std::string to_string(Status s);

// A single offending (or reported) value: a partition and its multiplicity
// or coefficient, plus an optional note.
struct Witness {
  Partition nu;
  Rational value;
  std::string note;
};

struct CheckResult {
  std::string id;
  int n = 0;
  Status status = Status::Pass;
  std::string detail;
  std::vector<Witness> witnesses;

  bool failed() const { return status == Status::Fail; }
};

CheckResult pass(std::string id, int n, std::string detail = {});
CheckResult fail(std::string id, int n, std::string detail, std::vector<Witness> witnesses);
CheckResult report(std::string id, int n, std::string detail, std::vector<Witness> witnesses = {});

// {"id":"thm4.2.6","n":6,"status":"PASS",...}
// PASS when lhs == rhs exactly; otherwise FAIL listing up to five
// partitions where the coefficients differ, valued lhs - rhs.
CheckResult compare(std::string id, int n, const PowerSumExpr& lhs, const PowerSumExpr& rhs);

std::string to_json(const CheckResult& r);
std::string to_line(const CheckResult& r);

}  // namespace symcon
