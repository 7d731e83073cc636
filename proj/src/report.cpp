#include "symcon/report.hpp"

#include "json.hpp"

namespace symcon {

std::string to_string(Status s) {
  switch (s) {
    case Status::Pass: return "PASS";
    case Status::Fail: return "FAIL";
    case Status::Report: return "REPORT";
  }
  return "?";
}

CheckResult pass(std::string id, int n, std::string detail) {
  return {std::move(id), n, Status::Pass, std::move(detail), {}};
}

CheckResult fail(std::string id, int n, std::string detail, std::vector<Witness> witnesses) {
  if (witnesses.empty()) witnesses.push_back({Partition(), 0, "no structured witness"});
  return {std::move(id), n, Status::Fail, std::move(detail), std::move(witnesses)};
}

CheckResult report(std::string id, int n, std::string detail, std::vector<Witness> witnesses) {
  return {std::move(id), n, Status::Report, std::move(detail), std::move(witnesses)};
}

CheckResult compare(std::string id, int n, const PowerSumExpr& lhs, const PowerSumExpr& rhs) {
  const PowerSumExpr diff = sub(lhs, rhs);
  if (diff.is_zero()) return pass(std::move(id), n);
  std::vector<Witness> w;
  for (const auto& [lambda, c] : diff.terms()) {
    if (w.size() == 5) break;
    w.push_back({lambda, c, "coefficient difference"});
  }
  return fail(std::move(id), n, "sides differ in " + std::to_string(diff.num_terms()) + " power-sum terms",
              std::move(w));
}

std::string to_json(const CheckResult& r) {
  nlohmann::ordered_json j;
  j["id"] = r.id;
  j["n"] = r.n;
  j["status"] = to_string(r.status);
  if (!r.detail.empty()) j["detail"] = r.detail;
  if (!r.witnesses.empty()) {
    auto arr = nlohmann::ordered_json::array();
    for (const auto& w : r.witnesses) {
      nlohmann::ordered_json item;
      item["partition"] = w.nu.to_json_key();
      item["value"] = w.value.get_str();
      if (!w.note.empty()) item["note"] = w.note;
      arr.push_back(item);
    }
    j["witnesses"] = arr;
  }
  return j.dump();
}

std::string to_line(const CheckResult& r) {
  std::string s = to_string(r.status) + " " + r.id + " n=" + std::to_string(r.n);
  if (!r.detail.empty()) s += " : " + r.detail;
  for (const auto& w : r.witnesses) {
    s += " [" + w.nu.to_string() + " -> " + w.value.get_str();
    if (!w.note.empty()) s += " " + w.note;
    s += "]";
  }
  return s;
}

}  // namespace symcon
