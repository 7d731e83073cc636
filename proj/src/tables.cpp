#include "symcon/tables.hpp"

#include <cctype>
#include <map>
#include <mutex>
#include <regex>
#include <sstream>

#include "symcon/characters.hpp"
#include "symcon/errors.hpp"
#include "symcon/repmodels.hpp"
#include "table_fixtures.hpp"

namespace symcon {

std::string to_string(TableKind kind) {
  switch (kind) {
    case TableKind::T1: return "T1";
    case TableKind::T2: return "T2";
    case TableKind::T3: return "T3";
    case TableKind::T4: return "T4";
  }
  return "?";
}

TableKind parse_table_kind(const std::string& text) {
  std::string t;
  for (char c : text) t += static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  if (t == "T1") return TableKind::T1;
  if (t == "T2") return TableKind::T2;
  if (t == "T3") return TableKind::T3;
  if (t == "T4") return TableKind::T4;
  throw ParameterError("unknown table: " + text + " (expected t1, t2, t3 or t4)");
}

namespace {

struct RawEntry {
  std::string key;   // "" for T1/T2, "A" or "Abar" for T3/T4
  std::string body;
};

// Joins continuation lines and splits "head: body" records.
std::map<int, std::vector<RawEntry>> split_records(const char* text) {
  std::vector<std::string> records;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    if (std::isspace(static_cast<unsigned char>(line[0])) && !records.empty()) {
      records.back() += " " + line.substr(line.find_first_not_of(" \t"));
    } else {
      records.push_back(line);
    }
  }
  std::map<int, std::vector<RawEntry>> out;
  for (const auto& rec : records) {
    const auto colon = rec.find(':');
    std::istringstream head(rec.substr(0, colon));
    int n = 0;
    RawEntry e;
    head >> n >> e.key;
    e.body = rec.substr(colon + 1);
    out[n].push_back(std::move(e));
  }
  return out;
}

std::string block_title(TableKind kind, int n, const std::string& key) {
  const std::string base = (kind == TableKind::T1 || kind == TableKind::T3) ? "psi" : "eps";
  const std::string s = "S" + std::to_string(n);
  if (key.empty()) return base + "(" + s + ")";
  return base + "(" + s + "," + key + std::to_string(n) + ")";
}

TableBlock column_block(TableKind kind, int n, const std::string& body) {
  TableBlock b;
  b.title = block_title(kind, n, "");
  b.n = n;
  std::istringstream in(body);
  std::vector<long> values;
  long v = 0;
  while (in >> v) values.push_back(v);
  const auto& parts = partitions_cached(n);
  if (values.size() > parts.size()) throw Error("table fixture " + b.title + " has too many entries");
  for (std::size_t i = 0; i < values.size(); ++i) b.entries.emplace_back(parts[i], values[i]);
  b.complete = values.size() == parts.size();
  return b;
}

TableBlock sum_block(TableKind kind, int n, const RawEntry& raw) {
  TableBlock b;
  b.title = block_title(kind, n, raw.key);
  b.n = n;
  std::map<Partition, long, GradedRevLex> given;
  static const std::regex term(R"((\d*)\s*\(([^)]*)\))");
  for (auto it = std::sregex_iterator(raw.body.begin(), raw.body.end(), term); it != std::sregex_iterator(); ++it) {
    const long c = (*it)[1].length() ? std::stol((*it)[1].str()) : 1;
    const Partition nu = parse_partition((*it)[2].str());
    if (nu.size() != n) throw Error("table fixture " + b.title + ": " + nu.to_string() + " has the wrong size");
    if (!given.emplace(nu, c).second) throw Error("table fixture " + b.title + ": " + nu.to_string() + " repeated");
  }
  for (const auto& nu : partitions_cached(n)) {
    auto it = given.find(nu);
    b.entries.emplace_back(nu, it == given.end() ? 0L : it->second);
  }
  b.complete = true;
  return b;
}

const std::map<int, std::vector<TableBlock>>& parsed(TableKind kind) {
  static std::mutex mutex;
  static std::map<TableKind, std::map<int, std::vector<TableBlock>>> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto found = cache.find(kind);
  if (found != cache.end()) return found->second;
  const char* text = nullptr;
  switch (kind) {
    case TableKind::T1: text = detail::kTable1; break;
    case TableKind::T2: text = detail::kTable2; break;
    case TableKind::T3: text = detail::kTable3; break;
    case TableKind::T4: text = detail::kTable4; break;
  }
  std::map<int, std::vector<TableBlock>> blocks;
  for (const auto& [n, raws] : split_records(text)) {
    for (const auto& raw : raws) {
      if (kind == TableKind::T1 || kind == TableKind::T2) {
        blocks[n].push_back(column_block(kind, n, raw.body));
      } else {
        blocks[n].push_back(sum_block(kind, n, raw));
      }
    }
  }
  return cache.emplace(kind, std::move(blocks)).first->second;
}

std::vector<ModuleSpec> modules_for(TableKind kind) {
  switch (kind) {
    case TableKind::T1: return {ModuleSpec(ModuleId::Psi)};
    case TableKind::T2: return {ModuleSpec(ModuleId::Eps)};
    case TableKind::T3: return {ModuleSpec(ModuleId::PsiA), ModuleSpec(ModuleId::PsiAbar)};
    case TableKind::T4: return {ModuleSpec(ModuleId::EpsA), ModuleSpec(ModuleId::EpsAbar)};
  }
  return {};
}

}  // namespace

int fixture_min_n(TableKind kind) { return parsed(kind).begin()->first; }
int fixture_max_n(TableKind kind) { return parsed(kind).rbegin()->first; }

std::vector<TableBlock> table_fixture(TableKind kind, int n) {
  const auto& all = parsed(kind);
  auto it = all.find(n);
  if (it == all.end()) {
    throw ParameterError("table " + to_string(kind) + " has no data for n=" + std::to_string(n) + " (range " +
                         std::to_string(fixture_min_n(kind)) + ".." + std::to_string(fixture_max_n(kind)) + ")");
  }
  return it->second;
}

std::vector<TableBlock> compute_table(TableKind kind, int n) {
  std::vector<TableBlock> out;
  const std::vector<std::string> keys =
      (kind == TableKind::T1 || kind == TableKind::T2) ? std::vector<std::string>{""}
                                                       : std::vector<std::string>{"A", "Abar"};
  const auto modules = modules_for(kind);
  for (std::size_t i = 0; i < modules.size(); ++i) {
    TableBlock b;
    b.title = block_title(kind, n, keys[i]);
    b.n = n;
    b.complete = true;
    const auto s = to_schur(module_char(modules[i], n), n);
    for (const auto& [nu, m] : s.mults) {
      if (!is_integer(m) || !m.get_num().fits_slong_p()) throw Error("compute_table: non-integral multiplicity");
      b.entries.emplace_back(nu, m.get_num().get_si());
    }
    out.push_back(std::move(b));
  }
  return out;
}

Integer block_checksum(const TableBlock& block) {
  Integer sum = 0;
  for (const auto& [nu, m] : block.entries) sum += from_u64(syt_count(nu)).get_num() * m;
  return sum;
}

Integer expected_checksum(TableKind kind, int n) {
  Integer f = from_u64(factorial(n)).get_num();
  if ((kind == TableKind::T3 || kind == TableKind::T4) && n >= 2) f /= 2;
  return f;
}

CheckResult reproduce_table(TableKind kind, int n) {
  const std::string id = "table." + to_string(kind);
  const auto want = table_fixture(kind, n);
  std::string checksum_note;
  for (const auto& block : want) {
    if (block.complete && block_checksum(block) != expected_checksum(kind, n)) {
      checksum_note += "; fixture checksum of " + block.title + " is " + block_checksum(block).get_str() +
                       ", expected " + expected_checksum(kind, n).get_str();
    }
  }
  const auto got = compute_table(kind, n);
  std::vector<Witness> diffs;
  std::size_t compared = 0;
  for (std::size_t b = 0; b < want.size(); ++b) {
    for (const auto& [nu, expect] : want[b].entries) {
      const auto idx = static_cast<std::size_t>(revlex_index(nu));
      const long actual = got[b].entries[idx].second;
      ++compared;
      if (actual != expect) {
        diffs.push_back({nu, Rational(actual), want[b].title + " table entry " + std::to_string(expect)});
      }
    }
  }
  if (!diffs.empty() || !checksum_note.empty()) {
    const std::string detail = std::to_string(diffs.size()) + " of " + std::to_string(compared) + " entries differ" + checksum_note;
    return fail(id, n, detail, std::move(diffs));
  }
  return pass(id, n, std::to_string(compared) + " entries match");
}

}  // namespace symcon
