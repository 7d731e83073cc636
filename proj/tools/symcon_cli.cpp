// symcon: expand module characteristics, run the verification catalog and
// print decomposition tables.
//
// Exit codes: 0 success, 1 a verification FAIL, 2 usage or parameter error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "symcon/characters.hpp"
#include "symcon/config.hpp"
#include "symcon/errors.hpp"
#include "symcon/kernels.hpp"
#include "symcon/repmodels.hpp"
#include "symcon/tables.hpp"
#include "symcon/verify.hpp"

namespace {

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kDefaultMaxN = 12;

struct RunConfig {
  int max_n = kDefaultMaxN;
  std::string threads = "auto";
  std::string format = "pretty";
  std::string out;
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string csv_field(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string rational_text(const symcon::Rational& r) { return r.get_str(); }

// Reads SYMCON_MAX_N, which replaces the hard cap.
int capacity_from_env() {
  const char* env = std::getenv("SYMCON_MAX_N");
  if (!env || !*env) return symcon::kHardMaxN;
  int value = 0;
  try {
    std::size_t used = 0;
    value = std::stoi(env, &used);
    if (used != std::string(env).size()) throw std::invalid_argument("");
  } catch (const std::exception&) {
    throw UsageError(std::string("SYMCON_MAX_N is not an integer: ") + env);
  }
  if (value < 1) throw UsageError("SYMCON_MAX_N must be positive");
  if (value > symcon::kHardMaxN) {
    std::cerr << "warning: SYMCON_MAX_N=" << value << " exceeds the supported cap of " << symcon::kHardMaxN
              << "; this configuration is unsupported and may exhaust memory\n";
  }
  return value;
}

void apply(RunConfig& cfg, bool max_n_given) {
  const int cap = capacity_from_env();
  if (!max_n_given) cfg.max_n = std::min(kDefaultMaxN, cap);
  if (cfg.max_n < 1) throw UsageError("--max-n must be at least 1");
  if (cfg.max_n > cap) {
    throw UsageError("--max-n " + std::to_string(cfg.max_n) + " exceeds the cap of " + std::to_string(cap) +
                     " (set SYMCON_MAX_N to override)");
  }
  symcon::set_max_n(cfg.max_n);
  if (cfg.threads != "auto") {
    int t = 0;
    try {
      std::size_t used = 0;
      t = std::stoi(cfg.threads, &used);
      if (used != cfg.threads.size()) throw std::invalid_argument("");
    } catch (const std::exception&) {
      throw UsageError("--threads expects a positive integer or 'auto'");
    }
    if (t < 1) throw UsageError("--threads expects a positive integer or 'auto'");
    symcon::kernels::set_threads(t);
  }
}

int thread_count(const RunConfig& cfg) { return cfg.threads == "auto" ? 0 : std::stoi(cfg.threads); }

void require_n(int n, int lo, const RunConfig& cfg) {
  if (n < lo || n > cfg.max_n) {
    throw UsageError("n=" + std::to_string(n) + " is outside the supported range " + std::to_string(lo) + ".." +
                     std::to_string(cfg.max_n) + " (raise --max-n to go further)");
  }
}

// ------------------------------------------------------------ expand

std::string render_expansion(const symcon::SchurExpansion& s, const std::string& format) {
  std::ostringstream out;
  if (format == "json") {
    out << symcon::to_json(s) << "\n";
  } else if (format == "csv") {
    out << "partition,multiplicity\n";
    for (const auto& [nu, m] : s.mults) out << csv_field(nu.to_json_key()) << "," << rational_text(m) << "\n";
  } else {
    out << symcon::to_pretty(s) << "\n" << "verdict " << symcon::to_string(s.verdict) << "\n";
  }
  return out.str();
}

// ------------------------------------------------------------ table

std::string render_table(symcon::TableKind kind, int n, const std::string& format) {
  const auto blocks = symcon::compute_table(kind, n);
  std::ostringstream out;
  const auto& parts = symcon::partitions_cached(n);
  if (format == "json") {
    nlohmann::ordered_json j;
    j["table"] = symcon::to_string(kind);
    j["n"] = n;
    auto arr = nlohmann::ordered_json::array();
    for (const auto& b : blocks) {
      nlohmann::ordered_json block;
      block["title"] = b.title;
      auto mults = nlohmann::ordered_json::object();
      for (const auto& [nu, m] : b.entries) mults[nu.to_json_key()] = m;
      block["mults"] = mults;
      arr.push_back(block);
    }
    j["blocks"] = arr;
    out << j.dump() << "\n";
  } else if (format == "csv") {
    out << "partition";
    if (blocks.size() == 1) {
      out << ",multiplicity";
    } else {
      for (const auto& b : blocks) out << "," << csv_field(b.title);
    }
    out << "\n";
    for (std::size_t i = 0; i < parts.size(); ++i) {
      out << csv_field(parts[i].to_json_key());
      for (const auto& b : blocks) out << "," << b.entries[i].second;
      out << "\n";
    }
  } else {
    std::size_t width = 0;
    for (const auto& p : parts) width = std::max(width, p.to_string().size());
    out << "partition" << std::string(width > 9 ? width - 9 : 0, ' ');
    for (const auto& b : blocks) out << "  " << b.title;
    out << "\n";
    for (std::size_t i = 0; i < parts.size(); ++i) {
      const std::string label = parts[i].to_string();
      out << label << std::string(std::max<std::size_t>(width, 9) - label.size(), ' ');
      for (const auto& b : blocks) {
        const std::string v = std::to_string(b.entries[i].second);
        out << "  " << std::string(b.title.size() > v.size() ? b.title.size() - v.size() : 0, ' ') << v;
      }
      out << "\n";
    }
  }
  return out.str();
}

// ------------------------------------------------------------ verify

std::string render_results(const std::vector<symcon::CheckResult>& results, const std::string& format) {
  std::ostringstream out;
  if (format == "csv") out << "id,n,status,detail\n";
  std::size_t counts[3] = {0, 0, 0};
  for (const auto& r : results) {
    ++counts[static_cast<int>(r.status)];
    if (format == "json") {
      out << symcon::to_json(r) << "\n";
    } else if (format == "csv") {
      out << csv_field(r.id) << "," << r.n << "," << symcon::to_string(r.status) << "," << csv_field(r.detail) << "\n";
    } else {
      out << symcon::to_line(r) << "\n";
    }
  }
  if (format == "pretty") {
    out << counts[0] << " PASS, " << counts[1] << " FAIL, " << counts[2] << " REPORT\n";
  }
  return out.str();
}

void emit(const std::string& text, const RunConfig& cfg) {
  if (cfg.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(cfg.out);
  if (!f) throw UsageError("cannot write " + cfg.out);
  f << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Conjugacy-action characteristics: expansion, verification and tables"};
  app.require_subcommand(1);
  app.fallthrough();

  RunConfig cfg;
  auto* max_n_opt = app.add_option("--max-n", cfg.max_n, "Largest degree to compute (default 12, cap 20)");
  app.add_option("--threads", cfg.threads, "Worker threads for the verify harness: a count or 'auto'");
  app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"json", "csv", "pretty"}));
  app.add_option("--out", cfg.out, "Write output to this file instead of standard output");

  std::string target;
  int n = 0;
  auto* expand = app.add_subcommand("expand", "Schur expansion of a module or family characteristic");
  expand->add_option("target", target, "Module (psi, eps, psi-a, ..., w:K) or family:<name>")->required();
  expand->add_option("n", n, "Degree")->required();

  std::string selector;
  auto* verify = app.add_subcommand("verify", "Run catalog checks");
  verify->add_option("selector", selector,
                     "all, a kind (identities, positivity, strictness, invariants, oracles, tables, "
                     "counterexamples, scans), a group such as thm4.13, or an entry id")
      ->required();

  std::string kind_text;
  int table_n = 0;
  auto* table = app.add_subcommand("table", "Decomposition table in reverse-lex row order");
  table->add_option("kind", kind_text, "t1, t2, t3 or t4")->required();
  table->add_option("n", table_n, "Degree")->required();

  auto* list = app.add_subcommand("catalog", "List catalog entries with their kinds, groups and ranges");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    apply(cfg, max_n_opt->count() > 0);
    if (*expand) {
      require_n(n, 1, cfg);
      const auto s = symcon::to_schur(symcon::module_char(symcon::parse_module(target), n), n);
      emit(render_expansion(s, cfg.format), cfg);
      return 0;
    }
    if (*table) {
      const auto kind = symcon::parse_table_kind(kind_text);
      const bool coset = kind == symcon::TableKind::T3 || kind == symcon::TableKind::T4;
      require_n(table_n, coset ? 2 : 1, cfg);
      emit(render_table(kind, table_n, cfg.format), cfg);
      return 0;
    }
    if (*verify) {
      symcon::HarnessOptions opts;
      opts.max_n = cfg.max_n;
      opts.threads = thread_count(cfg);
      const auto results = symcon::run_selector(selector, opts);
      emit(render_results(results, cfg.format), cfg);
      for (const auto& r : results) {
        if (r.failed()) return kExitFail;
      }
      return 0;
    }
    if (*list) {
      std::ostringstream out;
      for (const auto& e : symcon::catalog()) {
        out << e.id << "  " << e.group << "  " << symcon::to_string(e.kind) << "  ";
        out << (e.fixed ? "n=" + std::to_string(e.min_n) : std::to_string(e.min_n) + ".." + std::to_string(e.max_n));
        for (int x : e.excluded) out << " except " << x;
        out << "\n";
      }
      emit(out.str(), cfg);
      return 0;
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const symcon::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
