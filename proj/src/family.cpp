#include "symcon/family.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

#include "symcon/errors.hpp"

namespace symcon {

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

FamilySpec FamilySpec::parts_one_or_k(int k) { return make(FamilyKind::PartsOneOrK, k); }
FamilySpec FamilySpec::parts_divide_k(int k) { return make(FamilyKind::PartsDivideK, k); }
FamilySpec FamilySpec::weighted_even_parts(int k) { return make(FamilyKind::WeightedEvenParts, k); }
FamilySpec FamilySpec::prime_p_family(int p) { return make(FamilyKind::PrimePFamily, p); }

FamilySpec FamilySpec::lex_segment(Partition mu) {
  FamilySpec s = make(FamilyKind::LexSegment);
  s.start = std::move(mu);
  return s;
}

FamilySpec FamilySpec::explicit_set(std::vector<Partition> list) {
  FamilySpec s = make(FamilyKind::Explicit);
  s.explicit_list = std::move(list);
  return s;
}

std::string FamilySpec::name() const {
  switch (kind) {
    case FamilyKind::All: return "all";
    case FamilyKind::OddParts: return "odd-parts";
    case FamilyKind::EvenSign: return "even-sign";
    case FamilyKind::OddSign: return "odd-sign";
    case FamilyKind::NotDO: return "not-do";
    case FamilyKind::NotDOEvenSign: return "not-do-even-sign";
    case FamilyKind::DO: return "do";
    case FamilyKind::Distinct: return "distinct";
    case FamilyKind::PartsOneOrK: return "one-or-k:" + std::to_string(param);
    case FamilyKind::PartsDivideK: return "divides-k:" + std::to_string(param);
    case FamilyKind::WeightedEvenParts: return "thm59:" + std::to_string(param);
    case FamilyKind::PrimePFamily: return "prime-family:" + std::to_string(param);
    case FamilyKind::LexSegment: return "lex-from:" + start.to_json_key();
    case FamilyKind::Explicit: {
      std::string s = "explicit:[";
      for (std::size_t i = 0; i < explicit_list.size(); ++i) {
        if (i) s += ',';
        s += explicit_list[i].to_json_key();
      }
      return s + "]";
    }
  }
  return "?";
}

void validate(const FamilySpec& spec, int n) {
  switch (spec.kind) {
    case FamilyKind::PartsOneOrK:
    case FamilyKind::PartsDivideK:
    case FamilyKind::WeightedEvenParts:
      if (spec.param < 1) throw ParameterError(spec.name() + ": k must be at least 1");
      break;
    case FamilyKind::PrimePFamily:
      if (spec.param < 3 || !is_prime(spec.param)) {
        throw ParameterError(spec.name() + ": p must be an odd prime");
      }
      break;
    case FamilyKind::LexSegment:
      if (n >= 0 && spec.start.size() != n) {
        throw ParameterError(spec.name() + ": start partition is not a partition of " +
                             std::to_string(n));
      }
      break;
    default:
      break;
  }
}

namespace {

bool divides(int d, int k) { return k % d == 0; }

}  // namespace

bool in_family(const Partition& lambda, const FamilySpec& spec) {
  const int n = lambda.size();
  const int sign_parity = (n - lambda.length()) % 2;
  const bool is_do = lambda.all_parts_odd() && lambda.distinct_parts();
  switch (spec.kind) {
    case FamilyKind::All: return true;
    case FamilyKind::OddParts: return lambda.all_parts_odd();
    case FamilyKind::EvenSign: return sign_parity == 0;
    case FamilyKind::OddSign: return sign_parity == 1;
    case FamilyKind::NotDO: return !is_do;
    case FamilyKind::NotDOEvenSign: return !is_do && sign_parity == 0;
    case FamilyKind::DO: return is_do;
    case FamilyKind::Distinct: return lambda.distinct_parts();
    case FamilyKind::PartsOneOrK:
      for (int p : lambda.parts()) {
        if (p != 1 && p != spec.param) return false;
      }
      return true;
    case FamilyKind::PartsDivideK:
      for (int p : lambda.parts()) {
        if (!divides(p, spec.param)) return false;
      }
      return true;
    case FamilyKind::WeightedEvenParts: {
      const int k = spec.param;
      for (int p : lambda.parts()) {
        if (p % 2 == 1) {
          if (!divides(p, k)) return false;
        } else if (lambda.multiplicity(p) > 1 || divides(p, k) || !divides(p / 2, k)) {
          return false;
        }
      }
      return true;
    }
    case FamilyKind::PrimePFamily: {
      const int p = spec.param;
      for (int part : lambda.parts()) {
        if (part != 1 && part != 2 && part != p && part != 2 * p) return false;
        if (part % 2 == 0 && lambda.multiplicity(part) > 1) return false;
      }
      return true;
    }
    case FamilyKind::LexSegment:
      return lambda.size() == spec.start.size() && !revlex_less(lambda, spec.start);
    case FamilyKind::Explicit:
      for (const auto& mu : spec.explicit_list) {
        if (mu == lambda) return true;
      }
      return false;
  }
  return false;
}

std::vector<Partition> members(const FamilySpec& spec, int n) {
  validate(spec, n);
  std::vector<Partition> out;
  for (const auto& lambda : partitions_cached(n)) {
    if (in_family(lambda, spec)) out.push_back(lambda);
  }
  return out;
}

namespace {

int parse_param(const std::string& text, const std::string& what) {
  try {
    std::size_t used = 0;
    const int v = std::stoi(text, &used);
    if (used != text.size()) throw ParameterError("");
    return v;
  } catch (const std::exception&) {
    throw ParameterError("bad integer parameter for " + what + ": '" + text + "'");
  }
}

std::vector<Partition> parse_partition_list(const std::string& json_text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw ParameterError(std::string("explicit family is not valid JSON: ") + e.what());
  }
  if (!j.is_array()) throw ParameterError("explicit family must be a JSON array of partitions");
  std::vector<Partition> out;
  for (const auto& item : j) {
    if (!item.is_array()) throw ParameterError("explicit family entries must be arrays");
    std::vector<int> parts;
    for (const auto& v : item) {
      if (!v.is_number_integer() || v.get<int>() <= 0) {
        throw ParameterError("explicit family parts must be positive integers");
      }
      parts.push_back(v.get<int>());
    }
    out.emplace_back(std::move(parts));
  }
  return out;
}

}  // namespace

FamilySpec parse_family(const std::string& text) {
  const auto colon = text.find(':');
  const std::string head = text.substr(0, colon);
  const std::string arg = colon == std::string::npos ? std::string() : text.substr(colon + 1);
  const bool has_arg = colon != std::string::npos;
  auto plain = [&](FamilySpec s) {
    if (has_arg) throw ParameterError("family '" + head + "' takes no parameter");
    return s;
  };
  FamilySpec spec;
  if (head == "all") spec = plain(FamilySpec::all());
  else if (head == "odd-parts") spec = plain(FamilySpec::odd_parts());
  else if (head == "even-sign") spec = plain(FamilySpec::even_sign());
  else if (head == "odd-sign") spec = plain(FamilySpec::odd_sign());
  else if (head == "not-do") spec = plain(FamilySpec::not_do());
  else if (head == "not-do-even-sign") spec = plain(FamilySpec::not_do_even_sign());
  else if (head == "do") spec = plain(FamilySpec::distinct_odd());
  else if (head == "distinct") spec = plain(FamilySpec::distinct());
  else if (head == "one-or-k") spec = FamilySpec::parts_one_or_k(parse_param(arg, head));
  else if (head == "divides-k") spec = FamilySpec::parts_divide_k(parse_param(arg, head));
  else if (head == "thm59") spec = FamilySpec::weighted_even_parts(parse_param(arg, head));
  else if (head == "prime-family") spec = FamilySpec::prime_p_family(parse_param(arg, head));
  else if (head == "lex-from") {
    if (!has_arg) throw ParameterError("lex-from needs a partition");
    spec = FamilySpec::lex_segment(parse_partition(arg));
  } else if (head == "explicit") {
    if (!has_arg) throw ParameterError("explicit needs a file name");
    std::ifstream in(arg);
    if (!in) throw ParameterError("cannot read explicit family file: " + arg);
    std::stringstream buf;
    buf << in.rdbuf();
    spec = FamilySpec::explicit_set(parse_partition_list(buf.str()));
  } else {
    throw ParameterError("unknown family: " + text);
  }
  validate(spec);
  return spec;
}

}  // namespace symcon
