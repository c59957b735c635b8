// Copyright 2026 The ffgrowth Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "ffgrowth/cli.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "ffgrowth/cases.hpp"
#include "ffgrowth/energy.hpp"
#include "ffgrowth/harness.hpp"
#include "ffgrowth/hypothesis.hpp"
#include "ffgrowth/lemmas.hpp"
#include "ffgrowth/set_file.hpp"
#include "ffgrowth/set_ops.hpp"
#include "ffgrowth/subfield.hpp"
#include "json.hpp"

namespace ffgrowth::cli {
namespace {

using Json = nlohmann::ordered_json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvariantFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Library validation errors raised inside fn are reported against `flag`.
template <class Fn>
auto for_flag(std::string_view flag, Fn&& fn) {
  try {
    return fn();
  } catch (const Error& e) {
    if (!e.is_validation()) throw;
    throw UsageError(std::string(flag) + ": " + e.what());
  }
}

double round6(double v) { return std::round(v * 1e6) / 1e6; }

Json optional_number(const std::optional<double>& v) {
  return v ? Json(round6(*v)) : Json(nullptr);
}

std::string big(const BigInt& v) { return v.str(); }

// ---------------------------------------------------------------------------
// Output rendering.

std::string scalar_text(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_null()) return "-";
  return v.dump();
}

std::string inline_text(const Json& v, char sep) {
  if (v.is_array()) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (i) s += sep;
      s += inline_text(v[i], sep);
    }
    return s;
  }
  if (v.is_object()) {
    std::string s;
    for (const auto& [k, item] : v.items()) {
      if (!s.empty()) s += ' ';
      s += k + "=" + inline_text(item, ',');
    }
    return s;
  }
  return scalar_text(v);
}

void text_lines(const Json& j, const std::string& prefix, std::string& out) {
  for (const auto& [k, v] : j.items()) {
    const std::string key = prefix.empty() ? k : prefix + "." + k;
    if (v.is_object()) {
      text_lines(v, key, out);
    } else if (v.is_array() && !v.empty() && v[0].is_object()) {
      for (const auto& item : v) out += key + ": " + inline_text(item, ',') + "\n";
    } else {
      out += key + ": " + inline_text(v, ',') + "\n";
    }
  }
}

void csv_cells(const Json& j, const std::string& prefix, std::vector<std::string>& keys,
               std::vector<std::string>& values) {
  for (const auto& [k, v] : j.items()) {
    const std::string key = prefix.empty() ? k : prefix + "." + k;
    if (v.is_object()) {
      csv_cells(v, key, keys, values);
      continue;
    }
    std::string cell = inline_text(v, ';');
    if (cell.find_first_of(",\"") != std::string::npos) {
      std::string quoted = "\"";
      for (char c : cell) quoted += c == '"' ? std::string("\"\"") : std::string(1, c);
      cell = quoted + "\"";
    }
    keys.push_back(key);
    values.push_back(cell);
  }
}

enum class Format { kText, kCsv, kJson };

std::string render(const Json& report, Format format) {
  switch (format) {
    case Format::kJson:
      return report.dump(2) + "\n";
    case Format::kCsv: {
      std::vector<std::string> keys, values;
      csv_cells(report, "", keys, values);
      std::string out;
      for (std::size_t i = 0; i < keys.size(); ++i) out += (i ? "," : "") + keys[i];
      out += "\n";
      for (std::size_t i = 0; i < values.size(); ++i) out += (i ? "," : "") + values[i];
      return out + "\n";
    }
    case Format::kText:
      break;
  }
  std::string out;
  text_lines(report, "", out);
  return out;
}

struct Common {
  std::string format = "text";
  std::string out;

  Format fmt() const {
    if (format == "csv") return Format::kCsv;
    if (format == "json") return Format::kJson;
    return Format::kText;
  }
};

void emit(const std::string& text, const Common& common, std::ostream& out) {
  if (common.out.empty()) {
    out << text;
    return;
  }
  std::ofstream file(common.out, std::ios::binary);
  if (!file) throw UsageError("--out: cannot write " + common.out);
  file << text;
}

// ---------------------------------------------------------------------------
// Argument helpers.

std::vector<std::uint32_t> parse_list(const std::string& text, std::string_view flag) {
  std::vector<std::uint32_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::uint32_t v = 0;
    const auto* end = item.data() + item.size();
    auto [ptr, ec] = std::from_chars(item.data(), end, v);
    if (ec != std::errc() || ptr != end) {
      throw UsageError(std::string(flag) + ": expected a comma-separated list of integers, got '" + text + "'");
    }
    out.push_back(v);
  }
  return out;
}

std::pair<std::size_t, std::size_t> parse_range(const std::string& text) {
  auto parse_one = [&](std::string_view s) {
    std::size_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size()) {
      throw UsageError("--n: expected N or LO..HI, got '" + text + "'");
    }
    return v;
  };
  const auto dots = text.find("..");
  if (dots == std::string::npos) {
    const auto v = parse_one(text);
    return {v, v};
  }
  const auto lo = parse_one(std::string_view(text).substr(0, dots));
  const auto hi = parse_one(std::string_view(text).substr(dots + 2));
  if (lo > hi) throw UsageError("--n: empty range '" + text + "'");
  return {lo, hi};
}

Rational parse_eps(const std::string& text) {
  try {
    return parse_rational(text);
  } catch (const std::exception&) {
    throw UsageError("--eps: expected a number such as 0.1 or 1/10, got '" + text + "'");
  }
}

FieldPtr build_field(std::uint32_t p, std::uint32_t k, const std::string& modulus) {
  BuildOptions options;
  options.universe_cap = universe_cap_from_env();
  std::optional<std::vector<std::uint32_t>> m;
  if (!modulus.empty()) m = parse_list(modulus, "--modulus");
  try {
    return Field::build(p, k, m, options);
  } catch (const Error& e) {
    switch (e.code()) {
      case ErrorCode::kNotPrime: throw UsageError(std::string("--p: ") + e.what());
      case ErrorCode::kUniverseTooLarge: throw UsageError(std::string("--k: ") + e.what());
      default: throw UsageError(std::string("--modulus: ") + e.what());
    }
  }
}

struct SetInput {
  std::string path;
  std::optional<std::uint32_t> p;
  std::optional<std::uint32_t> k;
  bool normalize = false;
};

FSet load_set(const std::string& path, std::string_view flag, const FieldPtr& reuse = nullptr) {
  SetFileOptions options;
  options.universe_cap = universe_cap_from_env();
  options.reuse = reuse;
  return for_flag(flag, [&] { return read_set_file(path, options); });
}

FSet load_primary(const SetInput& in) {
  FSet a = load_set(in.path, "--file");
  if (in.p && *in.p != a.field().p()) {
    throw UsageError("--p: set file is over characteristic " + std::to_string(a.field().p()));
  }
  if (in.k && *in.k != a.field().k()) {
    throw UsageError("--k: set file is over an extension of degree " + std::to_string(a.field().k()));
  }
  if (in.normalize) return for_flag("--normalize", [&] { return normalize_affine(a); });
  return a;
}

FSet load_rhs(const std::string& path, const FSet& lhs) {
  FSet b = load_set(path, "--rhs", lhs.field_ptr());
  if (!b.field().same_as(lhs.field())) throw UsageError("--rhs: set lives in a different field than --file");
  return b;
}

void add_set_input(CLI::App* cmd, SetInput& in) {
  cmd->add_option("--file", in.path, "Set file")->required();
  cmd->add_option("--p", in.p, "Expected characteristic (validated against the file)");
  cmd->add_option("--k", in.k, "Expected extension degree (validated against the file)");
  cmd->add_flag("--normalize", in.normalize, "Map A affinely so that 0 and 1 are in A");
}

// ---------------------------------------------------------------------------
// Report builders.

Json field_json(const Field& f) {
  Json j;
  j["p"] = f.p();
  j["k"] = f.k();
  j["q"] = f.order();
  j["modulus"] = f.spec().modulus;
  return j;
}

Json case_json(const CaseLabel& label) {
  Json j;
  j["case"] = case_name(label.kind);
  if (label.witness) {
    const auto& w = *label.witness;
    Json wj;
    wj["r"] = w.r;
    wj["num1"] = w.num1;
    wj["num2"] = w.num2;
    wj["den1"] = w.den1;
    wj["den2"] = w.den2;
    wj["b"] = w.b ? Json(*w.b) : Json(nullptr);
    j["witness"] = wj;
  }
  return j;
}

Json hypothesis_json(const HypothesisReport& r) {
  Json j;
  j["theorem"] = r.theorem;
  j["pass"] = r.pass;
  j["dilates_checked"] = r.dilates_checked;
  if (r.violation) {
    const auto& v = *r.violation;
    Json vj;
    vj["subfield_degree"] = v.subfield_degree;
    vj["subfield_order"] = v.subfield_order;
    vj["a"] = v.a;
    vj["b"] = v.b;
    vj["count"] = v.count;
    j["violation"] = vj;
  }
  return j;
}

Json record_json(const GrowthRecord& r) {
  Json j;
  j["field"] = {{"p", r.field.p}, {"k", r.field.k}, {"modulus", r.field.modulus}};
  j["model"] = r.model;
  j["seed"] = r.seed ? Json(*r.seed) : Json(nullptr);
  j["n"] = r.n;
  j["size_sum"] = r.size_sum;
  j["size_sq_sum"] = r.size_sq_sum;
  j["size_shift"] = r.size_shift;
  j["delta"] = r.delta;
  j["hyp1"] = r.hyp1 ? "pass" : "fail";
  j["hyp2"] = r.hyp2 ? "pass" : "fail";
  j["case"] = r.case_label ? case_name(r.case_label->kind) : "none";
  j["exp_sum"] = optional_number(r.exp_sum);
  j["exp_sq_sum"] = optional_number(r.exp_sq_sum);
  j["exp_shift"] = optional_number(r.exp_shift);
  j["exp_delta"] = optional_number(r.exp_delta);
  j["meets_delta_bound"] = r.n >= 2 ? Json(meets_thm1(r)) : Json(nullptr);
  j["meets_maxpair_bound"] = r.n >= 2 ? Json(meets_thm2(r)) : Json(nullptr);
  j["meets_shifted_bound"] = r.n >= 2 ? Json(meets_cor(r)) : Json(nullptr);
  Json e;
  e["mixed_energy"] = big(r.energy.energy);
  e["cs_lhs"] = big(r.energy.lhs);
  e["cs_rhs"] = big(r.energy.rhs);
  e["cs_holds"] = r.energy.holds;
  e["epsilon"] = optional_number(r.energy.epsilon);
  e["ratio_sum_holds"] = r.ratio_sum_holds ? Json(*r.ratio_sum_holds) : Json(nullptr);
  e["chain_r"] = r.chain_r ? Json(*r.chain_r) : Json(nullptr);
  e["chain_holds"] = r.chain_holds ? Json(*r.chain_holds) : Json(nullptr);
  j["energy"] = e;
  return j;
}

void check_record(const GrowthRecord& r) {
  if (!r.energy.holds) throw InvariantFailure("Cauchy-Schwarz growth inequality failed");
  if (r.ratio_sum_holds == false) throw InvariantFailure("ratio energy sum exceeded its bound");
  if (r.chain_holds == false) throw InvariantFailure("Cauchy-Schwarz chain failed for the pigeonhole witness");
}

Json summary_json(const SweepSummary& s) {
  auto pc = [](const PassCount& c) {
    Json j;
    j["passed"] = c.passed;
    j["total"] = c.total;
    j["fraction"] = round6(c.fraction());
    return j;
  };
  Json j;
  j["records"] = s.records;
  j["hyp1_pass"] = s.hyp1_pass;
  j["hyp2_pass"] = s.hyp2_pass;
  j["delta_bound_all"] = pc(s.delta_all);
  j["maxpair_bound_all"] = pc(s.max_all);
  j["shifted_bound_all"] = pc(s.shift_all);
  j["delta_bound_hyp1"] = pc(s.delta_hyp);
  j["maxpair_bound_hyp2"] = pc(s.max_hyp);
  j["shifted_bound_hyp2"] = pc(s.shift_hyp);
  j["invariant_failures"] = s.invariant_failures;
  return j;
}

// ---------------------------------------------------------------------------
// Subcommands.

struct FieldArgs {
  std::uint32_t p = 0;
  std::uint32_t k = 1;
  std::string modulus;
};

void add_field_args(CLI::App* cmd, FieldArgs& f) {
  cmd->add_option("--p", f.p, "Characteristic")->required();
  cmd->add_option("--k", f.k, "Extension degree")->capture_default_str();
  cmd->add_option("--modulus", f.modulus, "Defining polynomial, coefficients low degree first");
}

Json cmd_field(const FieldArgs& args) {
  const FieldPtr f = build_field(args.p, args.k, args.modulus);
  Json j = field_json(*f);
  j["primitive"] = f->primitive();
  j["arithmetic"] = f->dense() ? "dense" : "log";
  Json subs = Json::array();
  std::vector<std::string> names;
  for (const auto& s : subfield_lattice(f)) {
    subs.push_back({{"degree", s.degree}, {"order", s.order()}});
    names.push_back("F_" + std::to_string(s.order()));
  }
  j["subfield_names"] = names;
  j["subfields"] = subs;
  return j;
}

struct SetopArgs {
  SetInput in;
  std::string op;
  std::string rhs;
  std::optional<std::uint32_t> c;
};

Json cmd_setop(const SetopArgs& args) {
  const FSet a = load_primary(args.in);
  const std::string& op = args.op;
  auto rhs = [&] {
    if (args.rhs.empty()) throw UsageError("--rhs: required for --op " + op);
    return load_rhs(args.rhs, a);
  };
  auto scalar = [&] {
    if (!args.c) throw UsageError("--c: required for --op " + op);
    if (*args.c >= a.field().order()) throw UsageError("--c: element is outside the field");
    return static_cast<Elem>(*args.c);
  };
  auto result = [&]() -> FSet {
    if (op == "sumset") return sumset(a, rhs());
    if (op == "difference") return difference_set(a, rhs());
    if (op == "product") return product_set(a, rhs());
    if (op == "ratio") return for_flag("--rhs", [&] { return ratio_set(a, rhs()); });
    if (op == "dilate") return dilate(scalar(), a);
    if (op == "translate") return translate(scalar(), a);
    if (op == "square") return square_set(a);
    if (op == "negate") return negate_set(a);
    if (op == "inverse") return inverse_set(a);
    if (op == "distance") return distance_composite(a);
    throw UsageError("--op: unknown operation '" + op + "'");
  }();
  Json j;
  j["p"] = a.field().p();
  j["k"] = a.field().k();
  j["modulus"] = a.field().spec().modulus;
  j["op"] = op;
  j["size"] = result.size();
  j["elements"] = result.elements();
  return j;
}

struct ClassifyArgs {
  SetInput in;
  std::string y;
};

Json cmd_classify(const ClassifyArgs& args) {
  const FSet a = load_primary(args.in);
  Json j;
  if (args.y.empty()) {
    const CaseLabel label = for_flag("--file", [&] { return classify_case(a); });
    j["form"] = "R(A,A)";
    j["ratio_set_size"] = ratio_set(a, a).size();
    j.update(case_json(label));
    const bool ok = verify_case_label(a, a, a, label);
    j["verified"] = ok;
    if (!ok) throw InvariantFailure("case witness failed verification");
  } else {
    const FSet y = load_rhs(args.y, a);
    const CaseLabel label = for_flag("--file", [&] { return classify_case_xy(a, y); });
    j["form"] = "R(X,Y)";
    j["ratio_set_size"] = ratio_set(y, a).size();
    j.update(case_json(label));
    const bool ok = verify_case_label(y, a, y, label);
    j["verified"] = ok;
    if (!ok) throw InvariantFailure("case witness failed verification");
  }
  return j;
}

Json cmd_hypothesis(int theorem, const SetInput& in) {
  const FSet a = load_primary(in);
  if (theorem != 1 && theorem != 2) throw UsageError("--theorem: expected 1 or 2");
  return hypothesis_json(theorem == 1 ? check_hypothesis_thm1(a) : check_hypothesis_thm2(a));
}

struct EnergyArgs {
  SetInput in;
  bool mixed = false;
  bool histogram = false;
  std::string rhs;
};

Json cmd_energy(const EnergyArgs& args) {
  const FSet a = load_primary(args.in);
  EnergyReport r;
  std::size_t rhs_size = 0;
  if (args.mixed) {
    const FSet b = args.rhs.empty() ? sumset(a, a) : load_rhs(args.rhs, a);
    rhs_size = b.size();
    r = mixed_energy(a, b);
  } else {
    const FSet b = args.rhs.empty() ? a : load_rhs(args.rhs, a);
    rhs_size = b.size();
    r = additive_energy(a, b);
  }
  Json j;
  j["kind"] = args.mixed ? "mixed" : "additive";
  j["left_size"] = a.size();
  j["right_size"] = rhs_size;
  j["value"] = big(r.value);
  j["total"] = r.histogram.total;
  j["support"] = r.histogram.support_size();
  if (args.histogram) {
    Json h = Json::array();
    for (const auto& [t, c] : r.histogram.nonzero()) h.push_back({{"t", t}, {"count", c}});
    j["histogram"] = h;
  }
  return j;
}

Json cmd_ratio_sum(const SetInput& in) {
  const FSet a = load_primary(in);
  const RatioEnergySum s = for_flag("--file", [&] { return energy_sum_over_ratios(a); });
  Json j;
  j["n"] = a.size();
  j["ratio_count"] = s.ratio_count;
  j["sum"] = big(s.sum);
  j["bound"] = big(s.bound);
  j["holds"] = s.holds;
  j["witness_r"] = s.witness_r;
  j["witness_energy"] = s.witness_energy;
  if (!s.holds) throw InvariantFailure("ratio energy sum exceeded |R||A|^2 + |A|^4");
  return j;
}

struct LemmaArgs {
  SetInput in;
  std::string which;
  std::string eps = "0.1";
  bool exact = false;
  std::vector<std::string> rhs;
  std::string cover_csv;
};

Json cmd_lemma(const LemmaArgs& args) {
  const FSet a = load_primary(args.in);
  std::vector<FSet> bs;
  for (const auto& path : args.rhs) bs.push_back(load_rhs(path, a));
  const Rational eps = parse_eps(args.eps);
  Json j;
  j["lemma"] = args.which;

  if (args.which == "2.1") {
    if (bs.empty()) bs = {a, a};
    const PlunneckeReport r = for_flag("--file", [&] { return plunnecke_check(a, bs); });
    j["k"] = bs.size();
    j["lhs"] = big(r.lhs);
    j["rhs_num"] = big(r.rhs_num);
    j["rhs_den"] = big(r.rhs_den);
    j["holds"] = r.holds;
    if (r.diff_lhs) {
      j["diff_lhs"] = big(*r.diff_lhs);
      j["diff_rhs_num"] = big(*r.diff_rhs_num);
      j["diff_rhs_den"] = big(*r.diff_rhs_den);
      j["diff_holds"] = r.diff_holds;
    }
    if (!r.holds || !r.diff_holds) throw InvariantFailure("Plunnecke-Ruzsa bound violated");
    return j;
  }
  if (args.which == "2.2") {
    if (bs.empty()) bs = {a, a};
    const SearchMode mode = args.exact ? SearchMode::kExact : SearchMode::kGreedy;
    const SubsetWitness w = for_flag("--eps", [&] { return katz_shen_search(a, bs, eps, mode); });
    j["eps"] = to_string(eps);
    j["mode"] = args.exact ? "exact" : "greedy";
    j["target_size"] = w.target_size;
    j["witness"] = w.witness.elements();
    j["sumset_size"] = w.sumset_size;
    j["c_measured"] = to_string(w.c_measured);
    j["c_measured_approx"] = round6(to_double(w.c_measured));
    return j;
  }
  if (args.which == "2.4") {
    const FSet y = bs.empty() ? a : bs.front();
    const CoverResult c = for_flag("--eps", [&] { return greedy_cover(a, y, eps); });
    j["eps"] = to_string(eps);
    j["count"] = c.count;
    j["translates"] = c.translates;
    j["covered"] = c.covered;
    j["covered_fraction"] = to_string(c.covered_fraction);
    j["bound"] = to_string(c.bound);
    j["count_over_bound"] = to_string(c.count_over_bound);
    if (args.exact) j["exact_count"] = for_flag("--file", [&] { return exact_cover_count(a, y, eps); });
    if (c.covered_fraction < Rational(1) - eps) throw InvariantFailure("greedy cover stopped short");
    return j;
  }
  if (args.which == "3.2") {
    const Lemma32Profile prof = for_flag("--eps", [&] { return lemma32_cover_profile(a, eps); });
    j["eps"] = to_string(eps);
    j["n"] = prof.n;
    j["sumset_size"] = prof.sumset_size;
    j["threshold"] = prof.threshold;
    j["y_star"] = prof.y_star;
    j["x_star"] = prof.x_star;
    j["y_star_own_threshold"] = prof.y_star_own;
    j["x_star_own_threshold"] = prof.x_star_own;
    j["x_star_ratio"] = round6(prof.x_star_ratio);
    j["y_star_ratio"] = round6(prof.y_star_ratio);
    j["min_covered_fraction"] = to_string(prof.min_covered_fraction);
    std::size_t max_b = 0, max_a = 0;
    for (const auto& e : prof.b_profile) max_b = std::max(max_b, e.count);
    for (const auto& e : prof.a_profile) max_a = std::max(max_a, e.count);
    j["max_count_b"] = max_b;
    j["max_count_a"] = max_a;
    if (!args.cover_csv.empty()) {
      std::ofstream csv(args.cover_csv, std::ios::binary);
      if (!csv) throw UsageError("--cover-csv: cannot write " + args.cover_csv);
      csv << "family,element,set_size,count,covered_fraction,own_threshold\n";
      auto rows = [&](const char* family, const std::vector<CoverProfileEntry>& entries) {
        for (const auto& e : entries) {
          csv << family << ',' << e.element << ',' << e.set_size << ',' << e.count << ','
              << to_string(e.covered_fraction) << ',' << e.own_threshold << '\n';
        }
      };
      rows("A-b", prof.b_profile);
      rows("B-a", prof.a_profile);
    }
    if (prof.min_covered_fraction < Rational(9, 10)) throw InvariantFailure("profile cover below 9/10");
    return j;
  }
  throw UsageError("--which: expected 2.1, 2.2, 2.4 or 3.2");
}

Json cmd_measure(const SetInput& in) {
  const FSet a = load_primary(in);
  const GrowthRecord r = measure(a);
  check_record(r);
  return record_json(r);
}

struct SweepArgs {
  FieldArgs field;
  std::string model = "uniform";
  std::string n;
  std::size_t trials = 1;
  std::uint64_t seed = 0;
  unsigned threads = 1;
  std::optional<std::uint32_t> dilation;
  std::optional<std::uint32_t> subfield_degree;
};

int cmd_sweep(const SweepArgs& args, const Common& common, std::ostream& out) {
  SweepConfig config;
  config.field = build_field(args.field.p, args.field.k, args.field.modulus);
  config.model = for_flag("--model", [&] { return parse_model(args.model); });
  const auto [lo, hi] = parse_range(args.n);
  config.n_min = lo;
  config.n_max = hi;
  config.trials = args.trials;
  config.seed = args.seed;
  config.threads = args.threads;
  config.generate.dilation = args.dilation;
  config.generate.subfield_degree = args.subfield_degree;
  if (args.trials == 0) throw UsageError("--trials: must be at least 1");
  const SweepResult result = for_flag("--n", [&] { return sweep(config); });

  const Json summary = summary_json(result.summary);
  if (!common.out.empty()) {
    // Records go to the file as CSV; the summary goes to standard output.
    emit(records_to_csv(result.records), common, out);
    out << render(summary, common.fmt() == Format::kCsv ? Format::kText : common.fmt());
  } else if (common.fmt() == Format::kCsv) {
    out << records_to_csv(result.records);
  } else {
    out << render(summary, common.fmt());
  }
  return result.summary.invariant_failures == 0 ? kExitOk : kExitInvariant;
}

struct SearchArgs {
  FieldArgs field;
  std::string objective = "delta";
  std::size_t n = 2;
  std::size_t iters = 1;
  std::uint64_t seed = 0;
  bool no_hypothesis = false;
  std::string start;
};

Json cmd_search(const SearchArgs& args) {
  SearchConfig config;
  config.field = build_field(args.field.p, args.field.k, args.field.modulus);
  config.objective = for_flag("--objective", [&] { return parse_objective(args.objective); });
  config.n = args.n;
  config.iterations = args.iters;
  config.seed = args.seed;
  config.enforce_hypothesis = !args.no_hypothesis;
  if (!args.start.empty()) {
    FSet s = load_set(args.start, "--start", config.field);
    if (!s.field().same_as(*config.field)) throw UsageError("--start: set lives in a different field");
    config.start = std::move(s);
  }
  if (args.iters == 0) throw UsageError("--iters: must be at least 1");
  const SearchState state = for_flag("--n", [&] { return extremal_search(config); });
  check_record(state.best);
  Json j;
  j["objective"] = objective_name(config.objective);
  j["hypothesis_enforced"] = config.enforce_hypothesis;
  j["iterations"] = state.iterations;
  j["accepted"] = state.accepted;
  j["rejected_hypothesis"] = state.rejected_hypothesis;
  j["start_value"] = state.start_objective;
  j["best_value"] = state.objective;
  j["best_set"] = state.current.elements();
  j["record"] = record_json(state.best);
  return j;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Sum-product growth experiments over finite fields", "ffgrowth"};
  app.require_subcommand(1);
  app.fallthrough();
  Common common;
  app.add_option("--format", common.format, "Output format")
      ->check(CLI::IsMember({"text", "csv", "json"}))
      ->capture_default_str();
  app.add_option("--out", common.out, "Write the report to this path");

  std::function<int()> action;
  auto report = [&](std::function<Json()> build) {
    action = [&common, &out, build] {
      emit(render(build(), common.fmt()), common, out);
      return kExitOk;
    };
  };

  FieldArgs field_args;
  auto* field_cmd = app.add_subcommand("field", "Build a field and print its subfield lattice");
  add_field_args(field_cmd, field_args);
  field_cmd->callback([&] { report([&] { return cmd_field(field_args); }); });

  SetopArgs setop_args;
  auto* setop_cmd = app.add_subcommand("setop", "Evaluate a set expression");
  add_set_input(setop_cmd, setop_args.in);
  setop_cmd->add_option("--op", setop_args.op,
                        "sumset|difference|product|ratio|dilate|translate|square|negate|inverse|distance")
      ->required();
  setop_cmd->add_option("--rhs", setop_args.rhs, "Right-hand set file for binary operations");
  setop_cmd->add_option("--c", setop_args.c, "Field element for dilate/translate");
  setop_cmd->callback([&] { report([&] { return cmd_setop(setop_args); }); });

  ClassifyArgs classify_args;
  auto* classify_cmd = app.add_subcommand("classify", "Closure case of the ratio set");
  add_set_input(classify_cmd, classify_args.in);
  classify_cmd->add_option("--y", classify_args.y, "Classify R(X, Y) with X = --file and Y from this file");
  classify_cmd->callback([&] { report([&] { return cmd_classify(classify_args); }); });

  SetInput hyp_in;
  int theorem = 1;
  auto* hyp_cmd = app.add_subcommand("hypothesis", "Check a subfield-concentration hypothesis");
  add_set_input(hyp_cmd, hyp_in);
  hyp_cmd->add_option("--theorem", theorem, "1: |A ∩ aG|^2 <= |G|; 2: |(A+A) ∩ (aG+b)|^2 <= |G|")->required();
  hyp_cmd->callback([&] { report([&] { return cmd_hypothesis(theorem, hyp_in); }); });

  EnergyArgs energy_args;
  auto* energy_cmd = app.add_subcommand("energy", "Additive or mixed energy");
  add_set_input(energy_cmd, energy_args.in);
  energy_cmd->add_flag("--mixed", energy_args.mixed, "E(A^2, (A-B)^2) with B = A+A unless --rhs is given");
  energy_cmd->add_flag("--histogram", energy_args.histogram, "Include the representation histogram");
  energy_cmd->add_option("--rhs", energy_args.rhs, "Second operand");
  energy_cmd->callback([&] { report([&] { return cmd_energy(energy_args); }); });

  SetInput ratio_in;
  auto* ratio_cmd = app.add_subcommand("ratio-sum", "Sum of E+(A, rA) over the ratio set");
  add_set_input(ratio_cmd, ratio_in);
  ratio_cmd->callback([&] { report([&] { return cmd_ratio_sum(ratio_in); }); });

  LemmaArgs lemma_args;
  auto* lemma_cmd = app.add_subcommand("lemma", "Sumset structure checks");
  add_set_input(lemma_cmd, lemma_args.in);
  lemma_cmd->add_option("--which", lemma_args.which, "2.1|2.2|2.4|3.2")->required();
  lemma_cmd->add_option("--eps", lemma_args.eps, "Epsilon, decimal or fraction")->capture_default_str();
  lemma_cmd->add_flag("--exact", lemma_args.exact, "Use exhaustive search where available");
  lemma_cmd->add_option("--rhs", lemma_args.rhs, "Operand sets B_i (2.1, 2.2) or Y (2.4)");
  lemma_cmd->add_option("--cover-csv", lemma_args.cover_csv, "Per-element cover counts (3.2)");
  lemma_cmd->callback([&] { report([&] { return cmd_lemma(lemma_args); }); });

  SetInput measure_in;
  auto* measure_cmd = app.add_subcommand("measure", "Growth record for one set");
  add_set_input(measure_cmd, measure_in);
  measure_cmd->callback([&] { report([&] { return cmd_measure(measure_in); }); });

  SweepArgs sweep_args;
  auto* sweep_cmd = app.add_subcommand("sweep", "Growth records over generated sets");
  add_field_args(sweep_cmd, sweep_args.field);
  sweep_cmd->add_option("--model", sweep_args.model, "uniform|interval|subfield_coset|geometric")
      ->capture_default_str();
  sweep_cmd->add_option("--n", sweep_args.n, "Set size N or range LO..HI")->required();
  sweep_cmd->add_option("--trials", sweep_args.trials, "Trials per size")->capture_default_str();
  sweep_cmd->add_option("--seed", sweep_args.seed, "RNG seed")->required();
  sweep_cmd->add_option("--threads", sweep_args.threads, "Worker threads")->capture_default_str();
  sweep_cmd->add_option("--dilation", sweep_args.dilation, "subfield_coset: dilation a");
  sweep_cmd->add_option("--subfield-degree", sweep_args.subfield_degree, "subfield_coset: degree of G");
  sweep_cmd->callback([&] { action = [&] { return cmd_sweep(sweep_args, common, out); }; });

  SearchArgs search_args;
  auto* search_cmd = app.add_subcommand("search", "Hill-climb toward low-growth sets");
  add_field_args(search_cmd, search_args.field);
  search_cmd->add_option("--objective", search_args.objective, "delta|maxpair|shifted")->capture_default_str();
  search_cmd->add_option("--n", search_args.n, "Set size")->required();
  search_cmd->add_option("--iters", search_args.iters, "Iterations")->capture_default_str();
  search_cmd->add_option("--seed", search_args.seed, "RNG seed")->required();
  search_cmd->add_flag("--no-hypothesis", search_args.no_hypothesis, "Do not filter by the hypothesis");
  search_cmd->add_option("--start", search_args.start, "Start set file");
  search_cmd->callback([&] { report([&] { return cmd_search(search_args); }); });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      app.exit(e, out, err);
      return kExitOk;
    }
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    return action ? action() : kExitUsage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const InvariantFailure& e) {
    err << "invariant violation: " << e.what() << "\n";
    return kExitInvariant;
  } catch (const Error& e) {
    if (e.is_validation()) {
      err << "error: " << error_code_name(e.code()) << ": " << e.what() << "\n";
      return kExitUsage;
    }
    err << "invariant violation: " << e.what() << "\n";
    return kExitInvariant;
  }
}

}  // namespace ffgrowth::cli
