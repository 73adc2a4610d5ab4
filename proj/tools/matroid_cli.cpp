#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "matroid/matroid.hpp"

namespace {

using nlohmann::json;
using namespace matroid;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitVerdict = 2;
constexpr int kExitResource = 3;

unsigned long long to_u64(const Int& v) { return v.convert_to<unsigned long long>(); }

DefiningBasis parse_basis(int n, const std::string& t) {
  if (n < 1) throw std::invalid_argument("ground-set size must be >= 1");
  return DefiningBasis(parse_subset_word(t, n));
}

int cmd_classify(int n, const std::string& t, bool as_json) {
  DefiningBasis m = parse_basis(n, t);
  ThresholdClassification cls = classify(m);
  if (as_json) {
    json j{{"n", n},
           {"t", format_subset_word(m.t)},
           {"verdict", to_string(cls.verdict)},
           {"tag", to_string(cls.tag)}};
    std::cout << j.dump() << "\n";
  } else {
    std::cout << to_string(cls.verdict) << " " << to_string(cls.tag) << "\n";
  }
  return kExitOk;
}

int cmd_weights(int n, const std::string& t, bool as_json, std::size_t cap) {
  DefiningBasis m = parse_basis(n, t);
  ThresholdClassification cls = classify(m);
  if (cls.verdict != Verdict::Threshold) {
    std::cerr << "not a threshold matroid (" << to_string(cls.verdict) << " "
              << to_string(cls.tag) << "); no weights exist\n";
    return kExitVerdict;
  }
  WeightFunction w = synthesize_weights(m);
  const bool full = binomial(n, m.rank()) <= Int(cap);
  bool ok = verify_weights(m, w, full ? VerifyMode::Full : VerifyMode::Structural, Int(cap));
  if (!ok) throw VerificationFailedError("synthesized weights failed verification");
  if (as_json) {
    json arr = json::array();
    for (const Rational& v : w.weights) arr.push_back(to_fraction_string(v));
    json j{{"n", n},
           {"t", format_subset_word(m.t)},
           {"weights", arr},
           {"provenance", w.provenance},
           {"verified", full ? "full" : "structural"}};
    std::cout << j.dump() << "\n";
  } else {
    std::cout << weights_to_string(w);
  }
  return kExitOk;
}

int cmd_certify(int n, const std::string& t, bool as_json) {
  DefiningBasis m = parse_basis(n, t);
  ThresholdClassification cls = classify(m);
  if (cls.verdict != Verdict::NotThreshold) {
    std::cerr << "matroid is " << to_string(cls.verdict) << "; no certificate exists\n";
    return kExitVerdict;
  }
  NonThresholdCertificate c = certificate(m);
  if (as_json) {
    json j{{"B1", format_subset_word(c.b1)},
           {"B2", format_subset_word(c.b2)},
           {"D1", format_subset_word(c.d1)},
           {"D2", format_subset_word(c.d2)}};
    std::cout << j.dump() << "\n";
  } else {
    std::cout << certificate_to_string(c);
  }
  return kExitOk;
}

int cmd_recognize(const std::string& path, int n_opt, bool as_json) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open bases file: " + path);
  std::vector<std::string> token_order;          // first-appearance order
  std::map<std::string, int> token_id;           // token -> 1-based id
  std::vector<std::vector<int>> bases;
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::vector<int> row;
    std::string tok;
    while (ls >> tok) {
      auto it = token_id.find(tok);
      if (it == token_id.end()) {
        it = token_id.emplace(tok, static_cast<int>(token_order.size()) + 1).first;
        token_order.push_back(tok);
      }
      row.push_back(it->second);
    }
    if (!row.empty()) bases.push_back(std::move(row));
  }
  if (bases.empty()) throw std::invalid_argument("bases file contains no bases");
  int n = static_cast<int>(token_order.size());
  if (n_opt > 0) {
    if (n_opt < n)
      throw std::invalid_argument("--n smaller than the number of distinct elements");
    n = n_opt;  // extra unseen elements become loops
  }
  ExplicitMatroid em = validate_bases(std::move(bases), n);
  VicinalData v = vicinal_preorder(em);
  ShiftednessResult sr = is_shifted(em, v);
  if (!sr.order) {
    auto [i, j] = sr.incomparable;
    auto name = [&](int e) {
      return e <= static_cast<int>(token_order.size()) ? token_order[e - 1]
                                                       : std::to_string(e);
    };
    if (as_json) {
      json jj{{"shifted", false}, {"incomparable", {name(i), name(j)}}};
      std::cout << jj.dump() << "\n";
    } else {
      std::cout << "not shifted: " << name(i) << " ~ " << name(j) << "\n";
    }
    return kExitOk;
  }
  Canonicalization c = canonicalize(em);
  if (as_json) {
    json labels = json::object();
    for (std::size_t i = 0; i < token_order.size(); ++i)
      labels[token_order[i]] = c.new_label[i + 1];
    json jj{{"shifted", true},
            {"n", c.basis.n()},
            {"t", format_subset_word(c.basis.t)},
            {"labels", labels}};
    std::cout << jj.dump() << "\n";
  } else {
    std::cout << format_defining_basis(c.basis) << "\n";
    for (std::size_t i = 0; i < token_order.size(); ++i)
      std::cout << token_order[i] << " -> " << c.new_label[i + 1] << "\n";
  }
  return kExitOk;
}

int cmd_circuits(int n, const std::string& t, bool as_json) {
  DefiningBasis m = parse_basis(n, t);
  std::vector<SubsetWord> cs = circuits(m);
  if (as_json) {
    json arr = json::array();
    for (const SubsetWord& c : cs) arr.push_back(format_subset_word(c));
    std::cout << json{{"n", n}, {"t", format_subset_word(m.t)}, {"circuits", arr}}.dump()
              << "\n";
  } else {
    for (const SubsetWord& c : cs) std::cout << format_subset_word(c) << "\n";
  }
  return kExitOk;
}

json census_json(const CensusReport& r) {
  json tags = json::object();
  for (const auto& [tag, cnt] : r.by_tag) tags[to_string(tag)] = to_u64(cnt);
  json cases = json::array();
  for (const Int& c : r.proof_cases) cases.push_back(to_u64(c));
  return json{{"n", r.n},
              {"shifted_classes", to_u64(r.shifted_classes)},
              {"non_empty_classes", to_u64(r.non_empty_classes)},
              {"threshold_count", to_u64(r.threshold_count)},
              {"non_threshold_count", to_u64(r.non_threshold_count)},
              {"by_tag", tags},
              {"proof_cases", cases},
              {"offenders", r.offenders},
              {"offenders_truncated", r.offenders_truncated},
              {"ratio",
               {{"numerator", to_u64(numerator(r.ratio))},
                {"denominator", to_u64(denominator(r.ratio))}}},
              {"percent_non_empty", percent_non_empty(r)}};
}

int cmd_census(int n, bool as_json, std::size_t offender_cap) {
  CensusReport r = census(n, offender_cap);
  if (as_json) {
    std::cout << census_json(r).dump() << "\n";
    return kExitOk;
  }
  std::cout << "n=" << r.n << "\n"
            << "shifted_classes=" << r.shifted_classes << "\n"
            << "non_empty_classes=" << r.non_empty_classes << "\n"
            << "threshold=" << r.threshold_count << "\n"
            << "non_threshold=" << r.non_threshold_count << "\n";
  for (const auto& [tag, cnt] : r.by_tag)
    std::cout << "tag " << to_string(tag) << "=" << cnt << "\n";
  for (const std::string& o : r.offenders) std::cout << "offender: " << o << "\n";
  if (r.offenders_truncated) std::cout << "offender list truncated\n";
  std::cout << "ratio=" << numerator(r.ratio) << "/" << denominator(r.ratio) << "\n"
            << "percent_non_empty=" << percent_non_empty(r) << "\n";
  return kExitOk;
}

int cmd_ratio(int n_max) {
  std::cout << ratio_series_csv(ratio_series(n_max));
  return kExitOk;
}

int cmd_oracle_lp(int n, const std::string& t, bool as_json, std::size_t cap) {
  DefiningBasis m = parse_basis(n, t);
  LpWitness w = lp_threshold_oracle(m, cap);
  if (as_json) {
    json j{{"feasible", w.feasible}};
    if (w.feasible) {
      json arr = json::array();
      for (const Rational& v : w.weights) arr.push_back(to_fraction_string(v));
      j["weights"] = arr;
    } else {
      j["contradiction"] = to_fraction_string(*w.contradiction);
    }
    std::cout << j.dump() << "\n";
  } else if (w.feasible) {
    std::cout << "feasible\n";
    for (std::size_t i = 0; i < w.weights.size(); ++i)
      std::cout << (i + 1) << ": " << to_fraction_string(w.weights[i]) << "\n";
  } else {
    std::cout << "infeasible\n";
  }
  return kExitOk;
}

int cmd_oracle_asummable(int n, const std::string& t, int ell, bool as_json, std::size_t cap) {
  DefiningBasis m = parse_basis(n, t);
  auto v = asummability_oracle(m, ell, cap);
  if (as_json) {
    json j{{"l", ell}, {"violation", v.has_value()}};
    if (v) {
      json bs = json::array(), ds = json::array();
      for (const SubsetWord& b : v->bases) bs.push_back(format_subset_word(b));
      for (const SubsetWord& d : v->non_bases) ds.push_back(format_subset_word(d));
      j["bases"] = bs;
      j["non_bases"] = ds;
    }
    std::cout << j.dump() << "\n";
    return kExitOk;
  }
  if (!v) {
    std::cout << "no violation\n";
    return kExitOk;
  }
  for (std::size_t i = 0; i < v->bases.size(); ++i)
    std::cout << "B" << (i + 1) << "=" << format_subset_word(v->bases[i]) << "\n";
  for (std::size_t i = 0; i < v->non_bases.size(); ++i)
    std::cout << "D" << (i + 1) << "=" << format_subset_word(v->non_bases[i]) << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"threshold / shifted matroid toolkit"};
  app.require_subcommand(1);
  app.fallthrough();
  bool as_json = false;
  app.add_flag("--json", as_json, "emit JSON instead of text");

  int n = 0, n_max = 0, ell = 2, n_opt = 0;
  std::string t, bases_path;
  std::size_t cap = 2'000'000;
  std::size_t offender_cap = 32;

  auto* c_classify = app.add_subcommand("classify", "threshold classification of <T>");
  c_classify->add_option("--n", n, "ground-set size")->required();
  c_classify->add_option("--t", t, "defining basis, e.g. \"2 4 6 8\"")->required();

  auto* c_weights = app.add_subcommand("weights", "synthesize verified weights");
  c_weights->add_option("--n", n)->required();
  c_weights->add_option("--t", t)->required();
  c_weights->add_option("--cap", cap, "full-verification subset cap");

  auto* c_certify = app.add_subcommand("certify", "non-threshold certificate");
  c_certify->add_option("--n", n)->required();
  c_certify->add_option("--t", t)->required();

  auto* c_recognize = app.add_subcommand("recognize", "canonicalize a bases list");
  c_recognize->add_option("--bases", bases_path, "file, one basis per line")->required();
  c_recognize->add_option("--n", n_opt, "ground-set size (extra elements are loops)");

  auto* c_circuits = app.add_subcommand("circuits", "circuits of <T>");
  c_circuits->add_option("--n", n)->required();
  c_circuits->add_option("--t", t)->required();

  auto* c_census = app.add_subcommand("census", "classify all non-empty T on [n]");
  c_census->add_option("--n", n)->required();
  c_census->add_option("--offenders", offender_cap, "max offenders listed");

  auto* c_ratio = app.add_subcommand("ratio", "threshold/shifted ratio series CSV");
  c_ratio->add_option("--max", n_max, "largest n")->required();

  auto* c_oracle = app.add_subcommand("oracle", "brute-force oracles");
  c_oracle->require_subcommand(1);
  auto* c_lp = c_oracle->add_subcommand("lp", "exact LP feasibility");
  c_lp->add_option("--n", n)->required();
  c_lp->add_option("--t", t)->required();
  c_lp->add_option("--cap", cap, "elimination stage cap");
  auto* c_as = c_oracle->add_subcommand("asummable", "l-uniform asummability search");
  c_as->add_option("--n", n)->required();
  c_as->add_option("--t", t)->required();
  c_as->add_option("--l", ell, "l in {2,3}");
  c_as->add_option("--cap", cap, "non-basis enumeration cap");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*c_classify) return cmd_classify(n, t, as_json);
    if (*c_weights) return cmd_weights(n, t, as_json, cap);
    if (*c_certify) return cmd_certify(n, t, as_json);
    if (*c_recognize) return cmd_recognize(bases_path, n_opt, as_json);
    if (*c_circuits) return cmd_circuits(n, t, as_json);
    if (*c_census) return cmd_census(n, as_json, offender_cap);
    if (*c_ratio) return cmd_ratio(n_max);
    if (*c_lp) return cmd_oracle_lp(n, t, as_json, cap);
    if (*c_as) return cmd_oracle_asummable(n, t, ell, as_json, cap);
  } catch (const ResourceLimitError& e) {
    std::cerr << "resource cap exceeded: " << e.what() << "\n";
    return kExitResource;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitVerdict;
  }
  return kExitUsage;
}
