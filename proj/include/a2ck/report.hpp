#ifndef A2CK_REPORT_HPP
#define A2CK_REPORT_HPP

#include <cstdint>
#include <iomanip>
#include <optional>
#include <sstream>
#include <string>

#include <json.hpp>

#include "a2ck/cktwo.hpp"
#include "a2ck/presentation.hpp"
#include "a2ck/transition.hpp"
#include "a2ck/zmat.hpp"

namespace a2ck {

inline constexpr const char* kVersion = "0.1.0";

// Key order is part of the machine format: identical inputs must serialize
// to identical bytes.
using Json = nlohmann::ordered_json;

inline std::string fnv1a64_hex(const std::string& s) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  std::ostringstream out;
  out << std::hex << std::setfill('0') << std::setw(16) << h;
  return out.str();
}

inline std::string presentation_digest(const TrianglePresentation& p) {
  return fnv1a64_hex(canonical_text(p));
}

inline Json group_json(const FinAbGroup& g) {
  Json j;
  j["rank"] = g.free_rank;
  Json factors = Json::array();
  for (const Int& t : g.torsion) factors.push_back(t.get_str());
  j["factors"] = std::move(factors);
  j["notation"] = g.invariant_string();
  j["primary"] = g.primary_string();
  return j;
}

inline Json check_result_json(const CheckResult& c) {
  Json j;
  j["pass"] = c.pass;
  j["detail"] = c.detail;
  return j;
}

inline Json structural_json(const StructuralChecks& s) {
  Json j;
  j["entries01"] = check_result_json(s.entries01);
  j["row_col_sums"] = check_result_json(s.row_col_sums);
  j["transpose_identity"] = check_result_json(s.transpose_identity);
  j["union_connected"] = check_result_json(s.union_connected);
  j["all_pass"] = s.all_pass();
  return j;
}

inline Json bounds_json(const BoundReport& b) {
  Json j;
  j["upper"] = b.upper.get_str();
  j["lower"] = b.lower.get_str();
  j["psi"] = b.psi.get_str();
  j["divides_upper"] = b.divides_upper;
  j["lower_divides"] = b.lower_divides;
  j["psi_divides"] = b.psi_divides;
  j["all_pass"] = b.all_pass();
  return j;
}

inline Json ktheory_json(const KTheoryReport& r, const std::string& digest) {
  Json j;
  j["version"] = kVersion;
  j["source"] = r.source;
  j["input_digest"] = digest;
  j["q"] = r.q;
  j["alphabet_size"] = r.n;
  j["r"] = r.coker.free_rank;
  Json chain = Json::array();
  for (const Int& t : r.coker.torsion) chain.push_back(t.get_str());
  j["torsion_factors"] = std::move(chain);
  Json primary = Json::array();
  for (const Int& p : r.coker.primary_factors()) primary.push_back(p.get_str());
  j["torsion_primary"] = std::move(primary);
  j["k0"] = group_json(r.k0);
  j["k1"] = group_json(r.k1);
  j["identity_order"] = r.identity_order.get_str();
  j["rank_one_ck"] = r.rank_one_ck;
  Json checks;
  checks["hat"] = structural_json(r.hat_checks);
  checks["check"] = structural_json(r.check_checks);
  checks["hat_check_agreement"] = r.hat_check_agreement;
  checks["bounds"] = bounds_json(r.bounds);
  checks["conjectured_order"] = r.conjectured_order.get_str();
  j["checks"] = std::move(checks);
  j["conjecture_agreement"] = r.conjecture_agreement;
  return j;
}

inline std::string ktheory_text(const KTheoryReport& r,
                                const std::string& digest) {
  std::ostringstream out;
  if (!r.source.empty()) out << "source: " << r.source << "\n";
  out << "input digest: " << digest << "\n";
  out << "q = " << r.q << ", alphabet size = " << r.n << "\n";
  out << "joined cokernel: rank " << r.coker.free_rank
      << ", invariant factors [";
  for (std::size_t i = 0; i < r.coker.torsion.size(); ++i)
    out << (i ? ", " : "") << r.coker.torsion[i].get_str();
  out << "]\n";
  out << "K0 = K1 = " << r.k0.invariant_string() << "\n";
  out << "primary form: " << r.k0.primary_string() << "\n";
  out << "identity class order = " << r.identity_order.get_str()
      << ", conjectured " << r.conjectured_order.get_str() << " (conjecture: "
      << (r.conjecture_agreement ? "agrees" : "disagrees") << ")\n";
  out << "rank-one algebra: " << (r.rank_one_ck ? "yes" : "no") << "\n";
  auto ok = [](bool b) { return b ? "ok" : "FAILED"; };
  out << "checks: hat pair " << ok(r.hat_checks.all_pass()) << ", check pair "
      << ok(r.check_checks.all_pass()) << ", agreement "
      << ok(r.hat_check_agreement) << ", bounds " << ok(r.bounds.all_pass())
      << "\n";
  return out.str();
}

inline Json condition_check_json(const ConditionCheck& c) {
  Json j;
  j["status"] = check_status_name(c.status);
  j["witness"] = c.witness;
  return j;
}

inline Json condition_json(const ConditionReport& r) {
  Json j;
  j["h0"] = condition_check_json(r.h0);
  j["h1a"] = condition_check_json(r.h1a);
  j["h1b"] = condition_check_json(r.h1b);
  j["h2"] = condition_check_json(r.h2);
  j["h3"] = condition_check_json(r.h3);
  j["h3_window"] = r.h3_window;
  return j;
}

inline Json homology_json(const HomologyReport& h) {
  Json j;
  j["h0"] = group_json(h.h0);
  j["h1"] = group_json(h.h1);
  j["h2"] = group_json(h.h2);
  return j;
}

struct AnalyzeReport {
  std::size_t n = 0;
  ConditionReport conditions;
  bool commuting = false;
  std::optional<HomologyReport> homology;
  std::optional<KGroups> kgroups;
};

inline AnalyzeReport analyze_pair(const IntMatrix& m1, const IntMatrix& m2,
                                  int h3_window = 4) {
  AnalyzeReport r;
  r.conditions = check_conditions(m1, m2, h3_window);
  r.n = m1.rows();
  r.commuting = r.conditions.h1a.status == CheckStatus::pass;
  if (r.commuting) {
    r.homology = homology_complex(m1, m2);
    r.kgroups = k_theory_general(m1, m2);
  }
  return r;
}

inline Json analyze_json(const AnalyzeReport& r) {
  Json j;
  j["version"] = kVersion;
  j["n"] = r.n;
  j["conditions"] = condition_json(r.conditions);
  j["commuting"] = r.commuting;
  if (r.homology) j["homology"] = homology_json(*r.homology);
  if (r.kgroups) {
    j["k0"] = group_json(r.kgroups->k0);
    j["k1"] = group_json(r.kgroups->k1);
  }
  return j;
}

inline std::string analyze_text(const AnalyzeReport& r) {
  std::ostringstream out;
  out << "n = " << r.n << ", h3 window = " << r.conditions.h3_window << "\n";
  auto line = [&](const char* name, const ConditionCheck& c) {
    out << name << ": " << check_status_name(c.status);
    if (!c.witness.empty()) out << " (" << c.witness << ")";
    out << "\n";
  };
  line("h0", r.conditions.h0);
  line("h1a", r.conditions.h1a);
  line("h1b", r.conditions.h1b);
  line("h2", r.conditions.h2);
  line("h3", r.conditions.h3);
  if (r.homology) {
    out << "homology: H0 = " << r.homology->h0.invariant_string()
        << ", H1 = " << r.homology->h1.invariant_string()
        << ", H2 = " << r.homology->h2.invariant_string() << "\n";
  } else {
    out << "homology: skipped (matrices do not commute)\n";
  }
  if (r.kgroups) {
    out << "K0 = " << r.kgroups->k0.invariant_string() << "\n";
    out << "K1 = " << r.kgroups->k1.invariant_string() << "\n";
  }
  return out.str();
}

inline Json validate_json(const ValidatedPresentation& vp,
                          const std::string& digest) {
  Json j;
  j["version"] = kVersion;
  j["input_digest"] = digest;
  j["valid"] = true;
  j["q"] = vp.q();
  j["generators"] = vp.generator_count();
  j["relators"] = vp.relators().size();
  j["alphabet_size"] = vp.alphabet_size();
  return j;
}

inline std::string validate_text(const ValidatedPresentation& vp) {
  std::ostringstream out;
  out << "valid, q=" << vp.q() << ", alphabet size " << vp.alphabet_size()
      << ", " << vp.generator_count() << " generators, "
      << vp.relators().size() << " relators\n";
  return out.str();
}

}  // namespace a2ck

#endif
