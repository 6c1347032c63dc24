#pragma once

// Named verification suites over the fixture corpus. Expectations come from
// fixture data and cross-checks between modules, never from stored answers.

#include <chrono>
#include <functional>
#include <string>
#include <vector>

#include "curvetwist/contact.hpp"
#include "curvetwist/conventions.hpp"
#include "curvetwist/fixtures.hpp"
#include "curvetwist/monodromy.hpp"
#include "curvetwist/two_lines.hpp"

namespace curvetwist {

struct CheckResult {
  std::string suite;
  std::string name;
  std::string status;  // pass | fail | unknown
  std::string detail;
  double seconds = 0;
};

struct RunReport {
  std::string command;
  std::vector<CheckResult> checks;
  double seconds = 0;

  bool all_pass() const {
    for (const auto& c : checks)
      if (c.status != "pass") return false;
    return true;
  }
  int count(const std::string& status) const {
    int k = 0;
    for (const auto& c : checks) k += c.status == status;
    return k;
  }
};

inline Json report_to_json(const RunReport& r) {
  Json checks = Json::array();
  for (const auto& c : r.checks)
    checks.push_back({{"suite", c.suite}, {"name", c.name}, {"status", c.status}, {"detail", c.detail}, {"seconds", c.seconds}});
  return {{"command", r.command},
          {"checks", checks},
          {"passed", r.count("pass")},
          {"failed", r.count("fail")},
          {"unknown", r.count("unknown")},
          {"seconds", r.seconds},
          {"conventions", conventions()},
          {"conventions_fingerprint", conventions_fingerprint()}};
}

namespace detail {

struct Outcome {
  bool ok;
  std::string detail;
};

using Check = std::function<Outcome()>;

inline void run_check(RunReport& report, const std::string& suite, const std::string& name, const Check& check) {
  auto t0 = std::chrono::steady_clock::now();
  CheckResult r{suite, name, "fail", "", 0};
  try {
    Outcome o = check();
    r.status = o.ok ? "pass" : "fail";
    r.detail = o.detail;
  } catch (const std::exception& e) {
    r.detail = std::string("error: ") + e.what();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  report.checks.push_back(std::move(r));
}

inline std::string join_ints(const std::vector<int>& v) {
  std::string s;
  for (int x : v) s += (s.empty() ? "" : ",") + std::to_string(x);
  return "{" + s + "}";
}

inline Outcome table_invariants(const Factorization& f) {
  auto inv = factorization_invariants(f);
  std::string d = "total " + std::to_string(inv.total_exponent_sum) + " (expected " + std::to_string(inv.expected_total) +
                  "), product " + (inv.product_is_full_twist ? "= " : "!= ") + "full twist";
  return {inv.total_exponent_sum == inv.expected_total && inv.product_is_full_twist, d};
}

inline void suite_appendix(RunReport& report) {
  auto examples = fixtures::appendix();
  auto tables = fixtures::tables();
  for (const auto& [name, t] : tables)
    run_check(report, "appendix", "table " + name + " invariants", [&] { return table_invariants(t.factorization); });
  for (const auto& ex : examples) {
    for (char axis : {'x', 'y'})
      run_check(report, "appendix", ex.id + " line image on " + std::string(1, axis) + "-axis", [&] {
        Polynomial q = dehomogenize(line_image(RationalMap::axis_restriction(ex.map, axis, 2)));
        int matches = 0;
        for (const auto& f : ex.image_factors) matches += proportional(q, f);
        return Outcome{matches == 1, q.to_string()};
      });
    run_check(report, "appendix", ex.id + " local multiplicity", [&] {
      int m = intersection_multiplicity_origin(AffineMap{ex.map});
      bool found = false;
      for (const auto& w : tables.at(ex.table).factorization.factors) found = found || w.exponent_sum() == 2 * m;
      return Outcome{found, "m = " + std::to_string(m) + ", table " + ex.table +
                                (found ? " has" : " lacks") + " a factor of exponent sum " + std::to_string(2 * m)};
    });
    run_check(report, "appendix", ex.id + " two-lines case", [&] {
      auto c = classify_two_lines(AffineMap{ex.map});
      bool variant = std::find(c.reference_variants.begin(), c.reference_variants.end(), ex.table) !=
                     c.reference_variants.end();
      int conic_matches = 0;
      for (const auto& conic : c.conics)
        for (const auto& f : ex.image_factors) conic_matches += proportional(dehomogenize(conic), f);
      return Outcome{c.case_id > 0 && variant && c.origin_consistent() && conic_matches == 2,
                     "case " + std::to_string(c.case_id) + ", real multiplicities " +
                         join_ints(c.real_multiplicities()) + ", reference " + c.reference_table};
    });
  }
}

inline void suite_section4(RunReport& report) {
  for (const auto& p : fixtures::pencils())
    run_check(report, "section4", "detrep_verify " + p.id, [&] {
      bool ok = detrep_verify(p.detrep(), p.target);
      return Outcome{ok, "det = " + p.detrep().delta().to_string()};
    });
  for (const auto& p : fixtures::pencils())
    run_check(report, "section4", "identity map reproduces the " + p.id, [&] {
      DetRep rep = p.detrep();
      return Outcome{proportional(curve_image(rep, RationalMap::identity()), rep.delta()), ""};
    });
  run_check(report, "section4", "inversion of x0+x1+x2", [&] {
    RationalMatrix one = RationalMatrix::identity(1);
    Polynomial q = curve_image(DetRep(one, one, one), RationalMap::inversion());
    return Outcome{proportional(q, Polynomial::parse("x0*x1 + x0*x2 + x1*x2")), q.to_string()};
  });
}

inline void suite_lemma_he(RunReport& report) {
  run_check(report, "lemmaHE", "printed moves take F1 to F2", [] {
    auto he = fixtures::lemma_he();
    Factorization g = apply_moves(he.f1, he.moves);
    return Outcome{elementwise_equal(g, he.f2), moves_to_string(he.moves)};
  });
  run_check(report, "lemmaHE", "bmt_compare finds a certificate", [] {
    auto he = fixtures::lemma_he();
    auto r = bmt_compare(he.f1, he.f2, 5);
    if (!r.certificate) return Outcome{false, r.note};
    bool ok = elementwise_equal(apply_moves(he.f1, r.certificate->moves), he.f2);
    return Outcome{ok, moves_to_string(r.certificate->moves)};
  });
}

inline Outcome monodromy_against(const Polynomial& q, const Factorization* table) {
  auto r = braid_monodromy(AffineCurve(q));
  std::string d = std::to_string(r.factorization.size()) + " factors, exponent sums " +
                  join_ints(sorted_exponent_sums(r.factorization)) + ", product " +
                  (r.invariants.product_is_full_twist ? "= " : "!= ") + "full twist, " +
                  std::to_string(r.precision) + " bits";
  bool ok = r.invariants.product_is_full_twist && r.permutations_consistent;
  if (table) ok = ok && r.factorization.size() == table->size() && sorted_exponent_sums(r.factorization) == sorted_exponent_sums(*table);
  return {ok, d};
}

inline void suite_monodromy(RunReport& report) {
  run_check(report, "monodromy", "circle", [] {
    auto r = braid_monodromy(AffineCurve(Polynomial::parse("x^2 + y^2 - 1")));
    bool ok = r.factorization.size() == 2 && equals(r.factorization.factors[0], parse_braid("s1", 2)) &&
              equals(r.factorization.factors[1], parse_braid("s1", 2));
    return Outcome{ok, factorization_to_json(r.factorization).dump()};
  });
  run_check(report, "monodromy", "node curve vs table NodeBM", [] {
    auto table = fixtures::tables().at("NodeBM").factorization;
    return monodromy_against(fixtures::node_curve(), &table);
  });
  for (const auto& ex : fixtures::appendix())
    run_check(report, "monodromy", ex.id + " image curve vs table " + ex.table, [&] {
      auto table = fixtures::tables().at(ex.table).factorization;
      return monodromy_against(ex.image_factors.at(0) * ex.image_factors.at(1), &table);
    });
}

}  // namespace detail

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"appendix", "section4", "lemmaHE", "monodromy", "all"};
  return names;
}

inline RunReport verify_suite(const std::string& name) {
  if (std::find(suite_names().begin(), suite_names().end(), name) == suite_names().end())
    throw DomainError("unknown suite '" + name + "' (appendix, section4, lemmaHE, monodromy, all)");
  RunReport report;
  report.command = "verify --suite " + name;
  auto t0 = std::chrono::steady_clock::now();
  bool all = name == "all";
  if (all || name == "appendix") detail::suite_appendix(report);
  if (all || name == "section4") detail::suite_section4(report);
  if (all || name == "lemmaHE") detail::suite_lemma_he(report);
  if (all || name == "monodromy") detail::suite_monodromy(report);
  report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return report;
}

}  // namespace curvetwist
