#pragma once

// JSON forms of matrices, pencils, maps and factorizations.

#include <fstream>
#include <string>
#include <vector>

#include "curvetwist/bezout.hpp"
#include "curvetwist/factorization.hpp"
#include "json.hpp"

namespace curvetwist {

using Json = nlohmann::json;

inline Rational rational_from_json(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  throw ParseError("expected a rational as string or integer, got " + j.dump());
}

inline RationalMatrix matrix_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) throw ParseError("matrix must be a nonempty array of rows");
  std::vector<std::vector<Rational>> rows;
  for (const auto& r : j) {
    if (!r.is_array()) throw ParseError("matrix row must be an array");
    std::vector<Rational> row;
    for (const auto& e : r) row.push_back(rational_from_json(e));
    rows.push_back(std::move(row));
  }
  try {
    return RationalMatrix::from_rows(rows);
  } catch (const DomainError& e) {
    throw ParseError(e.what());
  }
}

inline Json matrix_to_json(const RationalMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).get_str());
    rows.push_back(row);
  }
  return rows;
}

inline DetRep detrep_from_json(const Json& j) {
  for (const char* k : {"D0", "D1", "D2"})
    if (!j.contains(k)) throw ParseError(std::string("DetRep JSON lacks field ") + k);
  DetRep rep;
  try {
    rep = DetRep(matrix_from_json(j["D0"]), matrix_from_json(j["D1"]), matrix_from_json(j["D2"]));
  } catch (const DomainError& e) {
    throw ParseError(e.what());
  }
  if (j.contains("m") && j["m"].get<std::size_t>() != rep.m()) throw ParseError("DetRep field m disagrees with matrix size");
  return rep;
}

inline Json detrep_to_json(const DetRep& rep) {
  return {{"m", rep.m()}, {"D0", matrix_to_json(rep.D0)}, {"D1", matrix_to_json(rep.D1)}, {"D2", matrix_to_json(rep.D2)}};
}

inline Factorization factorization_from_json(const Json& j) {
  if (!j.contains("strands") || !j.contains("factors")) throw ParseError("factorization JSON needs strands and factors");
  int n = j["strands"].get<int>();
  std::vector<BraidWord> words;
  for (const auto& f : j["factors"]) {
    std::string text;
    if (f.is_string()) {
      text = f.get<std::string>();
    } else {
      for (const auto& t : f) text += (text.empty() ? "" : " ") + t.get<std::string>();
    }
    words.push_back(parse_braid(text, n));
  }
  return Factorization(n, std::move(words));
}

inline Json factorization_to_json(const Factorization& f) {
  Json factors = Json::array();
  for (const auto& w : f.factors) factors.push_back(w.tokens());
  return {{"strands", f.strands}, {"factors", factors}};
}

inline Json normal_form_to_json(const NormalForm& nf) {
  return {{"strands", nf.strands}, {"inf", nf.inf}, {"factors", nf.factors}, {"word", nf.to_word().to_string()}};
}

inline Json invariants_to_json(const InvariantReport& r) {
  return {{"factor_count", r.factor_count},
          {"exponent_sums", r.exponent_sums},
          {"total_exponent_sum", r.total_exponent_sum},
          {"expected_total", r.expected_total},
          {"product_normal_form", normal_form_to_json(r.product_normal_form)},
          {"permutations", r.permutations},
          {"product_is_full_twist", r.product_is_full_twist}};
}

inline Json map_to_json(const RationalMap& m) {
  return {{"p0", m.p[0].to_string()},
          {"p1", m.p[1].to_string()},
          {"p2", m.p[2].to_string()},
          {"arity", m.arity},
          {"degree", m.degree}};
}

inline RationalMap map_from_json(const Json& j) {
  auto p = [&](const char* k) { return Polynomial::parse(j.at(k).get<std::string>()); };
  int arity = j.value("arity", 0);
  int degree = j.value("degree", -1);
  Polynomial p0 = p("p0"), p1 = p("p1"), p2 = p("p2");
  if (arity == 0) {
    bool projective = true;
    for (const auto* q : {&p0, &p1, &p2})
      for (const auto& v : q->used_variables()) projective = projective && variable_rank(v) <= 2;
    arity = projective ? 3 : 1;
  }
  return arity == 3 ? RationalMap::plane(p0, p1, p2, degree) : RationalMap::line(p0, p1, p2, "", degree);
}

inline Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::exception& e) {
    throw ParseError(path + ": " + e.what());
  }
}

}  // namespace curvetwist
