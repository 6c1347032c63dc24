#pragma once

// Loader for the fixture corpus under fixtures/.

#include <array>
#include <cstdlib>
#include <map>
#include <string>
#include <vector>

#include "curvetwist/io.hpp"

#ifndef CURVETWIST_FIXTURE_DIR
#define CURVETWIST_FIXTURE_DIR "fixtures"
#endif

namespace curvetwist::fixtures {

/// CURVETWIST_FIXTURES overrides the compiled-in location.
inline std::string directory() {
  if (const char* env = std::getenv("CURVETWIST_FIXTURES"); env && *env) return env;
  return CURVETWIST_FIXTURE_DIR;
}

inline Json load(const std::string& name) { return read_json_file(directory() + "/" + name); }

struct TableFixture {
  std::string name;
  Factorization factorization;
  std::string source;
};

struct AppendixExample {
  std::string id;
  int number = 0;
  std::string title;
  std::array<Polynomial, 3> map;  // affine in (x, y)
  std::vector<Polynomial> image_factors;
  std::string table;
  std::string source;
};

inline std::map<std::string, TableFixture> tables() {
  Json j = load("appendix.json");
  std::map<std::string, TableFixture> out;
  for (const auto& [name, t] : j.at("tables").items())
    out[name] = {name, factorization_from_json(t), t.value("source", "")};
  return out;
}

inline std::vector<AppendixExample> appendix() {
  Json j = load("appendix.json");
  std::vector<AppendixExample> out;
  for (const auto& e : j.at("examples")) {
    AppendixExample ex;
    ex.id = e.at("id").get<std::string>();
    ex.number = static_cast<int>(out.size()) + 1;
    ex.title = e.at("title").get<std::string>();
    const auto& m = e.at("map");
    ex.map = {Polynomial::parse(m.at("p0").get<std::string>()), Polynomial::parse(m.at("p1").get<std::string>()),
              Polynomial::parse(m.at("p2").get<std::string>())};
    for (const auto& f : e.at("image_factors")) ex.image_factors.push_back(Polynomial::parse(f.get<std::string>()));
    ex.table = e.at("table").get<std::string>();
    ex.source = e.value("source", "");
    out.push_back(std::move(ex));
  }
  return out;
}

struct LemmaHE {
  Factorization f1, f2;
  std::vector<HurwitzMove> moves;
};

inline LemmaHE lemma_he() {
  Json j = load("lemma_he.json");
  return {factorization_from_json(j.at("F1")), factorization_from_json(j.at("F2")),
          parse_moves(j.at("moves").get<std::string>())};
}

struct PencilFixture {
  std::string id;
  Polynomial target;  // affine in (x, y)
  RationalMatrix constant, x, y;  // as printed: constant + x * X + y * Y

  /// Pencil roles that reproduce the target: x0 pairs with the printed
  /// y-matrix, x1 with the x-matrix, x2 with the constant matrix.
  DetRep detrep() const { return DetRep(y, x, constant); }

  /// The printed reading: x0 with the constant matrix, x1 with x, x2 with y.
  DetRep printed_detrep() const { return DetRep(constant, x, y); }
};

inline std::vector<PencilFixture> pencils() {
  Json j = load("section4.json");
  std::vector<PencilFixture> out;
  for (const auto& p : j.at("pencils"))
    out.push_back({p.at("id").get<std::string>(), Polynomial::parse(p.at("target").get<std::string>()),
                   matrix_from_json(p.at("constant")), matrix_from_json(p.at("x")), matrix_from_json(p.at("y"))});
  return out;
}

inline Polynomial node_curve() {
  return Polynomial::parse(load("section4.json").at("node_curve").at("poly").get<std::string>());
}

struct ConditionFixture {
  std::vector<std::string> symbols;
  std::array<Polynomial, 3> map;
  std::array<Polynomial, 3> conditions;
};

inline ConditionFixture conditions() {
  Json j = load("conditions.json");
  ConditionFixture c;
  c.symbols = j.at("symbols").get<std::vector<std::string>>();
  std::vector<std::string> allowed = c.symbols;
  allowed.push_back("x");
  allowed.push_back("y");
  for (int i = 0; i < 3; ++i) {
    c.map[i] = Polynomial::parse(j.at("p" + std::to_string(i)).get<std::string>(), allowed);
    c.conditions[i] = Polynomial::parse(j.at("conditions").at(i).get<std::string>(), allowed);
  }
  return c;
}

}  // namespace curvetwist::fixtures
