// curvetwist command-line front end.
//
// Exit codes: 0 all checks pass, 1 a check fails or a computation cannot
// finish, 2 usage error or malformed input.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "curvetwist/curvetwist.hpp"

using namespace curvetwist;

namespace {

struct UsageError : Error {
  using Error::Error;
};

struct Output {
  Json json = Json::object();
  std::string text;
  bool ok = true;
};

Polynomial poly(const std::string& s) { return Polynomial::parse(s); }

// A JSON argument is inline (starting with '{'), a file path, or path#/pointer.
Json json_arg(const std::string& arg) {
  std::string t = arg;
  t.erase(0, t.find_first_not_of(" \t\n"));
  if (!t.empty() && t[0] == '{') {
    try {
      return Json::parse(t);
    } catch (const Json::exception& e) {
      throw ParseError(std::string("inline JSON: ") + e.what());
    }
  }
  // path#/json/pointer selects part of a file
  std::string path = arg, pointer;
  if (auto hash = arg.find('#'); hash != std::string::npos) {
    path = arg.substr(0, hash);
    pointer = arg.substr(hash + 1);
  }
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path);
  Json j = read_json_file(path);
  if (pointer.empty()) return j;
  try {
    return j.at(Json::json_pointer(pointer));
  } catch (const Json::exception& e) {
    throw ParseError(arg + ": " + e.what());
  }
}

std::string matrix_text(const RationalMatrix& m) { return m.to_string() + "\n"; }

std::string factorization_text(const Factorization& f) {
  std::ostringstream os;
  for (std::size_t i = 0; i < f.size(); ++i) os << "  " << i + 1 << ": " << f.factors[i].to_string() << "\n";
  return os.str();
}

std::string yes(bool b) { return b ? "yes" : "no"; }

Output cmd_bezout(const std::string& p, const std::string& q, std::string var, int size) {
  Polynomial a = poly(p), b = poly(q);
  if (var.empty()) {
    auto used = a.used_variables(), more = b.used_variables();
    used.insert(used.end(), more.begin(), more.end());
    used = canonical_variables(used);
    if (used.size() != 1) throw DomainError("bezout: give --var or use exactly one variable");
    var = used[0];
  }
  RationalMatrix m = bezout_matrix(a, b, var, size);
  return {{{"variable", var}, {"matrix", matrix_to_json(m)}}, matrix_text(m)};
}

Output cmd_line_image(const std::array<std::string, 3>& p, const std::string& var, int degree, const std::string& expect) {
  RationalMap map = RationalMap::line(poly(p[0]), poly(p[1]), poly(p[2]), var, degree);
  Polynomial q = line_image(map);
  Polynomial affine = dehomogenize(q);
  bool oracle = image_oracle(map, std::nullopt, q);
  Output o{{{"image", q.to_string()}, {"affine", affine.to_string()}, {"degree", map.degree}, {"oracle", oracle}},
           "image:  " + q.to_string() + "\naffine: " + affine.to_string() + "\noracle: " + (oracle ? "pass" : "fail") + "\n",
           oracle};
  if (!expect.empty()) {
    Polynomial e = poly(expect);
    bool projective = true;
    for (const auto& v : e.used_variables()) projective = projective && variable_rank(v) <= 2;
    bool match = projective ? proportional(q, e) : proportional(affine, e);
    o.json["matches_expected"] = match;
    o.text += std::string("expected: ") + (match ? "match" : "MISMATCH") + "\n";
    o.ok = o.ok && match;
  }
  return o;
}

Output cmd_gen_bezout(const std::string& p, const std::string& q, int n) {
  Polynomial a = poly(p), b = poly(q);
  GeneralizedBezout g = generalized_bezout(a, b, n);
  bool identity = generalized_bezout_identity_holds(g, a, b);
  Json slots = Json::array();
  for (const auto& e : g.slots) slots.push_back(e);
  Output o{{{"n", g.n},
            {"slots", slots},
            {"beta1", matrix_to_json(g.beta1)},
            {"beta2", matrix_to_json(g.beta2)},
            {"beta12", matrix_to_json(g.beta12)},
            {"identity_holds", identity}},
           "",
           identity};
  o.text = "beta1:\n" + matrix_text(g.beta1) + "beta2:\n" + matrix_text(g.beta2) + "beta12:\n" + matrix_text(g.beta12) +
           "expansion identity: " + (identity ? "pass" : "fail") + "\n";
  return o;
}

Output image_output(const RationalMap& map, const DetRep& rep, const Polynomial& q) {
  bool oracle = image_oracle(map, rep.delta(), q);
  return {{{"image", q.to_string()}, {"curve", rep.delta().to_string()}, {"oracle", oracle}},
          "curve:  " + rep.delta().to_string() + "\nimage:  " + q.to_string() + "\noracle: " + (oracle ? "pass" : "fail") +
              "\n",
          oracle};
}

Output cmd_curve_image(const std::string& detrep, const std::array<std::string, 3>& p) {
  DetRep rep = detrep_from_json(json_arg(detrep));
  RationalMap map = RationalMap::plane(poly(p[0]), poly(p[1]), poly(p[2]));
  return image_output(map, rep, curve_image(rep, map));
}

Output cmd_invert(const std::string& detrep) {
  DetRep rep = detrep_from_json(json_arg(detrep));
  return image_output(RationalMap::inversion(), rep, inversion_image(rep));
}

Output cmd_detrep_verify(const std::string& detrep, const std::string& target) {
  DetRep rep = detrep_from_json(json_arg(detrep));
  bool ok = detrep_verify(rep, poly(target));
  return {{{"pass", ok}, {"determinant", rep.delta().to_string()}},
          std::string(ok ? "pass" : "fail") + "\ndeterminant: " + rep.delta().to_string() + "\n", ok};
}

AffineMap affine_map(const std::array<std::string, 3>& p) { return {{poly(p[0]), poly(p[1]), poly(p[2])}}; }

Output cmd_local_mult(const std::array<std::string, 3>& p) {
  AffineMap map = affine_map(p);
  ContactReport r = contact_report(map);
  Json d = Json::array(), e = Json::array();
  std::ostringstream os;
  for (std::size_t i = 0; i < r.d.size(); ++i) {
    d.push_back(r.d[i].get_str());
    e.push_back(r.e[i].get_str());
    os << "D" << i + 1 << "(0) = " << r.d[i] << "   E" << i + 1 << "(0) = " << r.e[i] << "\n";
  }
  os << "multiplicity: " << r.multiplicity << "\n";
  return {{{"multiplicity", r.multiplicity}, {"first_difference", r.first_difference}, {"D", d}, {"E", e}}, os.str()};
}

Output cmd_two_lines(const std::array<std::string, 3>& p) {
  auto c = classify_two_lines(affine_map(p));
  Json pts = Json::array();
  std::ostringstream os;
  os << "case " << c.case_id << "\nconic on x-axis: " << c.conics[0] << "\nconic on y-axis: " << c.conics[1] << "\n";
  for (const auto& pt : c.real_points) {
    Json j = {{"x", pt.x}, {"y", pt.y}, {"multiplicity", pt.multiplicity}, {"at_infinity", pt.at_infinity}};
    if (pt.exact_x) j["exact_x"] = pt.exact_x->get_str();
    if (pt.exact_y) j["exact_y"] = pt.exact_y->get_str();
    pts.push_back(j);
    os << "real point (" << pt.x << ", " << pt.y << ") multiplicity " << pt.multiplicity
       << (pt.at_infinity ? " at infinity" : "") << "\n";
  }
  os << "complex multiplicities:";
  for (int m : c.complex_multiplicities) os << " " << m;
  os << "\norigin multiplicity: " << c.origin_multiplicity << " (contact " << c.origin_multiplicity_contact
     << ")\nreference table " << c.reference_table << ":\n"
     << factorization_text(c.reference);
  return {{{"case", c.case_id},
           {"conics", {c.conics[0].to_string(), c.conics[1].to_string()}},
           {"shear", c.shear},
           {"resultant", c.resultant.to_string()},
           {"real_points", pts},
           {"complex_multiplicities", c.complex_multiplicities},
           {"origin_multiplicity", c.origin_multiplicity},
           {"origin_consistent", c.origin_consistent()},
           {"reference_table", c.reference_table},
           {"reference_variants", c.reference_variants},
           {"reference", factorization_to_json(c.reference)}},
          os.str(),
          c.case_id > 0 && c.origin_consistent()};
}

Output cmd_braid_nf(int n, const std::string& w) {
  NormalForm nf = normal_form(parse_braid(w, n));
  return {normal_form_to_json(nf), nf.to_string() + "\n"};
}

Output cmd_braid_eq(int n, const std::string& w1, const std::string& w2) {
  bool eq = equals(parse_braid(w1, n), parse_braid(w2, n));
  return {{{"equal", eq}}, std::string(eq ? "pass" : "fail") + "\n", eq};
}

Output cmd_braid_product(const std::string& fact) {
  Factorization f = factorization_from_json(json_arg(fact));
  BraidWord p = factorization_product(f);
  NormalForm nf = normal_form(p);
  return {{{"product", p.to_string()}, {"normal_form", normal_form_to_json(nf)}},
          "product: " + p.to_string() + "\nnormal form: " + nf.to_string() + "\n"};
}

Output cmd_braid_invariants(const std::string& fact) {
  InvariantReport r = factorization_invariants(factorization_from_json(json_arg(fact)));
  std::ostringstream os;
  os << "factors: " << r.factor_count << "\nexponent sums:";
  for (int s : r.exponent_sums) os << " " << s;
  os << "\ntotal: " << r.total_exponent_sum << " (n(n-1) = " << r.expected_total << ")\nproduct is full twist: "
     << yes(r.product_is_full_twist) << "\n";
  return {invariants_to_json(r), os.str(), r.product_is_full_twist && r.total_exponent_sum == r.expected_total};
}

Output cmd_hurwitz(const std::string& fact, const std::string& moves, const std::string& expect) {
  Factorization g = apply_moves(factorization_from_json(json_arg(fact)), parse_moves(moves));
  Output o{{{"result", factorization_to_json(g)}}, factorization_text(g)};
  if (!expect.empty()) {
    bool eq = elementwise_equal(g, factorization_from_json(json_arg(expect)));
    o.json["matches_expected"] = eq;
    o.text += std::string("elementwise equal to expected: ") + yes(eq) + "\n";
    o.ok = eq;
  }
  return o;
}

Output cmd_bmt(const std::string& f1, const std::string& f2, int depth, int letters) {
  BmtResult r = bmt_compare(factorization_from_json(json_arg(f1)), factorization_from_json(json_arg(f2)), depth, letters);
  Output o{{{"status", r.certificate ? "equivalent" : "unknown"}, {"note", r.note}}, "", r.certificate.has_value()};
  if (r.certificate) {
    o.json["moves"] = moves_to_string(r.certificate->moves);
    if (r.certificate->conjugator) o.json["conjugator"] = r.certificate->conjugator->to_string();
    o.text = "equivalent\nconjugator: " + (r.certificate->conjugator ? r.certificate->conjugator->to_string() : "none") +
             "\nmoves: " + moves_to_string(r.certificate->moves) + "\n";
  } else {
    o.text = r.note + "\n";
  }
  return o;
}

Output cmd_monodromy(const std::string& curve, int precision) {
  MonodromyResult r = braid_monodromy(AffineCurve(poly(curve)), precision > 0 ? precision : default_precision());
  Json crit = Json::array();
  std::ostringstream os;
  os << "precision: " << r.precision << " bits\nbase point: " << r.critical.base << "\n";
  for (const auto& t : r.loops) {
    crit.push_back({{"re", t.loop.center.real()}, {"im", t.loop.center.imag()}, {"radius", r.critical.radii[t.loop.index - 1]},
                    {"braid", t.braid.to_string()}});
    os << "  " << t.loop.index << ": x = " << t.loop.center.real() << (t.loop.center.imag() < 0 ? " - " : " + ")
       << std::abs(t.loop.center.imag()) << "i   " << t.braid.to_string() << "\n";
  }
  os << "product is full twist: " << yes(r.invariants.product_is_full_twist) << "\n";
  return {{{"precision", r.precision},
           {"discriminant", r.discriminant.to_string()},
           {"base_point", r.critical.base},
           {"critical_values", crit},
           {"factorization", factorization_to_json(r.factorization)},
           {"invariants", invariants_to_json(r.invariants)},
           {"permutations_consistent", r.permutations_consistent}},
          os.str(),
          r.invariants.product_is_full_twist && r.permutations_consistent};
}

Output cmd_verify(const std::string& suite) {
  RunReport r = verify_suite(suite);
  std::ostringstream os;
  for (const auto& c : r.checks)
    os << (c.status == "pass" ? "PASS" : c.status == "fail" ? "FAIL" : "UNKNOWN") << "  [" << c.suite << "] " << c.name
       << (c.detail.empty() ? "" : "  (" + c.detail + ")") << "\n";
  os << r.count("pass") << " passed, " << r.count("fail") << " failed, " << r.count("unknown") << " unknown\n";
  return {report_to_json(r), os.str(), r.all_pass()};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"curvetwist: Bezout images, local intersection data and braid monodromy"};
  app.require_subcommand(0, 1);
  app.fallthrough();
  bool json = false, show_conventions = false;
  app.add_flag("--json", json, "machine-readable output");
  app.add_flag("--conventions", show_conventions, "print the frozen calibration conventions and exit");

  std::function<Output()> run;
  std::string command;
  auto route = [&](CLI::App* sub, std::function<Output()> f) {
    sub->callback([&, sub, f] {
      command = sub->get_name();
      run = f;
    });
  };
  auto map_opts = [](CLI::App* sub, std::array<std::string, 3>& p) {
    sub->add_option("--p0", p[0])->required();
    sub->add_option("--p1", p[1])->required();
    sub->add_option("--p2", p[2])->required();
  };

  std::string p, q, var, expect, detrep, target, w, w1, w2, fact, moves, f1, f2, curve, suite;
  std::array<std::string, 3> comps;
  int size = -1, degree = -1, n = 0, depth = 6, letters = 0, precision = 0;

  auto* bz = app.add_subcommand("bezout", "Bezout matrix of two univariate polynomials");
  bz->add_option("--p", p)->required();
  bz->add_option("--q", q)->required();
  bz->add_option("--var", var);
  bz->add_option("--size", size, "pad to this size");
  route(bz, [&] { return cmd_bezout(p, q, var, size); });

  auto* li = app.add_subcommand("line-image", "implicit image of a parametrized line");
  map_opts(li, comps);
  li->add_option("--var", var);
  li->add_option("--degree", degree);
  li->add_option("--expect", expect, "compare with this polynomial up to scalar");
  route(li, [&] { return cmd_line_image(comps, var, degree, expect); });

  auto* gb = app.add_subcommand("gen-bezout", "generalized Bezout matrices of two ternary forms");
  gb->add_option("--p", p)->required();
  gb->add_option("--q", q)->required();
  gb->add_option("--n", size, "degree (defaults to the form degree)");
  route(gb, [&] { return cmd_gen_bezout(p, q, size); });

  auto* ci = app.add_subcommand("curve-image", "image of det(x0 D0 + x1 D1 + x2 D2) under a plane map");
  ci->add_option("--detrep", detrep, "DetRep JSON file or inline object")->required();
  map_opts(ci, comps);
  route(ci, [&] { return cmd_curve_image(detrep, comps); });

  auto* inv = app.add_subcommand("invert", "image under (x1x2, x0x2, x0x1)");
  inv->add_option("--detrep", detrep)->required();
  route(inv, [&] { return cmd_invert(detrep); });

  auto* dv = app.add_subcommand("detrep-verify", "check a determinantal representation");
  dv->add_option("--detrep", detrep)->required();
  dv->add_option("--target", target)->required();
  route(dv, [&] { return cmd_detrep_verify(detrep, target); });

  auto* lm = app.add_subcommand("local-mult", "intersection multiplicity at the origin's image");
  map_opts(lm, comps);
  route(lm, [&] { return cmd_local_mult(comps); });

  auto* tl = app.add_subcommand("two-lines", "classify the image of the two coordinate axes");
  map_opts(tl, comps);
  route(tl, [&] { return cmd_two_lines(comps); });

  auto* br = app.add_subcommand("braid", "braid words");
  br->require_subcommand(1);
  br->fallthrough();
  auto* nf = br->add_subcommand("nf", "left normal form");
  nf->add_option("--n", n)->required();
  nf->add_option("--w", w)->required();
  route(nf, [&] { return cmd_braid_nf(n, w); });
  auto* eq = br->add_subcommand("eq", "word problem");
  eq->add_option("--n", n)->required();
  eq->add_option("--w1", w1)->required();
  eq->add_option("--w2", w2)->required();
  route(eq, [&] { return cmd_braid_eq(n, w1, w2); });
  auto* pr = br->add_subcommand("product", "product of a factorization");
  pr->add_option("--fact", fact)->required();
  route(pr, [&] { return cmd_braid_product(fact); });
  auto* iv = br->add_subcommand("invariants", "Hurwitz invariants of a factorization");
  iv->add_option("--fact", fact)->required();
  route(iv, [&] { return cmd_braid_invariants(fact); });

  auto* hw = app.add_subcommand("hurwitz", "apply Hurwitz moves");
  hw->add_option("--fact", fact)->required();
  hw->add_option("--moves", moves)->required();
  hw->add_option("--expect", expect, "factorization to compare elementwise");
  route(hw, [&] { return cmd_hurwitz(fact, moves, expect); });

  auto* bm = app.add_subcommand("bmt-compare", "search for a Hurwitz equivalence certificate");
  bm->add_option("--f1", f1)->required();
  bm->add_option("--f2", f2)->required();
  bm->add_option("--depth", depth)->check(CLI::Range(0, 12));
  bm->add_option("--conjugator-letters", letters)->check(CLI::Range(0, 4));
  route(bm, [&] { return cmd_bmt(f1, f2, depth, letters); });

  auto* mo = app.add_subcommand("monodromy", "numerical braid monodromy of an affine curve");
  mo->add_option("--curve", curve)->required();
  mo->add_option("--precision", precision)->check(CLI::IsMember({53, 113}));
  route(mo, [&] { return cmd_monodromy(curve, precision); });

  auto* vf = app.add_subcommand("verify", "run a fixture suite");
  vf->add_option("--suite", suite)->required()->check(CLI::IsMember(suite_names()));
  route(vf, [&] { return cmd_verify(suite); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (show_conventions) {
    Json c = conventions();
    std::cout << (json ? Json{{"conventions", c}, {"conventions_fingerprint", conventions_fingerprint()}}.dump(2)
                       : c.dump(2))
              << "\n";
    return 0;
  }
  if (!run) {
    std::cerr << app.help();
    return 2;
  }

  std::vector<std::string> args(argv + 1, argv + argc);
  std::string echo = "curvetwist";
  for (const auto& a : args) echo += " " + a;
  try {
    Output o = run();
    if (json) {
      Json out = o.json;
      out["command"] = echo;
      out["status"] = o.ok ? "pass" : "fail";
      out["conventions_fingerprint"] = conventions_fingerprint();
      std::cout << out.dump(2) << "\n";
    } else {
      std::cout << o.text;
    }
    return o.ok ? 0 : 1;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    if (json) std::cout << Json{{"command", echo}, {"status", "fail"}, {"error", e.what()}}.dump(2) << "\n";
    return 1;
  }
}
