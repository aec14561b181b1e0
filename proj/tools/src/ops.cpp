#include "slcinv/ops.hpp"

#include <algorithm>
#include <climits>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <sstream>

#include "slc/cusp.hpp"
#include "slc/cyclic_quotient.hpp"
#include "slc/elliptic.hpp"
#include "slc/error.hpp"
#include "slc/fan.hpp"
#include "slc/hypersurface.hpp"
#include "slc/invariants.hpp"
#include "slc/pinkham.hpp"
#include "slc/plumbing.hpp"
#include "slc/quotient_cusp.hpp"
#include "slc/tautological.hpp"

namespace slcinv {

namespace {

json int_json(const slc::Integer& z) {
  if (z.fits_slong_p()) return z.get_si();
  return z.get_str();
}

json matrix_json(const slc::IntMatrix& m) {
  json rows = json::array();
  for (const auto& row : m.to_rows()) {
    json r = json::array();
    for (const auto& x : row) r.push_back(int_json(x));
    rows.push_back(std::move(r));
  }
  return rows;
}

json mat2_json(const slc::Mat2& m) {
  return json::array({json::array({int_json(m.a), int_json(m.b)}),
                      json::array({int_json(m.c), int_json(m.d)})});
}

json group_json(const slc::AbGroup& g) {
  json divisors = json::array();
  for (const auto& d : g.divisors()) divisors.push_back(int_json(d));
  return {{"group", g.to_string()},
          {"free_rank", g.free_rank()},
          {"divisors", std::move(divisors)},
          {"torsion_order", int_json(g.torsion_order())}};
}

json cycle_json(const slc::CuspCycle& c) {
  return json(std::vector<int>(c.entries().begin(), c.entries().end()));
}

// Run-length rendering, e.g. "3,2^648"; keeps long covers printable.
std::string compact(const slc::CuspCycle& c) {
  std::ostringstream os;
  bool first = true;
  for (const auto& b : slc::block_form(c)) {
    os << (first ? "" : ",") << b.m;
    first = false;
    if (b.n == 1) os << ",2";
    if (b.n > 1) os << ",2^" << b.n;
  }
  return os.str();
}

std::string rational_text(const mpq_class& q) { return q.get_str(); }

json vec2_json(const slc::Vec2& v) { return json::array({v[0], v[1]}); }

// Key-checked view of an input object.
class Input {
 public:
  Input(const json& j, std::initializer_list<const char*> allowed) : j_(j) {
    if (!j.is_object()) throw RequestError("InvalidRequest", "input must be a JSON object");
    const std::set<std::string> ok(allowed.begin(), allowed.end());
    for (const auto& [key, value] : j.items()) {
      if (!ok.count(key)) throw RequestError("InvalidRequest", "unknown input field '" + key + "'");
    }
  }

  bool has(const char* key) const { return j_.contains(key) && !j_.at(key).is_null(); }

  long integer(const char* key) const {
    if (!has(key)) throw RequestError("InvalidRequest", std::string("missing field '") + key + "'");
    return as_long(j_.at(key), key);
  }

  std::optional<long> opt_integer(const char* key) const {
    if (!has(key)) return std::nullopt;
    return as_long(j_.at(key), key);
  }

  std::vector<int> int_list(const char* key) const {
    if (!has(key)) throw RequestError("InvalidRequest", std::string("missing field '") + key + "'");
    const json& v = j_.at(key);
    if (v.is_string()) return parse_int_list(v.get<std::string>());
    if (!v.is_array()) {
      throw RequestError("InvalidRequest", std::string("field '") + key + "' must be an array of integers");
    }
    std::vector<int> out;
    for (const auto& x : v) {
      const long n = as_long(x, key);
      if (n < INT_MIN || n > INT_MAX) {
        throw RequestError("InvalidRequest", std::string("entry of '") + key + "' out of range");
      }
      out.push_back(static_cast<int>(n));
    }
    return out;
  }

  mpq_class rational(const char* key, const mpq_class& fallback) const {
    if (!has(key)) return fallback;
    const json& v = j_.at(key);
    if (v.is_number_integer()) return mpq_class(as_long(v, key));
    if (!v.is_string()) {
      throw RequestError("InvalidRequest", std::string("field '") + key + "' must be a rational string");
    }
    return parse_rational(v.get<std::string>(), key);
  }

  bool flag(const char* key, bool fallback) const {
    if (!has(key)) return fallback;
    if (!j_.at(key).is_boolean()) {
      throw RequestError("InvalidRequest", std::string("field '") + key + "' must be a boolean");
    }
    return j_.at(key).get<bool>();
  }

  const json& raw(const char* key) const { return j_.at(key); }

 private:
  static long as_long(const json& v, const char* key) {
    if (v.is_number_integer()) {
      if (v.is_number_unsigned() && v.get<unsigned long>() > static_cast<unsigned long>(LONG_MAX)) {
        throw RequestError("InvalidRequest", std::string("field '") + key + "' out of range");
      }
      return v.get<long>();
    }
    throw RequestError("InvalidRequest", std::string("field '") + key + "' must be an integer");
  }

  static mpq_class parse_rational(const std::string& s, const char* key) {
    const auto bad = [&] {
      return RequestError("InvalidRequest", std::string("field '") + key + "': bad rational '" + s + "'");
    };
    if (s.empty() || s.find_first_not_of("-0123456789/") != std::string::npos) throw bad();
    mpq_class q;
    if (q.set_str(s, 10) != 0) throw bad();
    if (q.get_den() == 0) throw bad();
    q.canonicalize();
    return q;
  }

  const json& j_;
};

slc::CuspCycle cycle_input(const json& in) {
  return slc::CuspCycle(Input(in, {"cycle"}).int_list("cycle"));
}

slc::PlumbingGraph graph_input(const json& in) {
  Input args(in, {"weights", "edges", "qcusp"});
  if (args.has("qcusp")) {
    if (args.has("weights") || args.has("edges")) {
      throw RequestError("InvalidRequest", "give either 'qcusp' or 'weights'/'edges', not both");
    }
    const auto e = args.int_list("qcusp");
    return slc::quotient_cusp_graph(e);
  }
  auto weights = args.int_list("weights");
  std::vector<slc::PlumbingGraph::Edge> edges;
  if (args.has("edges")) {
    const json& raw = args.raw("edges");
    if (!raw.is_array()) throw RequestError("InvalidRequest", "'edges' must be an array of pairs");
    for (const auto& e : raw) {
      if (!e.is_array() || e.size() != 2 || !e[0].is_number_unsigned() || !e[1].is_number_unsigned()) {
        throw RequestError("InvalidRequest", "each edge must be a pair of vertex indices");
      }
      edges.emplace_back(e[0].get<std::size_t>(), e[1].get<std::size_t>());
    }
  }
  return slc::PlumbingGraph(std::move(weights), std::move(edges));
}

slc::QuotientCuspSpec qcusp_input(const Input& args) { return slc::QuotientCuspSpec(args.int_list("e")); }

slc::TriplePQR triple_input(const json& in) {
  Input args(in, {"p", "q", "r"});
  return slc::TriplePQR(args.integer("p"), args.integer("q"), args.integer("r"));
}

json record_json(const slc::EquationRecord& r) {
  return {{"equations", r.equations},
          {"parameter", r.parameter},
          {"parameter_invariant", r.parameter_invariant},
          {"group_order", int_json(r.group_order)}};
}

std::string record_text(const slc::EquationRecord& r) {
  std::ostringstream os;
  for (const auto& e : r.equations) os << e << "\n";
  os << "parameter " << r.parameter << (r.parameter_invariant ? " (invariant)" : "") << "\n";
  os << "group order " << r.group_order << "\n";
  return os.str();
}

json fan_json(const slc::StackyFan& f) {
  json rays = json::array();
  for (const auto& r : f.rays()) rays.push_back(vec2_json(r));
  json cones = json::array();
  for (const auto& c : f.cones()) {
    cones.push_back({{"label", c.label},
                     {"rays", json::array({vec2_json(f.rays()[c.first]), vec2_json(f.rays()[c.second])})}});
  }
  return {{"rays", std::move(rays)}, {"cones", std::move(cones)}, {"complete", f.is_complete()}};
}

std::string fan_text(const slc::StackyFan& f) {
  std::ostringstream os;
  for (const auto& c : f.cones()) {
    const auto& u = f.rays()[c.first];
    const auto& w = f.rays()[c.second];
    os << "  " << (c.label.empty() ? "-" : c.label) << " = ((" << u[0] << "," << u[1] << "),("
       << w[0] << "," << w[1] << "))\n";
  }
  os << "  complete: " << (f.is_complete() ? "yes" : "no") << "\n";
  return os.str();
}

// Cone of f whose interior contains v, with v's coordinates in it.
json insertion_json(const slc::StackyFan& f, const slc::Vec2& v) {
  for (std::size_t i = 0; i < f.cones().size(); ++i) {
    const auto coords = slc::cone_coordinates(f, i, v);
    if (coords.along_first > 0 && coords.along_second > 0) {
      const auto& c = f.cones()[i];
      return {{"ray", vec2_json(v)},
              {"cone", json::array({vec2_json(f.rays()[c.first]), vec2_json(f.rays()[c.second])})},
              {"label", c.label},
              {"coefficients", json::array({rational_text(coords.along_first),
                                            rational_text(coords.along_second)})}};
    }
  }
  throw slc::Error(slc::ErrorCode::RayOutsideSupport, "ray lies in no open cone");
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }

using Handler = std::function<OpResult(const json&)>;

// ---- cusp -----------------------------------------------------------------

OpResult cusp_canonical(const json& in) {
  const auto c = slc::canonicalize(cycle_input(in));
  return {{{"cycle", cycle_json(c)}}, c.to_string() + "\n", {}};
}

OpResult cusp_monodromy(const json& in) {
  const auto c = cycle_input(in);
  const slc::Mat2 a = slc::monodromy(c);
  std::ostringstream text;
  text << a << "\n";
  return {{{"matrix", mat2_json(a)}, {"trace", int_json(a.trace())}, {"det", int_json(a.det())}},
          text.str(),
          {}};
}

OpResult cusp_dual(const json& in) {
  const auto c = cycle_input(in);
  const auto d = slc::dual(c);
  const bool self_dual = d == slc::canonicalize(c);
  // A self-dual cycle is echoed in the orientation it was given.
  const std::string text = self_dual ? c.to_string() + " (self-dual)" : d.to_string();
  return {{{"dual", cycle_json(d)}, {"length", d.length()}, {"self_dual", self_dual}}, text + "\n", {}};
}

OpResult cusp_ci(const json& in) {
  const auto c = cycle_input(in);
  const bool ci = slc::is_complete_intersection(c);
  return {{{"complete_intersection", ci}, {"excess", c.excess()}},
          std::string(yes_no(ci)) + "\n",
          {}};
}

OpResult cusp_torsion(const json& in) {
  const auto g = slc::link_torsion(cycle_input(in));
  return {group_json(g), g.to_string() + ", order " + g.torsion_order().get_str() + "\n", {}};
}

OpResult cusp_lci_cover(const json& in) {
  const auto cov = slc::lci_discriminant_cover(cycle_input(in));
  const std::string cover = compact(cov.cover);
  json blocks = json::array();
  for (const auto& b : slc::block_form(cov.cover)) blocks.push_back(json::array({b.m, b.n}));
  std::ostringstream text;
  text << "trace " << cov.trace << "\ncover (" << cover << "), length " << cov.cover.length()
       << ", excess " << cov.cover.excess() << "\n";
  return {{{"trace", int_json(cov.trace)},
           {"cover", cover},
           {"cover_blocks", std::move(blocks)},
           {"cover_length", cov.cover.length()},
           {"cover_excess", cov.cover.excess()},
           {"complete_intersection", slc::is_complete_intersection(cov.cover)}},
          text.str(),
          {}};
}

OpResult cusp_report(const json& in) {
  const std::string report = slc::discriminant_report(cycle_input(in));
  return {{{"report", report}}, report, {}};
}

// ---- plumbing -------------------------------------------------------------

OpResult plumbing_matrix(const json& in) {
  const auto f = slc::intersection_matrix(graph_input(in));
  std::ostringstream text;
  for (const auto& row : f.matrix.to_rows()) {
    for (std::size_t j = 0; j < row.size(); ++j) text << (j ? " " : "") << row[j];
    text << "\n";
  }
  return {{{"matrix", matrix_json(f.matrix)}, {"size", f.matrix.rows()}}, text.str(), {}};
}

OpResult plumbing_disc(const json& in) {
  const auto g = slc::discriminant_group(graph_input(in));
  return {group_json(g), g.to_string() + ", order " + g.torsion_order().get_str() + "\n", {}};
}

OpResult plumbing_negdef(const json& in) {
  const auto f = slc::intersection_matrix(graph_input(in));
  const bool nd = slc::is_negative_definite(f);
  json minors = json::array();
  for (const auto& m : slc::leading_principal_minors(f.matrix)) minors.push_back(int_json(m));
  return {{{"negative_definite", nd}, {"leading_minors", std::move(minors)}},
          std::string(yes_no(nd)) + "\n",
          {}};
}

// ---- quotient cusps -------------------------------------------------------

OpResult qcusp_bmatrix(const json& in) {
  const auto s = qcusp_input(Input(in, {"e"}));
  const slc::Mat2 b = slc::b_matrix(s);
  std::ostringstream text;
  text << b << "\n";
  return {{{"matrix", mat2_json(b)}, {"det", int_json(b.det())}}, text.str(), {}};
}

OpResult qcusp_order(const json& in) {
  const auto s = qcusp_input(Input(in, {"e"}));
  const slc::Mat2 b = slc::b_matrix(s);
  const slc::Integer order = slc::cover_group_order(s);
  return {{{"b", int_json(b.b)}, {"order", int_json(order)}},
          "16 * " + b.b.get_str() + " = " + order.get_str() + "\n",
          {}};
}

OpResult qcusp_equations(const json& in) {
  const auto s = qcusp_input(Input(in, {"e"}));
  const auto data = slc::cover_equations(s);
  json tuples = json::array();
  std::ostringstream text;
  text << "b = " << data.b << ", group order " << data.group_order << "\n";
  for (const auto& t : data.exponent_tuples) {
    const auto eqs = slc::cover_equation_strings(t);
    tuples.push_back({{"alpha", t[0]},
                      {"beta", t[1]},
                      {"gamma", t[2]},
                      {"delta", t[3]},
                      {"equations", json::array({eqs[0], eqs[1]})}});
    text << eqs[0] << "; " << eqs[1] << "\n";
  }
  return {{{"b", mat2_json(data.b)},
           {"group_order", int_json(data.group_order)},
           {"templates", json::array({slc::CoverData::kFirstTemplate, slc::CoverData::kSecondTemplate})},
           {"tuples", std::move(tuples)}},
          text.str(),
          {}};
}

OpResult qcusp_cover_cycle(const json& in) {
  const auto s = qcusp_input(Input(in, {"e"}));
  const auto c = slc::cover_resolution_cycle(s);
  const auto d = slc::dual(c);
  return {{{"cycle", cycle_json(slc::canonicalize(c))}, {"dual", cycle_json(d)}},
          slc::canonicalize(c).to_string() + " (dual " + d.to_string() + ")\n",
          {}};
}

OpResult qcusp_smoothing(const json& in) {
  Input args(in, {"e", "tuple"});
  const auto s = qcusp_input(args);
  const auto raw = args.int_list("tuple");
  if (raw.size() != 4) throw RequestError("InvalidRequest", "'tuple' needs four exponents");
  const slc::ExponentTuple t{raw[0], raw[1], raw[2], raw[3]};
  const auto r = slc::smoothing_family(s, t);
  return {record_json(r), record_text(r), {}};
}

// ---- pinkham --------------------------------------------------------------

OpResult pinkham_dual(const json& in) {
  const auto c = slc::dual_cycle(triple_input(in));
  return {{{"cycle", cycle_json(c)}}, c.to_string() + "\n", {}};
}

OpResult pinkham_order(const json& in) {
  const auto t = triple_input(in);
  const auto g = slc::abelianized_group(t);
  const slc::Integer closed = slc::Integer(t.p) * t.q * t.r - slc::Integer(t.p) * t.q -
                              slc::Integer(t.q) * t.r - slc::Integer(t.r) * t.p;
  json out = group_json(g);
  out["order"] = int_json(slc::group_order(t));
  out["closed_form"] = int_json(closed);
  return {std::move(out), slc::group_order(t).get_str() + " (" + g.to_string() + ")\n", {}};
}

OpResult pinkham_smoothing(const json& in) {
  const auto r = slc::smoothing_record(triple_input(in));
  return {record_json(r), record_text(r), {}};
}

// ---- class T --------------------------------------------------------------

OpResult classt_check(const json& in) {
  Input args(in, {"m", "q", "p"});
  const auto c = slc::normalize(args.integer("m"), args.integer("q"), args.opt_integer("p"));
  const auto w = slc::class_t_witness(c);
  const bool rdp = slc::is_rdp(c);
  const bool class_t = rdp || w.has_value();
  json out = {{"m", c.m()},
              {"q", c.q()},
              {"singularity", c.to_string()},
              {"rdp", rdp},
              {"class_t", class_t},
              {"witness", nullptr}};
  std::ostringstream text;
  text << c.to_string() << "\n";
  if (w) {
    out["witness"] = {{"d", w->d}, {"n", w->n}, {"a", w->a}};
    text << "class T: d = " << w->d << ", n = " << w->n << ", a = " << w->a << "\n";
  } else {
    text << (rdp ? "rational double point\n" : "not class T\n");
  }
  if (const auto p = args.opt_integer("p"); p && *p > 0) {
    // m/p,q with p*q = 1 mod m is often shorthand for the inverse pair of
    // 1/m(1,q); report that reading next to the literal one.
    const long m = args.integer("m");
    const long q = args.integer("q");
    if (m > 1 && q > 0 && (mpz_class(*p) * q) % m == 1) {
      const auto alt = slc::normalize(m, q);
      const bool alt_t = slc::is_rdp(alt) || slc::class_t_witness(alt).has_value();
      out["inverse_pair_reading"] = {{"singularity", alt.to_string()}, {"class_t", alt_t}};
      text << "inverse-pair reading: " << alt.to_string() << (alt_t ? " (class T)" : " (not class T)") << "\n";
    }
  }
  if (class_t) {
    const auto cover = slc::index_one_cover(c);
    const bool wahl = slc::is_wahl(c);
    out["wahl"] = wahl;
    out["index"] = slc::index(c);
    out["cover"] = {{"name", cover.name()}, {"singularity", cover.singularity.to_string()}};
    text << "wahl: " << yes_no(wahl) << "\nindex: " << slc::index(c) << "\nindex-one cover: "
         << cover.name() << " = " << cover.singularity.to_string() << "\n";
  }
  return {std::move(out), text.str(), {}};
}

OpResult classt_enumerate(const json& in) {
  Input args(in, {"max"});
  const auto entries = slc::enumerate_class_t(args.integer("max"));
  json list = json::array();
  std::ostringstream text;
  for (const auto& e : entries) {
    list.push_back({{"m", e.singularity.m()},
                    {"q", e.singularity.q()},
                    {"d", e.witness.d},
                    {"n", e.witness.n},
                    {"a", e.witness.a}});
    text << e.singularity.to_string() << "  d=" << e.witness.d << " n=" << e.witness.n
         << " a=" << e.witness.a << "\n";
  }
  return {{{"count", entries.size()}, {"entries", std::move(list)}}, text.str(), {}};
}

// ---- elliptic, hypersurface, vd -------------------------------------------

OpResult elliptic_op(const json& in) {
  const slc::SimpleElliptic s(Input(in, {"degree"}).integer("degree"));
  json out = {{"degree", s.degree()},
              {"embedded_dimension", slc::embedded_dimension(s)},
              {"lci", slc::is_lci(s)},
              {"smoothable", slc::is_smoothable(s)},
              {"lci_smoothing_lifting", slc::has_lci_smoothing_lifting(s)}};
  std::ostringstream text;
  text << "degree " << s.degree() << "\nembedded dimension " << slc::embedded_dimension(s)
       << "\nlci: " << yes_no(slc::is_lci(s)) << "\nsmoothable: " << yes_no(slc::is_smoothable(s))
       << "\nlci smoothing lifts: " << yes_no(slc::has_lci_smoothing_lifting(s)) << "\n";
  return {std::move(out), text.str(), {}};
}

json sequence_json(const slc::ExactSequence& seq) {
  json terms = json::array();
  for (std::size_t i = 0; i < seq.size(); ++i) {
    const auto d = seq.dim(i);
    terms.push_back({{"term", seq.name(i)}, {"dim", d ? json(*d) : json(nullptr)}});
  }
  return terms;
}

OpResult hypersurface_op(const json& in) {
  Input args(in, {"degree", "cohomology"});
  const long d = args.integer("degree");
  const bool tables = args.flag("cohomology", false);
  const auto inv = slc::surface_invariants(d);
  json out = {{"degree", d},
              {"invariants",
               {{"K2", inv.K2}, {"e", inv.e}, {"chi", inv.chi}, {"pg", inv.pg}, {"q", inv.q}}},
              {"vd", slc::virtual_dimension(inv.K2, inv.chi)}};
  std::ostringstream text;
  text << "degree " << d << ": K^2 = " << inv.K2 << ", e = " << inv.e << ", chi = " << inv.chi
       << ", pg = " << inv.pg << ", q = " << inv.q << "\n";
  text << "vd = 10 chi - 2 K^2 = " << slc::virtual_dimension(inv.K2, inv.chi) << "\n";
  if (d >= 5) {
    const auto chase = slc::tangent_cohomology_chase(d);
    out["tangent_cohomology"] = chase.result.dims;
    text << "h^i(T_S) = (" << chase.result.dims[0] << ", " << chase.result.dims[1] << ", "
         << chase.result.dims[2] << ")\n";
    if (tables) {
      out["sequences"] = {{"normal", sequence_json(chase.normal)},
                          {"restricted", sequence_json(chase.restricted)},
                          {"tangent", sequence_json(chase.tangent)}};
      for (const auto* seq : {&chase.normal, &chase.restricted, &chase.tangent}) {
        text << "\n";
        for (std::size_t i = 0; i < seq->size(); ++i) {
          const auto v = seq->dim(i);
          text << "  " << seq->name(i) << " = " << (v ? std::to_string(*v) : "?") << "\n";
        }
      }
    }
  } else if (tables) {
    throw slc::Error(slc::ErrorCode::DegreeTooSmall, "cohomology tables need degree >= 5");
  }
  return {std::move(out), text.str(), {}};
}

OpResult vd_op(const json& in) {
  Input args(in, {"k2", "chi"});
  const long vd = slc::virtual_dimension(args.integer("k2"), args.integer("chi"));
  return {{{"vd", vd}}, std::to_string(vd) + "\n", {}};
}

// ---- donaldson ------------------------------------------------------------

OpResult donaldson_fan(const json& in) {
  Input(in, {});
  const auto initial = slc::initial_git_fan();
  const auto first = slc::insert_ray(initial, {4, -1}, "III", "IV'");
  const auto second = slc::insert_ray(first, {2, 1}, "IV''", "II");
  const auto ksba = slc::ksba_fan();
  json out = {{"initial", fan_json(initial)},
              {"ksba", fan_json(ksba)},
              {"insertions", json::array({insertion_json(initial, {4, -1}), insertion_json(first, {2, 1})})},
              {"collapsed", vec2_json({2, 0})}};
  std::ostringstream text;
  text << "initial fan:\n" << fan_text(initial) << "after inserting (4,-1) and (2,1):\n"
       << fan_text(second) << "after collapsing (2,0):\n" << fan_text(ksba);
  return {std::move(out), text.str(), {}};
}

OpResult donaldson_invariants(const json& in) {
  Input(in, {});
  const auto basis = slc::invariant_sextic_basis();
  const auto group = slc::generate_group(slc::sextic_group_generators());
  json list = json::array();
  std::ostringstream text;
  text << "group order " << group.size() << ", invariant sextics: dimension " << basis.dimension << "\n";
  for (std::size_t i = 0; i < basis.basis.size(); ++i) {
    const std::string poly = slc::to_string(basis.basis[i]);
    list.push_back({{"name", basis.names[i]}, {"polynomial", poly}});
    text << "  " << basis.names[i] << " = " << poly << "\n";
  }
  return {{{"group_order", group.size()},
           {"monomial_count", slc::monomials(6).size()},
           {"dimension", basis.dimension},
           {"basis", std::move(list)}},
          text.str(),
          {}};
}

OpResult donaldson_two_forms(const json& in) {
  Input(in, {});
  const auto full = slc::invariant_two_forms();
  const auto gens = slc::sextic_group_generators();
  const auto diagonal = slc::invariant_two_forms(slc::generate_group({gens[0], gens[1]}));
  json basis = json::array();
  for (const auto& w : full.basis) basis.push_back(slc::to_string(w));
  std::ostringstream text;
  text << "dimension " << full.dimension << " of 6\n";
  for (const auto& w : full.basis) text << "  " << slc::to_string(w) << "\n";
  text << "diagonal subgroup alone: dimension " << diagonal.dimension << "\n";
  return {{{"dimension", full.dimension},
           {"exterior_dimension", 6},
           {"basis", std::move(basis)},
           {"diagonal_dimension", diagonal.dimension}},
          text.str(),
          {}};
}

OpResult donaldson_tautological(const json& in) {
  Input args(in, {"ob", "l2", "l2sq"});
  std::vector<std::string> provenance;
  if (!args.has("ob")) provenance.push_back("published constant: <-c1(L_Ob), D_II> = -1/4");
  if (!args.has("l2")) provenance.push_back("published constant: <c1(lambda2), D_II> = 12");
  if (!args.has("l2sq")) provenance.push_back("published constant: <c1(lambda2)^2, [D_II]> = 288");
  const auto r = slc::tautological_invariant(args.rational("ob", slc::kDefaultObPairing),
                                             args.rational("l2", slc::kDefaultL2Pairing),
                                             args.rational("l2sq", slc::kDefaultL2Square));
  std::ostringstream text;
  text << "c1(L_Ob) = " << r.ratio << " c1(lambda2)\n<c1(lambda2), [vir]> = " << r.pair_l2_vir
       << "\nI_CM = " << r.i_cm << "\n";
  return {{{"ratio", rational_text(r.ratio)},
           {"pair_l2_vir", rational_text(r.pair_l2_vir)},
           {"i_cm", rational_text(r.i_cm)}},
          text.str(),
          std::move(provenance)};
}

OpResult donaldson_cm_exponents(const json& in) {
  Input args(in, {"mu"});
  if (!args.has("mu")) throw RequestError("InvalidRequest", "missing field 'mu'");
  const auto [a3, a2] = slc::cm_exponents(args.rational("mu", 0));
  return {{{"a3", rational_text(a3)}, {"a2", rational_text(a2)}},
          "lambda3^" + rational_text(a3) + " (x) lambda2^" + rational_text(a2) + "\n",
          {}};
}

OpResult donaldson_vd(const json& in) {
  Input(in, {});
  const auto v = slc::equivariant_vd();
  return {{{"h1", v.h1}, {"h2", v.h2}, {"vd", v.vd}},
          "vd = " + std::to_string(v.h1) + " - " + std::to_string(v.h2) + " = " + std::to_string(v.vd) + "\n",
          {"published constant: dim H^1(S, T_S)^G = 2"}};
}

const std::map<std::string, Handler>& registry() {
  static const std::map<std::string, Handler> ops = {
      {"cusp.canonical", cusp_canonical},
      {"cusp.monodromy", cusp_monodromy},
      {"cusp.dual", cusp_dual},
      {"cusp.ci", cusp_ci},
      {"cusp.torsion", cusp_torsion},
      {"cusp.lci-cover", cusp_lci_cover},
      {"cusp.report", cusp_report},
      {"plumbing.matrix", plumbing_matrix},
      {"plumbing.disc", plumbing_disc},
      {"plumbing.negdef", plumbing_negdef},
      {"qcusp.bmatrix", qcusp_bmatrix},
      {"qcusp.order", qcusp_order},
      {"qcusp.equations", qcusp_equations},
      {"qcusp.cover-cycle", qcusp_cover_cycle},
      {"qcusp.smoothing", qcusp_smoothing},
      {"pinkham.dual", pinkham_dual},
      {"pinkham.order", pinkham_order},
      {"pinkham.smoothing", pinkham_smoothing},
      {"classt.check", classt_check},
      {"classt.enumerate", classt_enumerate},
      {"elliptic", elliptic_op},
      {"hypersurface", hypersurface_op},
      {"vd", vd_op},
      {"donaldson.fan", donaldson_fan},
      {"donaldson.invariants", donaldson_invariants},
      {"donaldson.two-forms", donaldson_two_forms},
      {"donaldson.tautological", donaldson_tautological},
      {"donaldson.cm-exponents", donaldson_cm_exponents},
      {"donaldson.vd", donaldson_vd},
  };
  return ops;
}

}  // namespace

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto b = item.find_first_not_of(" \t");
    const auto e = item.find_last_not_of(" \t");
    if (b == std::string::npos) throw RequestError("InvalidRequest", "empty entry in '" + text + "'");
    item = item.substr(b, e - b + 1);
    std::size_t used = 0;
    long v = 0;
    try {
      v = std::stol(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != item.size() || item[0] == '+' || v < INT_MIN || v > INT_MAX) {
      throw RequestError("InvalidRequest", "not an integer: '" + item + "'");
    }
    out.push_back(static_cast<int>(v));
  }
  if (out.empty() || text.back() == ',') {
    throw RequestError("InvalidRequest", "expected comma-separated integers, got '" + text + "'");
  }
  return out;
}

OpResult run_op(const std::string& op, const json& input) {
  const auto& ops = registry();
  const auto it = ops.find(op);
  if (it == ops.end()) throw RequestError("UnknownOp", "unknown op '" + op + "'");
  return it->second(input);
}

std::vector<std::string> op_names() {
  std::vector<std::string> out;
  for (const auto& [name, handler] : registry()) out.push_back(name);
  return out;
}

}  // namespace slcinv
