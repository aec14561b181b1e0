// slcinv: command-line front end for the slc invariant library.
//
// Cycles and weight lists are comma-separated magnitudes: "6,2,2,3,3,2,2,4"
// stands for the self-intersections -6,-2,-2,-3,-3,-2,-2,-4.
//
// Exit status: 0 success, 1 domain error, 2 usage error.

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <iostream>
#include <string>

#include "slc/error.hpp"
#include "slcinv/batch.hpp"
#include "slcinv/ops.hpp"

namespace {

using slcinv::json;

constexpr const char* kSynopsis =
    "usage: slcinv [--json] <cusp|plumbing|qcusp|pinkham|classt|elliptic|hypersurface|vd|"
    "donaldson|batch> ...";

// Selected op and a deferred input builder, so literal parsing errors surface
// after CLI11 is done and map to exit code 2.
struct Selection {
  std::string op;
  std::function<json()> input;
};

json parse_weights(const std::string& text) {
  // "m/q" or "m/p,q"
  const auto slash = text.find('/');
  if (slash == std::string::npos) {
    throw slcinv::RequestError("InvalidRequest", "expected m/q or m/p,q, got '" + text + "'");
  }
  const auto m = slcinv::parse_int_list(text.substr(0, slash));
  const auto w = slcinv::parse_int_list(text.substr(slash + 1));
  if (m.size() != 1 || w.empty() || w.size() > 2) {
    throw slcinv::RequestError("InvalidRequest", "expected m/q or m/p,q, got '" + text + "'");
  }
  json in = {{"m", m[0]}, {"q", w.back()}};
  if (w.size() == 2) in["p"] = w[0];
  return in;
}

void print_result(const slcinv::OpResult& r, bool as_json) {
  if (as_json) {
    json envelope = {{"ok", true}, {"output", r.output}, {"provenance", r.provenance}};
    std::cout << envelope.dump(2) << "\n";
    return;
  }
  std::cout << r.text;
  for (const auto& p : r.provenance) std::cout << "# " << p << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact invariants of surface singularities and their smoothings", "slcinv"};
  app.set_version_flag("--version", "slcinv 1.0.0");
  app.require_subcommand(1);
  app.fallthrough();

  bool as_json = false;
  app.add_flag("--json", as_json, "Print a JSON envelope instead of text");

  Selection sel;

  // cusp <op> CYCLE
  auto* cusp = app.add_subcommand("cusp", "Cusp resolution cycles")->require_subcommand(1);
  static std::string cycle_arg;
  for (const auto& [name, desc] : std::initializer_list<std::pair<const char*, const char*>>{
           {"canonical", "Canonical rotation/reflection representative"},
           {"monodromy", "Monodromy matrix M(e_k)...M(e_1)"},
           {"dual", "Dual cusp cycle"},
           {"ci", "Complete-intersection test (excess <= 4)"},
           {"torsion", "Torsion of H_1 of the link"},
           {"lci-cover", "Discriminant cover by a hypersurface cusp"},
           {"report", "Discriminant consistency report"}}) {
    auto* sub = cusp->add_subcommand(name, desc);
    sub->add_option("cycle", cycle_arg, "Comma-separated magnitudes e_i >= 2")->required();
    const std::string op = std::string("cusp.") + name;
    sub->callback([&sel, op] {
      sel = {op, [] { return json{{"cycle", slcinv::parse_int_list(cycle_arg)}}; }};
    });
  }

  // plumbing <op> (--graph JSON | --graph-file PATH | --qcusp E)
  auto* plumbing = app.add_subcommand("plumbing", "Plumbing graphs")->require_subcommand(1);
  static std::string graph_arg, graph_file, qcusp_graph;
  for (const auto& [name, desc] : std::initializer_list<std::pair<const char*, const char*>>{
           {"matrix", "Intersection matrix"},
           {"disc", "Discriminant group coker(M)"},
           {"negdef", "Negative-definiteness via leading minors"}}) {
    auto* sub = plumbing->add_subcommand(name, desc);
    auto* g = sub->add_option("--graph", graph_arg, R"(Graph JSON {"weights":[...],"edges":[[i,j],...]})");
    auto* f = sub->add_option("--graph-file", graph_file, "File holding the graph JSON");
    auto* q = sub->add_option("--qcusp", qcusp_graph, "Quotient-cusp chain e_1,...,e_k");
    g->excludes(f)->excludes(q);
    f->excludes(q);
    sub->require_option(1);
    const std::string op = std::string("plumbing.") + name;
    sub->callback([&sel, op] {
      sel = {op, [] {
               if (!qcusp_graph.empty()) return json{{"qcusp", slcinv::parse_int_list(qcusp_graph)}};
               std::string text = graph_arg;
               if (!graph_file.empty()) {
                 std::ifstream in(graph_file);
                 if (!in) throw slcinv::RequestError("InvalidRequest", "cannot read " + graph_file);
                 text.assign(std::istreambuf_iterator<char>(in), {});
               }
               try {
                 return json::parse(text);
               } catch (const json::parse_error& e) {
                 throw slcinv::RequestError("InvalidRequest", std::string("graph JSON: ") + e.what());
               }
             }};
    });
  }

  // qcusp <op> E [--tuple a,b,c,d]
  auto* qcusp = app.add_subcommand("qcusp", "Quotient cusps and their 16b-fold covers")->require_subcommand(1);
  static std::string e_arg, tuple_arg;
  for (const auto& [name, desc] : std::initializer_list<std::pair<const char*, const char*>>{
           {"bmatrix", "The matrix [[a,b],[c,d]]"},
           {"order", "Cover group order 16b"},
           {"equations", "Cover equations for every valid exponent tuple"},
           {"cover-cycle", "Resolution cycle of the cover cusp"},
           {"smoothing", "Equivariant smoothing family for one exponent tuple"}}) {
    auto* sub = qcusp->add_subcommand(name, desc);
    sub->add_option("e", e_arg, "Chain e_1,...,e_k")->required();
    const std::string op = std::string("qcusp.") + name;
    if (op == "qcusp.smoothing") {
      sub->add_option("--tuple", tuple_arg, "alpha,beta,gamma,delta")->required();
    }
    sub->callback([&sel, op] {
      sel = {op, [op] {
               json in = {{"e", slcinv::parse_int_list(e_arg)}};
               if (op == "qcusp.smoothing") in["tuple"] = slcinv::parse_int_list(tuple_arg);
               return in;
             }};
    });
  }

  // pinkham <op> P Q R
  auto* pinkham = app.add_subcommand("pinkham", "Hypersurface cusps x^p+y^q+z^r+xyz")->require_subcommand(1);
  static long p_arg = 0, q_arg = 0, r_arg = 0;
  for (const auto& [name, desc] : std::initializer_list<std::pair<const char*, const char*>>{
           {"dual", "Cycle of the dual cusp (p-1, q-1, r-1)"},
           {"order", "Order of the abelianized transformation group"},
           {"smoothing", "Smoothing record"}}) {
    auto* sub = pinkham->add_subcommand(name, desc);
    sub->add_option("p", p_arg)->required();
    sub->add_option("q", q_arg)->required();
    sub->add_option("r", r_arg)->required();
    const std::string op = std::string("pinkham.") + name;
    sub->callback([&sel, op] {
      sel = {op, [] { return json{{"p", p_arg}, {"q", q_arg}, {"r", r_arg}}; }};
    });
  }

  // classt check m/q | classt enumerate --max M
  auto* classt = app.add_subcommand("classt", "Cyclic quotients 1/m(1,q) and class T")->require_subcommand(1);
  static std::string weights_arg;
  static long max_arg = 0;
  auto* check = classt->add_subcommand("check", "Normalize and classify m/q or m/p,q");
  check->add_option("weights", weights_arg, "m/q or m/p,q")->required();
  check->callback([&sel] { sel = {"classt.check", [] { return parse_weights(weights_arg); }}; });
  auto* enumerate = classt->add_subcommand("enumerate", "All non-RDP class T singularities with m <= max");
  enumerate->add_option("--max", max_arg, "Largest m")->required();
  enumerate->callback([&sel] { sel = {"classt.enumerate", [] { return json{{"max", max_arg}}; }}; });

  static long degree_arg = 0;
  auto* elliptic = app.add_subcommand("elliptic", "Simple elliptic singularity of degree d");
  elliptic->add_option("--degree", degree_arg)->required();
  elliptic->callback([&sel] { sel = {"elliptic", [] { return json{{"degree", degree_arg}}; }}; });

  static bool cohomology_flag = false;
  auto* hyper = app.add_subcommand("hypersurface", "Smooth degree-d surface in P^3");
  hyper->add_option("--degree", degree_arg)->required();
  hyper->add_flag("--cohomology", cohomology_flag, "Show the long exact sequences");
  hyper->callback([&sel] {
    sel = {"hypersurface", [] { return json{{"degree", degree_arg}, {"cohomology", cohomology_flag}}; }};
  });

  static long k2_arg = 0, chi_arg = 0;
  auto* vd = app.add_subcommand("vd", "Virtual dimension 10 chi - 2 K^2");
  vd->add_option("--k2", k2_arg)->required();
  vd->add_option("--chi", chi_arg)->required();
  vd->callback([&sel] { sel = {"vd", [] { return json{{"k2", k2_arg}, {"chi", chi_arg}}; }}; });

  // donaldson ...
  auto* don = app.add_subcommand("donaldson", "The G-equivariant sextic example")->require_subcommand(1);
  for (const auto& [name, desc] : std::initializer_list<std::pair<const char*, const char*>>{
           {"fan", "GIT fan, ray insertions and the KSBA fan"},
           {"invariants", "Invariant sextics"},
           {"two-forms", "Invariant two-forms"},
           {"vd", "Equivariant virtual dimension"}}) {
    const std::string op = std::string("donaldson.") + name;
    don->add_subcommand(name, desc)->callback([&sel, op] { sel = {op, [] { return json::object(); }}; });
  }
  static std::string ob_arg, l2_arg, l2sq_arg, mu_arg;
  auto* taut = don->add_subcommand("tautological", "Tautological invariant I_CM");
  taut->add_option("--ob", ob_arg, "<-c1(L_Ob), D_II> (default -1/4)");
  taut->add_option("--l2", l2_arg, "<c1(lambda2), D_II> (default 12)");
  taut->add_option("--l2sq", l2sq_arg, "<c1(lambda2)^2, [D_II]> (default 288)");
  taut->callback([&sel] {
    sel = {"donaldson.tautological", [] {
             json in = json::object();
             if (!ob_arg.empty()) in["ob"] = ob_arg;
             if (!l2_arg.empty()) in["l2"] = l2_arg;
             if (!l2sq_arg.empty()) in["l2sq"] = l2sq_arg;
             return in;
           }};
  });
  auto* cm = don->add_subcommand("cm-exponents", "Exponents of lambda3 and lambda2 in lambda_CM");
  cm->add_option("--mu", mu_arg, "Rational mu")->required();
  cm->callback([&sel] { sel = {"donaldson.cm-exponents", [] { return json{{"mu", mu_arg}}; }}; });

  // batch [FILE]
  static std::string batch_file;
  static unsigned threads_arg = 0;
  bool batch_mode = false;
  auto* batch = app.add_subcommand("batch", "Evaluate NDJSON requests from FILE or stdin");
  batch->add_option("file", batch_file, "Request file (default: stdin)");
  batch->add_option("--threads", threads_arg, "Worker threads (0 = all cores)");
  batch->callback([&batch_mode] { batch_mode = true; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    if (code != 0) std::cerr << kSynopsis << "\n";
    return code == 0 ? 0 : 2;
  }

  if (batch_mode) {
    if (batch_file.empty() || batch_file == "-") {
      slcinv::run_batch(std::cin, std::cout, threads_arg);
    } else {
      std::ifstream in(batch_file);
      if (!in) {
        std::cerr << "slcinv: cannot read " << batch_file << "\n" << kSynopsis << "\n";
        return 2;
      }
      slcinv::run_batch(in, std::cout, threads_arg);
    }
    return 0;
  }

  auto fail = [as_json](const std::string& code, const std::string& message, int status) {
    if (as_json) {
      json envelope = {{"ok", false}, {"error", {{"code", code}, {"message", message}}}};
      std::cout << envelope.dump(2) << "\n";
    }
    std::cerr << "slcinv: " << code << ": " << message << "\n";
    if (status == 2) std::cerr << kSynopsis << "\n";
    return status;
  };

  try {
    print_result(slcinv::run_op(sel.op, sel.input()), as_json);
  } catch (const slcinv::RequestError& e) {
    return fail(e.code(), e.what(), 2);
  } catch (const slc::Error& e) {
    return fail(std::string(slc::code_name(e.code())), e.what(), 1);
  }
  return 0;
}
