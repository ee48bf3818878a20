// kast: singular polynomials of Kasteleyn matrices and brute-force checks.
#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>

#include "kast/errors.hpp"
#include "kast/rectangles.hpp"
#include "kast/singular.hpp"
#include "kast/verify.hpp"

namespace {

using namespace kast;

enum Exit { ok = 0, failed = 1, bad_input = 2, over_limit = 3 };

struct Options {
  std::string input;
  std::string cls = "kasteleyn";
  std::string backend = "exact";
  bool json = false;
  std::optional<int> rows, cols, order;
  std::string mode;
  std::string theorem;
  std::size_t max_m = Limits{}.max_m;
  std::size_t max_vertices = Limits{}.max_vertices;
  std::uint64_t seed = 0;
  bool count = false;
  bool list = false;
};

std::string read_text(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError(InputErrorCode::syntax, "cannot read '" + path + "'");
  return {std::istreambuf_iterator<char>(in), {}};
}

PlanarGraph load_graph(const Options& o) {
  if (!o.input.empty()) return parse_graph(read_text(o.input));
  if (o.order) return aztec_diamond(*o.order);
  if (o.rows && o.cols) return rectangle_grid(*o.rows, *o.cols);
  throw InputError(InputErrorCode::syntax, "need --input, --order, or --rows with --cols");
}

Cocycle load_class(const PlanarGraph& g, const std::string& name) {
  if (name == "kasteleyn") return kasteleyn_class(g);
  if (name == "zero") return Cocycle::zero(g);
  if (name == "q") return kasteleyn_q_class(g);
  if (name.rfind("file=", 0) == 0) return parse_cocycle(read_text(name.substr(5)), g);
  throw InputError(InputErrorCode::syntax, "unknown class '" + name + "'");
}

void print_float_poly(const Poly<Complex>& p) {
  std::cout << std::setprecision(12);
  const auto c = p.descending();
  for (std::size_t i = 0; i < c.size(); ++i) {
    std::cout << "t^" << c.size() - 1 - i << "  " << c[i].real();
    if (std::abs(c[i].imag()) > 1e-9) std::cout << (c[i].imag() < 0 ? " - " : " + ") << std::abs(c[i].imag()) << "i";
    std::cout << "\n";
  }
}

int cmd_poly(const Options& o) {
  const PlanarGraph g = load_graph(o);
  const Cocycle c = load_class(g, o.cls);
  if (o.backend == "float") {
    const auto p = singular_polynomial(g, c, FloatBackend{});
    if (o.json) std::cout << to_json(p).dump() << "\n";
    else print_float_poly(p);
    return ok;
  }
  const auto p = singular_polynomial(g, c, ExactBackend{});
  if (o.json) std::cout << to_json(p).dump() << "\n";
  else std::cout << to_string(p) << "\n";
  return ok;
}

int cmd_verify(const Options& o) {
  const PlanarGraph g = load_graph(o);
  const Limits limits{o.max_vertices, o.max_m};
  std::vector<Identity> which;
  if (!o.theorem.empty()) {
    which.push_back(parse_identity(o.theorem));
  } else {
    which = {Identity::det, Identity::coeffs, Identity::pipes, Identity::gauge, Identity::parity};
    if (g.has_witnesses() && !g.holes().empty()) which.push_back(Identity::qpoly);
  }
  for (Identity w : which) check_limits(g, w, limits);
  std::vector<VerificationReport> reports;
  for (Identity w : which) reports.push_back(verify_identity(g, w, limits, o.seed));
  bool all = true;
  for (const auto& r : reports) all = all && r.pass;
  if (o.json) {
    if (reports.size() == 1) {
      std::cout << reports.front().to_json().dump() << "\n";
    } else {
      Json arr = Json::array();
      for (const auto& r : reports) arr.push_back(r.to_json());
      std::cout << arr.dump() << "\n";
    }
  } else {
    for (const auto& r : reports) {
      std::cout << (r.pass ? "PASS " : "FAIL ") << r.identity << "  " << r.graph << "\n";
      for (const auto& n : r.notes) std::cout << "  " << n << "\n";
    }
  }
  return all ? ok : failed;
}

int cmd_matchings(const Options& o) {
  const PlanarGraph g = load_graph(o);
  if (o.list) {
    const auto all = enumerate_matchings(g);
    if (o.json) {
      Json arr = Json::array();
      for (const auto& m : all) arr.push_back(to_string(g, m));
      std::cout << arr.dump() << "\n";
    } else {
      for (const auto& m : all) std::cout << to_string(g, m) << "\n";
    }
    return ok;
  }
  const std::size_t n = count_matchings(g);
  if (o.json) std::cout << Json{{"count", n}}.dump() << "\n";
  else std::cout << n << "\n";
  return ok;
}

const TableEntry* find_entry(const std::string& key) {
  for (const auto& e : reference_tables()) {
    if (e.key == key) return &e;
  }
  return nullptr;
}

int emit_report(const VerificationReport& r, bool json) {
  if (json) {
    std::cout << r.to_json().dump() << "\n";
  } else {
    std::cout << (r.pass ? "PASS " : "FAIL ") << r.identity << "\n";
    for (const auto& n : r.notes) std::cout << "  " << n << "\n";
  }
  return r.pass ? ok : failed;
}

int emit_poly(const IntPoly& p, bool json) {
  if (json) std::cout << to_json(p).dump() << "\n";
  else std::cout << to_string(p) << "\n";
  return ok;
}

int cmd_rect(const Options& o) {
  if (!o.rows || !o.cols || *o.rows < 1 || *o.cols < 1) {
    throw InputError(InputErrorCode::syntax, "rect needs positive --rows and --cols");
  }
  const int M = *o.rows, N = *o.cols;
  const std::string mode = o.mode.empty() ? "compare" : o.mode;
  if (mode == "closed") return emit_poly(closed_form_poly(M, N), o.json);
  if (mode == "general") return emit_poly(reduced_singular_polynomial(rectangle_grid(M, N)), o.json);
  if (mode != "compare") throw InputError(InputErrorCode::syntax, "unknown mode '" + mode + "'");

  VerificationReport r;
  r.identity = "rect " + std::to_string(M) + "x" + std::to_string(N);
  r.graph = describe(rectangle_grid(M, N));
  const IntPoly closed = closed_form_poly(M, N);
  const IntPoly general = reduced_singular_polynomial(rectangle_grid(M, N));
  r.lhs.push_back({{"case", "closed form"}, {"value", to_json(closed)}});
  r.rhs.push_back({{"case", "general"}, {"value", to_json(general)}});
  if (!(closed == general)) {
    r.pass = false;
    r.notes.push_back("closed form disagrees with the general machinery");
  }
  const std::string key = "[" + std::to_string(std::max(M, N)) + "," + std::to_string(std::min(M, N)) + "]";
  if (const TableEntry* e = find_entry(key)) {
    const IntPoly ref = expand_factored(e->factors);
    r.rhs.push_back({{"case", "reference " + key}, {"value", to_json(ref)}});
    if (!(ref == general)) {
      r.pass = false;
      r.notes.push_back("reference table disagrees");
    }
  }
  if (M * N <= 64) {
    const auto s = spectrum_check(M, N);
    r.notes.insert(r.notes.end(), s.notes.begin(), s.notes.end());
    if (!s.pass) {
      r.pass = false;
      r.notes.push_back("eigenvalues disagree with the closed form");
    }
  }
  return emit_report(r, o.json);
}

int cmd_aztec(const Options& o) {
  if (!o.order || *o.order < 1) throw InputError(InputErrorCode::syntax, "aztec needs a positive --order");
  const std::string mode = o.mode.empty() ? "general" : o.mode;
  if (mode == "general") return emit_poly(reduced_singular_polynomial(aztec_diamond(*o.order)), o.json);
  if (mode != "compare") throw InputError(InputErrorCode::syntax, "aztec supports --mode general|compare");
  const TableEntry* e = find_entry("aztec-" + std::to_string(*o.order));
  if (!e) throw InputError(InputErrorCode::syntax, "no reference polynomial for this order");
  return emit_report(table_check(*e), o.json);
}

int cmd_grid(const Options& o) {
  const PlanarGraph g = from_ascii(read_text(o.input.empty() ? "-" : o.input));
  std::cout << to_graph_text(g);
  return ok;
}

int cmd_tables(const Options& o) {
  const auto reports = table_check();
  bool all = true;
  Json arr = Json::array();
  for (const auto& r : reports) {
    all = all && r.pass;
    if (o.json) {
      arr.push_back(r.to_json());
    } else {
      std::cout << (r.pass ? "PASS " : "FAIL ") << r.identity << "\n";
    }
  }
  if (o.json) std::cout << arr.dump() << "\n";
  return all ? ok : failed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Kasteleyn matrices, singular polynomials and their combinatorial identities"};
  app.require_subcommand(1);
  Options o;

  auto graph_flags = [&](CLI::App* sub) {
    sub->add_option("--input", o.input, "graph file (or ASCII region for grid); - reads stdin");
    sub->add_option("--rows", o.rows, "grid rows M");
    sub->add_option("--cols", o.cols, "grid columns N");
    sub->add_option("--order", o.order, "Aztec diamond order");
    sub->add_flag("--json", o.json, "machine-readable output");
  };

  auto* poly = app.add_subcommand("poly", "singular polynomial charpoly(A A*)");
  graph_flags(poly);
  poly->add_option("--class", o.cls, "kasteleyn|zero|q|file=PATH");
  poly->add_option("--backend", o.backend, "exact|float")->check(CLI::IsMember({"exact", "float"}));

  auto* verify = app.add_subcommand("verify", "check identities by enumeration");
  graph_flags(verify);
  verify->add_option("--theorem", o.theorem, "det|coeffs|pipes|qpoly|gauge|parity")
      ->check(CLI::IsMember({"det", "coeffs", "pipes", "qpoly", "gauge", "parity"}));
  verify->add_option("--max-m", o.max_m, "largest subgraph half-size to enumerate");
  verify->add_option("--max-vertices", o.max_vertices, "largest graph to enumerate");
  verify->add_option("--seed", o.seed, "seed for random classes and potentials");

  auto* matchings = app.add_subcommand("matchings", "perfect matchings");
  graph_flags(matchings);
  auto* count = matchings->add_flag("--count", o.count, "number of matchings (default)");
  matchings->add_flag("--list", o.list, "list every matching")->excludes(count);

  auto* rect = app.add_subcommand("rect", "rectangle closed form");
  rect->add_option("--rows", o.rows, "M")->required();
  rect->add_option("--cols", o.cols, "N")->required();
  rect->add_option("--mode", o.mode, "compare|closed|general")->check(CLI::IsMember({"compare", "closed", "general"}));
  rect->add_flag("--json", o.json);

  auto* aztec = app.add_subcommand("aztec", "Aztec diamond polynomial");
  aztec->add_option("--order", o.order, "order")->required();
  aztec->add_option("--mode", o.mode, "general|compare")->check(CLI::IsMember({"general", "compare"}));
  aztec->add_flag("--json", o.json);

  auto* grid = app.add_subcommand("grid", "graph file from an ASCII region");
  grid->add_option("--input", o.input, "region file; stdin when omitted");

  auto* tables = app.add_subcommand("tables", "check the reference tables");
  tables->add_flag("--json", o.json);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n\n" << app.help();
    return bad_input;
  }

  try {
    if (*poly) return cmd_poly(o);
    if (*verify) return cmd_verify(o);
    if (*matchings) return cmd_matchings(o);
    if (*rect) return cmd_rect(o);
    if (*aztec) return cmd_aztec(o);
    if (*grid) return cmd_grid(o);
    if (*tables) return cmd_tables(o);
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return bad_input;
  } catch (const RepresentabilityError& e) {
    std::cerr << "not representable: " << e.what() << "\n";
    return bad_input;
  } catch (const LimitError& e) {
    std::cerr << "limit: " << e.what() << "\n";
    return over_limit;
  }
  return bad_input;
}
