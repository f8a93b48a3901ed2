#include "brauerkit/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <functional>
#include <iostream>
#include <iterator>
#include <sstream>

#include "brauerkit/error.hpp"
#include "brauerkit/io.hpp"

namespace brauerkit::cli {
namespace {

using io::json;

struct Options {
  std::string input;
  std::string format = "json";
  std::vector<u64> primes;
  int degree_limit = 0;
  std::string q;
  int degree = 2;
  bool with_invariants = false;
  std::vector<u64> ramified;
  bool ramified_at_infinity = false;
};

std::string read_all(std::istream& in) {
  return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

// A path, "-" for stdin, or the document itself.
std::string input_text(const std::string& input) {
  if (input.empty() || input == "-") return read_all(std::cin);
  auto first = input.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && (input[first] == '{' || input[first] == '[')) return input;
  std::ifstream file(input, std::ios::binary);
  if (!file) fail(ErrorCode::MalformedInput, "cannot read '" + input + "'");
  return read_all(file);
}

json parse_document(const std::string& input) {
  try {
    return json::parse(input_text(input));
  } catch (const json::parse_error& e) {
    fail(ErrorCode::MalformedInput, std::string("invalid JSON: ") + e.what());
  }
}

int degree_limit(const Options& o) { return o.degree_limit > 0 ? o.degree_limit : default_degree_limit(); }

std::vector<u64> default_primes(const NumberField& k) {
  std::vector<u64> out{2, 3, 5, 7};
  if (!k.is_concrete()) {
    out.clear();
    for (const auto& [p, degs] : k.profile().entries)
      if (p != kInfinity) out.push_back(p);
    return out;
  }
  Rational disc = discriminant(k.polynomial());
  Integer n = abs(disc.get_num());
  for (u64 p = 2; p < 10000 && n > 1; ++p) {
    if (n % p != 0) continue;
    while (n % p == 0) n /= p;
    if (std::find(out.begin(), out.end(), p) == out.end()) out.push_back(p);
  }
  std::sort(out.begin(), out.end());
  return out;
}

PrimePower prime_power_option(const std::string& q) {
  Integer v;
  if (q.empty() || v.set_str(q, 10) != 0 || v < 2) fail(ErrorCode::MalformedInput, "--q must be a prime power");
  return prime_power_of(v);
}

json run_field_info(const Options& o) {
  NumberField k = io::field_from_json(parse_document(o.input));
  return io::field_info(k, o.primes.empty() ? default_primes(k) : o.primes);
}

json run_field_compositum(const Options& o) {
  json doc = parse_document(o.input);
  if (!doc.contains("first") || !doc.contains("second"))
    fail(ErrorCode::MalformedInput, "compositum needs 'first' and 'second' fields");
  NumberField f = io::field_from_json(doc["first"]);
  NumberField k = io::field_from_json(doc["second"]);
  json cands = json::array();
  for (const auto& c : compositum_candidates(f, k, degree_limit(o))) cands.push_back(io::to_json(c));
  return json{{"candidates", cands}};
}

json run_field_newton(const Options& o) {
  json doc = parse_document(o.input);
  if (!doc.contains("poly") || !doc.contains("p")) fail(ErrorCode::MalformedInput, "newton needs 'poly' and 'p'");
  Integer p = io::integer_from_json(doc["p"]);
  if (!p.fits_ulong_p() || !is_prime(p.get_ui())) fail(ErrorCode::MalformedInput, "'p' must be a prime");
  return io::to_json(newton_polygon(io::zpoly_from_json(doc["poly"]), p.get_ui()));
}

json run_brauer_index(const Options& o) {
  BrauerClass c = io::class_from_json(parse_document(o.input));
  return json{{"class", io::to_json(c)}, {"index", io::to_json(schur_index(c))}};
}

json run_brauer_restrict(const Options& o) {
  json doc = parse_document(o.input);
  if (!doc.contains("class") || !doc.contains("map")) fail(ErrorCode::MalformedInput, "restrict needs 'class' and 'map'");
  BrauerClass c = io::class_from_json(doc["class"]);
  BrauerClass r = restrict(c, io::map_from_json(doc["map"]));
  return json{{"class", io::to_json(r)}, {"index", io::to_json(schur_index(r))}};
}

json run_brauer_add(const Options& o) {
  json doc = parse_document(o.input);
  if (!doc.contains("a") || !doc.contains("b")) fail(ErrorCode::MalformedInput, "add needs 'a' and 'b'");
  int sign = 1;
  if (doc.contains("sign")) {
    Integer s = io::integer_from_json(doc["sign"]);
    if (s != 1 && s != -1) fail(ErrorCode::MalformedInput, "'sign' must be 1 or -1");
    sign = static_cast<int>(s.get_si());
  }
  BrauerClass r = combine(io::class_from_json(doc["a"]), io::class_from_json(doc["b"]), sign);
  return json{{"class", io::to_json(r)}, {"index", io::to_json(schur_index(r))}};
}

json run_embed_decide(const Options& o) {
  json doc = parse_document(o.input);
  if (!doc.contains("D") || !doc.contains("B")) fail(ErrorCode::MalformedInput, "decide needs 'D' and 'B'");
  BrauerClass d = io::class_from_json(doc["D"]);
  BrauerClass b = io::class_from_json(doc["B"]);
  return io::to_json(embed_decision(d, b, degree_limit(o)));
}

json run_embed_yu(const Options& o) {
  json doc = parse_document(o.input);
  if (!doc.contains("X") || !doc.contains("Y")) fail(ErrorCode::MalformedInput, "yu needs 'X' and 'Y'");
  CentralSimpleAlgebra x = io::algebra_from_json(doc["X"]);
  CentralSimpleAlgebra y = io::algebra_from_json(doc["Y"]);
  SubfieldMap inclusion = doc.contains("inclusion") ? io::map_from_json(doc["inclusion"]) : SubfieldMap::identity(y.center());
  return io::to_json(yu_embedding_test(x, y, inclusion));
}

json run_embed_prime_subalgebra(const Options& o) {
  json doc = parse_document(o.input);
  if (!doc.contains("E") || !doc.contains("ell") || !doc.contains("map"))
    fail(ErrorCode::MalformedInput, "prime-subalgebra needs 'E', 'ell' and 'map'");
  return io::to_json(find_prime_subalgebra(io::class_from_json(doc["E"]), io::integer_from_json(doc["ell"]),
                                           io::map_from_json(doc["map"])));
}

json run_weil_check(const Options& o) {
  WeilNumber w = io::weil_from_json(parse_document(o.input));
  return json{{"weil", io::to_json(w)}, {"is_weil_number", is_weil_number(w.minpoly, w.q)}};
}

json run_weil_invariants(const Options& o) {
  WeilNumber w = io::weil_from_json(parse_document(o.input));
  json out = io::to_json(isogeny_invariants(make_weil_number(w.minpoly, w.q)));
  out["weil"] = io::to_json(w);
  return out;
}

json run_weil_enumerate(const Options& o) {
  PrimePower q = prime_power_option(o.q);
  json rows = json::array();
  for (const auto& w : enumerate_weil_polys(q, o.degree)) {
    json row = io::to_json(w);
    if (o.with_invariants) {
      IsogenyClassInvariants inv = isogeny_invariants(w);
      row["e"] = io::to_json(inv.e);
      row["g"] = io::to_json(inv.g);
      row["endo_class"] = io::to_json(inv.endo_class);
    }
    rows.push_back(row);
  }
  return json{{"q", io::to_json(q)}, {"degree", o.degree}, {"count", rows.size()}, {"numbers", rows}};
}

json run_weil_import(const Options& o) {
  std::istringstream in(input_text(o.input));
  CsvImport imp = import_weil_csv(in);
  json numbers = json::array();
  for (std::size_t i = 0; i < imp.numbers.size(); ++i) {
    json row = io::to_json(imp.numbers[i]);
    row["line"] = imp.lines[i];
    numbers.push_back(row);
  }
  json issues = json::array();
  for (const auto& issue : imp.issues) issues.push_back({{"line", issue.line}, {"message", issue.message}});
  return json{{"numbers", numbers}, {"issues", issues}};
}

json run_reduce_obstruction(const Options& o) {
  json doc = parse_document(o.input);
  for (const char* key : {"endo", "ell", "map", "weil"})
    if (!doc.contains(key)) fail(ErrorCode::MalformedInput, std::string("obstruction needs '") + key + "'");
  BrauerClass endo = io::class_from_json(doc["endo"]);
  Integer ell = io::integer_from_json(doc["ell"]);
  SubfieldMap z_to_f = io::map_from_json(doc["map"]);
  BrauerClass d = doc.contains("D") ? io::class_from_json(doc["D"]) : find_prime_subalgebra(endo, ell, z_to_f).d;
  return io::to_json(reduction_obstruction(endo, ell, d, z_to_f, io::weil_from_json(doc["weil"])));
}

json run_reduce_qm_surface(const Options& o) {
  if (o.ramified.empty()) fail(ErrorCode::MalformedInput, "--ram needs at least one prime");
  for (u64 p : o.ramified)
    if (!is_prime(p)) fail(ErrorCode::MalformedInput, "--ram entries must be primes");
  return io::to_json(qm_surface_check(quaternion_class(o.ramified, o.ramified_at_infinity), prime_power_option(o.q)));
}

// --- text rendering ----------------------------------------------------------

bool is_scalar_list(const json& j) {
  return j.is_array() && std::all_of(j.begin(), j.end(), [](const json& x) { return x.is_primitive(); });
}

std::string scalar_text(const json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_null()) return "-";
  return j.dump();
}

std::string poly_text(const json& coeffs) {
  ZPoly f = io::zpoly_from_json(coeffs);
  return to_string(f);
}

void render_text(const json& j, std::ostream& out, int indent) {
  const std::string pad(indent, ' ');
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it) {
      const json& v = it.value();
      if ((it.key() == "poly" || it.key() == "minpoly") && is_scalar_list(v)) {
        out << pad << it.key() << ": " << poly_text(v) << '\n';
      } else if (v.is_primitive()) {
        out << pad << it.key() << ": " << scalar_text(v) << '\n';
      } else if (is_scalar_list(v)) {
        out << pad << it.key() << ": [";
        for (std::size_t i = 0; i < v.size(); ++i) out << (i ? ", " : "") << scalar_text(v[i]);
        out << "]\n";
      } else {
        out << pad << it.key() << ":\n";
        render_text(v, out, indent + 2);
      }
    }
  } else if (j.is_array()) {
    for (const auto& v : j) {
      if (v.is_primitive() || is_scalar_list(v)) {
        out << pad << "- " << (v.is_primitive() ? scalar_text(v) : v.dump()) << '\n';
      } else {
        out << pad << "-\n";
        render_text(v, out, indent + 2);
      }
    }
  } else {
    out << pad << scalar_text(j) << '\n';
  }
}

void render_qm_surface(const json& report, std::ostream& out) {
  out << "q = " << report["q"]["p"] << "^" << report["q"]["m"] << '\n';
  for (const auto& row : report["rows"]) out << "  " << poly_text(row["weil"]["poly"]) << "  " << scalar_text(row["verdict"]) << '\n';
  out << "all MustSplit: " << (report["all_must_split"].get<bool>() ? "yes" : "no") << '\n';
}

void write_error(std::ostream& err, std::string_view code, const std::string& message) {
  err << json{{"error", {{"code", code}, {"message", message}}}}.dump() << '\n';
}

std::vector<u64> split_primes(const std::string& s) {
  std::vector<u64> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    std::size_t pos = 0;
    unsigned long long v = 0;
    try {
      v = std::stoull(item, &pos);
    } catch (const std::exception&) {
      pos = 0;
    }
    if (pos != item.size()) fail(ErrorCode::MalformedInput, "'" + item + "' is not a prime");
    out.push_back(v);
  }
  return out;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  std::string ram_text, primes_text;
  std::function<json(const Options&)> action;
  bool qm_table = false;

  CLI::App app{"Brauer groups, algebra embeddings and Honda-Tate invariants", "brauerkit"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--degree-limit", o.degree_limit, "Bound on compositum degrees (overrides BRAUERKIT_DEGREE_LIMIT)");

  auto leaf = [&](CLI::App* parent, const char* name, const char* help, json (*fn)(const Options&)) {
    CLI::App* sub = parent->add_subcommand(name, help);
    sub->add_option("input", o.input, "JSON document: path, '-' for stdin, or inline");
    sub->callback([&action, fn] { action = fn; });
    return sub;
  };

  CLI::App* field = app.add_subcommand("field", "Number fields")->require_subcommand(1);
  leaf(field, "info", "Degree, signature and places", run_field_info)
      ->add_option("--primes", primes_text, "Comma separated primes");
  leaf(field, "compositum", "Compositum candidates of two fields", run_field_compositum);
  leaf(field, "newton", "p-adic Newton polygon of a polynomial", run_field_newton);

  CLI::App* brauer = app.add_subcommand("brauer", "Brauer classes")->require_subcommand(1);
  leaf(brauer, "index", "Validate a class and report its Schur index", run_brauer_index);
  leaf(brauer, "restrict", "Extend scalars along a field embedding", run_brauer_restrict);
  leaf(brauer, "add", "Sum or difference of two classes", run_brauer_add);

  CLI::App* embed = app.add_subcommand("embed", "Embeddings of central simple algebras")->require_subcommand(1);
  leaf(embed, "decide", "Does the division algebra D embed in B", run_embed_decide);
  leaf(embed, "yu", "Capacity divisibility test for X in Y", run_embed_yu);
  leaf(embed, "prime-subalgebra", "Subalgebra of prime index l of E", run_embed_prime_subalgebra);

  CLI::App* weil = app.add_subcommand("weil", "Weil numbers")->require_subcommand(1);
  leaf(weil, "check", "Is the polynomial a Weil q-polynomial", run_weil_check);
  leaf(weil, "invariants", "Endomorphism algebra of the isogeny class", run_weil_invariants);
  CLI::App* enumerate = leaf(weil, "enumerate", "All Weil q-polynomials of a degree", run_weil_enumerate);
  enumerate->add_option("--q", o.q, "Prime power q")->required();
  enumerate->add_option("--degree", o.degree, "1, 2 or 4")->check(CLI::IsMember({1, 2, 4}));
  enumerate->add_flag("--invariants", o.with_invariants, "Also report e, g and the endomorphism class");
  leaf(weil, "import", "Read Weil polynomials from CSV rows p,m,coeffs", run_weil_import);

  CLI::App* reduce = app.add_subcommand("reduce", "Reduction of abelian varieties")->require_subcommand(1);
  leaf(reduce, "obstruction", "Splitting obstruction for one Frobenius", run_reduce_obstruction);
  CLI::App* qm = leaf(reduce, "qm-surface", "Obstruction for every Weil q-number of degree <= 2", run_reduce_qm_surface);
  qm->add_option("--ram", ram_text, "Primes ramified in the quaternion algebra")->required();
  qm->add_option("--q", o.q, "Prime power q")->required();
  qm->add_flag("--ram-infinity", o.ramified_at_infinity, "Ramified at the real place");
  qm->callback([&] {
    action = run_reduce_qm_surface;
    qm_table = true;
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    write_error(err, to_string(ErrorCode::MalformedInput), e.what());
    return kExitMalformed;
  } catch (const Error& e) {
    write_error(err, to_string(e.code()), e.what());
    return kExitMalformed;
  }

  try {
    o.primes = split_primes(primes_text);
    o.ramified = split_primes(ram_text);
    for (u64 p : o.primes)
      if (!is_prime(p)) fail(ErrorCode::MalformedInput, "--primes entries must be primes");
    json result = action(o);
    if (o.format == "text") {
      if (qm_table) render_qm_surface(result, out);
      else render_text(result, out, 0);
    } else {
      out << result.dump(2) << '\n';
    }
    return kExitOk;
  } catch (const Error& e) {
    write_error(err, to_string(e.code()), e.what());
    return e.code() == ErrorCode::MalformedInput ? kExitMalformed : kExitDomain;
  } catch (const json::exception& e) {
    write_error(err, to_string(ErrorCode::MalformedInput), e.what());
    return kExitMalformed;
  } catch (const std::exception& e) {
    write_error(err, to_string(ErrorCode::InternalInvariant), e.what());
    return kExitDomain;
  }
}

}  // namespace brauerkit::cli
