#include "facinv/cli.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <optional>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "facinv/catenary.hpp"
#include "facinv/core.hpp"
#include "facinv/delta.hpp"
#include "facinv/hilbert.hpp"
#include "facinv/presentation.hpp"
#include "facinv/tame.hpp"

namespace facinv::cli {

namespace {

using nlohmann::json;

struct Job {
  std::string gens;
  std::string gens_file;
  std::string equations;
  std::string element;
  std::string method;
  std::string format = "plain";
  std::string moduli;
  std::string subset;
  std::string atoms;
  Int bound = -1;
  std::uint64_t max_steps = 0;
};

// ---------------------------------------------------------------- parsing

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(b, e - b + 1));
}

Int parse_int(std::string_view token) {
  Int v = 0;
  const char* first = token.data();
  const char* last = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec == std::errc::result_out_of_range) {
    throw InvalidArgument("integer out of range: '" + std::string(token) + "'");
  }
  if (ec != std::errc() || ptr != last) {
    throw InvalidArgument("not an integer: '" + std::string(token) + "'");
  }
  return v;
}

/// "3 4 5", "3,4,5" or a mix of both separators.
std::vector<Int> parse_int_list(std::string_view text) {
  std::vector<Int> out;
  std::string token;
  auto flush = [&] {
    if (!token.empty()) out.push_back(parse_int(token));
    token.clear();
  };
  for (char c : text) {
    if (c == ',' || c == ' ' || c == '\t' || c == '\n' || c == '\r') {
      flush();
    } else {
      token += c;
    }
  }
  flush();
  return out;
}

/// "(1,0);(0,1)".
std::vector<std::vector<Int>> parse_tuple_list(std::string_view text) {
  std::vector<std::vector<Int>> out;
  std::string rest(text);
  std::size_t pos = 0;
  while (pos <= rest.size()) {
    const std::size_t next = rest.find(';', pos);
    const std::string item =
        trim(std::string_view(rest).substr(pos, next == std::string::npos ? std::string::npos : next - pos));
    if (item.size() < 2 || item.front() != '(' || item.back() != ')') {
      throw InvalidArgument("expected a parenthesized tuple, got '" + item + "'");
    }
    const std::string inner = item.substr(1, item.size() - 2);
    if (inner.find_first_of("()") != std::string::npos) {
      throw InvalidArgument("nested parentheses in '" + item + "'");
    }
    auto v = parse_int_list(inner);
    if (v.empty()) throw InvalidArgument("empty tuple '" + item + "'");
    out.push_back(std::move(v));
    if (next == std::string::npos) break;
    pos = next + 1;
  }
  return out;
}

std::vector<ElementVector> parse_generators(const std::string& raw) {
  const std::string text = trim(raw);
  if (text.empty()) throw InvalidArgument("no generators given");
  std::vector<ElementVector> gens;
  if (text.find('(') != std::string::npos) {
    for (auto& v : parse_tuple_list(text)) gens.emplace_back(std::move(v));
  } else {
    for (Int x : parse_int_list(text)) gens.push_back(ElementVector{x});
  }
  return gens;
}

ElementVector parse_element(const std::string& raw) {
  const std::string text = trim(raw);
  if (text.empty()) throw InvalidArgument("no element given");
  if (text.front() == '(') {
    auto v = parse_tuple_list(text);
    if (v.size() != 1) throw InvalidArgument("expected a single element");
    return ElementVector(std::move(v.front()));
  }
  const auto v = parse_int_list(text);
  if (v.size() != 1) throw InvalidArgument("expected a single integer or a tuple");
  return ElementVector{v.front()};
}

std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw InvalidArgument("cannot read file '" + path + "'");
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

json parse_json_file(const std::string& path) {
  try {
    return json::parse(read_file(path));
  } catch (const json::exception& e) {
    throw InvalidArgument("malformed JSON in '" + path + "': " + e.what());
  }
}

IntMatrix json_matrix(const json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_array()) {
    throw InvalidArgument(std::string("missing array '") + key + "'");
  }
  try {
    return j.at(key).get<IntMatrix>();
  } catch (const json::exception&) {
    throw InvalidArgument(std::string("'") + key + "' must be a matrix of integers");
  }
}

std::vector<Int> json_ints(const json& j, const char* key) {
  if (!j.at(key).is_array()) throw InvalidArgument(std::string("'") + key + "' must be an array");
  try {
    return j.at(key).get<std::vector<Int>>();
  } catch (const json::exception&) {
    throw InvalidArgument(std::string("'") + key + "' must hold integers");
  }
}

CongruenceSystem parse_congruences(const json& j) {
  if (!j.is_object()) throw InvalidArgument("equations file must hold a JSON object");
  CongruenceSystem sys;
  sys.matrix = json_matrix(j, "matrix");
  sys.moduli = j.contains("moduli") ? json_ints(j, "moduli") : std::vector<Int>(sys.matrix.size(), 0);
  sys.validate();
  return sys;
}

// --------------------------------------------------------------- printing

class Printer {
 public:
  explicit Printer(bool json_mode) : json_(json_mode) {}
  [[nodiscard]] bool json_mode() const noexcept { return json_; }

  static json array(const std::vector<Int>& v) { return json(v); }

  template <typename Tag>
  static json array(const NatVector<Tag>& v) {
    return json(v.coords());
  }

  /// Plain form of an element: a bare integer in dimension 1.
  static std::string element(const ElementVector& g) {
    return g.size() == 1 ? std::to_string(g[0]) : to_string(g);
  }

  static std::string join(const std::vector<Int>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (i > 0) s += ' ';
      s += std::to_string(v[i]);
    }
    return s;
  }

 private:
  bool json_;
};

std::string emit(const json& j) { return j.dump() + "\n"; }

// ------------------------------------------------------------- execution

AffineSemigroup load_semigroup(const Job& job, std::istream& in, Budget* budget) {
  const int sources = static_cast<int>(!job.gens.empty()) + static_cast<int>(!job.gens_file.empty()) +
                      static_cast<int>(!job.equations.empty());
  if (sources != 1) {
    throw InvalidArgument("give exactly one of --gens, --gens-file, --equations");
  }
  if (!job.equations.empty()) {
    return semigroup_from_equations(parse_congruences(parse_json_file(job.equations)), budget);
  }
  std::string text;
  if (!job.gens_file.empty()) {
    text = read_file(job.gens_file);
  } else if (job.gens == "-") {
    std::ostringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  } else {
    text = job.gens;
  }
  return new_affine_semigroup(parse_generators(text));
}

ElementVector required_element(const Job& job, const AffineSemigroup& s) {
  if (job.element.empty()) throw InvalidArgument("--element is required");
  ElementVector g = parse_element(job.element);
  s.require_element_dimension(g);
  return g;
}

std::string run_command(const std::string& cmd, const Job& job, std::istream& in, Budget* budget) {
  const Printer p(job.format == "json");
  std::ostringstream out;

  if (cmd == "block-monoid") {
    if (job.moduli.empty()) throw InvalidArgument("--moduli is required");
    const std::vector<Int> moduli = parse_int_list(job.moduli);
    std::optional<std::vector<GroupElement>> subset;
    if (!job.subset.empty()) {
      if (job.subset.find('(') != std::string::npos) {
        subset = parse_tuple_list(job.subset);
      } else {
        subset.emplace();
        for (Int x : parse_int_list(job.subset)) subset->push_back({x});
      }
    }
    const AffineSemigroup s = block_monoid(moduli, subset, budget);
    if (p.json_mode()) {
      json atoms = json::array();
      for (const auto& a : s.atoms()) atoms.push_back(Printer::array(a));
      return emit(json{{"matrix", s.equations()->matrix},
                       {"moduli", s.equations()->moduli},
                       {"atoms", atoms}});
    }
    for (const auto& a : s.atoms()) out << to_string(a) << "\n";
    return out.str();
  }

  if (cmd == "hilbert") {
    if (job.equations.empty()) throw InvalidArgument("hilbert needs --equations");
    const json j = parse_json_file(job.equations);
    if (!j.is_object()) throw InvalidArgument("equations file must hold a JSON object");
    DiophantineSystem sys;
    sys.matrix = json_matrix(j, "matrix");
    RowRelation rel = RowRelation::Equal;
    if (j.contains("relation")) {
      const json& r = j.at("relation");
      if (r == "eq") {
        rel = RowRelation::Equal;
      } else if (r == "geq") {
        rel = RowRelation::GreaterEqual;
      } else {
        throw InvalidArgument("relation must be \"eq\" or \"geq\"");
      }
    }
    sys.relations.assign(sys.matrix.size(), rel);
    sys.rhs = j.contains("rhs") ? json_ints(j, "rhs") : std::vector<Int>(sys.matrix.size(), 0);
    if (j.contains("moduli")) sys.moduli = json_ints(j, "moduli");
    sys.validate();
    const bool homogeneous = sys.is_homogeneous();
    const auto vs = homogeneous ? hilbert_basis(sys, budget) : minimal_solutions(sys, budget);
    if (p.json_mode()) {
      json arr = json::array();
      for (const auto& v : vs) arr.push_back(Printer::array(v));
      return emit(json{{homogeneous ? "hilbert_basis" : "minimal_solutions", arr}});
    }
    for (const auto& v : vs) out << to_string(v) << "\n";
    return out.str();
  }

  const AffineSemigroup s = load_semigroup(job, in, budget);

  if (cmd == "factorizations" || cmd == "length-set" || cmd == "delta-element") {
    const ElementVector g = required_element(job, s);
    if (cmd == "factorizations") {
      const auto facts = factorizations(s, g);
      if (p.json_mode()) {
        json arr = json::array();
        for (const auto& z : facts) arr.push_back(Printer::array(z));
        return emit(json{{"element", Printer::array(g)}, {"factorizations", arr}});
      }
      for (const auto& z : facts) out << to_string(z) << "\n";
      return out.str();
    }
    if (!contains(s, g)) throw NotInSemigroup(Printer::element(g) + " is not in the semigroup");
    const auto values = cmd == "length-set" ? length_set(s, g) : delta_of_element(s, g);
    if (p.json_mode()) {
      return emit(json{{"element", Printer::array(g)},
                       {cmd == "length-set" ? "length_set" : "delta_set", values}});
    }
    return Printer::join(values) + "\n";
  }

  if (cmd == "delta-set") {
    const std::string method = job.method.empty() ? "grobner" : job.method;
    const auto d = method == "hilbert" ? delta_set_hilbert(s, budget) : delta_set_grobner(s, budget);
    if (p.json_mode()) return emit(json{{"delta_set", d}});
    return Printer::join(d) + "\n";
  }

  if (cmd == "min-presentation") {
    const Presentation pres = minimal_presentation(s, budget);
    if (p.json_mode()) {
      json arr = json::array();
      for (const auto& r : pres.relations) {
        arr.push_back(json::array({Printer::array(r.first), Printer::array(r.second)}));
      }
      return emit(json{{"relations", arr}});
    }
    for (const auto& r : pres.relations) out << to_string(r.first) << " " << to_string(r.second) << "\n";
    return out.str();
  }

  if (cmd == "betti") {
    const auto b = betti_elements(s, budget);
    if (p.json_mode()) {
      json arr = json::array();
      for (const auto& e : b) arr.push_back(Printer::array(e));
      return emit(json{{"betti_elements", arr}});
    }
    for (const auto& e : b) out << Printer::element(e) << "\n";
    return out.str();
  }

  if (cmd == "graver") {
    const auto g = graver_basis(s, budget);
    if (p.json_mode()) {
      json arr = json::array();
      for (const auto& r : g) arr.push_back(json::array({Printer::array(r.first), Printer::array(r.second)}));
      return emit(json{{"graver_basis", arr}});
    }
    for (const auto& r : g) out << to_string(r.first) << " " << to_string(r.second) << "\n";
    return out.str();
  }

  if (cmd == "catenary") {
    const ElementVector g = required_element(job, s);
    const std::string method = job.method.empty() ? "dynamic" : job.method;
    const Int c = method == "naive" ? catenary_naive(s, g) : catenary_dynamic(s, g, budget);
    if (p.json_mode()) return emit(json{{"element", Printer::array(g)}, {"catenary_degree", c}});
    return std::to_string(c) + "\n";
  }

  if (cmd == "catenary-range") {
    if (job.bound < 0) throw InvalidArgument("--bound is required and must be nonnegative");
    const auto rows = catenary_range(s, job.bound, budget);
    if (p.json_mode()) {
      json arr = json::array();
      for (const auto& [g, c] : rows) arr.push_back(json::array({g, c}));
      return emit(json{{"catenary_degrees", arr}});
    }
    for (const auto& [g, c] : rows) out << g << " " << c << "\n";
    return out.str();
  }

  if (cmd == "tame") {
    std::optional<std::vector<std::size_t>> atoms;
    if (!job.atoms.empty()) {
      atoms.emplace();
      for (Int i : parse_int_list(job.atoms)) {
        if (i < 1 || static_cast<std::size_t>(i) > s.atom_count()) {
          throw InvalidArgument("atom index " + std::to_string(i) + " out of range 1.." +
                                std::to_string(s.atom_count()));
        }
        atoms->push_back(static_cast<std::size_t>(i - 1));
      }
    }
    const Int t = tame_full(s, atoms, budget);
    if (p.json_mode()) return emit(json{{"tame_degree", t}});
    return std::to_string(t) + "\n";
  }

  throw InvalidArgument("unknown command '" + cmd + "'");
}

}  // namespace

RunResult run(const std::vector<std::string>& args, std::istream& in) {
  CLI::App app{"Factorization invariants of affine semigroups", "facinv"};
  app.require_subcommand(1);
  Job job;

  auto add_common = [&](CLI::App* sub, bool with_source) {
    if (with_source) {
      sub->add_option("--gens", job.gens, "generators: \"3 4 5\", \"(1,0);(0,1)\" or - for stdin");
      sub->add_option("--gens-file", job.gens_file, "file holding the generators");
      sub->add_option("--equations", job.equations, "JSON file {\"matrix\": ..., \"moduli\": ...}");
    }
    sub->add_option("--format", job.format, "output format")
        ->check(CLI::IsMember({"plain", "json"}));
    sub->add_option("--max-steps", job.max_steps, "abort after this many completion steps (exit 4)")
        ->check(CLI::PositiveNumber);
  };

  struct Command {
    const char* name;
    const char* help;
  };
  const Command commands[] = {
      {"factorizations", "all factorizations of an element"},
      {"length-set", "factorization lengths of an element"},
      {"delta-element", "delta set of an element"},
      {"delta-set", "delta set of the semigroup"},
      {"min-presentation", "a minimal presentation"},
      {"betti", "Betti elements"},
      {"graver", "Graver basis"},
      {"hilbert", "Hilbert basis or minimal solutions of a system"},
      {"catenary", "catenary degree of an element"},
      {"catenary-range", "catenary degrees of all elements up to a bound"},
      {"tame", "tame degree of a full semigroup"},
      {"block-monoid", "block monoid of a finite abelian group"},
  };
  for (const auto& c : commands) {
    CLI::App* sub = app.add_subcommand(c.name, c.help);
    const std::string name = c.name;
    const bool with_source = name != "hilbert" && name != "block-monoid";
    add_common(sub, with_source);
    if (name == "hilbert") {
      sub->add_option("--equations", job.equations,
                      "JSON file {\"matrix\", optional \"relation\" (eq|geq), \"rhs\", \"moduli\"}")
          ->required();
    }
    if (name == "factorizations" || name == "length-set" || name == "delta-element" ||
        name == "catenary") {
      sub->add_option("--element", job.element, "element: 450 or (1,2)")->required();
    }
    if (name == "delta-set") {
      sub->add_option("--method", job.method, "algorithm")->check(CLI::IsMember({"hilbert", "grobner"}));
    }
    if (name == "catenary") {
      sub->add_option("--method", job.method, "algorithm")->check(CLI::IsMember({"naive", "dynamic"}));
    }
    if (name == "catenary-range") {
      sub->add_option("--bound", job.bound, "largest element")->required();
    }
    if (name == "tame") {
      sub->add_option("--atoms", job.atoms, "only these atoms (1-based indices)");
    }
    if (name == "block-monoid") {
      sub->add_option("--moduli", job.moduli, "cyclic factors, e.g. \"2 2 2\"")->required();
      sub->add_option("--subset", job.subset, "group elements, e.g. \"(0,1);(1,0)\"");
    }
  }

  RunResult result;
  std::ostringstream out, err;
  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    result.exit_code = code == 0 ? kOk : kUsage;
    result.out = out.str();
    result.err = err.str();
    if (result.exit_code != kOk && result.err.empty()) result.err = e.what() + std::string("\n");
    return result;
  }

  const std::string cmd = app.get_subcommands().front()->get_name();
  Budget budget = job.max_steps > 0 ? Budget(job.max_steps) : Budget();
  try {
    result.out = run_command(cmd, job, in, &budget);
    return result;
  } catch (const InvalidArgument& e) {
    result.exit_code = kUsage;
    result.err = std::string("error: ") + e.what() + "\n";
  } catch (const ResourceLimitExceeded& e) {
    result.exit_code = kResource;
    result.err = std::string("error: ") + e.what() + "\n";
  } catch (const Error& e) {
    result.exit_code = kSemantic;
    result.err = std::string("error: ") + e.what() + "\n";
  }
  result.out.clear();
  return result;
}

}  // namespace facinv::cli
