#include "commands.hpp"

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <spdlog/spdlog.h>

#include "preproj/classification.hpp"
#include "preproj/json_io.hpp"
#include "preproj/khare.hpp"
#include "preproj/oracle.hpp"
#include "preproj/reflection.hpp"
#include "preproj/roots.hpp"
#include "preproj/wreath_induction.hpp"

namespace preproj::cli {

namespace {

using io::json;

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\n");
  if (b == std::string::npos) return "";
  return s.substr(b, s.find_last_not_of(" \t\n") - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream is(s);
  while (std::getline(is, cur, sep)) out.push_back(trim(cur));
  if (!s.empty() && s.back() == sep) out.emplace_back();
  return out;
}

std::int64_t parse_int(const std::string& s) {
  try {
    std::size_t used = 0;
    std::int64_t v = std::stoll(s, &used);
    if (used == s.size()) return v;
  } catch (const std::exception&) {
  }
  throw ValidationError("not an integer: '" + s + "'");
}

std::vector<std::int64_t> parse_int_list(const std::string& s) {
  std::vector<std::int64_t> out;
  if (trim(s).empty()) return out;
  for (const auto& part : split(s, ',')) out.push_back(parse_int(part));
  return out;
}

std::string strip_brackets(std::string s) {
  s = trim(s);
  if (s.size() >= 2 && s.front() == '[' && s.back() == ']') s = s.substr(1, s.size() - 2);
  return s;
}

std::string read_text(const std::string& path, std::istream& in) {
  if (path == "-") return std::string(std::istreambuf_iterator<char>(in), {});
  std::ifstream f(path);
  if (!f) throw ValidationError("cannot read '" + path + "'");
  return std::string(std::istreambuf_iterator<char>(f), {});
}

json parse_json_text(const std::string& text, const std::string& what) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ValidationError("malformed JSON in " + what + ": " + e.what());
  }
}

// "A_inf", a JSON object, or @file.
Quiver parse_quiver(const std::string& s, std::istream& in) {
  std::string t = trim(s);
  if (!t.empty() && t.front() == '@') return io::quiver_from_json(parse_json_text(read_text(t.substr(1), in), t));
  if (!t.empty() && t.front() == '{') return io::quiver_from_json(parse_json_text(t, "--quiver"));
  return Quiver::family(parse_family(t));
}

// Polynomial f from coefficients of Δ, Δ², … plus an optional constant.
CasimirPolynomial parse_f(const std::string& list, const std::string& constant) {
  std::vector<Rational> coeffs{constant.empty() ? Rational(0) : parse_rational(constant)};
  std::string body = strip_brackets(list);
  if (!body.empty())
    for (const auto& c : split(body, ',')) coeffs.push_back(parse_rational(c));
  return CasimirPolynomial(std::move(coeffs));
}

Weight parse_weight(const std::string& s, std::istream& in) {
  std::string t = trim(s);
  if (t.empty()) throw ValidationError("empty weight");
  if (t.front() == '@') return io::weight_from_json(parse_json_text(read_text(t.substr(1), in), t));
  if (t.front() == '{') return io::weight_from_json(parse_json_text(t, "--weight"));
  if (t == "zero") return Weight::zero();
  auto colon = t.find(':');
  if (colon == std::string::npos) throw ValidationError("unknown weight syntax '" + t + "'");
  std::string head = t.substr(0, colon), body = strip_brackets(t.substr(colon + 1));
  if (head == "khare") return Weight::khare(parse_f(body, ""));
  Vertex start = 0;
  if (head.rfind("explicit@", 0) == 0)
    start = parse_int(head.substr(9));
  else if (head != "explicit")
    throw ValidationError("unknown weight syntax '" + t + "'");
  std::vector<Scalar> values;
  if (!body.empty())
    for (const auto& v : split(body, ',')) values.push_back(Scalar::parse(v));
  return Weight::explicit_values(std::move(values), start);
}

std::pair<Vertex, Vertex> parse_range(const std::string& s) {
  auto dots = s.find("..");
  if (dots == std::string::npos) throw ValidationError("expected a range s..r, got '" + s + "'");
  Vertex a = parse_int(trim(s.substr(0, dots))), b = parse_int(trim(s.substr(dots + 2)));
  if (a > b) throw ValidationError("empty range '" + s + "'");
  return {a, b};
}

// "0..5", "0,2,3", or "all" (explicit quivers only).
std::set<Vertex> parse_window(const Quiver& q, const std::string& s) {
  std::set<Vertex> w;
  std::string t = trim(s);
  if (t == "all") {
    if (q.kind() != Family::Explicit) throw ValidationError("window 'all' needs an explicit quiver");
    w.insert(q.explicit_vertices().begin(), q.explicit_vertices().end());
  } else if (t.find("..") != std::string::npos) {
    auto [a, b] = parse_range(t);
    if (b - a > 64) throw ValidationError("window larger than 65 vertices");
    for (Vertex v = a; v <= b; ++v) w.insert(v);
  } else {
    for (auto v : parse_int_list(t)) w.insert(v);
  }
  if (w.empty()) throw ValidationError("empty window");
  for (Vertex v : w) q.require_vertex(v);
  return w;
}

// "0:1,1:2" (vertex:value) or a JSON list of pairs.
DimVector parse_dimvector(const std::string& s) {
  std::string t = trim(s);
  if (!t.empty() && t.front() == '[') return io::dimvector_from_json(parse_json_text(t, "dimension vector"));
  DimVector d;
  for (const auto& part : split(t, ',')) {
    auto colon = part.find(':');
    if (colon == std::string::npos) throw ValidationError("dimension vector entries look like vertex:value");
    d.add(parse_int(trim(part.substr(0, colon))), parse_int(trim(part.substr(colon + 1))));
  }
  return d;
}

std::vector<YoungDiagram> parse_diagrams(const std::string& s) {
  std::vector<YoungDiagram> out;
  for (const auto& d : split(s, ';')) {
    std::vector<int> rows;
    for (auto r : parse_int_list(d)) rows.push_back(static_cast<int>(r));
    out.emplace_back(std::move(rows));
  }
  return out;
}

std::string dim_string(const DimVector& d) { return d.to_string(); }

struct Options {
  std::string format = "json";
  std::uint64_t seed = 0x5eed;
  unsigned jobs = 1;
};

void emit(std::ostream& out, const json& j) { out << j.dump() << '\n'; }

// Fixed-width table with a header row.
void emit_table(std::ostream& out, const std::vector<std::string>& header,
                const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width(header.size());
  for (std::size_t c = 0; c < header.size(); ++c) width[c] = header[c].size();
  for (const auto& r : rows)
    for (std::size_t c = 0; c < r.size(); ++c) width[c] = std::max(width[c], r[c].size());
  auto line = [&](const std::vector<std::string>& r) {
    for (std::size_t c = 0; c < r.size(); ++c) {
      out << std::left << std::setw(static_cast<int>(width[c])) << r[c];
      out << (c + 1 < r.size() ? "  " : "\n");
    }
  };
  line(header);
  for (const auto& r : rows) line(r);
}

std::string word_string(const ReflectionWord& w) {
  std::string s;
  for (std::size_t k = 0; k < w.size(); ++k) s += (k ? "," : "") + std::to_string(w[k]);
  return s;
}

}  // namespace

int run(int argc, char** argv, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations with deformed preprojective algebras of infinite affine quivers"};
  app.require_subcommand(1);
  Options opt;
  app.add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"json", "table"}));
  app.add_option("--seed", opt.seed, "Seed for randomized searches");
  app.add_option("--jobs", opt.jobs, "Worker threads for enumerations")->check(CLI::Range(1u, 256u));

  std::string quiver_s = "A_plus_inf", window_s = "0..5", weight_s = "zero", alpha_s, interval_s;
  auto add_quiver = [&](CLI::App* sub) {
    sub->add_option("--quiver", quiver_s, "A_inf | A_plus_inf | D_inf | JSON | @file");
  };

  auto* quiver_cmd = app.add_subcommand("quiver", "Describe a window of a quiver");
  add_quiver(quiver_cmd);
  quiver_cmd->add_option("--window", window_s, "Vertex range a..b, list, or 'all'");

  auto* roots_cmd = app.add_subcommand("roots", "Enumerate positive roots of a window");
  add_quiver(roots_cmd);
  roots_cmd->add_option("--window", window_s);

  auto* dominate_cmd = app.add_subcommand("dominate", "Reflect a weight to a weakly dominant one");
  add_quiver(dominate_cmd);
  dominate_cmd->add_option("--weight", weight_s, "zero | explicit[@s]:[..] | khare:[..] | JSON | @file");
  dominate_cmd->add_option("--window", window_s);

  auto* classify_cmd = app.add_subcommand("classify", "Classify simple modules");
  add_quiver(classify_cmd);
  classify_cmd->add_option("--weight", weight_s);
  classify_cmd->add_option("--window", window_s);
  classify_cmd->add_option("--alpha", alpha_s, "Single dimension vector, e.g. 0:1,1:1");

  auto* oracle_cmd = app.add_subcommand("oracle", "Construct a simple module by scalar flows");
  add_quiver(oracle_cmd);
  oracle_cmd->add_option("--weight", weight_s);
  oracle_cmd->add_option("--interval", interval_s, "Interval s..r (type A)");
  oracle_cmd->add_option("--alpha", alpha_s, "Multiplicity-free dimension vector");

  std::string f_s = "", constant_s, k_s, group_s = "SL2";
  std::int64_t rmax = 20;
  auto* khare_cmd = app.add_subcommand("khare", "Enumerate V(r,s) for a Casimir polynomial");
  khare_cmd->add_option("--f", f_s, "Coefficients of Delta, Delta^2, ...")->required();
  khare_cmd->add_option("--constant", constant_s, "Constant term of f (default 0)");
  khare_cmd->add_option("--rmax", rmax)->check(CLI::Range(std::int64_t{0}, std::int64_t{10000}));
  khare_cmd->add_option("--k", k_s, "Print the parameters (lambda, nu = 2k) instead");
  khare_cmd->add_option("--group", group_s)->check(CLI::IsMember({"SL2", "O2", "GL1"}));

  std::string module_s, word_s, nu_s;
  std::int64_t vertex = 0;
  auto* reflect_cmd = app.add_subcommand("reflect", "Apply reflection functors to a module");
  reflect_cmd->add_option("--module", module_s, "Module JSON file or -")->required();
  auto* vertex_opt = reflect_cmd->add_option("--vertex", vertex);
  auto* word_opt = reflect_cmd->add_option("--word", word_s, "Word j_m,...,j_1 (rightmost applied first)");
  vertex_opt->excludes(word_opt);
  reflect_cmd->add_option("--weight", weight_s);
  reflect_cmd->add_option("--nu", nu_s);

  auto* check_cmd = app.add_subcommand("check-rep", "Check the relations of a module");
  check_cmd->add_option("--module", module_s)->required();
  check_cmd->add_option("--weight", weight_s);
  check_cmd->add_option("--nu", nu_s);
  std::string compare_s;
  check_cmd->add_option("--compare", compare_s, "Second module; report whether the two are isomorphic");

  std::string partition_s, diagrams_s, vertices_s, roots_s;
  bool verify = false;
  auto* induce_cmd = app.add_subcommand("induce-check", "Check the extension conditions for X (x) Y induced");
  add_quiver(induce_cmd);
  induce_cmd->add_option("--partition", partition_s)->required();
  induce_cmd->add_option("--diagrams", diagrams_s, "Row lengths, diagrams separated by ';'")->required();
  induce_cmd->add_option("--vertices", vertices_s);
  induce_cmd->add_option("--roots", roots_s, "Dimension vectors separated by ';'");
  induce_cmd->add_option("--weight", weight_s);
  induce_cmd->add_option("--nu", nu_s);
  induce_cmd->add_flag("--verify", verify, "Also check relations on the zero-arrow module");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }
  const bool table = opt.format == "table";
  auto given = [](CLI::App* sub, const char* name) { return sub->count(name) > 0; };

  try {
    if (*quiver_cmd) {
      Quiver q = parse_quiver(quiver_s, in);
      auto window = parse_window(q, window_s);
      std::vector<Vertex> wv(window.begin(), window.end());
      json cartan = json::array();
      for (Vertex a : wv) {
        json row = json::array();
        for (Vertex b : wv) row.push_back(q.cartan(a, b));
        cartan.push_back(std::move(row));
      }
      json arrows = json::array();
      for (const auto& a : q.arrows_within(window)) arrows.push_back(a.name());
      json j = {{"quiver", io::to_json(q)}, {"window", wv}, {"arrows", arrows}, {"cartan", cartan},
                {"connected", q.is_connected(window)}};
      if (q.kind() != Family::Explicit) j["delta_prefix"] = delta_prefix(q, wv.size());
      if (table) {
        std::vector<std::string> header{""};
        for (Vertex b : wv) header.push_back(std::to_string(b));
        std::vector<std::vector<std::string>> rows;
        for (std::size_t r = 0; r < wv.size(); ++r) {
          rows.push_back({std::to_string(wv[r])});
          for (std::size_t c = 0; c < wv.size(); ++c) rows.back().push_back(std::to_string(cartan[r][c].get<long>()));
        }
        emit_table(out, header, rows);
      } else {
        emit(out, j);
      }
    } else if (*roots_cmd) {
      Quiver q = parse_quiver(quiver_s, in);
      auto roots = enumerate_positive_roots(q, parse_window(q, window_s));
      std::vector<std::vector<std::string>> rows;
      for (const auto& r : roots) {
        if (table)
          rows.push_back({dim_string(r), std::to_string(r.height()), std::to_string(p_value(q, r))});
        else
          emit(out, {{"alpha", io::to_json(r)}, {"height", r.height()}, {"p", p_value(q, r)}});
      }
      if (table) emit_table(out, {"alpha", "height", "p"}, rows);
    } else if (*dominate_cmd) {
      Quiver q = parse_quiver(quiver_s, in);
      auto window = parse_window(q, window_s);
      Weight lambda = parse_weight(weight_s, in);
      auto d = dominate(q, lambda, window);
      json values = json::array();
      for (Vertex v : window) values.push_back({v, io::to_json(d.weight[v])});
      if (table) {
        std::vector<std::vector<std::string>> rows;
        for (Vertex v : window) rows.push_back({std::to_string(v), lambda[v].to_string(), d.weight[v].to_string()});
        emit_table(out, {"vertex", "input", "dominant"}, rows);
        out << "word: " << word_string(d.word) << '\n';
      } else {
        emit(out, {{"weight", values}, {"word", d.word}, {"dominant", is_weakly_dominant(d.weight, window)}});
      }
    } else if (*classify_cmd) {
      Quiver q = parse_quiver(quiver_s, in);
      Weight lambda = parse_weight(weight_s, in);
      std::vector<SimpleCertificate> certs;
      if (!alpha_s.empty())
        certs.push_back(exists_simple(q, lambda, parse_dimvector(alpha_s)));
      else
        certs = enumerate_simples(q, lambda, parse_window(q, window_s), opt.jobs);
      std::vector<std::vector<std::string>> rows;
      for (const auto& c : certs) {
        if (table)
          rows.push_back({dim_string(c.alpha), c.exists ? "yes" : "no", reason_name(c.reason)});
        else
          emit(out, io::to_json(c));
      }
      if (table) emit_table(out, {"alpha", "simple", "reason"}, rows);
    } else if (*oracle_cmd) {
      Quiver q = parse_quiver(quiver_s, in);
      Weight lambda = parse_weight(weight_s, in);
      DimVector alpha;
      if (!interval_s.empty()) {
        auto [s, r] = parse_range(interval_s);
        alpha = DimVector::interval(s, r);
      } else if (!alpha_s.empty()) {
        alpha = parse_dimvector(alpha_s);
      } else {
        throw ValidationError("oracle needs --interval or --alpha");
      }
      auto flow = solve_tree_flow(q, lambda, alpha);
      json j = {{"alpha", io::to_json(alpha)}, {"exists", flow.has_value()}};
      if (flow) {
        json edges = json::array();
        for (const auto& [a, u] : flow->u) edges.push_back({{"arrow", a.name()}, {"value", io::to_json(u)}});
        j["edge_scalars"] = edges;
        j["module"] = io::to_json(to_wreath(flow->rep), lambda, Scalar());
      }
      if (table) {
        out << "alpha " << dim_string(alpha) << ": " << (flow ? "simple exists" : "no simple") << '\n';
        if (flow)
          for (const auto& [a, u] : flow->u) out << "  " << a.name() << "* = " << u << '\n';
      } else {
        emit(out, j);
      }
    } else if (*khare_cmd) {
      CasimirPolynomial f = parse_f(f_s, constant_s);
      if (f.has_constant_term()) spdlog::warn("f has a constant term; the classification is only claimed without one");
      if (!k_s.empty()) {
        auto params = morita_params(parse_group(group_s), f, Scalar::parse(k_s));
        emit(out, {{"weight", io::to_json(params.lambda)}, {"nu", io::to_json(params.nu)}});
      } else {
        auto mods = enumerate_Vrs(f, rmax);
        std::vector<std::vector<std::string>> rows;
        for (const auto& m : mods) {
          if (table)
            rows.push_back({std::to_string(m.s), std::to_string(m.r), std::to_string(m.dimension())});
          else
            emit(out, io::to_json(m));
        }
        if (table) emit_table(out, {"s", "r", "dimension"}, rows);
      }
    } else if (*reflect_cmd || *check_cmd) {
      auto doc = io::module_from_json(parse_json_text(read_text(module_s, in), module_s));
      CLI::App* sub = *reflect_cmd ? reflect_cmd : check_cmd;
      Weight lambda = given(sub, "--weight") ? parse_weight(weight_s, in) : doc.weight.value_or(Weight::zero());
      Scalar nu = given(sub, "--nu") ? Scalar::parse(nu_s) : doc.nu.value_or(Scalar());
      if (*check_cmd) {
        auto report = doc.module.rank() == 1 ? check_rank1(to_rank1(doc.module), lambda) : CheckReport{};
        if (doc.module.rank() > 1) report = check_wreath(doc.module, lambda, nu);
        std::optional<bool> isomorphic;
        if (!compare_s.empty()) {
          auto other = io::module_from_json(parse_json_text(read_text(compare_s, in), compare_s));
          isomorphic = is_isomorphic(doc.module, other.module, lambda, nu, opt.seed).isomorphic;
        }
        if (table) {
          out << (report.pass() ? "pass" : "FAIL") << '\n';
          for (const auto& v : report.violations) out << "  " << v.relation << " at " << v.location << '\n';
          if (isomorphic) out << (*isomorphic ? "isomorphic" : "not isomorphic") << '\n';
        } else {
          json j = io::to_json(report);
          if (isomorphic) j["isomorphic"] = *isomorphic;
          emit(out, j);
        }
      } else {
        ReflectionWord word;
        if (given(reflect_cmd, "--vertex"))
          word = {vertex};
        else if (!word_s.empty())
          word = parse_int_list(strip_brackets(word_s));
        else
          throw ValidationError("reflect needs --vertex or --word");
        auto res = reflect_word(doc.module, lambda, nu, word);
        for (Vertex v : res.outside_lambda)
          spdlog::warn("parameter outside Lambda_{} when reflecting at {}; F_{} need not be invertible here", v, v, v);
        auto report = check_wreath(res.module, res.weight, nu);
        if (table) {
          out << "components:\n";
          for (const auto& [t, d] : res.module.components()) out << "  " << tuple_string(t) << "  dim " << d << '\n';
          out << "relations: " << (report.pass() ? "pass" : "FAIL") << '\n';
        } else {
          json j = io::to_json(res.module, res.weight, nu);
          j["check"] = io::to_json(report);
          j["outside_lambda"] = res.outside_lambda;
          emit(out, j);
        }
      }
    } else if (*induce_cmd) {
      Quiver q = parse_quiver(quiver_s, in);
      std::vector<int> partition;
      for (auto p : parse_int_list(partition_s)) partition.push_back(static_cast<int>(p));
      auto diagrams = parse_diagrams(diagrams_s);
      Weight lambda = parse_weight(weight_s, in);
      Scalar nu = nu_s.empty() ? Scalar() : Scalar::parse(nu_s);
      InductionVerdict verdict;
      if (!vertices_s.empty() == !roots_s.empty()) throw ValidationError("give exactly one of --vertices and --roots");
      if (!vertices_s.empty()) {
        auto vertices = parse_int_list(vertices_s);
        verdict = check_extension_conditions(q, partition, diagrams, std::vector<Vertex>(vertices.begin(), vertices.end()),
                                             lambda, nu);
        if (verify)
          verdict.relation_check = verify_relation_I_with_zero_arrows(
              q, partition, diagrams, std::vector<Vertex>(vertices.begin(), vertices.end()), lambda, nu);
      } else {
        std::vector<DimVector> roots;
        for (const auto& r : split(roots_s, ';')) roots.push_back(parse_dimvector(r));
        if (verify) throw ValidationError("--verify needs --vertices");
        verdict = check_extension_conditions(q, partition, diagrams, roots, lambda, nu);
      }
      if (table) {
        auto yn = [](bool b) { return std::string(b ? "pass" : "fail"); };
        emit_table(out, {"condition", "result"},
                   {{"(i) rectangular", yn(verdict.rectangular)},
                    {"(ii) orthogonal", verdict.orthogonality_checked ? yn(verdict.orthogonal) : "n/a"},
                    {"(iii) weight", yn(verdict.weight_equation)},
                    {"relations", verdict.relation_check ? yn(*verdict.relation_check) : "not run"},
                    {"overall", yn(verdict.pass())}});
      } else {
        emit(out, io::to_json(verdict));
      }
    }
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const json::exception& e) {
    err << "error: schema: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

}  // namespace preproj::cli
