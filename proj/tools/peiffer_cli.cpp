#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "peiffer/fixtures.hpp"
#include "peiffer/json_io.hpp"

using namespace peiffer;

namespace
{

struct Options
{
  std::string format = "text";
  std::size_t order_cap = default_order_cap;
  std::string level;
  std::string truncation = "2,2";
};

std::pair<unsigned, unsigned> parse_level(std::string const &s, char const *what)
{
  auto comma = s.find(',');
  try {
    if (comma == std::string::npos)
      throw std::invalid_argument(s);
    std::size_t used = 0;
    auto a = std::stoul(s.substr(0, comma), &used);
    auto rest = s.substr(comma + 1);
    std::size_t used2 = 0;
    auto b = std::stoul(rest, &used2);
    if (used != comma || used2 != rest.size())
      throw std::invalid_argument(s);
    return {static_cast<unsigned>(a), static_cast<unsigned>(b)};
  } catch (std::logic_error const &) {
    throw ParseError(std::string(what) + " must look like p,q");
  }
}

int emit(Options const &o, VerificationReport const &rep, json extra = {})
{
  if (o.format == "json") {
    json out = to_json(rep);
    for (auto it = extra.begin(); extra.is_object() && it != extra.end(); ++it)
      out[it.key()] = it.value();
    std::cout << out.dump(1) << '\n';
  } else {
    std::cout << rep.to_text();
  }
  return rep.ok() ? 0 : 1;
}

std::string kind_of(json const &j)
{
  if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string())
    throw ParseError("input has no \"kind\" field");
  return j["kind"].get<std::string>();
}

int cmd_verify(Options const &o, std::string const &path)
{
  auto j = read_json_file(path);
  auto kind = kind_of(j);
  if (kind == "simplicial")
    return emit(o, verify_simplicial(simplicial_from_json(j, o.order_cap), path));
  if (kind == "bisimplicial")
    return emit(o, verify_bisimplicial(bisimplicial_from_json(j, o.order_cap), path));
  if (kind == "crossed_module")
    return emit(o, check_crossed_module(crossed_module_from_json(j, o.order_cap), path));
  if (kind == "crossed_square")
    return emit(o, check_crossed_square(crossed_square_from_json(j, o.order_cap), path));
  if (kind == "two_crossed_module")
    return emit(o, check_two_crossed_module(two_crossed_from_json(j, o.order_cap), path));
  throw ParseError("cannot verify kind '" + kind + "'");
}

int cmd_moore(Options const &o, std::string const &path)
{
  auto j = read_json_file(path);
  json cells = json::array();
  auto add = [&](std::string const &name, Subgroup const &s) {
    json gens = json::array();
    for (auto e : s.generating_set())
      gens.push_back(s.parent()->element(e).to_vector());
    cells.push_back({{"level", name}, {"order", s.order()}, {"generators", gens}});
  };
  if (kind_of(j) == "simplicial") {
    auto s = simplicial_from_json(j, o.order_cap);
    if (!verify_simplicial(s).ok())
      throw IdentityViolation("simplicial identities fail");
    for (unsigned n = 0; n <= s.max_level; ++n)
      if (o.level.empty() || std::to_string(n) == o.level)
        add(std::to_string(n), moore(s, n));
  } else {
    auto g = from_grid_spec(j, o.order_cap);
    if (o.level.empty()) {
      for (unsigned p = 0; p <= g.max_p; ++p)
        for (unsigned q = 0; q <= g.max_q; ++q)
          add(level_name(p, q), moore_subgroup(g, p, q));
    } else {
      auto [p, q] = parse_level(o.level, "--level");
      add(level_name(p, q), moore_subgroup(g, p, q));
    }
  }
  if (o.format == "json") {
    std::cout << json{{"subject", path}, {"moore", cells}}.dump(1) << '\n';
  } else {
    for (auto const &c : cells)
      std::cout << "NG" << c["level"].get<std::string>() << " order "
                << c["order"].get<std::size_t>() << '\n';
  }
  return 0;
}

int cmd_decompose(Options const &o, std::string const &path)
{
  auto j = read_json_file(path);
  if (kind_of(j) == "simplicial") {
    auto s = simplicial_from_json(j, o.order_cap);
    if (!verify_simplicial(s).ok())
      throw IdentityViolation("simplicial identities fail");
    return emit(o, order_factorization(s));
  }
  return emit(o, order_factorization_check(from_grid_spec(j, o.order_cap)));
}

int cmd_peiffer_table(Options const &o, std::string const &path)
{
  auto g = from_grid_spec(read_json_file(path), o.order_cap);
  auto rep = table_check(g);
  rep.subject = path;
  if (o.format != "json") {
    std::cout << rep.to_text() << "  non-vacuous rows: " << non_vacuous_rows(rep) << '\n';
    return rep.ok() ? 0 : 1;
  }
  json rows = json::array();
  auto const &table = table_rows();
  for (std::size_t i = 0; i < table.size(); ++i) {
    auto const &c = rep.checks[i];
    auto record = to_json(c);
    json r = {{"row", table[i].number},
              {"spec", table[i].spec.to_string()},
              {"level", level_name(table[i].spec.n, table[i].spec.m)},
              {"formula", table[i].formula},
              {"status", to_string(c.status)},
              {"instances", c.instances}};
    if (!c.note.empty())
      r["note"] = c.note;
    r["witnesses"] = record.contains("witnesses") ? record["witnesses"] : json::array();
    rows.push_back(r);
  }
  json out = {{"subject", path},
              {"rows", rows},
              {"summary",
               {{"pass", rep.count(Status::pass)},
                {"fail", rep.count(Status::fail)},
                {"vacuous", rep.count(Status::vacuous)},
                {"skipped", rep.count(Status::skipped)},
                {"non_vacuous", non_vacuous_rows(rep)}}}};
  std::cout << out.dump(1) << '\n';
  return rep.ok() ? 0 : 1;
}

int cmd_boundary(Options const &o, std::string const &path)
{
  auto g = from_grid_spec(read_json_file(path), o.order_cap);
  auto rep = boundary_equalities_check(g);
  rep.subject = path;
  return emit(o, rep);
}

std::string orders(TwoCrossedModuleData const &x)
{
  return "|L| = " + std::to_string(x.L->order()) + ", |M| = " +
         std::to_string(x.M->order()) + ", |N| = " + std::to_string(x.N->order());
}

int emit_structure(Options const &o, json structure, VerificationReport const &rep,
                   std::string const &summary)
{
  if (o.format == "json") {
    std::cout << json{{"structure", structure}, {"report", to_json(rep)}}.dump(1) << '\n';
  } else {
    std::cout << summary << '\n' << rep.to_text();
  }
  return rep.ok() ? 0 : 1;
}

int cmd_extract(Options const &o, std::string const &kind, std::string const &path)
{
  auto j = read_json_file(path);
  unsigned p = 0, q = 0;
  if (!o.level.empty())
    std::tie(p, q) = parse_level(o.level, "--level");
  if (kind == "x2mod-simplicial") {
    auto s = simplicial_from_json(j, o.order_cap);
    if (!verify_simplicial(s).ok())
      throw IdentityViolation("simplicial identities fail");
    auto x = two_crossed_from_simplicial(s, o.order_cap);
    return emit_structure(o, to_json(x), check_two_crossed_module(x), orders(x));
  }
  auto g = from_grid_spec(j, o.order_cap);
  if (kind == "xmod") {
    auto e = extract_crossed_module(g, o.order_cap);
    VerificationReport rep(path);
    rep.append(check_crossed_module(e.vertical), "vertical: ");
    rep.append(check_crossed_module(e.horizontal), "horizontal: ");
    rep.append(check_crossed_module(e.product), "product: ");
    json s = {{"vertical", to_json(e.vertical)},
              {"horizontal", to_json(e.horizontal)},
              {"product", to_json(e.product)}};
    return emit_structure(o, s, rep,
                          "product boundary " + std::to_string(e.product.M->order()) +
                            " -> " + std::to_string(e.product.P->order()));
  }
  if (kind == "xsq") {
    auto sq = extract_crossed_square(g, o.order_cap);
    return emit_structure(o, to_json(sq), check_crossed_square(sq),
                          "|L| = " + std::to_string(sq.L->order()) +
                            ", |M| = " + std::to_string(sq.M->order()) +
                            ", |N| = " + std::to_string(sq.N->order()) +
                            ", |P| = " + std::to_string(sq.P->order()));
  }
  if (kind == "x2mod-row" || kind == "x2mod-col") {
    bool rows = kind == "x2mod-row";
    auto x = rows ? two_crossed_from_rows(g, p, o.order_cap)
                  : two_crossed_from_cols(g, q, o.order_cap);
    auto rep = check_two_crossed_module(x);
    rep.add(lifting_inverse_check(g, x, rows ? Direction::vertical : Direction::horizontal,
                                  rows ? p : q));
    return emit_structure(o, to_json(x), rep, orders(x));
  }
  throw ParseError("unknown extraction '" + kind + "'");
}

int cmd_mapping_cone(Options const &o, std::string const &path, bool literal)
{
  auto sq = crossed_square_from_json(read_json_file(path), o.order_cap);
  auto x = mapping_cone(sq, literal ? ConeLifting::literal : ConeLifting::conjugate_inverse,
                        o.order_cap);
  return emit_structure(o, to_json(x), check_two_crossed_module(x), orders(x));
}

int cmd_make_fixture(Options const &o, std::string const &name, std::string const &out)
{
  auto [P, Q] = parse_level(o.truncation, "--truncation");
  json j;
  if (name == "constant-s3")
    j = to_json(constant_s3_grid(P, Q));
  else if (name == "external-product")
    j = to_json(external_product_grid(P, Q));
  else if (name == "d4-grid")
    j = to_json(d4_grid(P, Q));
  else if (name == "s3-stress") {
    auto s3 = symmetric3();
    auto all = Subgroup::whole(s3);
    j = to_json(double_cech_nerve(s3, all, all, P, Q, o.order_cap));
  } else if (name == "broken-face")
    j = to_json(broken_face_grid());
  else if (name == "nerve-c3-s3")
    j = to_json(nerve(c3_in_s3(), P, o.order_cap));
  else if (name == "d4-diagonal")
    j = to_json(diagonal(d4_grid(2, 2)));
  else if (name == "c3-s3")
    j = to_json(c3_in_s3());
  else if (name == "c3-s3-trivial-action")
    j = to_json(with_trivial_action(c3_in_s3()));
  else if (name == "d4-normal-pair")
    j = to_json(d4_normal_pair_square());
  else if (name == "d4-normal-pair-trivial-h")
    j = to_json(with_trivial_h(d4_normal_pair_square()));
  else if (name == "d4-cone")
    j = to_json(mapping_cone(d4_normal_pair_square()));
  else if (name == "d4-cone-trivial-lifting")
    j = to_json(with_trivial_lifting(mapping_cone(d4_normal_pair_square())));
  else
    throw ParseError("unknown fixture '" + name + "'");
  write_json_file(out, j);
  if (o.format != "json")
    std::cout << "wrote " << out << '\n';
  return 0;
}

} // namespace

int main(int argc, char **argv)
{
  CLI::App app{"Moore bicomplex, Peiffer pairing and crossed structure checks"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--format", o.format, "text or json")
    ->check(CLI::IsMember({"text", "json"}));
  app.add_option("--order-cap", o.order_cap, "largest group order to enumerate");
  app.add_option("--level", o.level, "level p,q (a single n for simplicial input)");
  app.add_option("--truncation", o.truncation, "truncation P,Q for generated fixtures");
  app.fallthrough();

  std::string path, kind, name, out;
  bool literal = false;
  auto *verify = app.add_subcommand("verify", "check identities or axioms of any input");
  verify->add_option("path", path)->required();
  auto *moore_cmd = app.add_subcommand("moore", "Moore cells of a grid");
  moore_cmd->add_option("path", path)->required();
  auto *decompose = app.add_subcommand("decompose", "order factorization");
  decompose->add_option("path", path)->required();
  auto *table = app.add_subcommand("peiffer-table", "compare F with the closed forms");
  table->add_option("path", path)->required();
  auto *boundary = app.add_subcommand("boundary-equalities", "boundary equalities and inclusions");
  boundary->add_option("path", path)->required();
  auto *extract = app.add_subcommand("extract", "extract a crossed structure from a grid");
  extract->add_option("kind", kind)
    ->required()
    ->check(CLI::IsMember({"xmod", "xsq", "x2mod-row", "x2mod-col", "x2mod-simplicial"}));
  extract->add_option("path", path)->required();
  auto *cone = app.add_subcommand("mapping-cone", "2-crossed module of a crossed square");
  cone->add_option("path", path)->required();
  cone->add_flag("--literal-lifting", literal, "use h(x, ab) as the lifting");
  auto *make = app.add_subcommand("make-fixture", "write a built-in fixture as JSON");
  make->add_option("name", name)->required();
  make->add_option("out", out)->required();

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const &e) {
    auto code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (verify->parsed())
      return cmd_verify(o, path);
    if (moore_cmd->parsed())
      return cmd_moore(o, path);
    if (decompose->parsed())
      return cmd_decompose(o, path);
    if (table->parsed())
      return cmd_peiffer_table(o, path);
    if (boundary->parsed())
      return cmd_boundary(o, path);
    if (extract->parsed())
      return cmd_extract(o, kind, path);
    if (cone->parsed())
      return cmd_mapping_cone(o, path, literal);
    if (make->parsed())
      return cmd_make_fixture(o, name, out);
  } catch (IdentityViolation const &e) {
    std::cerr << e.what() << '\n';
    return 1;
  } catch (HypothesisViolated const &e) {
    std::cerr << e.what() << '\n';
    return 1;
  } catch (AxiomViolation const &e) {
    std::cerr << e.what() << '\n';
    return 1;
  } catch (SearchBudgetExceeded const &e) {
    std::cerr << e.what() << '\n';
    return 1;
  } catch (Error const &e) {
    std::cerr << e.what() << '\n';
    return 2;
  } catch (nlohmann::json::exception const &e) {
    std::cerr << "ParseError: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
