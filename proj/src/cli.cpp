#include "iinf/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <functional>
#include <optional>

#include "iinf/congruence.hpp"
#include "iinf/error.hpp"
#include "iinf/expr.hpp"
#include "iinf/green.hpp"
#include "iinf/oracle.hpp"
#include "iinf/solver.hpp"
#include "iinf/topology.hpp"

namespace iinf {

namespace {

using json = nlohmann::json;

constexpr char const* grammar = R"usage(usage: iinf [--json] <command>

  eval "<expr>"                 expr := element | expr "*" expr | "inv(" expr ")" | "(" expr ")"
  green (R|L|H|D|J) <el> <el>
  cong related <cid> <el> <el>
  cong principal <el> <el>
  cong class <cid> <el>
  solve (left|right) <el> <el>
  nbhd member    --flavor (F|WF) <center> <set> <el>
  nbhd disjoint  --flavor (F|WF) <center> <set> <center> <set>
  nbhd witness   --flavor (F|WF) <center> <set> <center> <set>
  nbhd separate  --flavor (F|WF) <el> <el>
  nbhd continuity <el> <el> <set>
  nbhd inversion  <el> <set>
  enum --window <n>
  verify --window <n> [--suite <name>] [--seed <u64>]

  element := "id" | "{" [item ("," item)*] "}"   item := nat ">" nat | "-" nat
  set     := "{" [nat ("," nat)*] "}"
  cid     := delta | omega | I:<n> | S:<n> | A:<n>
)usage";

class Runner {
 public:
  Runner(std::ostream& out, bool const& json) : _out(out), _json(json) {}

  void emit(std::string const& text, json const& value) {
    if (_json) {
      _out << value.dump(2) << '\n';
    } else {
      _out << text << '\n';
    }
  }

  void emit_list(std::vector<PartialSelfmap> const& xs) {
    json arr = json::array();
    for (auto const& x : xs) {
      arr.push_back(format(x));
    }
    if (_json) {
      _out << arr.dump(2) << '\n';
      return;
    }
    for (auto const& x : xs) {
      _out << format(x) << '\n';
    }
  }

  void emit_bool(char const* key, bool value) {
    emit(value ? "true" : "false", json{{key, value}});
  }

  std::ostream& out() { return _out; }
  bool json_mode() const { return _json; }

 private:
  std::ostream& _out;
  bool const& _json;
};

FinSet window_of(std::size_t n) {
  return FinSet::range(0, static_cast<Point>(n));
}

}  // namespace

int run_cli(std::vector<std::string> const& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Exact computation in the inverse monoid of almost-identity "
               "partial bijections of the naturals"};
  app.fallthrough();
  app.require_subcommand(1);
  bool json_out = false;
  app.add_flag("--json", json_out, "JSON output");
  Runner run(out, json_out);
  std::function<int()> action;

  // eval
  std::string expr_text;
  auto* eval = app.add_subcommand("eval", "evaluate a product expression");
  eval->add_option("expr", expr_text)->required();
  eval->callback([&] {
    action = [&] {
      PartialSelfmap v = evaluate(expr_text);
      run.emit(format(v), json{{"result", format(v)}});
      return exit_ok;
    };
  });

  // green
  std::string relation;
  std::string el1;
  std::string el2;
  auto* green = app.add_subcommand("green", "Green's relation test");
  green->add_option("relation", relation)
      ->required()
      ->check(CLI::IsMember({"R", "L", "H", "D", "J"}));
  green->add_option("a", el1)->required();
  green->add_option("b", el2)->required();
  green->callback([&] {
    action = [&] {
      auto a = parse(el1);
      auto b = parse(el2);
      bool related = relation == "R"   ? green_R(a, b)
                     : relation == "L" ? green_L(a, b)
                     : relation == "H" ? green_H(a, b)
                     : relation == "D" ? green_D(a, b)
                                       : green_J(a, b);
      run.emit(related ? "true" : "false",
               json{{"relation", relation}, {"related", related}});
      return exit_ok;
    };
  });

  // cong
  std::string cid;
  auto* cong = app.add_subcommand("cong", "congruence queries");
  cong->require_subcommand(1);
  auto* related = cong->add_subcommand("related", "test c-relatedness");
  related->add_option("cid", cid)->required();
  related->add_option("a", el1)->required();
  related->add_option("b", el2)->required();
  related->callback([&] {
    action = [&] {
      run.emit_bool("related",
                    cong_related(parse_congruence(cid), parse(el1), parse(el2)));
      return exit_ok;
    };
  });
  auto* principal =
      cong->add_subcommand("principal", "finest congruence joining two elements");
  principal->add_option("a", el1)->required();
  principal->add_option("b", el2)->required();
  principal->callback([&] {
    action = [&] {
      auto c = to_string(principal_congruence(parse(el1), parse(el2)));
      run.emit(c, json{{"congruence", c}});
      return exit_ok;
    };
  });
  auto* cls = cong->add_subcommand("class", "quotient class label");
  cls->add_option("cid", cid)->required();
  cls->add_option("a", el1)->required();
  cls->callback([&] {
    action = [&] {
      auto l = to_string(class_label(parse_congruence(cid), parse(el1)));
      run.emit(l, json{{"label", l}});
      return exit_ok;
    };
  });

  // solve
  std::string side;
  auto* solve = app.add_subcommand("solve", "translation fibers");
  solve->add_option("side", side)
      ->required()
      ->check(CLI::IsMember({"left", "right"}));
  solve->add_option("a", el1)->required();
  solve->add_option("b", el2)->required();
  solve->callback([&] {
    action = [&] {
      auto a = parse(el1);
      auto b = parse(el2);
      run.emit_list(side == "left" ? solve_left(a, b) : solve_right(a, b));
      return exit_ok;
    };
  });

  // nbhd
  std::string flavor_text = "F";
  std::string set1;
  std::string set2;
  auto* nbhd = app.add_subcommand("nbhd", "basic open sets");
  nbhd->require_subcommand(1);
  auto add_flavor = [&](CLI::App* sub) {
    sub->add_option("--flavor", flavor_text, "F or WF")
        ->check(CLI::IsMember({"F", "WF"}));
  };
  auto* nmember = nbhd->add_subcommand("member", "membership test");
  add_flavor(nmember);
  nmember->add_option("center", el1)->required();
  nmember->add_option("constraint", set1)->required();
  nmember->add_option("element", el2)->required();
  nmember->callback([&] {
    action = [&] {
      Nbhd n(parse_flavor(flavor_text), parse(el1), parse_finset(set1));
      run.emit_bool("member", member(n, parse(el2)));
      return exit_ok;
    };
  });
  auto two_nbhds = [&](CLI::App* sub) {
    add_flavor(sub);
    sub->add_option("center1", el1)->required();
    sub->add_option("constraint1", set1)->required();
    sub->add_option("center2", el2)->required();
    sub->add_option("constraint2", set2)->required();
  };
  auto make_pair = [&] {
    Flavor f = parse_flavor(flavor_text);
    return std::pair{Nbhd(f, parse(el1), parse_finset(set1)),
                     Nbhd(f, parse(el2), parse_finset(set2))};
  };
  auto* ndisjoint = nbhd->add_subcommand("disjoint", "disjointness decision");
  two_nbhds(ndisjoint);
  ndisjoint->callback([&] {
    action = [&] {
      auto [n1, n2] = make_pair();
      run.emit_bool("disjoint", disjoint(n1, n2));
      return exit_ok;
    };
  });
  auto* nwitness =
      nbhd->add_subcommand("witness", "an explicit common member, or none");
  two_nbhds(nwitness);
  nwitness->callback([&] {
    action = [&] {
      auto [n1, n2] = make_pair();
      auto m = common_member(n1, n2);
      run.emit(m ? format(*m) : "none",
               json{{"witness", m ? json(format(*m)) : json(nullptr)}});
      return exit_ok;
    };
  });
  auto* nseparate =
      nbhd->add_subcommand("separate", "constraints giving disjoint neighbourhoods");
  add_flavor(nseparate);
  nseparate->add_option("a", el1)->required();
  nseparate->add_option("b", el2)->required();
  nseparate->callback([&] {
    action = [&] {
      auto [f1, f2] = separate(parse(el1), parse(el2), parse_flavor(flavor_text));
      run.emit(to_string(f1) + " " + to_string(f2),
               json{{"first", f1.elems()}, {"second", f2.elems()}});
      return exit_ok;
    };
  });
  auto* ncont = nbhd->add_subcommand(
      "continuity", "constraints on the factors for a product neighbourhood");
  add_flavor(ncont);
  ncont->add_option("a", el1)->required();
  ncont->add_option("b", el2)->required();
  ncont->add_option("constraint", set1)->required();
  ncont->callback([&] {
    action = [&] {
      auto [f1, f2] =
          continuity_witness(parse(el1), parse(el2), parse_finset(set1));
      run.emit(to_string(f1) + " " + to_string(f2),
               json{{"first", f1.elems()}, {"second", f2.elems()}});
      return exit_ok;
    };
  });
  auto* ninv = nbhd->add_subcommand(
      "inversion", "constraint for the neighbourhood of the inverse");
  add_flavor(ninv);
  ninv->add_option("g", el1)->required();
  ninv->add_option("constraint", set1)->required();
  ninv->callback([&] {
    action = [&] {
      FinSet g = inversion_witness(parse(el1), parse_finset(set1));
      run.emit(to_string(g), json{{"constraint", g.elems()}});
      return exit_ok;
    };
  });

  // enum
  std::size_t window = 0;
  auto* en = app.add_subcommand("enum", "list the elements supported in a window");
  en->add_option("--window", window, "window size n, points 0..n-1")
      ->required();
  en->callback([&] {
    action = [&] {
      run.emit_list(enumerate_window(window_of(window)));
      return exit_ok;
    };
  });

  // verify
  std::string suite_text = "all";
  std::uint64_t seed = 0;
  auto* ver = app.add_subcommand("verify", "run oracle property sweeps");
  ver->add_option("--window", window, "window size n, points 0..n-1")
      ->required();
  ver->add_option("--suite", suite_text)
      ->check(CLI::IsMember({"core", "green", "congruence", "solver",
                             "semilattice", "topology", "oracle", "all"}));
  ver->add_option("--seed", seed);
  ver->callback([&] {
    action = [&] {
      VerifyOptions options;
      options.seed = seed;
      Report r = verify(*parse_suite(suite_text), window_of(window), options);
      run.out() << (run.json_mode() ? to_json(r) + "\n" : to_text(r));
      return r.passed() ? exit_ok : exit_verify_failed;
    };
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (CLI::CallForHelp const&) {
    out << grammar;
    return exit_ok;
  } catch (CLI::ParseError const& e) {
    err << e.what() << "\n\n" << grammar;
    return exit_usage;
  }
  if (!action) {
    err << grammar;
    return exit_usage;
  }
  try {
    return action();
  } catch (Error const& e) {
    err << e.what() << '\n';
    return exit_domain_error;
  }
}

}  // namespace iinf
