#include "commands.hpp"

#include "CLI11.hpp"

#include <functional>
#include <iostream>

using namespace rht;
using namespace rht::cli;

namespace {

void add_source(CLI::App* cmd, Source& s, int default_max) {
  s.max = default_max;
  cmd->add_option("file", s.file, "Input document")->required();
  cmd->add_option("--name", s.name, "cdga declaration to use")->required();
  cmd->add_option("--max", s.max, "Degree window")->check(CLI::Range(0, 64));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"rht: rational homotopy computations over Q"};
  app.require_subcommand(1);
  app.fallthrough();
  bool json = false;
  unsigned long seed = 0;
  app.add_flag("--json", json, "Emit JSON instead of text");
  app.add_option("--seed", seed, "Accepted for compatibility; every computation is deterministic")
      ->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);

  std::function<Outcome()> run;

  std::string file;
  int max = 12;
  auto* v = app.add_subcommand("validate", "Check every declaration in a document");
  v->add_option("file", file, "Input document")->required();
  v->add_option("--max", max, "Degree window for quotient and morphism checks");
  v->callback([&] { run = [&] { return validate_cmd(file, max); }; });

  Source coh;
  auto* c = app.add_subcommand("cohomology", "Betti numbers in a degree window");
  add_source(c, coh, 12);
  c->callback([&] { run = [&] { return cohomology_cmd(coh); }; });

  Source mm;
  auto* m = app.add_subcommand("minimal-model", "Minimal Sullivan model through a degree");
  add_source(m, mm, 8);
  m->callback([&] { run = [&] { return minimal_model_cmd(mm); }; });

  HomotopyArgs ha;
  auto* h = app.add_subcommand("homotopy", "Homotopy ranks, Lie brackets, filtrations, Hurewicz map");
  add_source(h, ha.src, 8);
  h->add_flag("--brackets", ha.brackets, "Print the homotopy Lie algebra");
  h->add_option("--filtrations", ha.filtrations, "Compare filtrations of V^k and L_{k-1}");
  h->add_option("--hurewicz", ha.hurewicz, "Hurewicz matrix in degree k");
  h->add_option("--depth", ha.depth, "Filtration depth");
  h->callback([&] { run = [&] { return homotopy_cmd(ha); }; });

  BchArgs ba;
  auto* b = app.add_subcommand("bch", "Baker-Campbell-Hausdorff product in L_0");
  add_source(b, ba.src, 8);
  b->add_option("--class", ba.nil_class, "Truncation class")->check(CLI::Range(1, 8));
  b->add_option("a", ba.a, "First element, e.g. x_u + 1/2*x_v")->required();
  b->add_option("b", ba.b, "Second element")->required();
  b->callback([&] { run = [&] { return bch_cmd(ba); }; });

  InvariantsArgs ia;
  auto* inv = app.add_subcommand("invariants", "Toomer, cat, TC cup length, loop homology, growth, Massey");
  add_source(inv, ia.src, 8);
  inv->add_option("--massey", ia.massey, "Three classes 'a,b,c' for a triple Massey product");
  inv->add_option("--words", ia.word_bound, "Word-length bound for the Toomer search");
  inv->callback([&] { run = [&] { return invariants_cmd(ia); }; });

  std::vector<int> evens, odds;
  auto* e = app.add_subcommand("elliptic-check", "Degree condition for finite rational homotopy");
  e->add_option("--evens", evens, "a_i with generators in degree 2a_i")->delimiter(',');
  e->add_option("--odds", odds, "b_j with generators in degree 2b_j - 1")->delimiter(',');
  e->callback([&] { run = [&] { return elliptic_cmd(evens, odds); }; });

  Source ls;
  auto* l = app.add_subcommand("loopspace", "Free loop space model");
  add_source(l, ls, 10);
  l->callback([&] { run = [&] { return loopspace_cmd(ls); }; });

  FibrationArgs fa;
  auto* f = app.add_subcommand("fibration", "Relative Sullivan algebras");
  f->require_subcommand(1);
  auto fib_opts = [&](CLI::App* s) {
    s->add_option("file", fa.file, "Input document")->required();
    s->add_option("--base", fa.base, "Base cdga")->required();
    s->add_option("--total", fa.total, "Total cdga, listing the base generators first")->required();
    s->add_option("--max", fa.max, "Degree window");
  };
  auto* pb = f->add_subcommand("pullback", "Pull an extension back along a morphism of bases");
  fib_opts(pb);
  pb->add_option("--map", fa.map, "Morphism out of the base")->required();
  pb->callback([&] { run = [&] { return pullback_cmd(fa); }; });
  auto* fb = f->add_subcommand("fiber", "Fiber of an extension");
  fib_opts(fb);
  fb->callback([&] { run = [&] { return fiber_cmd(fa); }; });
  auto* ho = f->add_subcommand("holonomy", "Holonomy action on fiber cohomology");
  fib_opts(ho);
  ho->callback([&] { run = [&] { return holonomy_cmd(fa); }; });

  ConfigArgs ca;
  auto* cs = app.add_subcommand("config-space", "Configuration space model F(A,k)");
  cs->add_option("file", ca.file, "Input document")->required();
  cs->add_option("--pd", ca.pd, "cdga with a pd declaration")->required();
  cs->add_option("--k", ca.k, "Number of points")->check(CLI::Range(1, 8));
  cs->add_option("--max-k", ca.max_k, "Upper limit on k");
  cs->callback([&] { run = [&] { return config_space_cmd(ca); }; });

  std::string arr_name;
  auto* ar = app.add_subcommand("arrangement", "Intersection lattice and complement model");
  ar->add_option("file", file, "Input document")->required();
  ar->add_option("--name", arr_name, "Arrangement declaration")->required();
  ar->callback([&] { run = [&] { return arrangement_cmd(file, arr_name); }; });

  std::string cat_name;
  std::vector<std::string> cat_params;
  auto* ct = app.add_subcommand("catalog", "Catalog models, e.g. 'sphere 4' or 'product(cp(2),sphere(3))'");
  ct->add_option("name", cat_name, "Entry name or expression")->required();
  ct->add_option("params", cat_params, "Integer parameters");
  ct->callback([&] { run = [&] { return catalog_cmd(cat_name, cat_params); }; });

  MappingArgs ma;
  auto* mp = app.add_subcommand("mapping-space", "Rational homotopy of a mapping space component");
  mp->add_option("file", ma.file, "Input document")->required();
  mp->add_option("--map", ma.map, "Morphism modelling the map")->required();
  mp->add_option("--max", ma.max, "Largest n");
  mp->callback([&] { run = [&] { return mapping_space_cmd(ma); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& err) {
    int code = app.exit(err);
    return code == 0 ? 0 : 2;
  }

  try {
    Outcome out = run();
    if (json) {
      if (!out.preamble.empty()) out.result["text"] = out.preamble;
      std::cout << out.result.dump(2) << "\n";
    } else {
      std::cout << out.preamble << render_text(out.result);
    }
    return out.ok ? 0 : 1;
  } catch (const ParseError& err) {
    std::cerr << "parse error: " << err.what() << "\n";
    return 2;
  } catch (const UsageError& err) {
    std::cerr << "usage error: " << err.what() << "\n";
    return 2;
  } catch (const SemanticError& err) {
    std::cerr << "error: " << err.what() << "\n";
    return 1;
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << "\n";
    return 1;
  }
}
