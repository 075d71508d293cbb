#include <iostream>
#include <random>

#include "CLI11.hpp"
#include "khoss/corpus.hpp"
#include "khoss/report.hpp"
#include "khoss/verify.hpp"

using namespace khoss;

namespace {

constexpr int kExitParse = 2;
constexpr int kExitInternal = 3;
constexpr int kExitVerify = 4;

struct InputOpts {
  std::string pd, braid, corpus;
  bool unknot = false;
  std::string corpus_dir = corpus_dir_default();
  int basepoint = 0;
  int max_n = 14;
  bool allow_large = false;
};

void add_input_opts(CLI::App* app, InputOpts& in) {
  app->add_option("--pd", in.pd, "PD notation, e.g. \"X(1,4,2,3) X(3,2,4,1)\"");
  app->add_flag("--unknot", in.unknot, "accept an empty PD as the round unknot");
  app->add_option("--braid", in.braid, "braid word \"<strands>: w1 w2 ...\"");
  app->add_option("--corpus", in.corpus, "named corpus entry");
  app->add_option("--corpus-dir", in.corpus_dir, "corpus directory");
  app->add_option("--basepoint", in.basepoint, "PD edge label for the reduced theory");
  app->add_option("--max-n", in.max_n, "crossing cap")->capture_default_str();
  app->add_flag("--allow-large", in.allow_large, "override the crossing cap");
}

LinkDiagram load_input(const InputOpts& in) {
  int sources = (!in.pd.empty() || in.unknot) + !in.braid.empty() + !in.corpus.empty();
  if (sources != 1)
    throw DiagramError("exactly one of --pd/--unknot, --braid, --corpus required");
  LinkDiagram d;
  if (!in.braid.empty())
    d = parse_braid_text(in.braid);
  else if (!in.corpus.empty())
    d = load_corpus(in.corpus_dir, in.corpus);
  else
    d = parse_pd(in.pd, in.unknot);
  if (d.n() > in.max_n && !in.allow_large)
    throw DiagramError("diagram has " + std::to_string(d.n()) +
                       " crossings, above the cap (use --allow-large)");
  if (in.basepoint) d.basepoint = in.basepoint;
  if (d.split)
    std::cerr << "warning: split diagram; components are tensored together\n";
  return d;
}

Theory parse_theory(const std::string& s) {
  if (s == "khovanov") return Theory::Khovanov;
  if (s == "szabo") return Theory::Standard;
  if (s == "szabo-mirror") return Theory::Mirror;
  if (s == "reduced") return Theory::Reduced;
  throw DiagramError("unknown theory: " + s);
}

Decoration make_decoration(const std::string& spec, const LinkDiagram& d,
                           uint64_t seed) {
  if (spec == "random") {
    std::mt19937_64 rng(seed);
    return random_decoration(rng, d.n());
  }
  return parse_decoration(spec, d);
}

ComputeReport run_compute(const LinkDiagram& d, Theory theory, const Decoration& t,
                          bool want_pages) {
  ResolutionTable rt(d);
  Basis basis(d, rt);
  FaceContext ctx{&d, &rt, &basis, t, theory == Theory::Mirror,
                  &TwoDimTable::standard()};
  ComputeReport rep;
  rep.input = d.source_text.empty() ? serialize_pd(d) : d.source_text;
  if (theory == Theory::Khovanov) {
    rep.theory = "khovanov";
    SparseMapF2 d1 = assemble_khovanov_d1(d, rt, basis);
    std::vector<std::pair<int, int>> hq(basis.size());
    for (int i = 0; i < basis.size(); ++i)
      hq[i] = {basis.gen(i).h, basis.gen(i).q};
    rep.bigraded = bigraded_homology(hq, d1);
    rep.has_bigraded = true;
    return rep;
  }
  SparseMapF2 dm = assemble_d(ctx);
  if (!dm.compose(dm).is_zero())
    throw std::runtime_error("internal check failed: d*d != 0");
  Subcomplex sc;
  if (theory == Theory::Reduced) {
    rep.theory = "reduced";
    int bp = d.basepoint ? *d.basepoint : (d.edge_labels.empty() ? 1 : d.edge_labels[0]);
    sc = reduced_subcomplex(ctx, dm, bp);
  } else {
    rep.theory = theory == Theory::Mirror ? "szabo-mirror" : "szabo";
    sc = full_subcomplex(ctx, dm);
  }
  rep.delta_ranks = subcomplex_delta_ranks(ctx, sc);
  if (want_pages) {
    rep.pages = subcomplex_pages(ctx, sc);
    rep.has_pages = true;
  }
  return rep;
}

int cmd_verify_run(const InputOpts& in, int decorations, uint64_t seed,
                   int random_diagrams, int random_max_n, long face_cap) {
  std::vector<LinkDiagram> diagrams;
  std::vector<std::string> names;
  int sources = (!in.pd.empty() || in.unknot) + !in.braid.empty() + !in.corpus.empty();
  if (sources == 0) {
    for (const auto& name : corpus_names(in.corpus_dir)) {
      diagrams.push_back(load_corpus(in.corpus_dir, name));
      names.push_back(name);
    }
    if (diagrams.empty())
      throw DiagramError("no corpus entries found in " + in.corpus_dir);
  } else {
    diagrams.push_back(load_input(in));
    names.push_back("input");
  }
  std::mt19937_64 rng(seed);
  for (int i = 0; i < random_diagrams; ++i) {
    diagrams.push_back(random_braid_diagram(rng, random_max_n));
    names.push_back("random-" + std::to_string(i));
  }

  bool all_ok = true;
  auto report = [&](const std::string& name, bool ok) {
    std::cout << (ok ? "[PASS] " : "[FAIL] ") << name << "\n";
    all_ok = all_ok && ok;
  };

  long rule_faces = 0;
  bool dd_ok = true, ddm_ok = true, rel_ok = true, iso_ok = true, rules_ok = true,
       trans_ok = true;
  RuleCheckStats totals;
  for (size_t di = 0; di < diagrams.size(); ++di) {
    const LinkDiagram& d = diagrams[di];
    ResolutionTable rt(d);
    Basis basis(d, rt);
    for (int rep = 0; rep < decorations; ++rep) {
      Decoration t = random_decoration(rng, d.n());
      FaceContext ctx{&d, &rt, &basis, t, false, &TwoDimTable::standard()};
      if (!check_d_squared(ctx)) dd_ok = false;
      FaceContext mctx = ctx;
      mctx.mirror_variant = true;
      if (!check_d_squared(mctx)) ddm_ok = false;
      if (d.n() > 0) {
        int m = (int)(rng() % (uint64_t)d.n());
        if (!check_decoration_relation(ctx, m)) rel_ok = false;
        if (!check_decoration_iso(ctx, m)) iso_ok = false;
      }
      if (rep == 0) {
        RuleCheckStats st = check_rules(ctx, face_cap);
        totals += st;
        rule_faces += st.faces;
        if (!st.ok()) rules_ok = false;
      }
    }
    if (d.from_braid && d.n() > 0) {
      FaceContext ctx{&d, &rt, &basis, braid_decoration(d), false,
                      &TwoDimTable::standard()};
      if (!check_transverse_cycle(ctx)) trans_ok = false;
    }
  }
  report("d(t)*d(t) = 0", dd_ok);
  report("mirror d'(t)*d'(t) = 0", ddm_ok);
  report("decoration change relation", rel_ok);
  report("decoration change isomorphism", iso_ok);
  report("rule suite on " + std::to_string(rule_faces) + " faces " +
             "(duality/conjugation/grading/filtration/extension)",
         rules_ok);
  report("transverse cycle closed", trans_ok);
  return all_ok ? 0 : kExitVerify;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"delta-graded link homology from decorated resolution cubes"};
  app.require_subcommand(1);

  // compute
  auto* compute = app.add_subcommand("compute", "compute graded ranks");
  InputOpts cin_;
  add_input_opts(compute, cin_);
  std::string theory = "szabo", decoration = "auto", output = "text";
  bool pages = false;
  uint64_t seed = 1;
  compute->add_option("--theory", theory, "khovanov|szabo|szabo-mirror|reduced")
      ->capture_default_str();
  compute->add_option("--decoration", decoration, "auto|braid|random|<bitstring>")
      ->capture_default_str();
  compute->add_option("--output", output, "json|csv|text")->capture_default_str();
  compute->add_flag("--pages", pages, "include the spectral sequence pages");
  compute->add_option("--seed", seed, "seed for random decorations");

  // verify
  auto* verify = app.add_subcommand("verify", "run the built-in checks");
  InputOpts vin;
  add_input_opts(verify, vin);
  int vdecor = 50, vrandom = 0, vrandmax = 8;
  long vfacecap = 20000;
  uint64_t vseed = 1;
  verify->add_option("--decorations", vdecor, "random decorations per diagram")
      ->capture_default_str();
  verify->add_option("--random-diagrams", vrandom, "extra random braid diagrams")
      ->capture_default_str();
  verify->add_option("--random-max-n", vrandmax, "crossing cap for random diagrams")
      ->capture_default_str();
  verify->add_option("--face-cap", vfacecap, "rule-suite face cap per diagram")
      ->capture_default_str();
  verify->add_option("--seed", vseed, "random seed");

  // invariance
  auto* inv = app.add_subcommand("invariance", "compare two diagrams of one link");
  std::vector<std::string> inputs;
  std::string inv_corpus_dir = corpus_dir_default();
  uint64_t inv_seed = 1;
  inv->add_option("inputs", inputs, "two of pd:..., braid:..., corpus:name")
      ->expected(2);
  inv->add_option("--corpus-dir", inv_corpus_dir, "corpus directory");
  inv->add_option("--seed", inv_seed, "seed for the random decorations");

  // dump-matrix
  auto* dump = app.add_subcommand("dump-matrix", "print a differential matrix");
  InputOpts din;
  add_input_opts(dump, din);
  std::string dtheory = "szabo", ddecoration = "auto";
  int dk = 0, dhm = -1;
  dump->add_option("--theory", dtheory, "szabo|szabo-mirror|khovanov");
  dump->add_option("--decoration", ddecoration, "auto|braid|<bitstring>");
  dump->add_option("--k", dk, "only the k-dimensional part");
  dump->add_option("--hm", dhm, "edge homotopy at the given crossing (1-based)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (compute->parsed()) {
      LinkDiagram d = load_input(cin_);
      Decoration t = make_decoration(decoration, d, seed);
      ComputeReport rep = run_compute(d, parse_theory(theory), t, pages);
      std::cout << render_report(rep, output);
      return 0;
    }
    if (verify->parsed())
      return cmd_verify_run(vin, vdecor, vseed, vrandom, vrandmax, vfacecap);
    if (inv->parsed()) {
      std::mt19937_64 rng(inv_seed);
      std::vector<std::map<int, int>> tables;
      std::vector<std::vector<PageTable>> pagelists;
      for (const auto& spec : inputs) {
        LinkDiagram d = load_input_spec(spec, inv_corpus_dir);
        ResolutionTable rt(d);
        Basis basis(d, rt);
        Decoration t = random_decoration(rng, d.n());
        FaceContext ctx{&d, &rt, &basis, t, false, &TwoDimTable::standard()};
        SparseMapF2 dm = assemble_d(ctx);
        if (!dm.compose(dm).is_zero())
          throw std::runtime_error("internal check failed: d*d != 0");
        Subcomplex sc = full_subcomplex(ctx, dm);
        tables.push_back(subcomplex_delta_ranks(ctx, sc));
        pagelists.push_back(subcomplex_pages(ctx, sc));
      }
      bool equal = tables[0] == tables[1];
      // invariant pages start at E_2 = Khovanov homology
      size_t rmax = std::max(pagelists[0].size(), pagelists[1].size());
      for (size_t r = 1; r < rmax; ++r) {
        auto pick = [&](size_t side) {
          const auto& pl = pagelists[side];
          return r < pl.size() ? pl[r].ranks : pl.back().ranks;
        };
        if (pick(0) != pick(1)) equal = false;
      }
      std::cout << (equal ? "equal" : "unequal") << "\n";
      return equal ? 0 : kExitVerify;
    }
    if (dump->parsed()) {
      LinkDiagram d = load_input(din);
      ResolutionTable rt(d);
      Basis basis(d, rt);
      Decoration t = parse_decoration(ddecoration, d);
      FaceContext ctx{&d, &rt, &basis, t,
                      dtheory == "szabo-mirror", &TwoDimTable::standard()};
      SparseMapF2 m;
      if (dhm >= 1)
        m = assemble_Hm(ctx, dhm - 1);
      else if (dtheory == "khovanov")
        m = assemble_khovanov_d1(d, rt, basis);
      else if (dk >= 1)
        m = assemble_dk(ctx, dk);
      else
        m = assemble_d(ctx);
      std::cout << render_matrix(m);
      return 0;
    }
  } catch (const DiagramError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  return 0;
}
