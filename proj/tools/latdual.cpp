#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "latdual/dualize.hpp"
#include "latdual/generate.hpp"
#include "latdual/io.hpp"
#include "latdual/reduction.hpp"
#include "latdual/split_solver.hpp"
#include "latdual/trianglefree.hpp"

namespace {

using namespace latdual;

struct Options {
  std::string poset_file, hypergraph_file, graph_file, bplus_file, bminus_file;
  std::string solver = "auto";
  std::string target;
  std::string kind;
  std::string out_prefix = "out";
  std::uint64_t seed = 1;
  std::size_t cap = kDefaultOracleCap;
  std::size_t trans_cap = TransversalCaps{}.max_family;
  bool delay_stats = false;
  bool allow_reserved = false;
  std::string dump_reduced;
  std::size_t n = 6, m = 4, k = 3, tries = 0;
  double p = 0.3, q = 0.3, prefix_fraction = 0.0;
};

Poset load_poset(const Options& opt) {
  return parse_poset(read_file(opt.poset_file), opt.allow_reserved);
}

Hypergraph load_hypergraph(const Options& opt) {
  std::vector<std::string> warnings;
  Hypergraph h = parse_hypergraph(read_file(opt.hypergraph_file), opt.allow_reserved,
                                  &warnings);
  for (const auto& w : warnings) std::cerr << "warning: " << w << "\n";
  return h;
}

Graph load_graph(const Options& opt) {
  return parse_graph(read_file(opt.graph_file), opt.allow_reserved);
}

void print_family(const SetFamily& fam, const Universe& u) {
  for (const auto& s : fam) {
    std::string body = u.format_set(s);
    std::cout << "set:" << (body.empty() ? "" : " ") << body << "\n";
  }
  std::cout << "count: " << fam.size() << "\n";
}

TransversalCaps trans_caps(const Options& opt) { return TransversalCaps{opt.trans_cap}; }

int cmd_dualize(const Options& opt) {
  Poset p = load_poset(opt);
  SetFamily upper = parse_family(read_file(opt.bplus_file), p.universe());
  auto inst = DualInstance::make(std::move(p), std::move(upper));
  SetFamily out;
  if (opt.solver == "oracle") out = dual_enum_oracle(inst, opt.cap);
  else if (opt.solver == "auto" || opt.solver == "generic")
    out = dual_enum_generic(inst, trans_caps(opt));
  else fail(ErrorKind::InvalidParams, "dualize supports solvers auto|oracle|generic");
  print_family(out, inst.poset.universe());
  return 0;
}

int cmd_itrans(const Options& opt) {
  auto inst = ITransInstance::make(load_hypergraph(opt), load_poset(opt));
  SetFamily out;
  if (opt.solver == "oracle") out = itrans_enum_oracle(inst, opt.cap);
  else if (opt.solver == "auto" || opt.solver == "generic")
    out = itrans_enum_generic(inst, trans_caps(opt));
  else fail(ErrorKind::InvalidParams, "itrans supports solvers auto|oracle|generic");
  print_family(out, inst.poset.universe());
  return 0;
}

void dump_reduced_files(const Options& opt, const ReducedInstance& ri) {
  write_file(opt.dump_reduced + ".graph", format_graph(ri.graph));
  write_file(opt.dump_reduced + ".poset", format_poset(ri.poset));
  const Universe& ru = ri.graph.universe();
  const Universe& ou = *ri.original_universe;
  std::string manifest;
  for (std::size_t i = 0; i < ri.centers.size(); ++i) {
    manifest += "chain: center=" + ru.token(ri.centers[i]) +
                " branch=" + ru.token(ri.branch_reps[i]) +
                " min=" + ru.token(ri.chain_mins[i]) + "\n";
    if (ri.original_branches[i].count() > 1)
      manifest += "contracted: " + ru.token(ri.branch_reps[i]) + " <- " +
                  ou.format_set(ri.original_branches[i]) + "\n";
  }
  for (auto [a, b] : ri.removed_center_edges)
    manifest += "removed-edge: " + ru.token(a) + " " + ru.token(b) + "\n";
  manifest += "targets: " + ru.format_set(ri.targets) + "\n";
  write_file(opt.dump_reduced + ".contraction", manifest);
  std::cerr << "wrote: " << opt.dump_reduced << ".graph " << opt.dump_reduced << ".poset "
            << opt.dump_reduced << ".contraction\n";
}

int cmd_idom(const Options& opt) {
  auto inst = IDomInstance::make(load_graph(opt), load_poset(opt));
  std::string chosen = opt.solver;
  if (chosen == "auto") {
    if (is_split(inst.graph) && is_ni_poset(inst.graph, inst.poset)) chosen = "split";
    else if (is_triangle_free(inst.graph) && is_weak_ni_poset(inst.graph, inst.poset))
      chosen = "trianglefree";
    else chosen = "generic";
  }
  if (chosen == "oracle") {
    print_family(idom_enum_oracle(inst, opt.cap), inst.poset.universe());
  } else if (chosen == "generic") {
    print_family(idom_enum_generic(inst, trans_caps(opt)), inst.poset.universe());
  } else if (chosen == "split") {
    auto ctx = SplitContext::make(inst.graph, inst.poset);
    SplitEnumStats stats;
    std::size_t count = 0;
    enumerate_split(
        ctx,
        [&](const Bits& s) {
          std::string body = inst.poset.universe().format_set(s);
          std::cout << "set:" << (body.empty() ? "" : " ") << body << "\n";
          ++count;
        },
        &stats);
    std::cout << "count: " << count << "\n";
    if (opt.delay_stats) {
      std::printf("delay-stats: emissions=%zu tests=%zu max-gap=%zu mean-gap=%.3f "
                  "clique-size=%zu\n",
                  stats.emissions, stats.membership_tests, stats.max_gap,
                  stats.mean_gap(), ctx.dec.clique.count());
    }
  } else if (chosen == "trianglefree") {
    StarDecomposition sd = star_decompose(inst.graph, inst.poset);
    ReducedInstance ri = build_reduced(inst.graph, inst.poset, sd);
    if (!opt.dump_reduced.empty()) dump_reduced_files(opt, ri);
    SetFamily out;
    for (const auto& dstar : minimal_subset_dominators(ri.graph, ri.targets, trans_caps(opt)))
      out.push_back(expand_solution(ri, lift_solution(ri, dstar)));
    canonicalize_family(out);
    print_family(out, inst.poset.universe());
  } else {
    fail(ErrorKind::InvalidParams,
         "idom supports solvers auto|oracle|generic|split|trianglefree");
  }
  return 0;
}

int cmd_check_dual(const Options& opt) {
  Poset p = load_poset(opt);
  SetFamily upper = parse_family(read_file(opt.bplus_file), p.universe());
  SetFamily lower = parse_family(read_file(opt.bminus_file), p.universe());
  auto inst = DualInstance::make(std::move(p), std::move(upper));
  bool ok = check_dual(inst, lower, opt.cap);
  std::cout << "dual: " << (ok ? "yes" : "no") << "\n";
  return ok ? 0 : 1;
}

int cmd_reduce(const Options& opt) {
  auto inst = ITransInstance::make(load_hypergraph(opt), load_poset(opt));
  ReduceTarget target;
  if (opt.target == "bipartite") target = ReduceTarget::bipartite;
  else if (opt.target == "split") target = ReduceTarget::split;
  else if (opt.target == "cobipartite") target = ReduceTarget::cobipartite;
  else fail(ErrorKind::InvalidParams, "target must be bipartite|split|cobipartite");
  ReductionArtifact art = reduce(inst, target);
  write_file(opt.out_prefix + ".graph", format_graph(art.instance.graph));
  write_file(opt.out_prefix + ".poset", format_poset(art.instance.poset));
  std::string manifest;
  for (const auto& line : exception_manifest(art)) manifest += line + "\n";
  write_file(opt.out_prefix + ".exceptions", manifest);
  std::cout << "wrote: " << opt.out_prefix << ".graph\n"
            << "wrote: " << opt.out_prefix << ".poset\n"
            << "wrote: " << opt.out_prefix << ".exceptions\n";
  return 0;
}

int cmd_oracle(const Options& opt) {
  if (!opt.bplus_file.empty()) {
    Poset p = load_poset(opt);
    SetFamily upper = parse_family(read_file(opt.bplus_file), p.universe());
    auto inst = DualInstance::make(std::move(p), std::move(upper));
    print_family(dual_enum_oracle(inst, opt.cap), inst.poset.universe());
    return 0;
  }
  if (!opt.graph_file.empty()) {
    auto inst = IDomInstance::make(load_graph(opt), load_poset(opt));
    print_family(idom_enum_oracle(inst, opt.cap), inst.poset.universe());
    return 0;
  }
  if (!opt.hypergraph_file.empty()) {
    auto inst = ITransInstance::make(load_hypergraph(opt), load_poset(opt));
    print_family(itrans_enum_oracle(inst, opt.cap), inst.poset.universe());
    return 0;
  }
  fail(ErrorKind::InvalidParams, "oracle needs --bplus, --hypergraph or --graph");
}

int cmd_gen(const Options& opt) {
  Rng rng(opt.seed);
  auto out_poset = [&](const Poset& p) {
    write_file(opt.out_prefix + ".poset", format_poset(p));
    std::cout << "wrote: " << opt.out_prefix << ".poset\n";
  };
  auto out_hyper = [&](const Hypergraph& h) {
    write_file(opt.out_prefix + ".hypergraph", format_hypergraph(h));
    std::cout << "wrote: " << opt.out_prefix << ".hypergraph\n";
  };
  auto out_graph = [&](const Graph& g) {
    write_file(opt.out_prefix + ".graph", format_graph(g));
    std::cout << "wrote: " << opt.out_prefix << ".graph\n";
  };
  auto out_family = [&](const SetFamily& fam, const Universe& u) {
    write_file(opt.out_prefix + ".family", format_family(fam, u));
    std::cout << "wrote: " << opt.out_prefix << ".family\n";
  };

  if (opt.kind == "poset") {
    out_poset(random_poset(rng, opt.n, opt.p));
  } else if (opt.kind == "hypergraph") {
    out_hyper(random_hypergraph(rng, opt.n, opt.m, opt.k));
  } else if (opt.kind == "itrans") {
    auto inst = random_itrans(rng, opt.n, opt.m, opt.k, opt.p);
    out_hyper(inst.hyper);
    out_poset(inst.poset);
  } else if (opt.kind == "dual") {
    auto inst = random_dual(rng, opt.n, opt.m, opt.p);
    out_poset(inst.poset);
    out_family(inst.upper, inst.poset.universe());
  } else if (opt.kind == "split-ni") {
    SplitGenParams params;
    params.clique = opt.n;
    params.independent = opt.m;
    params.cross_prob = opt.p;
    params.relation_prob = opt.q;
    params.prefix_fraction = opt.prefix_fraction;
    auto inst = random_split_ni(rng, params);
    out_graph(inst.graph);
    out_poset(inst.poset);
  } else if (opt.kind == "trianglefree-weakni") {
    TriangleFreeGenParams params;
    params.core = opt.n;
    params.pendants = opt.m;
    params.edge_tries = opt.tries == 0 ? 2 * opt.n : opt.tries;
    auto inst = random_trianglefree_weakni(rng, params);
    out_graph(inst.graph);
    out_poset(inst.poset);
  } else if (opt.kind == "bipartite-ni") {
    auto inst = random_bipartite_ni(rng, opt.n, opt.m, opt.p, opt.q);
    out_graph(inst.graph);
    out_poset(inst.poset);
  } else if (opt.kind == "cobipartite-ni") {
    auto inst = random_cobipartite_ni(rng, opt.n, opt.m, opt.p, opt.q);
    out_graph(inst.graph);
    out_poset(inst.poset);
  } else {
    fail(ErrorKind::InvalidParams,
         "kind must be poset|hypergraph|itrans|dual|split-ni|trianglefree-weakni|"
         "bipartite-ni|cobipartite-ni");
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"dualization in lattices of poset ideals"};
  app.require_subcommand(1);
  Options opt;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--cap", opt.cap, "element cap for full ideal enumeration");
    cmd->add_option("--trans-cap", opt.trans_cap, "intermediate transversal family cap");
    cmd->add_flag("--allow-reserved", opt.allow_reserved,
                  "accept '_'-prefixed tokens in inputs");
  };

  auto* dualize = app.add_subcommand("dualize", "minimal ideals escaping an upper family");
  dualize->add_option("--poset", opt.poset_file)->required();
  dualize->add_option("--bplus", opt.bplus_file)->required();
  dualize->add_option("--solver", opt.solver, "auto|oracle|generic");
  add_common(dualize);

  auto* itrans = app.add_subcommand("itrans", "minimal transversal-ideals");
  itrans->add_option("--hypergraph", opt.hypergraph_file)->required();
  itrans->add_option("--poset", opt.poset_file)->required();
  itrans->add_option("--solver", opt.solver, "auto|oracle|generic");
  add_common(itrans);

  auto* idom = app.add_subcommand("idom", "minimal dominating-ideals");
  idom->add_option("--graph", opt.graph_file)->required();
  idom->add_option("--poset", opt.poset_file)->required();
  idom->add_option("--solver", opt.solver, "auto|oracle|generic|split|trianglefree");
  idom->add_flag("--delay-stats", opt.delay_stats, "print split-solver delay counters");
  idom->add_option("--dump-reduced", opt.dump_reduced,
                   "prefix for the contracted instance files (trianglefree solver)");
  add_common(idom);

  auto* check = app.add_subcommand("check-dual", "verify a dual pair");
  check->add_option("--poset", opt.poset_file)->required();
  check->add_option("--bplus", opt.bplus_file)->required();
  check->add_option("--bminus", opt.bminus_file)->required();
  add_common(check);

  auto* reduce_cmd = app.add_subcommand("reduce", "rebuild as a dominating-ideal instance");
  reduce_cmd->add_option("--hypergraph", opt.hypergraph_file)->required();
  reduce_cmd->add_option("--poset", opt.poset_file)->required();
  reduce_cmd->add_option("--target", opt.target, "bipartite|split|cobipartite")->required();
  reduce_cmd->add_option("--out", opt.out_prefix, "output file prefix");
  add_common(reduce_cmd);

  auto* gen = app.add_subcommand("gen", "write seeded random instances");
  gen->add_option("--kind", opt.kind)->required();
  gen->add_option("--seed", opt.seed);
  gen->add_option("--out", opt.out_prefix, "output file prefix");
  gen->add_option("--n", opt.n, "primary size");
  gen->add_option("--m", opt.m, "secondary size");
  gen->add_option("--k", opt.k, "max hyperedge size");
  gen->add_option("--p", opt.p, "edge probability");
  gen->add_option("--q", opt.q, "order relation probability");
  gen->add_option("--prefix-fraction", opt.prefix_fraction,
                  "fraction of nested independent neighborhoods (split-ni)");
  gen->add_option("--tries", opt.tries, "edge insertion attempts (trianglefree-weakni)");

  auto* oracle = app.add_subcommand("oracle", "reference solver on any instance kind");
  oracle->add_option("--poset", opt.poset_file)->required();
  oracle->add_option("--bplus", opt.bplus_file);
  oracle->add_option("--hypergraph", opt.hypergraph_file);
  oracle->add_option("--graph", opt.graph_file);
  add_common(oracle);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (dualize->parsed()) return cmd_dualize(opt);
    if (itrans->parsed()) return cmd_itrans(opt);
    if (idom->parsed()) return cmd_idom(opt);
    if (check->parsed()) return cmd_check_dual(opt);
    if (reduce_cmd->parsed()) return cmd_reduce(opt);
    if (gen->parsed()) return cmd_gen(opt);
    if (oracle->parsed()) return cmd_oracle(opt);
  } catch (const latdual::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
