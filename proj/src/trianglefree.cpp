#include "latdual/trianglefree.hpp"

#include <algorithm>

namespace latdual {

StarDecomposition star_decompose(const Graph& g, const Poset& p) {
  if (!g.universe().same_tokens(p.universe()))
    fail(ErrorKind::GroundMismatch, "graph and poset grounds differ");
  if (!is_triangle_free(g)) fail(ErrorKind::NotTriangleFree, "graph has a triangle");
  if (!is_weak_ni_poset(g, p))
    fail(ErrorKind::NotWeakNI, "order is not weakly neighborhood-inclusion");

  const std::size_t n = g.size();
  StarDecomposition sd;
  sd.isolated = Bits(n);
  Bits busy(n);
  for (std::size_t x = 0; x < n; ++x) {
    if (p.strictly_below(x).none() && p.strictly_above(x).none()) sd.isolated.set(x);
    else busy.set(x);
  }

  // Comparability components of the non-isolated part.
  Bits seen(n);
  for (auto x = busy.find_first(); x != Bits::npos; x = busy.find_next(x)) {
    if (seen.test(x)) continue;
    Bits comp(n);
    std::vector<std::size_t> queue{x};
    comp.set(x);
    while (!queue.empty()) {
      std::size_t y = queue.back();
      queue.pop_back();
      Bits reach = (p.strictly_below(y) | p.strictly_above(y)) - comp;
      for (auto z = reach.find_first(); z != Bits::npos; z = reach.find_next(z)) {
        comp.set(z);
        queue.push_back(z);
      }
    }
    seen |= comp;

    // The component must be a star: one element comparable to all others,
    // everything on one side of it, branches pairwise incomparable and of
    // degree one in the graph.
    std::vector<std::size_t> members = set_indices(comp);
    std::size_t center = n;
    for (std::size_t c : members) {
      bool all = true;
      for (std::size_t z : members)
        if (z != c && !p.comparable(c, z)) {
          all = false;
          break;
        }
      if (!all) continue;
      if (members.size() > 2) {
        center = c;
        break;
      }
      // Two-element chains: orient by neighborhood inclusion, prefer the
      // upper element on ties.
      std::size_t other = members[0] == c ? members[1] : members[0];
      Bits nc = g.closed_neighborhood(c);
      Bits no = g.closed_neighborhood(other);
      if (no.is_subset_of(nc)) {
        if (no != nc || p.less(other, c)) {
          center = c;
          break;
        }
      }
    }
    if (center == n) fail(ErrorKind::StructureViolation, "component has no star center");

    Star star;
    star.center = center;
    star.branches = comp;
    star.branches.reset(center);
    bool below = star.branches.is_subset_of(p.strictly_below(center));
    bool above = star.branches.is_subset_of(p.strictly_above(center));
    if (below == above)
      fail(ErrorKind::StructureViolation, "star branches straddle the center");
    star.branches_below = below;
    for (auto b = star.branches.find_first(); b != Bits::npos;
         b = star.branches.find_next(b)) {
      Bits others = star.branches;
      others.reset(b);
      if ((p.strictly_below(b) | p.strictly_above(b)).intersects(others))
        fail(ErrorKind::StructureViolation, "star branches are comparable");
      if (g.degree(b) != 1 || !g.adjacent(b, center))
        fail(ErrorKind::StructureViolation, "star branch is not a pendant of its center");
    }
    sd.stars.push_back(std::move(star));
  }
  return sd;
}

ReducedInstance build_reduced(const Graph& g, const Poset& p, const StarDecomposition& sd) {
  Bits kept = g.universe().full_set();
  std::vector<std::size_t> rep_old, center_old;
  std::vector<Bits> original_branches;
  for (const auto& star : sd.stars) {
    // Branches share the center as their only neighbor, so they are false
    // twins and all but the first can go.
    auto rep = star.branches.find_first();
    for (auto b = star.branches.find_next(rep); b != Bits::npos;
         b = star.branches.find_next(b)) {
      if (!g.are_false_twins(rep, b))
        fail(ErrorKind::StructureViolation, "star branches are not false twins");
      kept.reset(b);
    }
    rep_old.push_back(rep);
    center_old.push_back(star.center);
    original_branches.push_back(star.branches);
  }

  Graph reduced = g.induced(kept);
  Poset rp = p.induced(kept);
  const Universe& ru = reduced.universe();
  auto to_new = [&](std::size_t old) { return ru.index_of(g.universe().token(old)); };
  std::vector<std::size_t> centers, branch_reps;
  for (std::size_t i = 0; i < rep_old.size(); ++i) {
    branch_reps.push_back(to_new(rep_old[i]));
    centers.push_back(to_new(center_old[i]));
  }
  Bits isolated(ru.size());
  for (auto x = sd.isolated.find_first(); x != Bits::npos; x = sd.isolated.find_next(x))
    isolated.set(to_new(x));

  // Center-center edges are redundant: on each side the degree-one branch has
  // a closed neighborhood inside its center's even after the removal.  Verify
  // before every removal.
  std::vector<std::pair<std::size_t, std::size_t>> removed_center_edges;
  for (std::size_t i = 0; i < centers.size(); ++i)
    for (std::size_t j = i + 1; j < centers.size(); ++j) {
      std::size_t ui = centers[i], uj = centers[j];
      if (!reduced.adjacent(ui, uj)) continue;
      Graph after = reduced.remove_edge(ui, uj);
      if (!after.closed_neighborhood(branch_reps[i])
               .is_subset_of(after.closed_neighborhood(ui)) ||
          !after.closed_neighborhood(branch_reps[j])
               .is_subset_of(after.closed_neighborhood(uj)))
        fail(ErrorKind::StructureViolation, "center edge is not redundant");
      reduced = std::move(after);
      removed_center_edges.emplace_back(ui, uj);
    }

  std::vector<std::size_t> chain_mins;
  for (std::size_t i = 0; i < centers.size(); ++i) {
    std::size_t u = centers[i], v = branch_reps[i];
    if (!rp.comparable(u, v))
      fail(ErrorKind::StructureViolation, "star chain lost its comparability");
    chain_mins.push_back(rp.less(v, u) ? v : u);
  }

  // Matching shape: each center-branch pair is an edge, with no edges between
  // pairs and none from branches to the isolated part.
  for (std::size_t i = 0; i < centers.size(); ++i) {
    if (!reduced.adjacent(centers[i], branch_reps[i]))
      fail(ErrorKind::StructureViolation, "star chain lost its edge");
    if (reduced.degree(branch_reps[i]) != 1)
      fail(ErrorKind::StructureViolation, "branch representative gained neighbors");
    for (std::size_t j = 0; j < centers.size(); ++j)
      if (i != j && (reduced.adjacent(centers[i], centers[j]) ||
                     reduced.adjacent(centers[i], branch_reps[j])))
        fail(ErrorKind::StructureViolation, "star chains are not an induced matching");
  }

  Bits targets = isolated;
  for (std::size_t w : chain_mins) targets -= reduced.closed_neighborhood(w);
  return ReducedInstance{std::move(reduced),
                         std::move(rp),
                         std::move(isolated),
                         std::move(centers),
                         std::move(branch_reps),
                         std::move(chain_mins),
                         std::move(targets),
                         std::move(removed_center_edges),
                         g.universe_ptr(),
                         std::move(original_branches),
                         std::move(kept)};
}

SetFamily minimal_subset_dominators(const Graph& g, const Bits& targets,
                                    const TransversalCaps& caps) {
  SetFamily hoods;
  for (auto w = targets.find_first(); w != Bits::npos; w = targets.find_next(w))
    hoods.push_back(g.closed_neighborhood(w));
  hoods = minimal_sets(std::move(hoods));
  if (hoods.empty()) return {Bits(g.size())};
  return transversal_enum(Hypergraph(g.universe_ptr(), std::move(hoods)), caps);
}

Bits lift_solution(const ReducedInstance& ri, const Bits& dstar) {
  if (!ri.graph.is_minimal_dominating(dstar, ri.targets))
    fail(ErrorKind::NotAValidDStar, "not a minimal dominator of the reduced targets");
  Bits d = dstar;
  Bits covered = ri.graph.closed_neighborhood(dstar);
  for (std::size_t i = 0; i < ri.branch_reps.size(); ++i)
    if (!covered.test(ri.branch_reps[i])) d.set(ri.chain_mins[i]);
  return ri.poset.down_closure(d);
}

Bits expand_solution(const ReducedInstance& ri, const Bits& reduced_sol) {
  const Universe& ru = ri.graph.universe();
  const Universe& ou = *ri.original_universe;
  Bits out(ou.size());
  for (auto x = reduced_sol.find_first(); x != Bits::npos; x = reduced_sol.find_next(x))
    out.set(ou.index_of(ru.token(x)));
  for (std::size_t i = 0; i < ri.branch_reps.size(); ++i)
    if (reduced_sol.test(ri.branch_reps[i])) out |= ri.original_branches[i];
  return out;
}

SetFamily enumerate_trianglefree(const Graph& g, const Poset& p,
                                 const TransversalCaps& caps) {
  StarDecomposition sd = star_decompose(g, p);
  ReducedInstance ri = build_reduced(g, p, sd);
  SetFamily out;
  for (const auto& dstar : minimal_subset_dominators(ri.graph, ri.targets, caps))
    out.push_back(expand_solution(ri, lift_solution(ri, dstar)));
  canonicalize_family(out);
  return out;
}

}  // namespace latdual
