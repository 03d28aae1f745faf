#!/usr/bin/env python3
"""
Deriving dependence atoms and checking the proofs
=================================================

Four axiom schemas (Reflexivity, Augmentation, Transitivity, and the
graph-aware Contiguity rule) let dependence atoms be derived from assumed
ones without looking at any particular game.  Derivations are explicit
numbered proof objects that an independent checker re-validates step by
step.
"""

from gamedep import (
    builtin_graph,
    check_derivation,
    derive_tree,
    parse_atom,
    print_derivation,
    sparse,
    sparse_set_principle,
)

# on the path a-b-c-d, knowing that a's strategy pins d's lets the two
# middle players pin d as well: the cut {a,b}|{c,d} separates a from d,
# and only the border players can carry information across it
graph = builtin_graph("gamma1")
hyps = [parse_atom("a |> d", graph)]
tree = derive_tree(graph, hyps, {"b", "c"}, {"d"})
print(print_derivation(tree, graph))

# the checker accepts the emitted tree ...
print("checker says:", bool(check_derivation(graph, hyps, tree)))

# ... and pinpoints what is wrong with a tampered one
from gamedep import Derivation, Step

tampered = Derivation(tree.steps[:-1] + (
    Step(parse_atom("b |> d", graph), tree.steps[-1].rule),))
outcome = check_derivation(graph, hyps, tampered)
print("tampered tree:", outcome.problems)

# not everything is derivable: on the short path a-b-c, assuming a |> c
# gives the middle player no leverage at all
short = builtin_graph("gamma3")
print("\nb |> c from a |> c on a-b-c:",
      derive_tree(short, [parse_atom("a |> c", short)], {"b"}, {"c"}))

# players pairwise at distance >= 3 are "sparse"; whenever each of them
# is pinned by everyone else, the rest of the graph pins them jointly
graph5 = builtin_graph("gamma5")
members = {"a", "b", "c"}
print("\n{a,b,c} sparse in the pendant triangle:", sparse(graph5, members))
principle = sparse_set_principle(graph5, members)
print(f"joint dependence derived in {len(principle)} steps, ending with")
print(print_derivation(principle, graph5).splitlines()[-1])
