#!/usr/bin/env python3
"""
Functional dependence between players' equilibrium strategies
==============================================================

An atom `A |> B` holds in a game when any two pure Nash equilibria that
agree on the strategies of the players in A also agree on those in B.
Formulas combine atoms with implication; `!f` abbreviates `f -> false`.
"""

from gamedep import builtin_game, depends, determined_players, holds, parse_formula

# in the coordination game each player's equilibrium choice reveals the
# other's, so dependence runs in both directions
game = builtin_game("coordination")
print("coordination: a |> b", depends(game, {"a"}, {"b"}))
print("coordination: b |> a", depends(game, {"b"}, {"a"}))

# in the 3x2 variant two of the row player's strategies pair with the
# same column, so the column no longer reveals the row
game = builtin_game("table2")
print("table2: a |> b", depends(game, {"a"}, {"b"}))
print("table2: b |> a", depends(game, {"b"}, {"a"}))

# determined_players collects everything a coalition pins down
mean5 = builtin_game("gamma1_mean_mod(5)")
print("mean-mod-5: {a,b} determine", sorted(determined_players(mean5, {"a", "b"})))

# formulas are parsed against the game's graph and evaluated classically
rps = builtin_game("gamma2_rps")
formula = parse_formula("a |> d -> b,c |> d", rps.graph)
print("matching-pennies-like game on the near-complete square:")
print("  a |> d       ", holds(rps, parse_formula("a |> d", rps.graph)))
print("  b,c |> d     ", holds(rps, parse_formula("b,c |> d", rps.graph)))
print("  the implication", holds(rps, formula))
