#!/usr/bin/env python3
"""
Searching for a game that falsifies a formula
=============================================

A formula that is not derivable may still hold in every small game, so a
bounded search is the honest tool: it either produces a concrete game in
which the formula fails, or reports how much of the space it covered.
"""

from gamedep import (
    SearchBounds,
    builtin_graph,
    find_counterexample,
    holds,
    parse_formula,
    print_game,
)

# on the near-complete square (all edges except a-d), a |> d does not
# force b,c |> d; the seeded random search finds a witness quickly
graph = builtin_graph("gamma2")
formula = parse_formula("a |> d -> b,c |> d", graph)
game = find_counterexample(graph, formula, SearchBounds())
print("found a counterexample game:\n")
print(print_game(game))
print("antecedent holds:", holds(game, formula.antecedent))
print("consequent holds:", holds(game, formula.consequent))

# a reflexive atom can never fail, so the search exhausts its budget;
# systematic mode walks all games shape by shape instead of sampling
bounds = SearchBounds(max_strategies=2, mode="systematic", max_profiles=2000)
outcome = find_counterexample(graph, parse_formula("a |> a", graph), bounds)
print("\nrefuting a |> a:", outcome)
