#!/usr/bin/env python3
"""
Pure Nash equilibria of the built-in games
==========================================

Every game lives on a dependency graph: a player's payoff may read only
its own strategy and those of its graph neighbours.  Equilibria are found
by exhaustively checking unilateral deviations.
"""

from gamedep import builtin_game, enumerate_equilibria, print_game

# a 2x2 coordination game on a single edge: both players are rewarded
# exactly when their choices match
game = builtin_game("coordination")
print(print_game(game))

for profile in enumerate_equilibria(game):
    print("equilibrium:", " ".join(
        f"{p}={s}" for p, s in zip(game.graph.players, profile)))

# the three-player parity game on a triangle: everyone is rewarded when
# the sum of the chosen bits is even; four of the eight profiles qualify
parity = builtin_game("parity")
print("\nparity equilibria:")
for profile in enumerate_equilibria(parity):
    print(" ", profile)

# a modular-arithmetic game on the path a-b-c-d: the inner players want
# their number to be the average of their neighbours' modulo 5; the
# equilibria are exactly the arithmetic progressions modulo 5
mean5 = builtin_game("gamma1_mean_mod(5)")
progressions = enumerate_equilibria(mean5)
print(f"\nmean-mod-5 game has {len(progressions)} equilibria, e.g.")
for profile in progressions[:5]:
    print(" ", profile)
