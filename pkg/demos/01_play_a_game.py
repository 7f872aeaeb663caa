"""A first game of Atropos-k, move by move.

Creates the classic size-7 board, shows how the distance-k window shrinks
the options after the opening, and lets the exact solver finish a small
endgame. Run: python3 demos/01_play_a_game.py
"""

from atroposk.lattice import Color, Coord, make_board
from atroposk.rules import Move, StatusKind, apply, legal_targets, new_game, safe_colors
from atroposk.solver import solve

board = make_board(7)
state = new_game(board, k=2)
print(f"size-7 board: {board.uncolored_count()} uncolored interior nodes")
print(f"opening targets: {len(legal_targets(state))} (anywhere)")

state = apply(state, Move(Coord(4, 3), Color.GREEN))
print(f"\nhero played 4 3 G; adversary now sees {len(legal_targets(state))} "
      "targets inside the distance-2 window")

for node in sorted(legal_targets(state))[:5]:
    print(f"  {node!r}: safe colors {sorted(c.letter for c in safe_colors(state, node))}")

# a tight endgame on the smallest board: every opening move loses immediately
tiny = new_game(make_board(1), k=2)
result = solve(tiny)
print(f"\nsize-1 board: mover wins? {result.winner_is_mover} "
      f"({result.nodes_explored} nodes searched)")
first = next(iter(legal_targets(tiny)))
done = apply(tiny, Move(first, Color.RED))
assert done.status.kind is StatusKind.WON
print(f"after the forced move, winner: {done.status.winner.value} "
      f"(rainbow at node ids {done.status.rainbow})")
