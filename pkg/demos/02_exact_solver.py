"""The exact solver versus the brute-force oracle.

Enumerates every legal position of the size-2 board and confirms the
memoized search and the plain minimax always agree, then shows a
one-ply winning trap. Run: python3 demos/02_exact_solver.py
"""

import itertools

from atroposk.lattice import Board, Color, Coord, make_board
from atroposk.rules import Move, apply, new_game
from atroposk.solver import brute_force_solve, solve

board0 = make_board(2)
geo = board0.geometry
interior = list(geo.interior_ids)

agree = wins = 0
for coloring in itertools.product((0, 1, 2, 3), repeat=len(interior)):
    buf = bytearray(board0.colors)
    for nid, c in zip(interior, coloring):
        buf[nid] = c
    candidate = Board(2, bytes(buf))
    if candidate.uncolored_count() == 0:
        continue
    for last in [None] + [geo.id_to_coord(n) for n, c in zip(interior, coloring) if c]:
        try:
            state = new_game(candidate, k=1, last=last)
        except Exception:
            break
        fast, slow = solve(state), brute_force_solve(state)
        assert fast.winner_is_mover == slow
        agree += 1
        wins += fast.winner_is_mover
print(f"size-2 board: {agree} legal states checked, solver == oracle on all; "
      f"{wins} are first-player wins")

# the mover traps the opponent: after 1 1 G the only reply completes a rainbow
state = new_game(
    Board(2, bytes(bytearray(board0.colors)))
    .with_color_id(geo.coord_to_id(Coord(2, 1)), Color.BLUE),
    k=1, last=Coord(2, 1),
)
result = solve(state)
print(f"trap position: mover wins = {result.winner_is_mover}, "
      f"winning move = {result.best_move}")
after = apply(state, result.best_move)
print(f"after the trap, the opponent is lost: {not solve(after).winner_is_mover}")
