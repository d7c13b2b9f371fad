"""Affine quandles on Z^n: the displacement group is an integer lattice.

For x <| y = t(x - y) + y with t unimodular, products s_y s_0^-1 are pure
translations and together they span the lattice generated by the columns
of 1 - t^-1.  Connected components are exactly its cosets, so the
component count is |det(1 - t^-1)| whenever that determinant is nonzero.
"""

from quandles import build_ball, displacement_action, ends_estimate, galex_lattice

CASES = {
    "negation on Z": [[-1]],
    "quarter turn": [[0, -1], [1, 0]],
    "shear": [[1, 1], [0, 1]],
    "fibonacci": [[0, 1], [1, 1]],
    "identity": [[1, 0], [0, 1]],
}

for name, rows in CASES.items():
    q = galex_lattice(rows)
    lat = q.displacement_lattice()
    print(f"{name}: t = {rows}")
    print("  lattice basis columns:", lat.basis, " rank:", lat.rank)
    print("  index in Z^n:", lat.index_in_ambient())
    window = q.elements_window(3)
    census = {}
    for x in window:
        census[q.component_key(x)] = census.get(q.component_key(x), 0) + 1
    print(f"  components meeting the window (radius 3): {len(census)}")
    if len(census) <= 4:
        for key, count in sorted(census.items()):
            print(f"    representative {q.key(key)}: {count} points")
    print()

# the quarter-turn quandle up close: its displacement graph is a plane
q = galex_lattice([[0, -1], [1, 0]])
ball = build_ball(displacement_action(q), (0, 0), 12)
print("quarter turn displacement ball radius 12:")
print("  sphere sizes:", ball.sphere_sizes()[:8], "...")
print("  ends estimate:", ends_estimate(ball, 4), "(a plane has one end)")
d = ball.distance("(0,0)", "(2,0)")
print("  certified distance from (0,0) to (2,0):", d)
