"""Tabulate delta(mu) against delta(mu*) over small boxes.

Prints the partitions where the two differ (dualising first gives a better
bound for those) and confirms the two expressions for delta_j agree.
"""

import argparse

from schubcon.partitions import Box, conjugate, delta, delta_j, delta_j_alternate, descent_set, enumerate_partitions


def survey(max_cells: int):
    rows, mismatches = [], 0
    for d in range(max_cells):
        for w in range(1, max_cells + 1):
            if (d + 1) * w > max_cells:
                continue
            box = Box(d, w)
            for mu in enumerate_partitions(box):
                if mu[d] >= w:
                    continue
                for j in descent_set(mu):
                    if mu[j] < w and delta_j(mu, j) != delta_j_alternate(mu, j):
                        mismatches += 1
                star = conjugate(mu)
                if star[star.box.d] >= star.box.w:
                    continue
                a, b = delta(mu), delta(star)
                if a != b:
                    rows.append((str(box), mu.parts, a, star.parts, b))
    return rows, mismatches


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-cells", type=int, default=12)
    ap.add_argument("--limit", type=int, default=20)
    args = ap.parse_args()
    rows, mismatches = survey(args.max_cells)
    print(f"alternate-formula mismatches: {mismatches}")
    print(f"partitions with delta(mu) != delta(mu*): {len(rows)}")
    for box, mu, a, star, b in rows[: args.limit]:
        print(f"  {box:>10}  mu={mu}  delta={a}   mu*={star}  delta*={b}")


if __name__ == "__main__":
    main()
