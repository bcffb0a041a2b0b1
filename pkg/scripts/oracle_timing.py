"""Time the production product against the tableau oracle, box by box."""

import argparse
import time

from schubcon.partitions import Box, enumerate_partitions
from schubcon.schubert_ring import SchubertClass, lr_oracle, multiply


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-cells", type=int, default=12)
    args = ap.parse_args()
    total_fast = total_oracle = 0.0
    for d in range(args.max_cells):
        for w in range(1, args.max_cells + 1):
            if (d + 1) * w > args.max_cells:
                continue
            box = Box(d, w)
            parts = enumerate_partitions(box)
            t0 = time.perf_counter()
            fast = [multiply(SchubertClass.basis(a), SchubertClass.basis(b)) for a in parts for b in parts]
            t1 = time.perf_counter()
            slow = [lr_oracle(a, b) for a in parts for b in parts]
            t2 = time.perf_counter()
            assert fast == slow, box
            total_fast += t1 - t0
            total_oracle += t2 - t1
            print(f"{str(box):>12}  pairs={len(parts) ** 2:5d}  multiply={t1 - t0:7.3f}s  oracle={t2 - t1:7.3f}s")
    print(f"total  multiply={total_fast:.2f}s  oracle={total_oracle:.2f}s")


if __name__ == "__main__":
    main()
