"""Sweep covering types with five branch points and list the lattices found,
marking which of them appear in the bundled table.

    python scripts/enumerate_lattices.py --max-d 42
"""

import argparse

from dmspectrum.conditions import enumerate_types, lattice_condition, model_label
from dmspectrum.covering import is_arithmetic
from dmspectrum.dataset import surface_rows

if __name__ == "__main__":
    ap = argparse.ArgumentParser()
    ap.add_argument("--max-d", type=int, default=42)
    ap.add_argument("--n-points", type=int, default=5)
    ap.add_argument("--filter", default="sigmaint")
    args = ap.parse_args()
    known = {r.ct: r.index for r in surface_rows()}
    found = enumerate_types(args.max_d, args.n_points, args.filter)
    non_arith = 0
    for ct in found:
        rep = lattice_condition(ct)
        arith = is_arithmetic(ct)
        non_arith += not arith
        row = f"row {known[ct]}" if ct in known else ""
        print(f"{str(ct):<22} {rep.condition:<9} {model_label(rep) or '-':<7} "
              f"{'arithmetic' if arith else 'non-arithmetic':<15} {row}")
    print(f"{len(found)} types, {non_arith} non-arithmetic")
