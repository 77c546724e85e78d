"""Check the log-BMY equality 3 e_orb = (K + R)^2 on seeded random weights,
for several seeds, and summarise how many samples had contracted or
parabolic pairs.

    python scripts/bmy_sweep.py --trials 500 --seeds 1 2 3
"""

import argparse

from dmspectrum.conditions import pair_profiles
from dmspectrum.euler import WeightSampler, bmy_check


def sweep(trials: int, seed: int):
    passed = contracted = parabolic = 0
    for mu in WeightSampler(seed=seed).samples(trials):
        kinds = {p.kind for p in pair_profiles(mu)}
        contracted += "contracted" in kinds
        parabolic += "parabolic" in kinds
        passed += bmy_check(mu).bmy_holds
    return passed, contracted, parabolic


if __name__ == "__main__":
    ap = argparse.ArgumentParser()
    ap.add_argument("--trials", type=int, default=200)
    ap.add_argument("--seeds", type=int, nargs="+", default=[1, 2, 3])
    args = ap.parse_args()
    ok = True
    for seed in args.seeds:
        passed, c, p = sweep(args.trials, seed)
        ok &= passed == args.trials
        print(f"seed {seed}: {passed}/{args.trials} pass, {c} contracted, {p} parabolic")
    raise SystemExit(0 if ok else 1)
