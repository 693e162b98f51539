"""Regenerate the detection-performance tables.

Writes one curves table per fading model over an SNR grid bracketing the
0 dB design point, plus a misclassification column, all from a fixed seed.
Outputs land in results/ as plain text, plot-ready.

Run from the repository root:

    python scripts/run_detection_curves.py [--trials N] [--seed S]
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "src"))

from tagspot.cli import main as cli_main

RESULTS = Path(__file__).resolve().parents[1] / "results"

SNR_GRID = "-4,-2,-1,0,1,2,4,6"
GAMMA_GRID = "0.5,0.55,0.58,0.6,0.62,0.64,0.66,0.7"


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--trials", type=int, default=200000)
    parser.add_argument("--seed", type=int, default=20260819)
    args = parser.parse_args()

    RESULTS.mkdir(exist_ok=True)
    for fading in ("wideband", "narrowband"):
        out = RESULTS / f"curves-{fading}.txt"
        rc = cli_main(
            [
                "curves",
                # = form: a grid starting with a negative number would
                # otherwise be taken for an option string
                f"--snr={SNR_GRID}",
                f"--gamma={GAMMA_GRID}",
                "--fading", fading,
                "--trials", str(args.trials),
                "--seed", str(args.seed),
                "--out", str(out),
            ]
        )
        if rc != 0:
            return rc
        print(f"wrote {out}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
