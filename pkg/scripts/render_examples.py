#!/usr/bin/env python3
"""Render the bundled example posets and their edge posets as DOT files
(pipe through `dot -Tpng` to draw them)."""

import argparse
import pathlib
import sys

import edgeposets as ep
from edgeposets.catalog import fig1_poset, fig2_poset


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--outdir", default="diagrams")
    args = ap.parse_args()
    outdir = pathlib.Path(args.outdir)
    outdir.mkdir(parents=True, exist_ok=True)

    posets = {
        "fig1": fig1_poset(),
        "fig2": fig2_poset(),
        "b3": ep.boolean_algebra(3),
    }
    for name, P in sorted(posets.items()):
        (outdir / f"{name}.dot").write_text(ep.poset_to_dot(P, name))
        (outdir / f"{name}_edge.dot").write_text(
            ep.poset_to_dot(ep.edge_poset(P).poset, f"{name}_edge")
        )
        (outdir / f"{name}_h.dot").write_text(
            ep.poset_to_dot(ep.h_poset(P).poset, f"{name}_h")
        )
        print(f"wrote {name}.dot, {name}_edge.dot, {name}_h.dot")
    return 0


if __name__ == "__main__":
    sys.exit(main())
