"""render_figures: batch-render figure CSV tables from a directory.

Reads ``<csv-dir>/<figN>.csv`` for each requested figure and writes
``<out-dir>/<figN>.png``.  Exit codes: 0 success, 2 on missing files or
schema mismatches.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import Optional, Sequence

from .render import EXPECTED_HEADERS, SchemaError, default_spec, render


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="render_figures", description=__doc__.splitlines()[0])
    p.add_argument("--csv-dir", required=True, help="directory holding figN.csv files")
    p.add_argument("--out-dir", required=True, help="directory for the rendered images")
    p.add_argument(
        "--figures",
        default=",".join(sorted(EXPECTED_HEADERS)),
        help="comma-separated figure ids (default: all)",
    )
    return p


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    csv_dir = Path(args.csv_dir)
    out_dir = Path(args.out_dir)
    figure_ids = [f.strip() for f in args.figures.split(",") if f.strip()]
    unknown = [f for f in figure_ids if f not in EXPECTED_HEADERS]
    if unknown:
        print(f"render_figures: unknown figure ids {unknown}", file=sys.stderr)
        return 2
    for figure_id in figure_ids:
        spec = default_spec(figure_id, csv_dir / f"{figure_id}.csv", out_dir / f"{figure_id}.png")
        try:
            out = render(spec)
        except SchemaError as exc:
            print(f"render_figures: {exc}", file=sys.stderr)
            return 2
        print(f"wrote {out}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
