#!/usr/bin/env python3
"""Plot the x,f,fhat CSV files written by `signlab transform` and the
r,slack_t,feasible trace files written by `signlab search`.

Usage:
  tools/plot_csv.py out.csv [more.csv ...] [-o plot.png]

Column layout is auto-detected from the header line.  With no -o flag the
plot opens interactively (requires a display).
"""

import argparse
import csv
import sys


def read_csv(path):
    with open(path, newline="") as fh:
        rows = list(csv.reader(fh))
    header, body = rows[0], rows[1:]
    cols = {name: [] for name in header}
    for row in body:
        for name, cell in zip(header, row):
            cols[name].append(float(cell))
    return header, cols


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("files", nargs="+", help="CSV files to plot")
    ap.add_argument("-o", "--out", help="write a PNG instead of showing")
    args = ap.parse_args()

    import matplotlib

    if args.out:
        matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    fig, ax = plt.subplots(figsize=(8, 5))
    for path in args.files:
        header, cols = read_csv(path)
        xname = header[0]
        for yname in header[1:]:
            if yname == "feasible":
                continue  # boolean flag, not a curve
            label = f"{path}:{yname}" if len(args.files) > 1 else yname
            ax.plot(cols[xname], cols[yname], label=label)
        ax.set_xlabel(xname)
    ax.axhline(0.0, color="gray", lw=0.5)
    ax.legend()
    fig.tight_layout()
    if args.out:
        fig.savefig(args.out, dpi=150)
        print(f"wrote {args.out}")
    else:
        plt.show()
    return 0


if __name__ == "__main__":
    sys.exit(main())
