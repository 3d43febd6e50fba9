"""Roundtrip error and timing of the full-depth periodic transform by signal length.

Prints a table to stdout; pass --json for machine-readable rows.
"""
import argparse
import sys

from mrawave.experiments import ReconstructionTiming, add_arguments, from_namespace
from mrawave.reports import dumps


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    add_arguments(parser, ReconstructionTiming)
    parser.add_argument("--json", action="store_true")
    args = parser.parse_args(argv)
    config = from_namespace(ReconstructionTiming, args)
    rows = config.run()
    if args.json:
        print(dumps({"config": vars(config), "rows": rows}))
        return 0
    keys = list(rows[0])
    print("  ".join(f"{k:>14}" for k in keys))
    for row in rows:
        print("  ".join(f"{v:>14.4g}" if isinstance(v, float) else f"{v!s:>14}"
                        for v in row.values()))
    return 0


if __name__ == "__main__":
    sys.exit(main())
