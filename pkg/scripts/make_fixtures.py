"""Write synthetic stand-ins for the sparse collection matrices.

    python3 scripts/make_fixtures.py OUTDIR [NAME ...]

Names default to all four (WEST0156 SHERMAN3 MCFE MEMPLUS).  The bundled
``src/jnt/data/west0156.mtx`` was produced with

    python3 scripts/make_fixtures.py src/jnt/data WEST0156
"""
import os
import sys

from jnt.bench.fixtures import COLLECTION_SHAPES, write_standin


def main(argv):
    if not argv:
        print(__doc__, file=sys.stderr)
        return 2
    outdir, names = argv[0], argv[1:] or list(COLLECTION_SHAPES)
    os.makedirs(outdir, exist_ok=True)
    for name in names:
        print(write_standin(name, outdir))
    return 0


if __name__ == "__main__":
    sys.exit(main(sys.argv[1:]))
