#!/usr/bin/env python3
"""Regenerate the bundled polytope fixtures from the SageMath reflexive polytope database.

The database files (reflexive_polytopes_2d, reflexive_polytopes_3d) ship in the
share/reflexive_polytopes directory of a SageMath install, or inside the
passagemath-polyhedra wheel under sage_wheels/share/reflexive_polytopes/.
Polytope ids are 0-based positions in those files, matching
ReflexivePolytope(dim, id) in SageMath.

    python3 tools/regenerate_fixtures.py /path/to/reflexive_polytopes [--full3d]
"""
import argparse
import pathlib

# Every id that appears in the three-dimensional mirror kernel pair tables.
TABLE_IDS = sorted({
    0, 4311, 8, 3313, 427, 429,
    2, 4317, 85, 3726, 741, 1943,
    1, 4281, 742, 743, 744,
    9, 4312, 428, 3315, 430, 3312, 431, 3314,
    88, 4318, 1946, 3725,
    31, 4255,
    89, 4228, 1944, 1948, 1947,
    745, 4282,
    87, 3727,
    1949, 4229,
    1114, 3993,
    4080,
    86, 1945,
    3038,
    3, 4283, 753, 754,
    10, 4314, 433, 3316, 436, 3321,
})


def read_palp(path):
    lines = [l for l in pathlib.Path(path).read_text().splitlines() if l.strip()]
    out, i = [], 0
    while i < len(lines):
        rows, cols = map(int, lines[i].split()[:2])
        i += 1
        block = [list(map(int, lines[i + j].split())) for j in range(rows)]
        i += rows
        # PALP stores either one point per row or one coordinate per row.
        out.append([list(c) for c in zip(*block)] if rows < cols else block)
    return out


def write(path, header, records):
    with open(path, "w") as f:
        f.write(header)
        for pid, verts in records:
            f.write(f"\n{pid} {len(verts[0])} {len(verts)}\n")
            for v in verts:
                f.write(" ".join(str(x) for x in v) + "\n")


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("dbdir")
    ap.add_argument("--out", default=pathlib.Path(__file__).resolve().parent.parent / "fixtures")
    ap.add_argument("--full3d", action="store_true", help="also write all 4319 three-dimensional polytopes")
    args = ap.parse_args()
    db2 = read_palp(pathlib.Path(args.dbdir) / "reflexive_polytopes_2d")
    db3 = read_palp(pathlib.Path(args.dbdir) / "reflexive_polytopes_3d")
    out = pathlib.Path(args.out)
    write(out / "polygons2d.txt",
          "# All 16 two-dimensional reflexive polygons (SageMath database numbering).\n"
          "# Record format: id dim nvertices, then one vertex per line.\n",
          list(enumerate(db2)))
    write(out / "tables3d.txt",
          "# Three-dimensional reflexive polytopes occurring in the mirror kernel pair tables\n"
          "# (SageMath database numbering). Record format: id dim nvertices, then one vertex per line.\n",
          [(i, db3[i]) for i in TABLE_IDS])
    if args.full3d:
        write(out / "full3d.txt", "# All 4319 three-dimensional reflexive polytopes.\n", list(enumerate(db3)))


if __name__ == "__main__":
    main()
