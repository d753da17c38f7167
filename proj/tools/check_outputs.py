#!/usr/bin/env python3
"""Validate CLI JSON against schemas/ and parse CLI DOT output."""
import json
import pathlib
import subprocess
import sys

SKIP = 77

try:
    import jsonschema
    import pydot
except ImportError as e:
    print(f"skipping: {e}")
    sys.exit(SKIP)

BIN = sys.argv[1]
SCHEMAS = pathlib.Path(sys.argv[2])

JSON_CASES = [
    ("dims", "dims --N 3 --max-cells 6 --json --float 10"),
    ("dims", "dims --max-cells 4 --json"),
    ("graph", "graph --N 3 --json"),
    ("graph", "graph --depth 4 --json"),
    ("orbits", "orbits --N 4 --k 2 --json"),
    ("indices", "indices --N 8 --json"),
    ("indices", "fuse indices --N 5 --m 2 --json"),
    ("group", "fusion group --N 5 --json"),
    ("equivariant", "fusion equivariant --N 3 --json"),
    ("simples", "fuse simples --N 3 --k 1 --l 0 --json"),
    ("simples", "fuse simples --N 3 --k 1 --l 1 --json"),
    ("branch", "fuse branch --N 3 --k 1 --l 0 --json"),
    ("gram", "skein gram --boxes 2"),
    ("gram", "skein gram --boxes 3 --N 2"),
    ("tower", "tower build --boxes 2"),
    ("tower", "tower build --boxes 3 --N 2"),
    ("bratteli", "tower bratteli --boxes 3 --json"),
    ("bratteli", "tower bratteli --boxes 3 --N 3 --json"),
    ("certify", "tower certify --boxes 3 --N 2"),
    ("verify", "verify yang-baxter --json"),
    ("verify", "verify local --boxes 3 --corrected --json"),
    ("error", "skein trace --boxes 3 h1h3"),
    ("error", "dims --N -2"),
    ("error", "tower build --boxes 9"),
    ("error", "skein eval x(1,2,1,2)"),
]

DOT_CASES = [
    "graph --N 3 --dot",
    "graph --depth 4 --dot",
    "fusion equivariant --N 3",
    "fuse branch --N 3 --k 1 --l 0 --dot",
    "tower bratteli --boxes 3 --dot",
    "tower bratteli --boxes 3 --N 2 --dot",
]


def run(args):
    p = subprocess.run([BIN, *args.split()], capture_output=True, text=True)
    return p.returncode, p.stdout if p.stdout.strip() else p.stderr


failures = 0
for name, args in JSON_CASES:
    schema = json.loads((SCHEMAS / f"{name}.schema.json").read_text())
    code, out = run(args)
    try:
        jsonschema.validate(json.loads(out), schema)
        ok = (code != 0) == (name == "error")
    except (json.JSONDecodeError, jsonschema.ValidationError) as e:
        print(f"  {e}".splitlines()[0])
        ok = False
    print(f"{'ok  ' if ok else 'FAIL'} json {name}: {args}")
    failures += not ok

for args in DOT_CASES:
    code, out = run(args)
    graphs = pydot.graph_from_dot_data(out) if code == 0 else None
    ok = bool(graphs) and len(graphs[0].get_nodes()) + len(graphs[0].get_edges()) > 0
    print(f"{'ok  ' if ok else 'FAIL'} dot: {args}")
    failures += not ok

sys.exit(1 if failures else 0)
