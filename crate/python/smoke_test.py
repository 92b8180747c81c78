#!/usr/bin/env python3
"""Smoke test for the symspec_py extension module.

Builds the cdylib with cargo (unless --no-build is given), stages it under a
temp directory as an importable extension, and runs a handful of end-to-end
checks: unit spectral gap for initial reversals, the Schreier coset spectrum,
property (A), the branching lower bound and JSON round-tripping.

Usage: python3 python/smoke_test.py [--no-build]
"""

import math
import shutil
import subprocess
import sys
import tempfile
from pathlib import Path

ROOT = Path(__file__).resolve().parent.parent


def stage_module(build: bool):
    if build:
        subprocess.run(
            ["cargo", "build", "--release", "-p", "symspec-py"],
            cwd=ROOT,
            check=True,
        )
    candidates = [
        ROOT / "target" / "release" / "libsymspec_py.so",
        ROOT / "target" / "release" / "libsymspec_py.dylib",
        ROOT / "target" / "debug" / "libsymspec_py.so",
        ROOT / "target" / "debug" / "libsymspec_py.dylib",
    ]
    built = next((p for p in candidates if p.exists()), None)
    if built is None:
        sys.exit("no built cdylib found; run: cargo build --release -p symspec-py")
    staging = Path(tempfile.mkdtemp(prefix="symspec_py_"))
    shutil.copy(built, staging / "symspec_py.so")
    sys.path.insert(0, str(staging))


def main():
    stage_module(build="--no-build" not in sys.argv[1:])
    import symspec_py as sp

    failures = []

    def check(name, ok, detail=""):
        print(f"{'PASS' if ok else 'FAIL'} {name}" + (f" - {detail}" if detail else ""))
        if not ok:
            failures.append(name)

    # Permutation arithmetic and the composition convention.
    p = sp.Permutation([2, 1, 3])
    q = sp.Permutation([1, 3, 2])
    check("compose", p.compose(q).images == [2, 3, 1])
    check("inverse", sp.Permutation([2, 3, 1]).inverse().images == [3, 1, 2])
    r3 = sp.Permutation.initial_reversal(3, 5)
    check("initial_reversal", r3.images == [3, 2, 1, 4, 5])

    # Unit spectral gap for initial reversals.
    for n in range(3, 7):
        scan = sp.cayley_gap(sp.GroupAlgebraElement.reversals(n))
        check(f"gap-n{n}", abs(scan["gap"] - 1.0) < 1e-7, f"gap = {scan['gap']}")
    base = sp.cayley_gap(sp.GroupAlgebraElement.reversals(2))
    check("gap-n2", abs(base["gap"] - 2.0) < 1e-12)

    # Irrep-assembled spectrum agrees with the dense oracle at n = 4.
    w4 = sp.GroupAlgebraElement.reversals(4)
    assembled = sp.full_spectrum(w4)
    dense = sp.dense_spectrum(w4)
    check(
        "oracle-equivalence",
        len(assembled) == 24
        and all(abs(a - b) < 1e-7 for a, b in zip(assembled, dense)),
    )

    # Schreier coset spectrum: integers 0..8 at n = 8.
    spec = sp.schreier_spectrum(sp.GroupAlgebraElement.reversals(8))
    rounded = sorted({round(v) for v in spec})
    integral = all(abs(v - round(v)) < 1e-6 for v in spec)
    check("schreier-n8", integral and rounded == list(range(9)), f"values = {rounded}")

    # Branching lower bound, property (A), defining-representation route.
    w6 = sp.GroupAlgebraElement.reversals(6)
    check("lower-bound", abs(sp.branching_lower_bound(w6) - 1.0) < 1e-7)
    check("property-a", sp.has_property_a(w6)["holds"])
    check(
        "defining-psi-n12",
        abs(sp.psi_hook_via_defining(sp.GroupAlgebraElement.reversals(12)) - 1.0) < 1e-8,
    )

    # Partitions: the branching rule worked example and dimensions.
    downs = [tuple(b.parts) for b in sp.Partition([6, 5, 5, 3, 1]).branch_down()]
    check(
        "branch-down",
        downs == [(5, 5, 5, 3, 1), (6, 5, 4, 3, 1), (6, 5, 5, 2, 1), (6, 5, 5, 3)],
    )
    check(
        "burnside-n6",
        sum(a.dimension() ** 2 for a in sp.partitions_of(6)) == math.factorial(6),
    )

    # JSON round trip of a weighted element.
    w = sp.GroupAlgebraElement(3)
    t = sp.Permutation.transposition(1, 2, 3)
    w.add_weight(t, 0.5)
    again = sp.GroupAlgebraElement.from_json(w.to_json())
    check("json-roundtrip", again.weight(t) == 0.5 and again.degree == 3)

    # Batch verifier.
    outcome = sp.verify_all(4)
    check("verify-all-n4", outcome["all_passed"])

    print(f"\n{len(failures)} failure(s)")
    sys.exit(1 if failures else 0)


if __name__ == "__main__":
    main()
