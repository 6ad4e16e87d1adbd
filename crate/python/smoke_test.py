#!/usr/bin/env python3
"""Smoke test for the n2kit_py extension module.

Build the bindings first (cargo build -p n2kit-py), then run this script
with the same Python the build picked up.
"""

import json
import pathlib
import shutil
import sys
import tempfile

ROOT = pathlib.Path(__file__).resolve().parents[1]


def find_library() -> pathlib.Path:
    for profile in ("release", "debug"):
        candidate = ROOT / "target" / profile / "libn2kit_py.so"
        if candidate.exists():
            return candidate
    sys.exit("libn2kit_py.so not found; run: cargo build -p n2kit-py")


def main() -> None:
    staging = pathlib.Path(tempfile.mkdtemp(prefix="n2kit-py-"))
    shutil.copy(find_library(), staging / "n2kit_py.so")
    sys.path.insert(0, str(staging))
    import n2kit_py

    assert n2kit_py.__version__

    report = json.loads(n2kit_py.classify(1, 1))
    assert report["schema"] == 1
    assert report["verdict"] == "pass"
    assert report["payload"]["central_charge"] == "1/1"
    assert len(report["payload"]["w_set"]) == 3
    assert report["payload"]["d_curves"] is None

    assert n2kit_py.central_charge(1, 2) == "3/5"
    points = n2kit_py.w_points(1, 2)
    assert len(points) == 10
    assert points[0] == ("1/2", "1/2", "0/1", "0/1")

    search = json.loads(n2kit_py.singular_search("0", "0", "1", "1/2", 1))
    assert search["payload"]["solution_dim"] == 1
    assert search["payload"]["sound"] is True

    table = json.loads(n2kit_py.dims("3/7", "-2/5", "11/3", "2"))
    assert table["payload"]["all_agree"] is True
    by_grade = {
        (row["level"], row["charge"]): row["dim_enumerated"]
        for row in table["payload"]["rows"]
    }
    assert by_grade[("2/1", 0)] == n2kit_py.verma_graded_dim("2", 0)

    audit = json.loads(n2kit_py.verify(1, cutoff="3"))
    assert audit["verdict"] == "pass"
    assert audit["payload"]["explicit_vector"]["ok"] is True

    try:
        n2kit_py.singular_search("bad", "0", "1", "1/2", 1)
    except ValueError as err:
        assert "h:" in str(err)
    else:
        sys.exit("malformed rational was accepted")

    print("n2kit_py smoke test: all checks passed")


if __name__ == "__main__":
    main()
