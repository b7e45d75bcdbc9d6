"""Smoke test for the compiled extension: `python python/smoke_test.py` after `maturin develop -m crates/python/Cargo.toml`."""

import json

import spin_young as sy


def main():
    row = sy.ShiftedTableau("1,2")
    e = sy.e_t(row)
    assert e * e == e.scale(sy.Scalar(4))
    print("e_t[1,2] =", e)

    for x in sy.jm_elements(3, "odd"):
        print("pi =", x)

    w = sy.TensorSpace(2, 3)
    t = sy.ShiftedTableau("1,3;2")
    print("v_t =", w.vt(t))
    print("dim R^(2,1) =", w.highest_weight_dim([2, 1]))

    reports = json.loads(sy.verify(3))
    failed = [r["check_id"] for r in reports if r["status"] == "fail"]
    print(f"{len(reports)} reports, {len(failed)} failed")
    assert not failed, failed
    print(sy.decomposition_csv(2, 3), end="")


if __name__ == "__main__":
    main()
