use pyo3::prelude::*;
use pyo3::types::PyDict;
use spin_young_py::spin_young_py;

fn run(code: &str) {
    pyo3::append_to_inittab!(spin_young_py);
    pyo3::prepare_freethreaded_python();
    Python::with_gil(|py| {
        let globals = PyDict::new_bound(py);
        if let Err(e) = py.run_bound(code, Some(&globals), None) {
            e.print(py);
            panic!("python snippet failed");
        }
    });
}

#[test]
fn bindings_from_python() {
    run(r#"
import json
import spin_young as sy

half = sy.Scalar(1, 2)
assert str(half * sy.Scalar(2)) == "1"
r2 = sy.Scalar.sqrt2()
assert r2 * r2 == sy.Scalar(2)

t = sy.tau(3, 1, 2)
assert (t * t) == sy.HElement.one(3)
assert (sy.p(3, 1) * t + t * sy.p(3, 1)).is_zero()

s = sy.s(2, 1, 2)
one = sy.HElement.one(2)
row = sy.ShiftedTableau("1,2")
assert sy.e_t(row) == (one + s).scale(sy.Scalar(2))
assert sy.e_t(row) * sy.e_t(row) == sy.e_t(row).scale(sy.Scalar(4))

assert len(sy.ShiftedTableau.standard([3, 1])) == 2
w = sy.TensorSpace(1, 2)
assert w.dim == 4
assert w.act_on_vt(sy.kappa(row), row) == "2 * [1 1]"

assert sy.spin_idempotent(3) * sy.spin_idempotent(3) == sy.spin_idempotent(3)
reports = json.loads(sy.verify(3))
assert reports and all(r["status"] == "pass" for r in reports), reports
assert '"2,1"' in sy.decomposition_csv(2, 3)

try:
    sy.tau(2, 1, 1)
except ValueError:
    pass
else:
    raise AssertionError("expected ValueError")
"#);
}
