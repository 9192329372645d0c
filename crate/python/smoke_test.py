"""Smoke test for the Python extension module.

Build and install first:
    cd crates/python && maturin build --release -o dist && pip install dist/*.whl
"""

import json
import pathlib
import sys

import curve_invariants_py as ci

ROOT = pathlib.Path(__file__).resolve().parent.parent
FIXTURES = ROOT / "fixtures"


def check(cond, what):
    print(("ok    " if cond else "FAIL  ") + what)
    return cond


def main():
    results = []

    k2 = ci.make_standard_curve("flower", param=1, resolution=64)
    r = ci.analyze(k2)
    results.append(check((r.rot, r.n_doubles) == (2, 1), "k2 rot 2 with one double point"))
    results.append(check(r.st_q == {2: 1}, "k2 St_q = q"))
    results.append(check(r.p_q == {4: 1}, "k2 P = q^2"))
    results.append(check((r.j_minus, r.j_plus, r.st) == (-3, -2, 1), "k2 J-, J+, St"))
    results.append(check(r.all_checks_pass(), "k2 cross-checks"))
    results.append(check(json.loads(r.to_json())["rot"] == 2, "report JSON"))

    circle = ci.Curve([(1, 0), (0, 1), (-1, 0), (0, -1)])
    results.append(check(ci.analyze(circle).p_q == {2: 1}, "square P = q"))

    try:
        ci.analyze(ci.Curve.load(FIXTURES / "degenerate_tangency.json"))
        results.append(check(False, "tangency rejected"))
    except ci.GenericityError as e:
        results.append(check("TangentialPair" in str(e), "tangency rejected"))

    svg = ci.render_svg(k2, labels="weights")
    results.append(check(svg.startswith("<svg") and "+1" in svg, "svg weight label"))

    rnd = ci.random_generic_curve(seed=1, doubles=4)
    results.append(check(ci.analyze(rnd).n_doubles == 4, "random curve with 4 doubles"))

    pair = (FIXTURES / "moves" / "weak-a.json").read_text()
    m = ci.verify_move(pair)
    results.append(check(m.passed and m.kind == "weak-triple", "weak triple move"))

    ok, _ = ci.selftest(curves=3, seed=7)
    results.append(check(ok, "selftest"))

    return 0 if all(results) else 1


if __name__ == "__main__":
    sys.exit(main())
