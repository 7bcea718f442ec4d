#!/usr/bin/env python3
"""Smoke test for the symplex Python extension.

Build the extension first, then run this script:

    cargo build -p symplex-py
    python3 python/smoke_test.py

The module is loaded straight from the cargo target directory (no
installation step), so the script works in a fresh checkout.
"""

import json
import shutil
import sys
import tempfile
from pathlib import Path


def load_module():
    root = Path(__file__).resolve().parents[1]
    for profile in ("release", "debug"):
        built = root / "target" / profile / "libsymplex.so"
        if built.exists():
            scratch = Path(tempfile.mkdtemp(prefix="symplex-py-"))
            shutil.copy2(built, scratch / "symplex.so")
            sys.path.insert(0, str(scratch))
            import symplex

            return symplex
    sys.exit("extension not built; run: cargo build -p symplex-py")


def main():
    sx = load_module()
    checks = 0

    def ok(cond, what):
        nonlocal checks
        if not cond:
            sys.exit(f"FAIL: {what}")
        checks += 1

    # generators are symplectic and multiply exactly
    a = sx.Matrix.se(2, 1, 3, "2", "Fp:7")
    b = sx.Matrix.se_diag(2, 1, "3", "Fp:7")
    ok(a.is_symplectic() and b.is_symplectic(), "generators pass the form identity")
    prod = a @ b
    ok(prod.is_symplectic(), "products stay symplectic")
    ok((prod @ prod.inverse()).is_identity(), "inverse through the form")
    ok(sx.Matrix.psi(2, "Z").transpose() == sx.Matrix.psi(2, "Z").inverse(),
       "psi transpose equals psi inverse")

    # matrix documents round trip through JSON byte for byte
    text = prod.to_json()
    ok(sx.Matrix.from_json(text).to_json() == text, "matrix JSON round trip")

    # a random word evaluates, factors, and reconstructs exactly
    word_text = sx.random_word(n=2, length=6, ring="Fp:7", seed=1)
    alpha = sx.eval_word(word_text)
    ok(alpha.is_symplectic(), "random word evaluates to a symplectic matrix")
    fact = json.loads(alpha.factor())
    ok(fact["complete"], "factorization has trivial residual")
    back = sx.eval_word(json.dumps(fact["word"]))
    ok(back == alpha, "factored word evaluates back to the input")

    # three-part splitting with a monomial core
    split = json.loads(alpha.bruhat([1, 3], [2, 4]))
    core = sx.Matrix.from_json(json.dumps(split["beta2"]))
    ok(core.is_monomial() and core.is_symplectic(), "splitting core is monomial")
    rebuilt = sx.eval_word(json.dumps(split["beta1"])) @ core \
        @ sx.eval_word(json.dumps(split["beta3"]))
    ok(rebuilt == alpha, "split reconstructs the input")

    # verification suites
    ok(len(sx.lemma_ids()) == 7, "seven suites registered")
    report = json.loads(sx.verify(lemma="delta-identities", seed=7))
    ok(report["all_passed"] and report["reports"][0]["instances_run"] == 60,
       "scaling-matrix identities verified")

    # geometry: monoid description and cone splitting
    info = json.loads(sx.monoid_info(json.dumps(
        {"kind": "affine", "rank": 2,
         "generators": [["1", "0"], ["1", "1"], ["1", "2"]]})))
    ok(info["cone"]["pointed"] and info["cone"]["dim"] == 2, "monoid cone data")
    split = json.loads(sx.pyramid_split(json.dumps(
        {"rank": 2, "rays": [["1", "0"], ["1", "1"], ["1", "2"]]})))
    ok(split["apex"] == ["1", "0"] and split["shared"]["rays"] == [["1", "1"]],
       "pyramid split picks the expected apex and shared face")
    triple = {"monoid": {"kind": "affine", "rank": 2,
                         "generators": [["1", "0"], ["0", "1"]]},
              "apex_ray": ["1", "0"],
              "base": {"rank": 2, "rays": [["0", "1"]]},
              "t": ["1", "0"], "bound": 8}
    ok(json.loads(sx.polarized_check(json.dumps(triple)))["all_passed"],
       "reference polarized triple validates")

    print(f"smoke test passed ({checks} checks)")


if __name__ == "__main__":
    main()
