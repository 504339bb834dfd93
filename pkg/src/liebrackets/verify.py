"""Self-contained verification suite for every checkable claim.

Each check function returns ``{"name", "pass", "details"}``; ``run_all``
executes them in a fixed order with one seeded RNG stream per check, so a
given (max_size, seed) pair always produces the same report.  The CLI
subcommand ``verify-all`` and the acceptance tests both run through here.
"""

from __future__ import annotations

import random
from fractions import Fraction

from .algebra import (
    LieAlgebra,
    center,
    hom_check,
    invariant_signature,
    jacobi_check,
    lower_central_series,
    subalgebra_closed,
)
from .brackets import BracketParam, basis_matrices, bracket, structure_constants
from .classify import iso_witness, random_parameter
from .constructions import (
    classical_representation,
    heisenberg_abstract,
    heisenberg_realization,
    heisenberg_obstruction,
    example_catalog,
    semidirect_S,
    RepCandidate,
    CATALOG_NAMES,
)
from .deform import ce_coboundary_check, contraction_constants, contraction_limit, psi_t, psi_t_inverse
from .matrices import Matrix, rank_normal_form


def _shapes(max_size: int):
    return [(n, m) for n in range(1, max_size + 1) for m in range(1, max_size + 1)]


def check_lie_axioms(max_size: int = 4, seed: int = 0, params_per_shape: int = 20) -> dict:
    """Antisymmetry on all basis pairs and Jacobi on all basis triples,
    for seeded random parameters of every shape."""
    rng = random.Random(seed)
    failures = []
    algebras = 0
    for n, m in _shapes(max_size):
        basis = basis_matrices(n, m)
        zero = Matrix.zeros(n, m)
        for _ in range(params_per_shape):
            j = Matrix([[rng.randint(-3, 3) for _ in range(n)] for _ in range(m)])
            param = BracketParam(n, m, j)
            algebras += 1
            for a in range(len(basis)):
                for b in range(a + 1, len(basis)):
                    if bracket(basis[a], basis[b], param) + bracket(basis[b], basis[a], param) != zero:
                        failures.append({"shape": [n, m], "pair": [a, b], "kind": "antisymmetry"})
            verdict = jacobi_check(LieAlgebra.from_param(param))
            if not verdict:
                failures.append({"shape": [n, m], "kind": "jacobi", "witness": verdict.witness})
    return {
        "name": "lie_axioms",
        "pass": not failures,
        "details": {
            "algebras_checked": algebras,
            "params_per_shape": params_per_shape,
            "failures": failures,
        },
    }


def check_center_dimensions(max_size: int = 4) -> dict:
    """Center dimension is (n-r)(m-r), except 1 for full-rank square."""
    failures = []
    checked = 0
    for n, m in _shapes(max_size):
        for r in range(min(n, m) + 1):
            expected = 1 if (n == m == r) else (n - r) * (m - r)
            got = center(LieAlgebra.from_param(BracketParam.normal(n, m, r))).dim
            checked += 1
            if got != expected:
                failures.append({"shape": [n, m], "r": r, "expected": expected, "got": got})
    return {
        "name": "center_dimension_law",
        "pass": not failures,
        "details": {"cases": checked, "failures": failures},
    }


def check_iso_soundness(max_size: int = 4, seed: int = 0, pairs_per_shape: int = 10) -> dict:
    """Equal-rank random parameter pairs admit verified bijective witnesses."""
    rng = random.Random(seed)
    failures = []
    checked = 0
    for n, m in _shapes(max_size):
        for _ in range(pairs_per_shape):
            r = rng.randint(0, min(n, m))
            j1 = random_parameter(rng, m, n, r)
            j2 = random_parameter(rng, m, n, r)
            f = iso_witness(j1, j2)
            verdict = hom_check(
                f,
                LieAlgebra.from_param(BracketParam(n, m, j1)),
                LieAlgebra.from_param(BracketParam(n, m, j2)),
            )
            checked += 1
            if not verdict.bijective:
                failures.append(
                    {"shape": [n, m], "r": r, "j1": str(j1), "j2": str(j2), "witness": verdict.witness}
                )
    return {
        "name": "iso_soundness",
        "pass": not failures,
        "details": {"pairs_checked": checked, "failures": failures},
    }


def check_signature_separation(max_size: int = 4) -> dict:
    """Distinct ranks give distinct invariant signatures (min(n,m) >= 2)."""
    failures = []
    shapes = 0
    for n, m in _shapes(max_size):
        if min(n, m) < 2:
            continue
        shapes += 1
        sigs = [
            (r, invariant_signature(LieAlgebra.from_param(BracketParam.normal(n, m, r))))
            for r in range(min(n, m) + 1)
        ]
        for a in range(len(sigs)):
            for b in range(a + 1, len(sigs)):
                if sigs[a][1] == sigs[b][1]:
                    failures.append(
                        {
                            "shape": [n, m],
                            "ranks": [sigs[a][0], sigs[b][0]],
                            "signature": sigs[a][1].to_json(),
                        }
                    )
    return {
        "name": "signature_separation",
        "pass": not failures,
        "details": {"shapes_checked": shapes, "failures": failures},
    }


def check_heisenberg_realization(sizes=(1, 2, 3)) -> dict:
    """Generator brackets, closedness, nilpotency type and center of the span."""
    failures = []
    for n in sizes:
        try:
            model = heisenberg_realization(n)  # bracket relations verified inside
        except ValueError as exc:
            failures.append({"n": n, "kind": "construction", "error": str(exc)})
            continue
        ambient = LieAlgebra.from_param(model.ambient)
        if not subalgebra_closed(ambient, model.span()):
            failures.append({"n": n, "kind": "not-closed"})
        realized = model.realized_algebra()
        if realized.constants != model.abstract().constants:
            failures.append({"n": n, "kind": "constants-mismatch"})
        lcs = [t.dim for t in lower_central_series(realized)]
        if lcs != [2 * n + 1, 1, 0]:
            failures.append({"n": n, "kind": "lcs", "got": lcs})
        ctr = center(realized)
        z_coords = realized.from_coords([0] * (2 * n) + [1])
        if ctr.dim != 1 or not ctr.contains(z_coords):
            failures.append({"n": n, "kind": "center", "dim": ctr.dim})
    return {
        "name": "heisenberg_realization",
        "pass": not failures,
        "details": {"sizes": list(sizes), "failures": failures},
    }


def check_heisenberg_obstruction(seed: int = 0, sizes=(1, 2, 3)) -> dict:
    """Scalar-Z candidates in low dimension always contradict; the classical
    representation is faithful; no low-dimensional candidate comes out faithful."""
    rng = random.Random(seed)
    failures = []
    checked = 0
    for n in sizes:
        classical = classical_representation(n)
        verdict = heisenberg_obstruction(classical)
        checked += 1
        if verdict.kind != "faithful":
            failures.append({"n": n, "kind": "classical", "verdict": verdict.kind})
        src = heisenberg_abstract(n)
        for target_dim in range(1, n + 2):
            for lam in (1, -2):
                images = [
                    Matrix([[rng.randint(-2, 2) for _ in range(target_dim)] for _ in range(target_dim)])
                    for _ in range(2 * n)
                ]
                images.append(lam * Matrix.identity(target_dim))
                verdict = heisenberg_obstruction(RepCandidate(src, tuple(images), target_dim))
                checked += 1
                if verdict.kind != "scalar-Z-contradiction":
                    failures.append(
                        {"n": n, "target_dim": target_dim, "kind": "scalar-Z", "verdict": verdict.kind}
                    )
            zero_images = tuple(Matrix.zeros(target_dim, target_dim) for _ in range(2 * n + 1))
            verdict = heisenberg_obstruction(RepCandidate(src, zero_images, target_dim))
            checked += 1
            if verdict.kind != "not-faithful":
                failures.append(
                    {"n": n, "target_dim": target_dim, "kind": "zero-images", "verdict": verdict.kind}
                )
            for _ in range(3):
                images = tuple(
                    Matrix([[rng.randint(-2, 2) for _ in range(target_dim)] for _ in range(target_dim)])
                    for _ in range(2 * n + 1)
                )
                verdict = heisenberg_obstruction(RepCandidate(src, images, target_dim))
                checked += 1
                if verdict.kind == "faithful":
                    failures.append({"n": n, "target_dim": target_dim, "kind": "random-faithful"})
    return {
        "name": "heisenberg_obstruction",
        "pass": not failures,
        "details": {"candidates_checked": checked, "failures": failures},
    }


def check_semidirect(max_total: int = 4) -> dict:
    """The block-assembly map verifies for all r+s <= max_total, and the
    nilpotent part is two-step nilpotent."""
    failures = []
    models = 0
    for r in range(1, max_total + 1):
        for s in range(0, max_total - r + 1):
            try:
                model = semidirect_S(r, s)  # the map is verified at construction
            except ValueError as exc:
                failures.append({"r": r, "s": s, "kind": "construction", "error": str(exc)})
                continue
            models += 1
            alg = model.algebra()
            nil = list(model.nilpotent_indices())
            cb = alg.constants.bracket_basis
            for a in nil:
                for b in nil:
                    inner = cb(a, b)
                    for k, v in inner.items():
                        if v != 0 and k not in nil:
                            failures.append({"r": r, "s": s, "kind": "nil-not-ideal"})
                    for c in nil:
                        triple = {}
                        for k, v in inner.items():
                            for t, w in cb(c, k).items():
                                triple[t] = triple.get(t, 0) + v * w
                        if any(v != 0 for v in triple.values()):
                            failures.append({"r": r, "s": s, "kind": "not-two-step", "triple": [c, a, b]})
    return {
        "name": "semidirect_model",
        "pass": not failures,
        "details": {"models_verified": models, "failures": failures},
    }


def check_contraction(max_size: int = 4) -> dict:
    """Contraction limits equal the normal-form constants tensor-exactly and
    the normal forms compose by minimum rank."""
    failures = []
    cases = 0
    for n in range(1, max_size + 1):
        for r in range(n + 1):
            eps = contraction_constants(n, r)
            exponents = [
                v.min_exponent()
                for terms in eps.table.values()
                for v in terms.values()
            ]
            if any(e is not None and e < 0 for e in exponents):
                failures.append({"n": n, "r": r, "kind": "negative-exponent"})
                continue
            limit = contraction_limit(eps)
            expected = structure_constants(BracketParam.normal(n, n, r))
            cases += 1
            if limit != expected:
                failures.append({"n": n, "r": r, "kind": "limit-mismatch"})
        for r in range(n + 1):
            for s in range(n + 1):
                prod = rank_normal_form(n, n, r) @ rank_normal_form(n, n, s)
                if prod != rank_normal_form(n, n, min(r, s)):
                    failures.append({"n": n, "r": r, "s": s, "kind": "product-law"})
    return {
        "name": "contraction",
        "pass": not failures,
        "details": {"cases": cases, "failures": failures},
    }


_PATH_TIMES = (0, Fraction(1, 3), Fraction(1, 2), Fraction(9, 10))


def check_deformation_coboundary(max_size: int = 4, seed: int = 0) -> dict:
    """Decomposition identity, transport at sample times, coboundary identity,
    and the invariant signature along the deformation path."""
    rng = random.Random(seed)
    failures = []
    identity_cases = 0
    for n in range(1, max_size + 1):
        basis = basis_matrices(n, n)
        ident = Matrix.identity(n)
        param_comm = BracketParam.commutator(n)
        sig_gl = invariant_signature(LieAlgebra.from_param(param_comm))
        for r in range(n):
            jr = rank_normal_form(n, n, r)
            param_shift = BracketParam(n, n, jr - ident)
            for t in _PATH_TIMES:
                jt = (1 - t) * ident + t * jr
                param_t = BracketParam(n, n, jt)
                for a in range(len(basis)):
                    for b in range(a + 1, len(basis)):
                        A, B = basis[a], basis[b]
                        lhs = bracket(A, B, param_t)
                        rhs = bracket(A, B, param_comm) + t * bracket(A, B, param_shift)
                        identity_cases += 1
                        if lhs != rhs:
                            failures.append({"n": n, "r": r, "t": str(t), "kind": "decomposition"})
                        transported = psi_t_inverse(
                            psi_t(A, t, r) @ psi_t(B, t, r) - psi_t(B, t, r) @ psi_t(A, t, r), t, r
                        )
                        if lhs != transported:
                            failures.append({"n": n, "r": r, "t": str(t), "kind": "transport"})
                sig_t = invariant_signature(LieAlgebra.from_param(param_t))
                if sig_t != sig_gl:
                    failures.append({"n": n, "r": r, "t": str(t), "kind": "path-signature"})
            sig_end = invariant_signature(LieAlgebra.from_param(BracketParam(n, n, jr)))
            sig_normal = invariant_signature(LieAlgebra.from_param(BracketParam.normal(n, n, r)))
            if sig_end != sig_normal:
                failures.append({"n": n, "r": r, "kind": "endpoint-signature"})
            if n >= 2 and sig_end == sig_gl:
                failures.append({"n": n, "r": r, "kind": "endpoint-degeneration"})
            if not ce_coboundary_check(jr, n):
                failures.append({"n": n, "r": r, "kind": "coboundary-normal-form"})
        for _ in range(2):
            j = Matrix([[rng.randint(-3, 3) for _ in range(n)] for _ in range(n)])
            if not ce_coboundary_check(j, n):
                failures.append({"n": n, "j": str(j), "kind": "coboundary-random"})
    return {
        "name": "deformation_coboundary",
        "pass": not failures,
        "details": {"identity_cases": identity_cases, "failures": failures},
    }


def check_catalog() -> dict:
    """Catalog brackets match where expected; known discrepancies are flagged."""
    failures = []
    expected_discrepancies = {
        "heisenberg3_gl21": 0,
        "affine2_column": 1,
        "g32_1": 0,
        "column4": 0,
        "mat2_rank1": 1,
        "mat2_full": 0,
    }
    for name in CATALOG_NAMES:
        entry = example_catalog(name)
        mismatches = [c for c in entry.claims if not c.matches]
        if len(mismatches) != expected_discrepancies[name]:
            failures.append(
                {
                    "entry": name,
                    "expected_flags": expected_discrepancies[name],
                    "got_flags": len(mismatches),
                    "pairs": [f"[{c.left},{c.right}]" for c in mismatches],
                }
            )
        for c in mismatches:
            if not c.note:
                failures.append({"entry": name, "kind": "unexplained-discrepancy"})
    entry = example_catalog("mat2_rank1")
    xy = next(c for c in entry.claims if (c.left, c.right) == ("X", "Y"))
    if xy.matches or xy.computed == xy.claimed:
        failures.append({"entry": "mat2_rank1", "kind": "XY-should-differ"})
    aff = example_catalog("affine2_column")
    e2e1 = aff.claims[0]
    if e2e1.computed != (0, 1):  # computed bracket [e2, e1] is e2
        failures.append({"entry": "affine2_column", "kind": "computed-value", "got": e2e1.computed})
    return {
        "name": "catalog_fidelity",
        "pass": not failures,
        "details": {"entries": list(CATALOG_NAMES), "failures": failures},
    }


def run_all(max_size: int = 4, seed: int = 0) -> dict:
    """Run every check; the report is deterministic in (max_size, seed)."""
    checks = [
        check_lie_axioms(max_size, seed),
        check_center_dimensions(max_size),
        check_iso_soundness(max_size, seed),
        check_signature_separation(max_size),
        check_heisenberg_realization(),
        check_heisenberg_obstruction(seed),
        check_semidirect(max_size),
        check_contraction(max_size),
        check_deformation_coboundary(max_size, seed),
        check_catalog(),
    ]
    return {
        "max": max_size,
        "seed": seed,
        "checks": checks,
        "pass": all(c["pass"] for c in checks),
    }
