"""Command-line front end: every computation as a subcommand with JSON output.

One JSON report goes to stdout (written once, at completion); a short
human-readable summary goes to stderr.  Exit codes: 0 all verdicts pass,
1 a mathematical check failed, 2 usage error.

Matrices on the command line use the text format ``"1 0; 0 1/2"``; pass
``@path`` to read a matrix (text or JSON form) from a file.
"""

from __future__ import annotations

import argparse
import json
import sys

from .algebra import (
    LieAlgebra,
    center,
    hom_check,
    invariant_signature,
    jacobi_check,
    lower_central_series,
    subalgebra_closed,
)
from .brackets import BracketParam, StructureConstants, basis_matrices, bracket, structure_constants
from .classify import ClassificationError, classify_rank_family, iso_witness, normal_form
from .constructions import (
    RepCandidate,
    ado_embed,
    example_catalog,
    heisenberg_realization,
    semidirect_S,
    CATALOG_NAMES,
)
from .deform import (
    ContractionDivergenceError,
    ce_coboundary_check,
    contraction_constants,
    contraction_limit,
    deformation_bracket,
    psi_t,
    psi_t_inverse,
)
from .matrices import (
    Matrix,
    ShapeError,
    matrix_from_json,
    matrix_to_json,
    parse_matrix,
    rank,
    rank_normal_form,
)
from .scalars import scalar_str, to_scalar
from .verify import run_all


def _matrix_arg(text: str) -> Matrix:
    if text.startswith("@"):
        with open(text[1:], "r", encoding="utf-8") as fh:
            text = fh.read().strip()
    if text.lstrip().startswith("{"):
        return matrix_from_json(json.loads(text))
    return parse_matrix(text)


def _subspace_json(space) -> list:
    return [matrix_to_json(b) for b in space.basis]


# ---------------------------------------------------------------------------
# subcommand handlers: each returns (inputs, result, verdicts, seed)
# ---------------------------------------------------------------------------

def _cmd_constants(args):
    j = _matrix_arg(args.j)
    param = BracketParam(args.n, args.m, j)
    constants = structure_constants(param)
    verdict = jacobi_check(LieAlgebra.from_param(param))
    inputs = {"n": args.n, "m": args.m, "j": str(j)}
    result = {"constants": constants.to_json()}
    verdicts = [{"name": "jacobi", "pass": verdict.passed, "witness": verdict.witness}]
    return inputs, result, verdicts, None


def _cmd_center(args):
    j = _matrix_arg(args.j)
    param = BracketParam(args.n, args.m, j)
    alg = LieAlgebra.from_param(param)
    ctr = center(alg)
    r = rank(j)
    expected = 1 if (args.n == args.m == r) else (args.n - r) * (args.m - r)
    inputs = {"n": args.n, "m": args.m, "j": str(j)}
    result = {"center_dim": ctr.dim, "rank": r, "basis": _subspace_json(ctr)}
    verdicts = [
        {"name": "center_dim_law", "pass": ctr.dim == expected, "expected": expected, "got": ctr.dim}
    ]
    return inputs, result, verdicts, None


def _cmd_classify(args):
    report = classify_rank_family(args.n, args.m, seed=args.seed)
    verdicts = [
        {
            "name": "witnesses_verified",
            "pass": all(e["witness_verified"] for e in report["entries"]),
        }
    ]
    if not report["degenerate"]:
        verdicts.append(
            {"name": "signatures_pairwise_distinct", "pass": report["pairwise_distinct"]}
        )
    inputs = {"n": args.n, "m": args.m}
    return inputs, report, verdicts, args.seed


def _cmd_witness(args):
    j1 = _matrix_arg(args.j1)
    j2 = _matrix_arg(args.j2)
    inputs = {"j1": str(j1), "j2": str(j2)}
    try:
        f = iso_witness(j1, j2)
    except ClassificationError as exc:
        result = {"ranks": [exc.rank1, exc.rank2]}
        verdicts = [
            {"name": "equivalent", "pass": False, "ranks": [exc.rank1, exc.rank2]}
        ]
        return inputs, result, verdicts, None
    n, m = j1.cols, j1.rows
    verdict = hom_check(
        f,
        LieAlgebra.from_param(BracketParam(n, m, j1)),
        LieAlgebra.from_param(BracketParam(n, m, j2)),
    )
    result = {
        "rank": normal_form(j1).r,
        "map": matrix_to_json(f.matrix),
    }
    verdicts = [
        {"name": "equivalent", "pass": True},
        {"name": "hom", "pass": verdict.is_hom, "witness": verdict.witness},
        {"name": "bijective", "pass": verdict.injective},
    ]
    return inputs, result, verdicts, None


def _cmd_heisenberg(args):
    model = heisenberg_realization(args.n)  # bracket relations verified here
    ambient = LieAlgebra.from_param(model.ambient)
    closed = subalgebra_closed(ambient, model.span())
    realized = model.realized_algebra()
    lcs = [t.dim for t in lower_central_series(realized)]
    labels = model.abstract().labels
    inputs = {"n": args.n}
    result = {
        "ambient_size": args.n + 2,
        "parameter": matrix_to_json(model.ambient.j),
        "generators": {lbl: matrix_to_json(g) for lbl, g in zip(labels, model.generators())},
        "lcs_dims": lcs,
    }
    verdicts = [
        {"name": "generator_relations", "pass": True},
        {"name": "subalgebra_closed", "pass": closed.passed, "witness": closed.witness},
        {"name": "lcs_dims", "pass": lcs == [2 * args.n + 1, 1, 0], "got": lcs},
    ]
    return inputs, result, verdicts, None


def _cmd_semidirect(args):
    inputs = {"r": args.r, "s": args.s}
    try:
        model = semidirect_S(args.r, args.s)  # the map is verified at construction
    except ValueError as exc:
        return inputs, {"error": str(exc)}, [{"name": "phi_bijective_hom", "pass": False}], None
    result = {
        "dim": model.dim,
        "labels": list(model.labels),
        "constants": model.constants.to_json(),
        "phi": matrix_to_json(model.phi.matrix),
    }
    verdicts = [{"name": "phi_bijective_hom", "pass": True}]
    return inputs, result, verdicts, None


def _cmd_embed(args):
    with open(args.rep, "r", encoding="utf-8") as fh:
        payload = json.load(fh)
    constants = StructureConstants.from_json(payload)
    labels = tuple(payload["labels"]) if "labels" in payload else None
    src = LieAlgebra(payload["dim"], constants, labels)
    images = tuple(matrix_from_json(obj) for obj in payload["images"])
    if not images:
        raise ValueError("representation file lists no images")
    cand = RepCandidate(src, images, images[0].rows)
    span, verdict = ado_embed(cand, args.n, args.m, args.q)
    inputs = {"rep": args.rep, "n": args.n, "m": args.m, "q": args.q}
    result = {
        "source_dim": src.dim,
        "matrix_size": cand.target_dim,
        "padded_basis": _subspace_json(span),
        "span_dim": span.dim,
    }
    verdicts = [
        {"name": "bracket_preserving", "pass": verdict.is_hom, "witness": verdict.witness},
        {"name": "injective", "pass": verdict.injective},
    ]
    return inputs, result, verdicts, None


def _cmd_contract(args):
    inputs = {"n": args.n, "r": args.r}
    eps = contraction_constants(args.n, args.r)
    try:
        limit = contraction_limit(eps)
    except ContractionDivergenceError as exc:
        verdicts = [
            {"name": "no_negative_exponents", "pass": False, "triple": list(exc.triple)}
        ]
        return inputs, {"eps_constants": eps.to_json()}, verdicts, None
    expected = structure_constants(BracketParam.normal(args.n, args.n, args.r))
    result = {"eps_constants": eps.to_json(), "limit": limit.to_json()}
    verdicts = [
        {"name": "no_negative_exponents", "pass": True},
        {"name": "limit_matches_normal_form", "pass": limit == expected},
    ]
    return inputs, result, verdicts, None


_PATH_SAMPLE_TIMES = ("0", "1/3", "1/2", "9/10", "1")


def _cmd_deform(args):
    t = to_scalar(args.t)
    n, r = args.n, args.r
    jr = rank_normal_form(n, n, r)
    param_t = deformation_bracket(n, jr, t)
    basis = basis_matrices(n, n)
    param_comm = BracketParam.commutator(n)
    param_shift = BracketParam(n, n, jr - Matrix.identity(n))
    decomposition = all(
        bracket(a, b, param_t) == bracket(a, b, param_comm) + t * bracket(a, b, param_shift)
        for i, a in enumerate(basis)
        for b in basis[i + 1 :]
    )
    verdicts = [{"name": "decomposition_identity", "pass": decomposition}]
    if t != 1:
        transport = all(
            bracket(a, b, param_t)
            == psi_t_inverse(psi_t(a, t, r) @ psi_t(b, t, r) - psi_t(b, t, r) @ psi_t(a, t, r), t, r)
            for i, a in enumerate(basis)
            for b in basis[i + 1 :]
        )
        verdicts.append({"name": "transport_identity", "pass": transport})
    sig_comm = invariant_signature(LieAlgebra.from_param(param_comm))
    sig_end = invariant_signature(LieAlgebra.from_param(BracketParam.normal(n, n, r)))

    def _sig_at(tv):
        if tv == 0:
            return sig_comm
        if tv == 1:
            return sig_end
        return invariant_signature(LieAlgebra.from_param(deformation_bracket(n, jr, tv)))

    sig = _sig_at(t)
    reference = sig_comm if t != 1 else sig_end
    verdicts.append(
        {
            "name": "signature_matches_" + ("commutator_algebra" if t != 1 else "normal_form"),
            "pass": sig == reference,
        }
    )
    sweep_times = [to_scalar(s) for s in _PATH_SAMPLE_TIMES]
    path_table = []
    path_ok = True
    for tv in sweep_times:
        sig_tv = _sig_at(tv)
        expected = sig_comm if tv != 1 else sig_end
        row_ok = sig_tv == expected
        path_ok = path_ok and row_ok
        path_table.append(
            {
                "t": scalar_str(tv),
                "signature": sig_tv.to_json(),
                "reference": "commutator_algebra" if tv != 1 else "normal_form",
                "pass": row_ok,
            }
        )
    verdicts.append({"name": "signature_along_path", "pass": path_ok})
    inputs = {"n": n, "r": r, "t": scalar_str(t)}
    result = {
        "parameter": matrix_to_json(param_t.j),
        "signature": sig.to_json(),
        "path_table": path_table,
    }
    return inputs, result, verdicts, None


def _cmd_coboundary(args):
    j = _matrix_arg(args.j)
    verdict = ce_coboundary_check(j, args.n)
    inputs = {"n": args.n, "j": str(j)}
    result = {"identity": "[A,alpha(B)] - [B,alpha(A)] - alpha([A,B]) = [A,B]_j"}
    verdicts = [{"name": "coboundary_identity", "pass": verdict.passed, "witness": verdict.witness}]
    return inputs, result, verdicts, None


def _cmd_catalog(args):
    entry = example_catalog(args.name)
    inputs = {"name": args.name}
    result = entry.to_json()
    verdicts = [
        {
            "name": "claims_accounted",
            "pass": all(c.matches or c.note for c in entry.claims),
        }
    ]
    return inputs, result, verdicts, None


def _cmd_verify_all(args):
    report = run_all(max_size=args.max, seed=args.seed)
    verdicts = [{"name": c["name"], "pass": c["pass"]} for c in report["checks"]]
    inputs = {"max": args.max}
    return inputs, report, verdicts, args.seed


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="liebrackets",
        description="Exact computations with the bracket family A*J*B - B*J*A on matrix spaces.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("constants", help="structure constants of a bracket parameter")
    p.add_argument("n", type=int)
    p.add_argument("m", type=int)
    p.add_argument("--j", required=True, help='parameter matrix (m x n), e.g. "1 0; 0 0"')
    p.set_defaults(handler=_cmd_constants)

    p = sub.add_parser("center", help="center of the bracket algebra")
    p.add_argument("n", type=int)
    p.add_argument("m", type=int)
    p.add_argument("--j", required=True)
    p.set_defaults(handler=_cmd_center)

    p = sub.add_parser("classify", help="rank classification report for a shape")
    p.add_argument("n", type=int)
    p.add_argument("m", type=int)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(handler=_cmd_classify)

    p = sub.add_parser("witness", help="isomorphism witness between two parameters")
    p.add_argument("--j1", required=True)
    p.add_argument("--j2", required=True)
    p.set_defaults(handler=_cmd_witness)

    p = sub.add_parser("heisenberg", help="Heisenberg realization in size n+2")
    p.add_argument("n", type=int)
    p.set_defaults(handler=_cmd_heisenberg)

    p = sub.add_parser("semidirect", help="semidirect model S(V1, V2)")
    p.add_argument("r", type=int)
    p.add_argument("s", type=int)
    p.set_defaults(handler=_cmd_semidirect)

    p = sub.add_parser("embed", help="pad a commutator representation into Mat(n x m)")
    p.add_argument("--rep", required=True, help="JSON file with dim, brackets, images")
    p.add_argument("n", type=int)
    p.add_argument("m", type=int)
    p.add_argument("q", type=int)
    p.set_defaults(handler=_cmd_embed)

    p = sub.add_parser("contract", help="epsilon-contraction onto the rank-r bracket")
    p.add_argument("n", type=int)
    p.add_argument("r", type=int)
    p.set_defaults(handler=_cmd_contract)

    p = sub.add_parser("deform", help="the deformation path at a rational time")
    p.add_argument("n", type=int)
    p.add_argument("r", type=int)
    p.add_argument("--t", required=True, help='rational time in [0, 1], e.g. "1/3"')
    p.set_defaults(handler=_cmd_deform)

    p = sub.add_parser("coboundary", help="check the 2-coboundary identity for j")
    p.add_argument("n", type=int)
    p.add_argument("--j", required=True)
    p.set_defaults(handler=_cmd_coboundary)

    p = sub.add_parser("catalog", help="worked example by name")
    p.add_argument("name", choices=CATALOG_NAMES)
    p.set_defaults(handler=_cmd_catalog)

    p = sub.add_parser("verify-all", help="run the complete verification suite")
    p.add_argument("--max", type=int, default=4)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(handler=_cmd_verify_all)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        inputs, result, verdicts, seed = args.handler(args)
    except (ShapeError, ValueError, TypeError, KeyError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc!r}" if isinstance(exc, KeyError) else f"error: {exc}", file=sys.stderr)
        print(f"run 'liebrackets {args.command} --help' for usage", file=sys.stderr)
        return 2
    report = {
        "command": args.command,
        "inputs": inputs,
        "result": result,
        "verdicts": verdicts,
        "seed": seed,
    }
    print(json.dumps(report, indent=2))
    passed = sum(1 for v in verdicts if v["pass"])
    for v in verdicts:
        status = "PASS" if v["pass"] else "FAIL"
        print(f"[{status}] {v['name']}", file=sys.stderr)
    print(f"{args.command}: {passed}/{len(verdicts)} verdicts passed", file=sys.stderr)
    return 0 if passed == len(verdicts) else 1


if __name__ == "__main__":
    sys.exit(main())
