"""Command-line front end: ``homlie <command> <algebra> [options]``.

``<algebra>`` is a path to an algebra file or the name of a shipped fixture.
Every command prints a report; ``--json`` prints the same report as JSON with
a fixed key order.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Callable

from .algebra import HomLieSuperAlgebra, verify
from .decomposition import DecompositionError, decompose, killing_nondegenerate_criterion
from .derivations import NegativePowerNonRegular, derivation_space
from .fixtures import FIXTURE_NAMES, load_fixture
from .forms import invariant_form_space, is_nondegenerate, is_supersymmetric, killing_form, radical
from .ideals import (
    IdealSpec,
    center,
    check_structural_identities,
    ideal_closure,
    is_simple,
    minimal_graded_ideals,
    one_sided_ideal_search,
)
from .io import ParseError, load
from .linalg import Matrix, Subspace, as_scalar, determinant, format_scalar
from .modules import (
    irreducible_component_count_check,
    is_classical,
    is_completely_reducible,
    is_reductive_even_part,
    odd_module,
    supertrace_zero_check,
)

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_INPUT = 2


class UsageError(Exception):
    pass


# -- value rendering -------------------------------------------------------

def _vec(A: HomLieSuperAlgebra, v) -> str:
    terms = []
    for c, name in zip(v, A.basis_names):
        if not c:
            continue
        if c == 1:
            terms.append(name)
        elif c == -1:
            terms.append(f"-{name}")
        else:
            terms.append(f"{format_scalar(c)} {name}")
    return " + ".join(terms).replace("+ -", "- ") if terms else "0"


def _subspace(A: HomLieSuperAlgebra, W: Subspace | None):
    if W is None:
        return None
    return [_vec(A, b) for b in W.basis]


def _matrix(m: Matrix) -> list[list[str]]:
    return [[format_scalar(x) for x in m.row(i)] for i in range(m.rows)]


# -- reports ---------------------------------------------------------------

def report_verify(A: HomLieSuperAlgebra, args) -> tuple[dict, int]:
    r = verify(A)
    rep = {
        "algebra": A.name,
        "dimension": f"{A.even_dim}|{A.odd_dim}",
        "skew_supersymmetric": r.skew_ok,
        "hom_jacobi": r.hom_jacobi_ok,
        "hom_jacobi_witness": _names(A, r.hom_jacobi_witness),
        "multiplicative": r.multiplicative,
        "multiplicative_witness": _names(A, r.multiplicative_witness),
        "regular": r.regular,
        "alpha_identity": A.is_alpha_identity(),
        "axioms_hold": r.ok,
    }
    return rep, EXIT_OK if r.ok else EXIT_FAIL


def _names(A, w):
    return None if w is None else [A.basis_names[i] for i in w]


def report_analyze(A: HomLieSuperAlgebra, args) -> tuple[dict, int]:
    simple = is_simple(A)
    ids = check_structural_identities(A)
    comps = irreducible_component_count_check(A)
    odd = is_completely_reducible(odd_module(A))
    rep = {
        "algebra": A.name,
        "dimension": f"{A.even_dim}|{A.odd_dim}",
        "axioms_hold": verify(A).ok,
        "derived_subalgebra_dim": A.derived_subalgebra().dim,
        "simple": simple.simple,
        "simple_reason": simple.reason,
        "simple_certificate": _subspace(A, simple.certificate),
        "odd_completely_reducible": odd.completely_reducible,
        "odd_components": [_subspace(A, W) for W in odd.summands],
        "classical": is_classical(A),
        "reductive_even_part": is_reductive_even_part(A),
        "center": _subspace(A, center(A)),
        "identities_applicable": ids.applicable,
        "even_odd_equals_odd": ids.even_odd_is_odd,
        "odd_odd_equals_even": ids.odd_odd_is_even,
        "odd_annihilator_zero": ids.annihilator_is_zero,
        "component_check_holds": comps.holds,
        "supertrace_zero": supertrace_zero_check(A),
    }
    return rep, EXIT_OK


def report_killing(A: HomLieSuperAlgebra, args) -> tuple[dict, int]:
    K = killing_form(A)
    rep = {
        "algebra": A.name,
        "gram": _matrix(K.gram),
        "determinant": format_scalar(determinant(K.gram)),
        "nondegenerate": is_nondegenerate(A, K),
        "radical": _subspace(A, radical(A, K)),
        "supersymmetric": is_supersymmetric(A, K),
        "invariant": invariant_form_space(A).contains(K),
    }
    return rep, EXIT_OK


def report_forms(A: HomLieSuperAlgebra, args) -> tuple[dict, int]:
    F = invariant_form_space(A)
    rep = {
        "algebra": A.name,
        "dimension": F.dimension,
        "forms": [
            {
                "parity": phi.parity,
                "supersymmetric": is_supersymmetric(A, phi),
                "radical_dim": radical(A, phi).dim,
                "gram": _matrix(phi.gram),
            }
            for phi in F
        ],
    }
    return rep, EXIT_OK


def _parse_seed(A: HomLieSuperAlgebra, text: str):
    if text in A.basis_names:
        return A.basis_vector(text)
    parts = [t for t in text.replace(" ", "").split(",") if t]
    if len(parts) != A.dim:
        raise UsageError(f"seed {text!r}: expected a basis name or {A.dim} comma-separated rationals")
    try:
        return tuple(as_scalar(p) for p in parts)
    except (ValueError, ZeroDivisionError):
        raise UsageError(f"seed {text!r}: not a list of rationals") from None


def report_ideals(A: HomLieSuperAlgebra, args) -> tuple[dict, int]:
    kind = IdealSpec(args.side, args.graded, args.alpha)
    rep: dict = {
        "algebra": A.name,
        "side": kind.side,
        "graded": kind.graded,
        "alpha_invariant": kind.alpha_invariant,
    }
    if args.seed:
        seeds = [_parse_seed(A, s) for s in args.seed]
        r = ideal_closure(A, seeds, kind)
        rep["seeds"] = [_vec(A, s) for s in seeds]
        rep["closure"] = _subspace(A, r.closure)
        rep["closure_dim"] = r.closure.dim
        rep["closure_rounds"] = r.closure_chain_length
    else:
        s = is_simple(A, alpha_invariant=kind.alpha_invariant)
        rep["simple"] = s.simple
        rep["certificate"] = _subspace(A, s.certificate)
        rep["minimal_graded_ideals"] = [_subspace(A, W) for W in minimal_graded_ideals(A)]
        side = "left" if kind.side == "two" else kind.side
        rep["one_sided_search_side"] = side
        rep["one_sided_witness"] = _subspace(A, one_sided_ideal_search(A, side))
    return rep, EXIT_OK


def _decomposition_dict(A: HomLieSuperAlgebra, dec) -> dict:
    return {
        "summand_count": len(dec),
        "summands": [
            {
                "span": _subspace(A, s.subspace),
                "dimension": f"{s.algebra.even_dim}|{s.algebra.odd_dim}",
                "alpha_invariant": s.alpha_invariant,
            }
            for s in dec.summands
        ],
        "pairwise_orthogonal": dec.pairwise_orthogonal,
        "pairwise_bracket_zero": dec.pairwise_bracket_zero,
        "form_invariant": dec.form_invariant,
    }


def report_decompose(A: HomLieSuperAlgebra, args) -> tuple[dict, int]:
    rep: dict = {"algebra": A.name, "form": args.form}
    try:
        dec = decompose(A, killing_form(A))
    except DecompositionError as exc:
        rep["error"] = type(exc).__name__
        rep["message"] = str(exc)
        witness = getattr(exc, "witness", None)
        if witness is not None:
            rep["witness"] = _subspace(A, witness)
        return rep, EXIT_FAIL
    rep.update(_decomposition_dict(A, dec))
    return rep, EXIT_OK


def report_derivations(A: HomLieSuperAlgebra, args) -> tuple[dict, int]:
    parities = {"even": [0], "odd": [1], "both": [0, 1]}[args.parity]
    rep: dict = {"algebra": A.name, "k": args.k, "spaces": []}
    try:
        for p in parities:
            D = derivation_space(A, args.k, p)
            rep["spaces"].append(
                {
                    "parity": "odd" if p else "even",
                    "dimension": D.dimension,
                    "inner_dimension": None if D.inner_subspace is None else D.inner_subspace.dim,
                    "inner_contained": D.inner_contained,
                    "all_inner": D.all_inner,
                    "multiplicative": D.multiplicative,
                    "basis": [_matrix(m) for m in D.basis],
                }
            )
    except NegativePowerNonRegular as exc:
        rep["error"] = type(exc).__name__
        rep["message"] = str(exc)
        return rep, EXIT_FAIL
    return rep, EXIT_OK


def report_criterion(A: HomLieSuperAlgebra, args) -> tuple[dict, int]:
    r = killing_nondegenerate_criterion(A)
    rep = {
        "algebra": A.name,
        "killing_nondegenerate": r.killing_nondegenerate,
        "commutative_graded_ideal": _subspace(A, r.commutative_ideal),
        "applicable": r.applicable,
        "consistent": r.consistent,
        "error": r.error,
        "decomposition": None if r.decomposition is None else _decomposition_dict(A, r.decomposition),
        "summand_simple": list(r.summand_simple),
        "summand_classical": list(r.summand_classical),
        "summand_restricted_nondegenerate": list(r.summand_restricted_nondegenerate),
        "summand_standalone_nondegenerate": list(r.summand_standalone_nondegenerate),
        "summand_reductive_even": list(r.summand_reductive_even),
    }
    return rep, EXIT_OK if r.consistent else EXIT_FAIL


COMMANDS: dict[str, tuple[str, Callable]] = {
    "verify": ("axiom report; exit status 0 iff the axioms hold", report_verify),
    "analyze": ("simplicity, classicality, center and structural identities", report_analyze),
    "killing": ("Killing form gram matrix, nondegeneracy and radical", report_killing),
    "forms": ("basis of the invariant bilinear forms with parities", report_forms),
    "ideals": ("ideal closures, simplicity and one-sided ideal search", report_ideals),
    "decompose": ("orthogonal decomposition into minimal graded ideals", report_decompose),
    "derivations": ("alpha^k-derivation spaces and their inner parts", report_derivations),
    "criterion": ("Killing-form nondegeneracy criterion report", report_criterion),
}


# -- output ----------------------------------------------------------------

def _render_text(rep: dict, indent: int = 0) -> list[str]:
    pad = "  " * indent
    lines = []
    for key, val in rep.items():
        if isinstance(val, dict):
            lines.append(f"{pad}{key}:")
            lines += _render_text(val, indent + 1)
        elif isinstance(val, list) and val and isinstance(val[0], dict):
            lines.append(f"{pad}{key}:")
            for i, item in enumerate(val):
                lines.append(f"{pad}  [{i}]")
                lines += _render_text(item, indent + 2)
        elif key in ("gram",) and val:
            lines.append(f"{pad}{key}:")
            width = max(len(x) for row in val for x in row)
            lines += [pad + "  " + " ".join(x.rjust(width) for x in row) for row in val]
        else:
            lines.append(f"{pad}{key}: {_scalar_text(val)}")
    return lines


def _scalar_text(val) -> str:
    if val is None:
        return "-"
    if isinstance(val, bool):
        return "yes" if val else "no"
    if isinstance(val, list):
        return "[" + ", ".join(_scalar_text(v) for v in val) + "]"
    return str(val)


def resolve_algebra(ref: str) -> HomLieSuperAlgebra:
    if os.path.exists(ref):
        return load(ref)
    if ref in FIXTURE_NAMES or ref.startswith("abelian_"):
        return load_fixture(ref)
    raise UsageError(f"{ref!r} is neither a file nor a fixture ({', '.join(FIXTURE_NAMES)})")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="homlie", description="Exact analysis of Hom-Lie superalgebras.")
    sub = parser.add_subparsers(dest="command", required=True)
    for name, (help_text, _) in COMMANDS.items():
        p = sub.add_parser(name, help=help_text, description=help_text)
        p.add_argument("algebra", help="algebra file or fixture name")
        p.add_argument("--json", action="store_true", help="emit JSON")
        if name == "ideals":
            p.add_argument("--seed", action="append", help="basis name or comma-separated coordinates; repeatable")
            p.add_argument("--side", choices=["left", "right", "two"], default="two")
            p.add_argument("--graded", action=argparse.BooleanOptionalAction, default=True)
            p.add_argument("--alpha", action="store_true", help="also require alpha-invariance")
        elif name == "decompose":
            p.add_argument("--form", choices=["killing"], default="killing")
        elif name == "derivations":
            p.add_argument("--k", type=int, required=True)
            p.add_argument("--parity", choices=["even", "odd", "both"], default="both")
    return parser


def run(argv: list[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    try:
        A = resolve_algebra(args.algebra)
        rep, code = COMMANDS[args.command][1](A, args)
    except (ParseError, UsageError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    if args.json:
        out.write(json.dumps(rep, indent=2) + "\n")
    else:
        out.write("\n".join(_render_text(rep)) + "\n")
    return code


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
