"""Quasi-alternating classification and its independent verification.

``classify`` decides quasi-alternating status from the standard-form
parameters alone: with determinant nonzero, the link is quasi-alternating
exactly when

    (1) e < 1, or
    (2) e = 1     and alpha_i/(alpha_i - beta_i) > alpha_j/beta_j for some i != j, or
    (3) e > p - 1, or
    (4) e = p - 1 and alpha_i/(alpha_i - beta_i) < alpha_j/beta_j for some i != j,

with all inequalities strict.  ``verify`` re-derives the same answer from
first principles: orient the link so eps < 0, build the negative definite
plumbing, test the L-space property via the singularity computation
sequence, and then hunt for a lattice embedding with surjective transpose.
On every input, classify says QA exactly when verify reaches
PositiveCheck; the acceptance suite drives that equivalence.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from itertools import combinations_with_replacement
from math import gcd, prod
from typing import Iterator

from .lattice import ObstructionResult, qa_lattice_obstruction
from .laufer import LauferResult, LauferVerdict, laufer_run
from .montesinos import (MontesinosLink, StandardForm, canonical_form,
                         determinant, epsilon, format_link, reflect,
                         tangle_alpha_beta, to_negative_form, to_standard_form)
from .plumbing import adjacency_matrix, build_graph, format_graph

__all__ = [
    "Status",
    "Reason",
    "Branch",
    "Verdict",
    "Evidence",
    "classify",
    "verify",
    "enumerate_family",
    "explain",
    "render_explain",
]


class Status(str, Enum):
    QA = "QA"
    NOT_QA = "NotQA"


class Reason(str, Enum):
    CONDITION1 = "Condition1"
    CONDITION2 = "Condition2"
    CONDITION3 = "Condition3"
    CONDITION4 = "Condition4"
    DET_ZERO = "DetZero"
    NO_CONDITION = "NoConditionHolds"


class Branch(str, Enum):
    LAUFER_NOT_LSPACE = "LauferNotLSpace"
    LATTICE_OBSTRUCTED = "LatticeObstructed"
    DET_ZERO = "DetZero"
    POSITIVE_CHECK = "PositiveCheck"


@dataclass(frozen=True)
class Verdict:
    status: Status
    reason: Reason
    witness_pair: tuple[int, int] | None  # 0-based tangle indices for (2)/(4)
    normalized: StandardForm
    epsilon: Fraction
    det: int


@dataclass(frozen=True)
class Evidence:
    branch: Branch
    reflected: bool
    laufer: LauferResult | None
    obstruction: ObstructionResult | None


def _reflected_value(std: StandardForm, i: int) -> Fraction:
    alpha, beta = tangle_alpha_beta(std.tangles[i])
    return Fraction(alpha, alpha - beta)


def _strict_pair(std: StandardForm, bigger_reflected: bool) -> tuple[int, int] | None:
    """First (i, j), i != j, with refl(t_i) > t_j (or < for condition 4)."""
    for i in range(std.p):
        ri = _reflected_value(std, i)
        for j in range(std.p):
            if i == j:
                continue
            if (ri > std.tangles[j]) if bigger_reflected else (ri < std.tangles[j]):
                return (i, j)
    return None


def classify(link: MontesinosLink) -> Verdict:
    """Decide quasi-alternating status from the normalized parameters.

    A zero determinant short-circuits to NotQA.  Conditions are evaluated
    in the order (1), (3), (2), (4) with first-hit reporting; for p = 1
    one of (1) and (3) always holds, so such links are always QA.
    """
    std = to_standard_form(link)
    eps = epsilon(std)
    d = determinant(std)
    if d == 0:
        return Verdict(Status.NOT_QA, Reason.DET_ZERO, None, std, eps, 0)
    e, p = std.e, std.p
    if e < 1:
        return Verdict(Status.QA, Reason.CONDITION1, None, std, eps, d)
    if e > p - 1:
        return Verdict(Status.QA, Reason.CONDITION3, None, std, eps, d)
    if e == 1:
        pair = _strict_pair(std, bigger_reflected=True)
        if pair:
            return Verdict(Status.QA, Reason.CONDITION2, pair, std, eps, d)
    if e == p - 1:
        pair = _strict_pair(std, bigger_reflected=False)
        if pair:
            return Verdict(Status.QA, Reason.CONDITION4, pair, std, eps, d)
    return Verdict(Status.NOT_QA, Reason.NO_CONDITION, None, std, eps, d)


def verify(link: MontesinosLink) -> Evidence:
    """Re-derive the verdict from the two obstructions.

    Orient by reflection so eps < 0, build the (then negative definite)
    plumbing, and run the computation sequence; a non-rational singularity
    means no L-space and settles NotQA.  Otherwise search for a lattice
    embedding with surjective transpose: obstructed means NotQA, a witness
    completes the positive check.
    """
    std = to_standard_form(link)
    if determinant(std) == 0:
        return Evidence(Branch.DET_ZERO, False, None, None)
    reflected = epsilon(std) > 0
    side = reflect(std) if reflected else std
    graph = build_graph(to_negative_form(side))
    laufer = laufer_run(adjacency_matrix(graph))
    if laufer.verdict is LauferVerdict.NOT_RATIONAL:
        return Evidence(Branch.LAUFER_NOT_LSPACE, reflected, laufer, None)
    obstruction = qa_lattice_obstruction(graph)
    branch = Branch.LATTICE_OBSTRUCTED if obstruction.obstructed else Branch.POSITIVE_CHECK
    return Evidence(branch, reflected, laufer, obstruction)


def enumerate_family(p_max: int, alpha_max: int, e_min: int, e_max: int,
                     p_min: int = 1) -> Iterator[StandardForm]:
    """Canonical-form links with p in [p_min, p_max], alpha <= alpha_max, e in range.

    Tangle multisets are deduplicated; the order (p ascending, e ascending,
    multisets lexicographic over the descending tangle list) is deterministic.
    """
    if p_min < 1 or p_max < p_min:
        raise ValueError(f"invalid tangle-count range {p_min}..{p_max}")
    if alpha_max < 2:
        raise ValueError(f"alpha_max must be at least 2, got {alpha_max}")
    if e_min > e_max:
        raise ValueError(f"empty e range {e_min}..{e_max}")
    tangles = sorted((Fraction(a, b)
                      for a in range(2, alpha_max + 1)
                      for b in range(1, a) if gcd(a, b) == 1),
                     reverse=True)
    for p in range(p_min, p_max + 1):
        for e in range(e_min, e_max + 1):
            for combo in combinations_with_replacement(tangles, p):
                yield StandardForm(e, combo)


def _fmt(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def _condition_rows(std: StandardForm) -> list[dict]:
    e, p = std.e, std.p
    rows = [
        {"name": Reason.CONDITION1.value, "holds": e < 1,
         "detail": f"e = {e} < 1: {'yes' if e < 1 else 'no'}"},
        {"name": Reason.CONDITION3.value, "holds": e > p - 1,
         "detail": f"e = {e} > p - 1 = {p - 1}: {'yes' if e > p - 1 else 'no'}"},
    ]
    for reason, bigger in ((Reason.CONDITION2, True), (Reason.CONDITION4, False)):
        boundary = 1 if bigger else p - 1
        op = ">" if bigger else "<"
        if std.e != boundary:
            rows.append({"name": reason.value, "holds": False,
                         "detail": f"e = {e} != {boundary}: not applicable"})
            continue
        pair = _strict_pair(std, bigger)
        if pair:
            i, j = pair
            detail = (f"e = {boundary} and alpha_{i}/(alpha_{i}-beta_{i}) = "
                      f"{_fmt(_reflected_value(std, i))} {op} "
                      f"alpha_{j}/beta_{j} = {_fmt(std.tangles[j])}: yes")
            rows.append({"name": reason.value, "holds": True, "detail": detail})
        else:
            # Report the closest failing pair so the numbers are visible.
            best = None
            for i in range(p):
                ri = _reflected_value(std, i)
                for j in range(p):
                    if i == j:
                        continue
                    gap = ri - std.tangles[j] if bigger else std.tangles[j] - ri
                    if best is None or gap > best[0]:
                        best = (gap, i, j)
            if best is None:
                rows.append({"name": reason.value, "holds": False,
                             "detail": f"e = {boundary} but p = 1: no pair i != j"})
            else:
                _, i, j = best
                detail = (f"e = {boundary} but alpha_{i}/(alpha_{i}-beta_{i}) = "
                          f"{_fmt(_reflected_value(std, i))} {op} "
                          f"alpha_{j}/beta_{j} = {_fmt(std.tangles[j])} fails")
                rows.append({"name": reason.value, "holds": False, "detail": detail})
    return rows


def explain(link: MontesinosLink, include_verify: bool = False) -> dict:
    """Structured classification trace; JSON-friendly throughout.

    With ``include_verify`` the report also carries the reflection decision,
    the plumbing graph, a summary of the computation sequence, and the
    embedding search statistics.
    """
    std = to_standard_form(link)
    verdict = classify(link)

    normalization = []
    for idx, t in enumerate(link.tangles):
        alpha, beta = tangle_alpha_beta(t)
        shift = ((beta % alpha) - beta) // alpha
        if shift:
            normalization.append(
                f"tangle {idx}: {_fmt(t)} -> {_fmt(std.tangles[idx])} (e adjusted by {shift})")
    if not normalization:
        normalization.append("already in standard form")

    terms = " - ".join(f"{b}/{a}" for a, b in zip(std.alphas, std.betas))
    det_computation = f"|{prod(std.alphas)}({std.e} - {terms})| = {verdict.det}"

    report = {
        "input": format_link(link),
        "standard_form": format_link(std),
        "canonical_form": format_link(canonical_form(link)),
        "normalization": normalization,
        "epsilon": f"{verdict.epsilon.numerator}/{verdict.epsilon.denominator}",
        "det": verdict.det,
        "det_computation": det_computation,
        "conditions": _condition_rows(std),
        "status": verdict.status.value,
        "reason": verdict.reason.value,
        "witness_pair": list(verdict.witness_pair) if verdict.witness_pair else None,
        "verify": None,
    }
    if include_verify:
        report["verify"] = _verify_trace(link)
    return report


def _verify_trace(link: MontesinosLink) -> dict:
    evidence = verify(link)
    trace: dict = {"branch": evidence.branch.value, "reflected": evidence.reflected}
    if evidence.branch is Branch.DET_ZERO:
        return trace
    std = to_standard_form(link)
    side = reflect(std) if evidence.reflected else std
    negative = to_negative_form(side)
    graph = build_graph(negative)
    trace["oriented_form"] = format_link(side)
    trace["negative_form"] = format_link(negative)
    trace["graph"] = format_graph(graph).strip().splitlines()
    laufer = evidence.laufer
    trace["laufer"] = {
        "verdict": laufer.verdict.value,
        "steps": laufer.steps,
        "cycle": list(laufer.cycle),
        "witness": laufer.witness,
    }
    if evidence.obstruction is not None:
        obstruction = evidence.obstruction
        trace["embedding_search"] = {
            "obstructed": obstruction.obstructed,
            "examined_per_rank": [list(pair) for pair in obstruction.examined],
            "total_examined": obstruction.total_examined,
            "witness_rank": obstruction.witness_n,
            "witness_rows": ([list(row) for row in obstruction.witness.matrix]
                             if obstruction.witness else None),
        }
    return trace


def render_explain(report: dict) -> str:
    """Human-readable rendering of an explain report."""
    lines = [f"link:           {report['input']}",
             f"standard form:  {report['standard_form']}",
             f"canonical form: {report['canonical_form']}"]
    for step in report["normalization"]:
        lines.append(f"  normalize: {step}")
    lines.append(f"epsilon:        {report['epsilon']}")
    lines.append(f"determinant:    {report['det_computation']}")
    for row in report["conditions"]:
        mark = "holds" if row["holds"] else "fails"
        lines.append(f"  {row['name']}: {mark}  ({row['detail']})")
    lines.append(f"verdict:        {report['status']} ({report['reason']})")
    if report["witness_pair"] is not None:
        lines.append(f"witness pair:   {tuple(report['witness_pair'])}")
    trace = report.get("verify")
    if trace:
        lines.append(f"verify branch:  {trace['branch']}"
                     f" (reflected: {'yes' if trace['reflected'] else 'no'})")
        if "negative_form" in trace:
            lines.append(f"  oriented form: {trace['oriented_form']}")
            lines.append(f"  negative form: {trace['negative_form']}")
            lines.append("  graph: " + "; ".join(trace["graph"]))
            laufer = trace["laufer"]
            lines.append(f"  laufer: {laufer['verdict']} after {laufer['steps']} steps,"
                         f" cycle {laufer['cycle']}, witness {laufer['witness']}")
            search = trace.get("embedding_search")
            if search:
                per_rank = ", ".join(f"n={n}: {c}" for n, c in search["examined_per_rank"])
                lines.append(f"  embeddings examined: {search['total_examined']} ({per_rank})")
                if search["witness_rows"] is not None:
                    lines.append(f"  surjective witness at n={search['witness_rank']}:")
                    for row in search["witness_rows"]:
                        lines.append("    " + " ".join(f"{v:3d}" for v in row))
                else:
                    lines.append("  no embedding has surjective transpose")
    return "\n".join(lines)
