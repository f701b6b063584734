#!/usr/bin/env python3
"""
Command-line entry point for hopfscope.

Every command reads JSON inputs, runs its computation and writes one
deterministic JSON report to the report directory.

Usage:
    python main.py example --name case-ii --n 2 --emit h.json
    python main.py verify --level hopf h.json
    python main.py rep-type h.json --dot quiver.dot
    python main.py combi --m 5 --z zeta5^2

Exit codes: 0 when every check passes, 1 when some check fails (the report
is still written), 2 on invalid input.
"""
import functools
import hashlib
import json
import logging
import sys
from pathlib import Path
from typing import Any, Callable, Dict, List, Optional, Sequence

import click

from config import config, get_cache_settings, get_compute_settings, get_report_settings
from errors import DimensionMismatch, HopfscopeError
from exactfield import CycloNumber, primitive_root_order
from tensorcore import (
    LEVELS,
    CheckResult,
    HopfData,
    MatrixOverAlgebra,
    VerificationReport,
    map_from_json,
    map_to_json,
    verify_axioms,
)
from coradical import Subspace, coradical, coradical_blocks, coradical_filtration, dual_chevalley_property
from quiver import LinkQuiver, link_quiver, one_sided_invariants, verdict_from_quiver, write_dot
from basedring import build_based_ring, fp_sides, verify_arrow_consistency, verify_based_axioms, verify_fpequation
from tamefrob import (
    FAMILIES,
    VARIANTS,
    build_tame_quotient,
    check_caseI_constraints,
    check_H_identities,
    check_vanishing_criterion,
    combi_poly,
    confluence_check,
    is_diagonal,
    k_to_json,
    k_to_text,
    solve_K,
)
from bosonize import (
    NAMES,
    RadfordSplitting,
    YDData,
    bosonize,
    braided_coproduct_report,
    example,
    radford_projection,
    radford_report,
    verify_splitting,
    verify_yd,
)
from storage import CacheManager, ReportStore, canonical_json

VERSION = "0.1.0"

logging.basicConfig(
    level=getattr(logging, config["system"]["log_level"], logging.INFO),
    format='%(asctime)s - %(name)s - %(levelname)s - %(message)s',
    stream=sys.stderr,
)
logger = logging.getLogger(__name__)


def _load_json(path: str) -> Any:
    with open(path, 'r') as f:
        return json.load(f)


def _load_hints(path: Optional[str], order: int) -> Optional[List[Subspace]]:
    if not path:
        return None
    data = _load_json(path)
    return [Subspace.from_json(item, order) for item in data]


def _check(report: VerificationReport, name: str, passed: Optional[bool], detail: str = "",
           witness: Optional[List[Any]] = None):
    report.add(CheckResult(name=name, passed=passed, witness=witness, detail=detail))


def _digest(inputs: Sequence[str], options: Dict[str, Any]) -> str:
    """sha256 over the input files followed by the canonical options."""
    digest = hashlib.sha256()
    for path in inputs:
        digest.update(Path(path).read_bytes())
    digest.update(canonical_json(options, None).encode())
    return digest.hexdigest()


def _finish(ctx: click.Context, command: str, inputs: Sequence[str], options: Dict[str, Any],
            result: Dict[str, Any], report: Optional[VerificationReport] = None):
    """Write the report and exit with 0 or 1."""
    passed = report.passed if report is not None else True
    digest = _digest(inputs, options)
    body = {
        "tool": "hopfscope",
        "version": VERSION,
        "command": command,
        "input_sha256": digest,
        "options": options,
        "passed": passed,
        "result": result,
    }
    if report is not None:
        body["checks"] = report.to_dict()
    if ctx.obj["save_to_file"]:
        path = ctx.obj["store"].store_report(command, digest, body)
        click.echo(str(path))
    else:
        click.echo(canonical_json(body, ctx.obj["indent"]), nl=False)
    if not passed:
        logger.error(f"{command}: {len(report.failed_checks)} check(s) failed")
    ctx.exit(0 if passed else 1)


def handle_errors(fn: Callable) -> Callable:
    """Map input and validation errors to exit code 2."""

    @functools.wraps(fn)
    def wrapper(*args, **kwargs):
        try:
            return fn(*args, **kwargs)
        except (HopfscopeError, json.JSONDecodeError, OSError) as e:
            logger.error(f"{type(e).__name__}: {e}")
            click.echo(f"❌ {type(e).__name__}: {e}", err=True)
            sys.exit(2)

    return wrapper


@click.group()
@click.version_option(VERSION, prog_name="hopfscope")
@click.option("--threads", type=int, default=None, help="Worker threads (config compute.threads).")
@click.option("--output-dir", type=click.Path(file_okay=False), default=None,
              help="Report directory (config report.output_dir).")
@click.option("--log-level", type=click.Choice(["DEBUG", "INFO", "WARNING", "ERROR"], case_sensitive=False),
              default=None, help="Logging level (config system.log_level).")
@click.option("--stdout", "to_stdout", is_flag=True, help="Print the report instead of writing a file.")
@click.pass_context
def cli(ctx: click.Context, threads: Optional[int], output_dir: Optional[str], log_level: Optional[str],
        to_stdout: bool):
    """Exact computations on finite-dimensional Hopf algebras."""
    if log_level:
        logging.getLogger().setLevel(getattr(logging, log_level.upper()))
    compute = get_compute_settings(config)
    report_settings = get_report_settings(config)
    save = report_settings.get("save_to_file", True) and not to_stdout
    ctx.obj = {
        "threads": max(1, threads or compute.get("threads", 1)),
        "exhaustive": compute.get("exhaustive", False),
        "save_to_file": save,
        "indent": report_settings.get("indent", 2),
        "store": ReportStore(output_dir) if save else None,
    }


def _exhaustive(ctx: click.Context, flag: bool) -> bool:
    return flag or ctx.obj["exhaustive"]


@cli.command()
@click.argument("input_path", type=click.Path(exists=True, dir_okay=False))
@click.option("--level", type=click.Choice(LEVELS), default=None, help="Axiom level (default: the file's level).")
@click.option("--exhaustive", is_flag=True, help="Collect every witness instead of the first.")
@click.pass_context
@handle_errors
def verify(ctx, input_path, level, exhaustive):
    """Check the axioms of a structure-constant file."""
    h = HopfData.load(input_path)
    level = level or h.level
    report = verify_axioms(h, level, _exhaustive(ctx, exhaustive), ctx.obj["threads"])
    result = {"name": h.name, "dim": h.dim, "conductor": h.order, "level": level}
    _finish(ctx, "verify", [input_path], {"level": level, "exhaustive": exhaustive}, result, report)


@cli.command("coradical")
@click.argument("input_path", type=click.Path(exists=True, dir_okay=False))
@click.option("--dual-chevalley", is_flag=True, help="Require the coradical to be a Hopf subalgebra.")
@click.option("--blocks", "with_blocks", is_flag=True, help="Also decompose the coradical into simples.")
@click.option("--simples-hint", type=click.Path(exists=True, dir_okay=False), default=None,
              help="JSON list of subspaces spanning simple subcoalgebras.")
@click.option("--full", is_flag=True, help="Include the bases of every filtration step.")
@click.pass_context
@handle_errors
def coradical_command(ctx, input_path, dual_chevalley, with_blocks, simples_hint, full):
    """Coradical, coradical filtration and simple subcoalgebras."""
    h = HopfData.load(input_path)
    h0 = coradical(h)
    filtration = coradical_filtration(h, h0)
    result: Dict[str, Any] = {
        "dim": h.dim,
        "coradical_dim": h0.dim,
        "filtration": [space.dim for space in filtration],
    }
    if full:
        result["bases"] = [space.to_json() for space in filtration]
    report = VerificationReport(subject=f"coradical of {h.name or input_path}")
    if dual_chevalley:
        _check(report, "dual_chevalley", dual_chevalley_property(h, h0))
    inputs = [input_path]
    if with_blocks or simples_hint:
        hints = _load_hints(simples_hint, h.order)
        if simples_hint:
            inputs.append(simples_hint)
        result["blocks"] = [b.to_json() for b in coradical_blocks(h, hints, h0=h0)]
    _finish(ctx, "coradical", inputs, {"dual_chevalley": dual_chevalley, "blocks": with_blocks, "full": full},
            result, report)


def _quiver_from(ctx, input_path: str, simples_hint: Optional[str]) -> LinkQuiver:
    h = HopfData.load(input_path)
    hints = _load_hints(simples_hint, h.order)
    return link_quiver(h, hints=hints, threads=ctx.obj["threads"])


def _write_dots(q: LinkQuiver, dot: Optional[str], separated_dot: Optional[str]):
    if dot:
        write_dot(q, dot)
    if separated_dot:
        write_dot(q, separated_dot, separated=True)


def _balance_check(report: VerificationReport, q: LinkQuiver):
    inv = one_sided_invariants(q)
    _check(report, "into_equals_out", inv.balanced, detail=f"|1P| = {inv.into_count}, |P1| = {inv.out_count}")


@cli.command("link-quiver")
@click.argument("input_path", type=click.Path(exists=True, dir_okay=False))
@click.option("--simples-hint", type=click.Path(exists=True, dir_okay=False), default=None,
              help="JSON list of subspaces spanning simple subcoalgebras.")
@click.option("--dual-chevalley", is_flag=True, help="Assert |1P| = |P1| (coradical is a Hopf subalgebra).")
@click.option("--dot", type=click.Path(dir_okay=False), default=None, help="Write the link quiver as DOT.")
@click.option("--separated-dot", type=click.Path(dir_okay=False), default=None,
              help="Write the separated quiver as DOT.")
@click.pass_context
@handle_errors
def link_quiver_command(ctx, input_path, simples_hint, dual_chevalley, dot, separated_dot):
    """Link quiver and the arrows at the trivial vertex."""
    q = _quiver_from(ctx, input_path, simples_hint)
    report = VerificationReport(subject=f"link quiver of {input_path}")
    if dual_chevalley:
        _balance_check(report, q)
    _write_dots(q, dot, separated_dot)
    result = {"quiver": q.to_json(), "invariants": one_sided_invariants(q).to_dict(),
              "link_indecomposable": q.is_link_indecomposable(),
              "trivial_component": q.component_of_trivial() if q.trivial else None}
    inputs = [input_path] + ([simples_hint] if simples_hint else [])
    _finish(ctx, "link-quiver", inputs, {"dual_chevalley": dual_chevalley}, result, report)


@cli.command("rep-type")
@click.argument("input_path", required=False, type=click.Path(exists=True, dir_okay=False))
@click.option("--quiver", "quiver_path", type=click.Path(exists=True, dir_okay=False), default=None,
              help="Decide from a link quiver JSON instead of a coalgebra.")
@click.option("--simples-hint", type=click.Path(exists=True, dir_okay=False), default=None,
              help="JSON list of subspaces spanning simple subcoalgebras.")
@click.option("--dual-chevalley", is_flag=True, help="Assert |1P| = |P1| (coradical is a Hopf subalgebra).")
@click.option("--dot", type=click.Path(dir_okay=False), default=None, help="Write the link quiver as DOT.")
@click.option("--separated-dot", type=click.Path(dir_okay=False), default=None,
              help="Write the separated quiver as DOT.")
@click.pass_context
@handle_errors
def rep_type(ctx, input_path, quiver_path, simples_hint, dual_chevalley, dot, separated_dot):
    """Corepresentation type from the link quiver."""
    if bool(input_path) == bool(quiver_path):
        raise click.UsageError("give exactly one of INPUT_PATH and --quiver")
    if quiver_path:
        q = LinkQuiver.from_json(_load_json(quiver_path))
        inputs = [quiver_path]
    else:
        q = _quiver_from(ctx, input_path, simples_hint)
        inputs = [input_path] + ([simples_hint] if simples_hint else [])
    verdict = verdict_from_quiver(q)
    verdict.evidence["quiver"] = q.to_json()
    report = VerificationReport(subject="corepresentation type")
    if dual_chevalley:
        _balance_check(report, q)
    _write_dots(q, dot, separated_dot)
    _finish(ctx, "rep-type", inputs, {"dual_chevalley": dual_chevalley}, verdict.to_dict(), report)


@cli.command("based-ring")
@click.argument("input_path", type=click.Path(exists=True, dir_okay=False))
@click.option("--arrows", is_flag=True, help="Also compare the table with the link quiver arrows.")
@click.pass_context
@handle_errors
def based_ring(ctx, input_path, arrows):
    """Based ring of simple subcoalgebras with its axiom checks."""
    h = HopfData.load(input_path)
    h0 = coradical(h)
    blocks = coradical_blocks(h, h0=h0)
    table = build_based_ring(h, blocks=blocks, h0=h0, threads=ctx.obj["threads"])
    report = verify_based_axioms(table)
    sides = {}
    for k, label in enumerate(table.simples):
        left, right = fp_sides(table, k)
        sides[label] = [left, right]
        _check(report, f"fpequation_{label}", verify_fpequation(table, k), detail=f"{left} vs {right}")
    if arrows:
        q = link_quiver(h, blocks=blocks, threads=ctx.obj["threads"])
        report.extend(verify_arrow_consistency(table, q))
    result = {"table": table.to_json(), "fpequation": sides}
    _finish(ctx, "based-ring", [input_path], {"arrows": arrows}, result, report)


@cli.command("tame-ideal")
@click.option("--family", type=click.Choice(FAMILIES), required=True)
@click.option("--a", "a_text", default=None, help="Scalar a for F1 and F2, e.g. -1 or zeta3.")
@click.option("--m", type=int, default=None, help="Parameter m for F2 and F4.")
@click.option("--n", type=int, default=None, help="Parameter n for F3.")
@click.option("--emit", type=click.Path(dir_okay=False), default=None, help="Write the algebra JSON here.")
@click.option("--samples", type=int, default=200, help="Random words for the confluence check.")
@click.pass_context
@handle_errors
def tame_ideal(ctx, family, a_text, m, n, emit, samples):
    """Local graded Frobenius quotient k<x, y>/I of one of the four families."""
    a = CycloNumber.parse(a_text) if a_text is not None else None
    h, presented = build_tame_quotient(family, a=a, m=m, n=n)
    report = VerificationReport(subject=f"tame quotient {h.name}")
    frob = presented.frobenius
    _check(report, "socle_dim_one", frob.socle_dim == 1, detail=f"socle dim {frob.socle_dim}")
    _check(report, "pairing_nondegenerate", frob.gram_rank == frob.dim, detail=f"gram rank {frob.gram_rank}")
    _check(report, "local", frob.is_local)
    seed = get_compute_settings(config).get("random_seed", 0)
    _check(report, "confluent", confluence_check(presented, samples=samples, seed=seed))
    if emit:
        h.save(emit)
    result = {"dim": h.dim, "presentation": presented.to_json()}
    options = {"family": family, "a": a_text, "m": m, "n": n, "samples": samples}
    _finish(ctx, "tame-ideal", [], options, result, report)


@cli.command()
@click.option("--m", type=int, required=True, help="m >= 2.")
@click.option("--l", "l_value", type=int, default=None, help="Print H1, H2, H3 at this l only.")
@click.option("--z", "z_text", default=None, help="Also test the vanishing criterion at this root of unity.")
@click.pass_context
@handle_errors
def combi(ctx, m, l_value, z_text):
    """The polynomials H1, H2, H3 and the vanishing criterion."""
    report = VerificationReport(subject=f"combinatorial identities at m={m}")
    result: Dict[str, Any] = {"m": m}
    if l_value is not None:
        polys = {v: combi_poly(v, m, l_value) for v in VARIANTS}
        result["l"] = l_value
        result["polynomials"] = {v: p.to_json() for v, p in polys.items()}
        _check(report, "H_identities", len({str(p) for p in polys.values()}) == 1)
    else:
        _check(report, "H_identities", check_H_identities(m))
    if z_text is not None:
        z = CycloNumber.parse(z_text)
        vanish = check_vanishing_criterion(m, z)
        primitive = primitive_root_order(z) == m
        result["z"] = z_text
        result["vanishes"] = vanish
        result["primitive"] = primitive
        _check(report, "vanishing_matches_primitivity", vanish == primitive)
    _finish(ctx, "combi", [], {"m": m, "l": l_value, "z": z_text}, result, report)


@cli.command("bosonize")
@click.option("--r", "r_path", type=click.Path(exists=True, dir_okay=False), required=True,
              help="R with multiplication and comultiplication.")
@click.option("--hp", "hp_path", type=click.Path(exists=True, dir_okay=False), required=True,
              help="The Hopf algebra H'.")
@click.option("--action", "action_path", type=click.Path(exists=True, dir_okay=False), required=True,
              help="Rows [h, r, k, scalar]: coefficient of b_k in h . r.")
@click.option("--coaction", "coaction_path", type=click.Path(exists=True, dir_okay=False), required=True,
              help="Rows [r, h, k, scalar]: coefficient of h (x) b_k in delta(r).")
@click.option("--emit", type=click.Path(dir_okay=False), default=None, help="Write the biproduct JSON here.")
@click.option("--exhaustive", is_flag=True, help="Collect every witness instead of the first.")
@click.pass_context
@handle_errors
def bosonize_command(ctx, r_path, hp_path, action_path, coaction_path, emit, exhaustive):
    """Radford biproduct R x H' of Yetter-Drinfeld data."""
    R = HopfData.load(r_path)
    hp = HopfData.load(hp_path)
    d = YDData.from_tables(R, hp, _load_json(action_path), _load_json(coaction_path), name=R.name)
    threads = ctx.obj["threads"]
    report = verify_yd(d, _exhaustive(ctx, exhaustive), threads)
    result: Dict[str, Any] = {"dim_R": R.dim, "dim_Hp": hp.dim}
    if report.passed:
        H = bosonize(d, check=False)
        report.extend(verify_axioms(H, "hopf", _exhaustive(ctx, exhaustive), threads))
        result["dim"] = H.dim
        result["fingerprint"] = H.fingerprint()
        if emit:
            H.save(emit)
    _finish(ctx, "bosonize", [r_path, hp_path, action_path, coaction_path], {"exhaustive": exhaustive},
            result, report)


def _load_map(path: str, order: int, rows: int, cols: int, what: str):
    f, r, c = map_from_json(_load_json(path), order)
    if (r, c) != (rows, cols):
        raise DimensionMismatch(f"{what} is {r} x {c}, expected {rows} x {cols}")
    return f


@cli.command()
@click.option("--h", "h_path", type=click.Path(exists=True, dir_okay=False), required=True,
              help="The Hopf algebra H.")
@click.option("--hp", "hp_path", type=click.Path(exists=True, dir_okay=False), required=True,
              help="The Hopf algebra H'.")
@click.option("--proj", "proj_path", type=click.Path(exists=True, dir_okay=False), required=True,
              help="pi: H -> H' as a linear map JSON.")
@click.option("--incl", "incl_path", type=click.Path(exists=True, dir_okay=False), required=True,
              help="i: H' -> H as a linear map JSON.")
@click.option("--exhaustive", is_flag=True, help="Collect every witness instead of the first.")
@click.pass_context
@handle_errors
def radford(ctx, h_path, hp_path, proj_path, incl_path, exhaustive):
    """Radford projection, the coinvariants R_H and the braided coproduct."""
    H = HopfData.load(h_path)
    hp = HopfData.load(hp_path)
    proj = _load_map(proj_path, H.order, hp.dim, H.dim, "proj")
    incl = _load_map(incl_path, H.order, H.dim, hp.dim, "incl")
    s = RadfordSplitting(H=H, hp=hp, proj=proj, incl=incl)
    threads = ctx.obj["threads"]
    report = verify_splitting(s, _exhaustive(ctx, exhaustive), threads)
    result: Dict[str, Any] = {"dim_H": H.dim, "dim_Hp": hp.dim}
    if report.passed:
        Pi, R_H = radford_projection(s, check=False, threads=threads)
        report.extend(radford_report(s, Pi, R_H))
        report.extend(braided_coproduct_report(s, Pi, R_H))
        result["dim_R_H"] = R_H.dim
        result["R_H"] = R_H.to_json()
        result["Pi"] = map_to_json(Pi, H.dim, H.dim)
    _finish(ctx, "radford", [h_path, hp_path, proj_path, incl_path], {"exhaustive": exhaustive}, result, report)


def _write_json(path: str, data: Any):
    Path(path).write_text(canonical_json(data), encoding="utf-8")
    logger.info(f"Wrote {path}")


@cli.command("example")
@click.option("--name", type=click.Choice(NAMES), required=True)
@click.option("--n", type=int, default=None, help="Order of the cyclic group (case-ii).")
@click.option("--n1", type=int, default=None, help="case-iii: order of the first factor.")
@click.option("--n2", type=int, default=None, help="case-iii: order of the second factor.")
@click.option("--alpha", default=None, help="case-iii: scalar alpha.")
@click.option("--beta", default=None, help="case-iii: scalar beta.")
@click.option("--m", type=int, default=None, help="case-iii: exponent m.")
@click.option("--sign", type=int, default=None, help="taft: sign of the action on x.")
@click.option("--emit", type=click.Path(dir_okay=False), default=None, help="Write the Hopf algebra JSON here.")
@click.option("--emit-splitting", type=click.Path(file_okay=False), default=None,
              help="Directory for hp.json, proj.json and incl.json of the canonical splitting.")
@click.option("--verify/--no-verify", "run_verify", default=False, help="Also run the Hopf axiom checks.")
@click.pass_context
@handle_errors
def example_command(ctx, name, n, n1, n2, alpha, beta, m, sign, emit, emit_splitting, run_verify):
    """Build one of the catalog Hopf algebras."""
    params = {k: v for k, v in (("n", n), ("n1", n1), ("n2", n2), ("alpha", alpha), ("beta", beta),
                                ("m", m), ("sign", sign)) if v is not None}
    cache = CacheManager(stamp=VERSION) if get_cache_settings(config).get("enabled", False) else None
    entry = example(name, threads=ctx.obj["threads"], cache=cache, **params)
    H = entry.hopf
    report = VerificationReport(subject=f"catalog entry {entry.name}")
    if run_verify:
        report.extend(verify_axioms(H, "hopf", ctx.obj["exhaustive"], ctx.obj["threads"]))
    if emit:
        H.save(emit)
    if emit_splitting:
        out = Path(emit_splitting)
        out.mkdir(parents=True, exist_ok=True)
        s = entry.splitting
        s.hp.save(out / "hp.json")
        _write_json(str(out / "proj.json"), map_to_json(s.proj, s.hp.dim, H.dim))
        _write_json(str(out / "incl.json"), map_to_json(s.incl, H.dim, s.hp.dim))
    options = {"name": name, "params": {k: str(v) for k, v in sorted(params.items())}, "verify": run_verify}
    _finish(ctx, "example", [], options, entry.summary(), report)


def _load_matrix(carrier: HopfData, path: str) -> MatrixOverAlgebra:
    return MatrixOverAlgebra.from_json(carrier, _load_json(path))


@cli.command("solve-k")
@click.option("--name", type=click.Choice(["d8star", "q8star", "h8"]), default=None,
              help="Use the C and X of a catalog entry.")
@click.option("--h", "h_path", type=click.Path(exists=True, dir_okay=False), default=None,
              help="Carrier Hopf algebra of C and X.")
@click.option("--c", "c_path", type=click.Path(exists=True, dir_okay=False), default=None,
              help="The basic multiplicative matrix C.")
@click.option("--x", "x_path", type=click.Path(exists=True, dir_okay=False), default=None,
              help="The primitive matrix X.")
@click.option("--m", type=int, default=None, help="Check the case (i) constraints with this m.")
@click.option("--a", "a_text", default=None, help="Relation scalar a for the case (i) constraints.")
@click.pass_context
@handle_errors
def solve_k(ctx, name, h_path, c_path, x_path, m, a_text):
    """The scalar matrix K with X (.) C = K (x) (C (.) X)."""
    if name:
        cache = CacheManager(stamp=VERSION) if get_cache_settings(config).get("enabled", False) else None
        entry = example(name, threads=ctx.obj["threads"], cache=cache)
        C, X = entry.C, entry.X
        inputs: List[str] = []
    else:
        if not (h_path and c_path and x_path):
            raise click.UsageError("give --name or all of --h, --c and --x")
        carrier = HopfData.load(h_path)
        C, X = _load_matrix(carrier, c_path), _load_matrix(carrier, x_path)
        inputs = [h_path, c_path, x_path]
    K = solve_K(C, X)
    report = VerificationReport(subject="K matrix")
    result: Dict[str, Any] = {"K": k_to_json(K), "text": k_to_text(K), "diagonal": is_diagonal(K)}
    if m is not None:
        a = CycloNumber.parse(a_text) if a_text is not None else CycloNumber.rational(-1)
        report.extend(check_caseI_constraints(K, m, a))
    _finish(ctx, "solve-k", inputs, {"name": name, "m": m, "a": a_text}, result, report)


if __name__ == "__main__":
    cli()
