"""CLI subcommands registered on the cli group."""

import json
import random

import click

from clutter_sdk import (
    VERIFIER_NAMES,
    ChordalityMode,
    ParseError,
    SimplicialComplex,
    SquarefreeMonomialIdeal,
    UniformClutter,
    betti_table,
    chordality_search,
    circuit_ideal_of_complement,
    clique_complex,
    clutter_of_complex,
    clutter_of_ideal,
    collapse_search,
    ek_betti,
    field_independence_certificate,
    free_faces,
    homology_profile,
    hunt_separating_clutter,
    linear_quotients_search,
    resolution_diagnostics,
    run_random,
    stable_to_sequence,
    stanley_reisner_complex,
    stanley_reisner_ideal,
    subclutter_search,
    verify_instance,
    verify_removal_sequence,
)
from clutter_sdk.complexes import is_empty_complex, within_skeleton
from clutter_sdk.stable import exchange_failures
from clutter_sdk.verify import RANDOM_VERIFIERS, REMOVAL_VERIFIERS

from .cli import FIELD, Session, cli, finish, output, pass_session, reported
from .fixtures import fixture_entry
from .formats import dump_subject, emit_betti_table, parse_face, parse_sequence, subject_to_json

INPUT = click.argument("source", metavar="INPUT")


class FaceType(click.ParamType):
    """A face written "1 4", "1,4" or "14"."""

    name = "face"

    def convert(self, value, param, ctx):
        try:
            return parse_face(value)
        except ParseError as e:
            self.fail(e.message, param, ctx)


FACE = FaceType()


class TargetType(click.ParamType):
    """Collapse target: skeleton:K or empty."""

    name = "target"

    def convert(self, value, param, ctx):
        if callable(value):
            return value
        if value == "empty":
            return is_empty_complex
        kind, _, k = value.partition(":")
        if kind == "skeleton" and k.lstrip("-").isdigit() and int(k) >= -1:
            return within_skeleton(int(k))
        self.fail(f"expected skeleton:K or empty, got {value!r}", param, ctx)


# ---------------------------------------------------------------------------
# Subject conversions
# ---------------------------------------------------------------------------


def ideal_of(subject, sr: bool = False) -> SquarefreeMonomialIdeal:
    """I(C̄) of a clutter, I(C̄_D) of a complex (its SR ideal with ``sr``)."""
    if isinstance(subject, SquarefreeMonomialIdeal):
        return subject
    if isinstance(subject, UniformClutter):
        return circuit_ideal_of_complement(subject)
    if sr:
        return stanley_reisner_ideal(subject)
    return circuit_ideal_of_complement(clutter_of_complex(subject))


def clutter_of(subject) -> UniformClutter:
    if isinstance(subject, UniformClutter):
        return subject
    if isinstance(subject, SimplicialComplex):
        return clutter_of_complex(subject)
    return clutter_of_ideal(subject, subject.degree())


def complex_of(subject, session: Session) -> SimplicialComplex:
    """The complex itself, Δ(C) of a clutter or the SR complex of an ideal."""
    if isinstance(subject, SimplicialComplex):
        return subject
    if isinstance(subject, UniformClutter):
        return clique_complex(subject, session.config)
    return stanley_reisner_complex(subject)


def _faces(faces) -> list:
    return [str(f) for f in faces]


# ---------------------------------------------------------------------------
# Betti engine
# ---------------------------------------------------------------------------


@cli.command()
@INPUT
@click.option("--field", type=FIELD, default="q", show_default=True, help="q, gf:p or z")
@click.option("--format", "fmt", type=click.Choice(["tsv", "json", "cbor"]), default="tsv",
              show_default=True)
@click.option("--sr", is_flag=True, help="Read a complex and use its Stanley-Reisner ideal")
@pass_session
@reported
def betti(session, source, field, fmt, sr):
    """Full multigraded Betti table with reg(I) and pd(S/I)."""
    I = ideal_of(session.read(source, complex_hint=sr), sr)
    table = betti_table(I, field, session.config)
    if session.use_json and fmt == "tsv":
        fmt = "json"
    data = emit_betti_table(table, fmt)
    if isinstance(data, bytes):
        click.get_binary_stream("stdout").write(data)
    else:
        click.echo(data, nl=False)


@cli.command()
@INPUT
@click.option("--sr", is_flag=True, help="Read a complex and use its Stanley-Reisner ideal")
@pass_session
@reported
def certify(session, source, sr):
    """Field-independence certificate from the integral torsion scan."""
    I = ideal_of(session.read(source, complex_hint=sr), sr)
    certificate = field_independence_certificate(I, session.config)
    output(certificate.as_dict())
    if not certificate.certified:
        click.get_current_context().exit(1)


@cli.command()
@INPUT
@click.option("--field", type=FIELD, default="q", show_default=True, help="q, gf:p or z")
@click.option("--sr", is_flag=True, help="Read a complex and use its Stanley-Reisner ideal")
@pass_session
@reported
def diagnostics(session, source, field, sr):
    """t/r vectors of S/I, subadditivity and special-shape verdicts."""
    I = ideal_of(session.read(source, complex_hint=sr), sr)
    output(resolution_diagnostics(I, field, session.config).as_dict())


@cli.command()
@INPUT
@click.option("--sr", is_flag=True, help="Read a complex and use its Stanley-Reisner ideal")
@pass_session
@reported
def quotients(session, source, sr):
    """Search for a generator order with linear quotients."""
    I = ideal_of(session.read(source, complex_hint=sr), sr)
    result = linear_quotients_search(I, session.config)
    finish(result, {"order": _faces(result.witness)} if result.found else {"order": None})


# ---------------------------------------------------------------------------
# Homology
# ---------------------------------------------------------------------------


@cli.command()
@INPUT
@click.option("--field", type=FIELD, default="q", show_default=True, help="q, gf:p or z")
@pass_session
@reported
def homology(session, source, field):
    """Reduced homology profile of a complex (Δ(C) for a clutter)."""
    D = complex_of(session.read_complex(source), session)
    profile = homology_profile(D, field)
    output(
        {
            "dim": D.dim,
            "f_vector": D.f_vector,
            "free_faces": len(free_faces(D)),
            "acyclic": profile.is_acyclic,
            **profile.as_dict(),
        }
    )


@cli.command()
@INPUT
@click.option("--target", type=TargetType(), default="empty", show_default=True,
              help="skeleton:K or empty")
@pass_session
@reported
def collapse(session, source, target):
    """Search for simple collapses down to a skeleton or to {∅}."""
    D = complex_of(session.read_complex(source), session)
    result = collapse_search(D, target, session.config)
    report = {}
    if result.found:
        report["steps"] = [str(step) for step in result.witness["steps"]]
        report["final"] = _faces(result.witness["final"].facet_faces)
    finish(result, report)


# ---------------------------------------------------------------------------
# Reduction engine
# ---------------------------------------------------------------------------


@cli.command()
@INPUT
@click.option("--mode", type=click.Choice([m.value for m in ChordalityMode]),
              default=ChordalityMode.DELETION.value, show_default=True)
@pass_session
@reported
def chordal(session, source, mode):
    """Chordality: a simplicial order down to ∅, or refutation."""
    C = clutter_of(session.read(source))
    result = chordality_search(C, mode, session.config)
    report = {"mode": mode}
    if result.found:
        report["order"] = _faces(step.e for step in result.witness)
        report["length"] = len(result.witness)
    finish(result, report)


@cli.command()
@click.argument("base", metavar="C")
@click.argument("target", metavar="D")
@pass_session
@reported
def subclutter(session, base, target):
    """Is D a simplicial subclutter of C? Prints the removal steps."""
    C = clutter_of(session.read(base))
    D = clutter_of(session.read(target))
    result = subclutter_search(C, D, session.config)
    finish(result, {"steps": [str(step) for step in result.witness]} if result.found else {})


@cli.command()
@INPUT
@pass_session
@reported
def stable(session, source):
    """Square-free stability, the induced removal sequence and the ek strand."""
    I = ideal_of(session.read(source))
    missing = exchange_failures(I)
    if missing:
        output({"stable": False, "missing": _faces(missing)})
        click.get_current_context().exit(1)
    seq = stable_to_sequence(I)
    final = verify_removal_sequence(seq)
    output(
        {
            "stable": True,
            "steps": [str(step) for step in seq],
            "reaches_ideal": circuit_ideal_of_complement(final).generators == I.generators,
            "ek_strand": ek_betti(I),
        }
    )


# ---------------------------------------------------------------------------
# Verification
# ---------------------------------------------------------------------------


@cli.command()
@click.argument("name", type=click.Choice(VERIFIER_NAMES))
@click.argument("source", metavar="[INPUT]", required=False)
@click.option("--random", "use_random", is_flag=True, help="Randomized instances instead of INPUT")
@click.option("--seed", type=int, default=0, show_default=True)
@click.option("--trials", type=click.IntRange(min=1), default=100, show_default=True)
@click.option("--n", "n", type=click.IntRange(min=2), default=7, show_default=True,
              help="Largest ground set of random instances")
@click.option("--d", "d", type=click.IntRange(min=1), default=None, help="Uniformity (default 2 or 3)")
@click.option("--field", type=FIELD, default="q", show_default=True, help="q or gf:p")
@click.option("--e", "e", type=FACE, default=None, help="Simplicial (d-1)-set of the removal")
@click.option("--f", "F", type=FACE, default=None, help="Removed circuit, or x_F for theorem1")
@click.option("--sequence", type=click.Path(exists=True, dir_okay=False), default=None,
              help="JSON removal steps for strand")
@pass_session
@reported
def verify(session, name, source, use_random, seed, trials, n, d, field, e, F, sequence):
    """Run a named formula verifier on INPUT or on --random instances."""
    if use_random:
        if name not in RANDOM_VERIFIERS:
            raise click.UsageError(f"{name} has no randomized mode; give an INPUT")
        report = run_random(name, seed, trials, n, d, field, session.config)
    else:
        if source is None:
            raise click.UsageError("give an INPUT or --random")
        if name == "prop44":
            subject = complex_of(session.read_complex(source), session)
        elif name in REMOVAL_VERIFIERS or name == "strand":
            subject = clutter_of(session.read(source))
        else:
            subject = ideal_of(session.read(source))
        seq = None
        if sequence is not None:
            with open(sequence, encoding="utf-8") as fh:
                seq = parse_sequence(fh.read(), subject)
        report = verify_instance(name, subject, e, F, seq, field, session.config)
    output(report.as_dict())
    if not report.ok:
        click.get_current_context().exit(1)


@cli.command()
@click.option("--n", "n", type=click.IntRange(min=2), default=6, show_default=True)
@click.option("--d", "d", type=click.IntRange(min=2), default=2, show_default=True)
@click.option("--trials", type=click.IntRange(min=1), default=200, show_default=True)
@click.option("--seed", type=int, default=0, show_default=True)
@click.option("--out", type=click.File("w"), default="-", help="Fixture file for a hit")
@pass_session
@reported
def hunt(session, n, d, trials, seed, out):
    """Random search for a clutter on which the two chordality modes disagree."""
    hit = hunt_separating_clutter(random.Random(seed), n, d, trials, session.config)
    if hit is None:
        click.echo(f"no separating clutter in {trials} trials (seed {seed})", err=True)
        click.get_current_context().exit(3)
    name = f"hunt-n{n}-d{d}-seed{seed}"
    description = "clutter on which deletion chordality and the empty-subclutter test disagree"
    json.dump(fixture_entry(name, description, hit), out, indent=2, sort_keys=True)
    out.write("\n")


# ---------------------------------------------------------------------------
# Fixtures
# ---------------------------------------------------------------------------


@cli.command()
@click.argument("name", required=False)
@click.option("--dump", type=click.Choice(["terse", "json"]), default="terse", show_default=True)
@pass_session
@reported
def fixtures(session, name, dump):
    """List the fixtures, or dump one."""
    catalog = session.catalog
    if name is None:
        if session.use_json:
            output([catalog.get(k).as_dict() for k in catalog.names])
        else:
            for k in catalog.names:
                fixture = catalog.get(k)
                click.echo(f"{k}\t{fixture.kind}\t{fixture.description}")
        return
    fixture = catalog.get(name)
    if dump == "json":
        click.echo(json.dumps(subject_to_json(fixture.subject), sort_keys=True))
    else:
        click.echo(dump_subject(fixture.subject), nl=False)
