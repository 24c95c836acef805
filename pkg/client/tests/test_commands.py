import json
import logging

import cbor2
import pytest

from clutter_sdk import SquarefreeMonomialIdeal, betti_table, encode_table
from clutter_cli.cli import cli
from clutter_cli.commands import verify

log = logging.getLogger("test.commands")


def run(runner, *args, **kwargs):
    result = runner.invoke(cli, list(args), **kwargs)
    log.debug(f"{' '.join(args)} -> {result.exit_code}\n{result.output}")
    return result


def run_json(runner, *args):
    result = run(runner, "--json", *args)
    return result, json.loads(result.stdout)


def test_version(runner):
    result = run(runner, "--version")
    assert result.exit_code == 0
    assert "0.1.0" in result.output


def test_chordal_figure1(runner):
    log.info("=== Starting test_chordal_figure1 ===")
    result = run(runner, "chordal", "fixtures:figure1-c")
    assert result.exit_code == 0
    assert "length: 6" in result.output

    result, report = run_json(runner, "chordal", "fixtures:figure1-c")
    assert report["outcome"] == "found"
    assert report["order"] == ["{1,3}", "{1,4}", "{1,2}", "{1,5}", "{2,3}", "{2,5}"]

    result, report = run_json(runner, "chordal", "fixtures:figure1-d")
    assert result.exit_code == 1
    assert report["outcome"] == "refuted"
    assert report["reason"] == "no simplicial maximal subcircuit at step 0"
    log.info("✓ test_chordal_figure1 passed")


def test_chordal_modes_and_budget(runner):
    log.info("=== Starting test_chordal_modes_and_budget ===")
    assert run(runner, "chordal", "--mode", "empty-subclutter", "fixtures:figure1-c").exit_code == 0
    assert run(runner, "chordal", "--mode", "empty-subclutter", "fixtures:figure1-d").exit_code == 1
    result, report = run_json(runner, "--budget", "2", "chordal", "fixtures:figure1-c")
    assert result.exit_code == 3
    assert report["outcome"] == "unknown"
    assert run(runner, "chordal", "--mode", "sideways", "fixtures:figure1-c").exit_code == 2
    log.info("✓ test_chordal_modes_and_budget passed")


def test_subclutter(runner):
    log.info("=== Starting test_subclutter ===")
    result, report = run_json(runner, "subclutter", "fixtures:complete-5-2", "fixtures:bowtie")
    assert result.exit_code == 1
    assert report["outcome"] == "refuted"
    result, report = run_json(runner, "subclutter", "fixtures:figure2-graph-g", "fixtures:figure2-graph-g3")
    assert result.exit_code == 0
    assert len(report["steps"]) == 5
    log.info("✓ test_subclutter passed")


def test_betti_formats(runner):
    log.info("=== Starting test_betti_formats ===")
    result = run(runner, "betti", "fixtures:example1-ideal")
    assert result.exit_code == 0
    assert result.stdout.splitlines()[0] == "# n=5 field=q reg=4 pd=2"
    assert result.stdout.splitlines()[-1] == "3\t0\t0\t1"

    result = run(runner, "betti", "--format", "json", "fixtures:example1-ideal")
    assert [1, [1, 2, 3, 4, 5], 1] in json.loads(result.stdout)["triples"]
    assert run(runner, "--json", "betti", "fixtures:example1-ideal").stdout == result.stdout

    I = SquarefreeMonomialIdeal.from_generators(5, [(1, 4, 5), (2, 3, 5)])
    result = run(runner, "betti", "--format", "cbor", "fixtures:example1-ideal")
    assert result.stdout_bytes == encode_table(betti_table(I))
    document = cbor2.loads(result.stdout_bytes)
    assert document["kind"] == "betti"
    assert [1, [1, 2, 3, 4, 5], 1] in document["triples"]
    log.info("✓ test_betti_formats passed")


def test_betti_of_complex_inputs(runner):
    log.info("=== Starting test_betti_of_complex_inputs ===")
    # I(C̄_D) of the dunce hat has a 3-linear resolution
    result, table = run_json(runner, "betti", "fixtures:dunce-hat")
    assert result.exit_code == 0
    assert table["reg"] == 3
    # the Stanley-Reisner ideal of RP^2 sees torsion over GF(2)
    result, table = run_json(runner, "betti", "--sr", "--field", "gf:2", "fixtures:rp2-test")
    assert [3, [1, 2, 3, 4, 5, 6], 1] in table["triples"]
    log.info("✓ test_betti_of_complex_inputs passed")


def test_input_from_stdin_and_file(runner, tmp_path):
    log.info("=== Starting test_input_from_stdin_and_file ===")
    result = run(runner, "chordal", "-", input="4 3\n1 2 3\n")
    assert result.exit_code == 0
    path = tmp_path / "d.txt"
    path.write_text("5 3\n1 2 3\n1 2 4\n1 3 4\n2 3 5\n2 4 5\n3 4 5\n")
    assert run(runner, "chordal", str(path)).exit_code == 1
    assert run(runner, "chordal", str(tmp_path / "missing.txt")).exit_code == 2
    log.info("✓ test_input_from_stdin_and_file passed")


def test_parse_errors_exit_2(runner):
    log.info("=== Starting test_parse_errors_exit_2 ===")
    result = run(runner, "chordal", "-", input="4 3\n1 1 2\n")
    assert result.exit_code == 2
    assert "line 2, column 3" in result.output
    result = run(runner, "chordal", "fixtures:figure9")
    assert result.exit_code == 2
    assert "unknown fixture" in result.output
    assert run(runner, "betti", "--field", "gf:4", "fixtures:bowtie").exit_code == 2
    log.info("✓ test_parse_errors_exit_2 passed")


def test_guard_exit_2(runner):
    result = run(runner, "--max-n", "8", "betti", "fixtures:bing-house")
    assert result.exit_code == 2
    assert "--max-n" in result.output


def test_homology_and_collapse(runner):
    log.info("=== Starting test_homology_and_collapse ===")
    result, report = run_json(runner, "homology", "--field", "z", "fixtures:dunce-hat")
    assert result.exit_code == 0
    assert report["acyclic"] is True
    assert report["free_faces"] == 0
    result, report = run_json(runner, "homology", "--field", "gf:2", "fixtures:rp2-test")
    assert report["ranks"]["1"] == 1

    result, report = run_json(runner, "collapse", "fixtures:dunce-hat")
    assert result.exit_code == 1
    assert report["reason"] == "no free face"
    assert run(runner, "collapse", "--target", "skeleton:1", "fixtures:figure1-c").exit_code == 0
    assert run(runner, "collapse", "--target", "sphere", "fixtures:figure1-c").exit_code == 2
    log.info("✓ test_homology_and_collapse passed")


def test_stable(runner):
    log.info("=== Starting test_stable ===")
    result, report = run_json(runner, "stable", "fixtures:stable-5")
    assert result.exit_code == 0
    assert report["reaches_ideal"] is True
    assert report["ek_strand"] == [5, 5, 1]
    result, report = run_json(runner, "stable", "fixtures:five-cycle")
    assert result.exit_code == 1
    assert report["stable"] is False
    log.info("✓ test_stable passed")


def test_quotients_and_diagnostics(runner):
    log.info("=== Starting test_quotients_and_diagnostics ===")
    result, report = run_json(runner, "quotients", "fixtures:bowtie")
    assert result.exit_code == 0
    assert len(report["order"]) == 4
    result, report = run_json(runner, "quotients", "fixtures:five-cycle")
    assert result.exit_code == 1
    assert report["order"] is None

    result, report = run_json(runner, "diagnostics", "fixtures:five-cycle")
    assert result.exit_code == 0
    assert report["t_vector"] == [0, 2, 3, 5]
    assert report["r_vector"] == [0, 1, 1, 2]
    log.info("✓ test_quotients_and_diagnostics passed")


def test_certify(runner):
    log.info("=== Starting test_certify ===")
    result, report = run_json(runner, "certify", "fixtures:dunce-hat")
    assert result.exit_code == 0
    assert report["certified"] is True
    result, report = run_json(runner, "certify", "--sr", "fixtures:rp2-test")
    assert result.exit_code == 1
    assert report["torsion_primes"] == [2]
    log.info("✓ test_certify passed")


@pytest.mark.parametrize(
    "args",
    [
        ["theorem2", "--random", "--seed", "42", "--n", "6", "--d", "3", "--trials", "5"],
        ["splitting", "fixtures:figure1-c", "--e", "13", "--f", "123"],
        ["prop24", "fixtures:figure1-c", "--e", "1 3"],
        ["strand", "fixtures:figure1-c"],
        ["stable", "fixtures:stable-5"],
        ["prop44", "fixtures:dunce-hat"],
    ],
)
def test_verify_passes(runner, args):
    result, report = run_json(runner, "verify", *args)
    assert result.exit_code == 0
    assert report["ok"] is True
    assert report["trials"] >= 1


def test_verify_failures_and_usage(runner):
    log.info("=== Starting test_verify_failures_and_usage ===")
    result, report = run_json(runner, "verify", "prop44", "fixtures:rp2-test")
    assert result.exit_code == 1
    assert report["failures"] == ["input: hypotheses not met"]
    assert run(runner, "verify", "theorem2").exit_code == 2
    assert run(runner, "verify", "prop44", "--random").exit_code == 2
    assert run(runner, "verify", "splitting", "fixtures:figure1-c").exit_code == 2
    assert run(runner, "verify", "bogus", "--random").exit_code == 2
    log.info("✓ test_verify_failures_and_usage passed")


def test_verify_random_defaults_to_seven_vertices():
    defaults = {param.name: param.default for param in verify.params}
    assert defaults["n"] == 7
    assert defaults["trials"] == 100


def test_verify_with_sequence_file(runner, tmp_path):
    steps = {"steps": [{"e": [1, 3], "A": [[1, 2, 3], [1, 3, 4]]}, {"e": [1, 4], "A": [[1, 2, 4]]}]}
    path = tmp_path / "steps.json"
    path.write_text(json.dumps(steps))
    result, report = run_json(runner, "verify", "strand", "fixtures:figure1-c", "--sequence", str(path))
    assert result.exit_code == 0
    assert report["ok"] is True


def test_fixtures_listing_and_dump(runner):
    log.info("=== Starting test_fixtures_listing_and_dump ===")
    result = run(runner, "fixtures")
    assert result.exit_code == 0
    assert len(result.stdout.splitlines()) == 15
    result = run(runner, "fixtures", "bowtie")
    assert result.stdout == "5 2\n1 2\n1 3\n2 3\n3 4\n3 5\n4 5\n"
    result = run(runner, "fixtures", "fixtures:example1-ideal", "--dump", "json")
    assert json.loads(result.stdout) == {"n": 5, "generators": [[1, 4, 5], [2, 3, 5]]}
    result, listing = run_json(runner, "fixtures")
    assert listing[0]["name"] == "figure1-c"
    log.info("✓ test_fixtures_listing_and_dump passed")


def test_hunt(runner, tmp_path):
    log.info("=== Starting test_hunt ===")
    # both chordality modes agree on graphs, so a graph hunt finds nothing
    result = run(runner, "hunt", "--n", "5", "--d", "2", "--trials", "5", "--seed", "3")
    assert result.exit_code == 3
    assert "no separating clutter" in result.output
    log.info("✓ test_hunt passed")
