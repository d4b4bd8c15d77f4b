"""Command-line behaviour: outputs, exit codes, determinism."""

import io

import pytest

from mvcodes import chain_wajsberg, format_algebra, format_code, parse_algebra
from mvcodes.cli import run

from conftest import (
    CODE_CYCLED,
    CODE_INTRANSITIVE,
    CODE_PROD23,
    CODE_PROD24,
    CODE_PROD32,
    CODE_PROD42,
    CODE_PROD222,
    CODE_SIX,
    CODE_TRIPLE,
    PROD23,
    PROD24,
    PROD32,
    PROD42,
    PROD222,
    SIX_CYCLED,
    SIX_IMPL,
    code_of,
)


def invoke(argv):
    out, err = io.StringIO(), io.StringIO()
    status = run(argv, out=out, err=err)
    return status, out.getvalue(), err.getvalue()


@pytest.fixture
def six_bck_file(tmp_path, six_bck):
    path = tmp_path / "six.alg"
    path.write_text(format_algebra(six_bck))
    return path


@pytest.fixture
def six_code_file(tmp_path):
    path = tmp_path / "six.code"
    path.write_text(format_code(code_of(CODE_SIX)))
    return path


class TestVerify:
    def test_valid_bck(self, six_bck_file):
        status, out, _ = invoke(["verify", str(six_bck_file)])
        assert status == 0
        assert out == "valid: bounded commutative BCK\n"

    def test_valid_wajsberg(self, tmp_path):
        path = tmp_path / "w.alg"
        path.write_text(format_algebra(chain_wajsberg(3)))
        status, out, _ = invoke(["verify", str(path)])
        assert status == 0
        assert out == "valid: Wajsberg\n"

    def test_invalid_algebra_exits_2(self, tmp_path):
        path = tmp_path / "bad.alg"
        path.write_text("kind: bck\norder: 2\nzero: 0 one: 1\n0 0\n1 1\n")
        status, out, _ = invoke(["verify", str(path)])
        assert status == 2
        assert out.startswith("invalid: bounded commutative BCK\n")
        assert "violated" in out

    def test_missing_file_exits_1(self):
        status, _, err = invoke(["verify", "/nonexistent.alg"])
        assert status == 1
        assert "error" in err


class TestConvert:
    def test_bck_to_wajsberg(self, six_bck_file):
        status, out, _ = invoke(["convert", str(six_bck_file), "--to", "wajsberg"])
        assert status == 0
        assert parse_algebra(out).circ.rows == SIX_IMPL

    def test_malformed_input_exits_1(self, tmp_path):
        path = tmp_path / "junk.alg"
        path.write_text("kind: nope\n")
        status, _, err = invoke(["convert", str(path), "--to", "mv"])
        assert status == 1
        assert "error" in err

    def test_unverifiable_input_exits_2(self, tmp_path):
        path = tmp_path / "bad.alg"
        path.write_text("kind: bck\norder: 2\nzero: 0 one: 1\n0 0\n1 1\n")
        status, _, err = invoke(["convert", str(path), "--to", "mv"])
        assert status == 2


class TestCodeAndSkeleton:
    def test_code_output(self, six_bck_file):
        status, out, _ = invoke(["code", str(six_bck_file)])
        assert status == 0
        assert out == "\n".join(CODE_SIX) + "\n"

    def test_skeleton_output(self, six_bck_file):
        status, out, _ = invoke(["skeleton", str(six_bck_file)])
        assert status == 0
        assert out.splitlines()[0] == "######"
        assert out.splitlines()[1] == ".#.###"

    def test_distance(self, six_bck_file):
        status, out, _ = invoke(["distance", str(six_bck_file), "1", "2"])
        assert status == 0
        assert out == "3\n"

    def test_mindist(self, six_code_file):
        status, out, _ = invoke(["mindist", str(six_code_file)])
        assert status == 0
        assert out == "1\n"


class TestEnumerate:
    def test_summary_line(self):
        status, out, _ = invoke(["enumerate", "6"])
        assert status == 0
        lines = out.splitlines()
        assert lines[0] == "n=6 pi=1 total=2"
        assert lines.count("---") == 2

    def test_output_directory(self, tmp_path):
        outdir = tmp_path / "algebras"
        status, out, _ = invoke(["enumerate", "6", "--output", str(outdir)])
        assert status == 0
        names = sorted(p.name for p in outdir.iterdir())
        assert names == ["w6_2_3.alg", "w6_chain.alg"]
        parsed = parse_algebra((outdir / "w6_chain.alg").read_text())
        assert parsed == chain_wajsberg(6)


class TestAttach:
    def test_attach_writes_algebra(self, six_code_file):
        status, out, _ = invoke(["attach", str(six_code_file)])
        assert status == 0
        body = out.split("---\n", 1)[1]
        assert parse_algebra(body).circ.rows == SIX_IMPL
        assert "# catalog: n=6 factors=2x3" in out
        assert "# relabeling: 0,1,3,2,4,5" in out

    def test_attach_to_bck(self, six_code_file):
        status, out, _ = invoke(["attach", str(six_code_file), "--to", "bck"])
        assert status == 0
        body = out.split("---\n", 1)[1]
        assert "kind: bck" in body

    def test_attach_unsorted_rows(self, tmp_path):
        path = tmp_path / "c.code"
        path.write_text("\n".join(CODE_CYCLED) + "\n")
        status, out, _ = invoke(["attach", str(path)])
        assert status == 0
        body = out.split("---\n", 1)[1]
        assert parse_algebra(body).circ.rows == SIX_CYCLED

    @pytest.mark.parametrize(
        "words,table",
        [
            (CODE_PROD23, PROD23),
            (CODE_SIX, SIX_IMPL),
            (CODE_CYCLED, SIX_CYCLED),
            (CODE_PROD32, PROD32),
            (CODE_PROD42, PROD42),
            (CODE_PROD24, PROD24),
            (CODE_PROD222, PROD222),
        ],
    )
    def test_every_fixture_code_end_to_end(self, tmp_path, words, table):
        path = tmp_path / "c.code"
        path.write_text("\n".join(words) + "\n")
        status, out, _ = invoke(["attach", str(path)])
        assert status == 0
        body = out.split("---\n", 1)[1]
        attached = parse_algebra(body)
        assert attached.circ.rows == table
        # write the attached algebra back out and verify it through the CLI
        alg_path = tmp_path / "attached.alg"
        alg_path.write_text(body)
        status, out, _ = invoke(["verify", str(alg_path)])
        assert status == 0
        assert out == "valid: Wajsberg\n"

    def test_rejection_exits_2(self, tmp_path):
        path = tmp_path / "r.code"
        path.write_text("\n".join(CODE_INTRANSITIVE) + "\n")
        status, out, err = invoke(["attach", str(path)])
        assert status == 2
        assert out == ""
        assert "transitivity-failure" in err
        assert "witness (1, 3, 4)" in err

    def test_non_square_exits_1(self, tmp_path):
        path = tmp_path / "r.code"
        path.write_text("011\n101\n")
        status, _, err = invoke(["attach", str(path)])
        assert status == 1

    def test_output_directory(self, tmp_path, six_code_file):
        outdir = tmp_path / "attached"
        status, out, _ = invoke(
            ["attach", str(six_code_file), "--output", str(outdir)]
        )
        assert status == 0
        assert out == ""
        (name,) = [p.name for p in outdir.iterdir()]
        assert name == "attached_1_wajsberg.alg"
        assert parse_algebra((outdir / name).read_text()).circ.rows == SIX_IMPL

    def test_all_matches_on_cube(self, tmp_path):
        path = tmp_path / "cube.code"
        path.write_text("\n".join(CODE_PROD222) + "\n")
        status, out, _ = invoke(["attach", str(path), "--all"])
        assert status == 0
        assert out.count("---") == 6  # six relabellings, one table
        tables = {
            parse_algebra(chunk).circ.rows
            for chunk in out.split("---\n")[1:]
        }
        assert tables == {PROD222}


class TestEmbed:
    def test_summary_and_host(self, tmp_path):
        path = tmp_path / "v.code"
        path.write_text("\n".join(CODE_TRIPLE) + "\n")
        status, out, _ = invoke(["embed", str(path)])
        assert status == 0
        lines = out.splitlines()
        assert lines[1] == "q=6 factors=2x3 columns=2,3,4"
        assert "# restricted code" in out
        tail = out.split("# restricted code\n", 1)[1]
        assert tail == "111\n011\n101\n010\n001\n000\n"

    def test_all_flag_reaches_two_orders(self, tmp_path):
        path = tmp_path / "v.code"
        path.write_text("011\n101\n")
        status, out, _ = invoke(["embed", str(path), "--all", "--max-order", "8"])
        assert status == 0
        qs = {line.split()[0] for line in out.splitlines() if line.startswith("q=")}
        assert {"q=4", "q=6", "q=8"} <= qs

    def test_exhausted_exits_2(self, tmp_path):
        path = tmp_path / "v.code"
        path.write_text("01\n10\n")
        status, _, err = invoke(["embed", str(path), "--max-order", "3"])
        assert status == 2
        assert "no embedding" in err

    def test_output_directory(self, tmp_path):
        path = tmp_path / "v.code"
        path.write_text("\n".join(CODE_TRIPLE) + "\n")
        outdir = tmp_path / "embeddings"
        status, _, _ = invoke(["embed", str(path), "--output", str(outdir)])
        assert status == 0
        body = (outdir / "embedding_1.txt").read_text()
        assert body.startswith("q=6 factors=2x3 columns=2,3,4\n")


class TestUsage:
    def test_unknown_command(self):
        status, _, err = invoke(["frobnicate"])
        assert status == 64
        assert "usage error" in err

    def test_missing_argument(self):
        status, _, _ = invoke(["verify"])
        assert status == 64

    def test_bad_flag_value(self, six_bck_file):
        status, _, _ = invoke(["convert", str(six_bck_file), "--to", "ring"])
        assert status == 64


def test_output_is_deterministic(six_bck_file, six_code_file):
    for argv in (
        ["code", str(six_bck_file)],
        ["enumerate", "8"],
        ["attach", str(six_code_file)],
    ):
        assert invoke(argv) == invoke(argv)
