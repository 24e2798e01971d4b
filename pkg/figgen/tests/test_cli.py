"""CLI behaviour: flag mode, spec-file mode, and the exit-code contract."""

import pytest
import yaml

from figgen import __version__
from figgen.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestFlagMode:
    def test_density_from_flags(self, capsys, tmp_path, density_bin):
        out = tmp_path / "fig.png"
        code, stdout, _ = run(
            capsys,
            "--kind", "density", "--input", str(density_bin),
            "--output", str(out), "--cone-R", "1.5", "--cone-c", "2",
        )
        assert code == 0
        assert f"wrote {out}" in stdout
        assert out.exists()

    def test_repeated_inputs_for_curves(self, capsys, tmp_path, leaks_csv):
        out = tmp_path / "m.png"
        code, stdout, _ = run(
            capsys,
            "--kind", "M-curves", "--input", str(leaks_csv),
            "--input", str(leaks_csv), "--output", str(out),
        )
        assert code == 0
        assert out.exists()

    def test_flags_require_the_full_triple(self, capsys, tmp_path):
        code, _, stderr = run(capsys, "--kind", "density")
        assert code == 1
        assert "need either" in stderr

    def test_cone_on_wrong_kind_is_a_spec_error(self, capsys, tmp_path, leaks_csv):
        code, _, stderr = run(
            capsys,
            "--kind", "M-curves", "--input", str(leaks_csv),
            "--output", str(tmp_path / "m.png"), "--cone-R", "1",
        )
        assert code == 1
        assert "only valid for" in stderr

    def test_missing_input_file_is_a_runtime_error(self, capsys, tmp_path):
        code, _, stderr = run(
            capsys,
            "--kind", "profiles", "--input", str(tmp_path / "gone.csv"),
            "--output", str(tmp_path / "p.png"),
        )
        assert code == 2
        assert "cannot read" in stderr

    def test_malformed_input_is_a_runtime_error(self, capsys, tmp_path, sweep_csv):
        code, _, stderr = run(
            capsys,
            "--kind", "profiles", "--input", str(sweep_csv),
            "--output", str(tmp_path / "p.png"),
        )
        assert code == 2
        assert "missing columns" in stderr

    def test_cli_rendering_is_deterministic(self, capsys, tmp_path, profiles_csv):
        out = tmp_path / "p.png"
        argv = ("--kind", "profiles", "--input", str(profiles_csv),
                "--output", str(out))
        assert run(capsys, *argv)[0] == 0
        first = out.read_bytes()
        assert run(capsys, *argv)[0] == 0
        assert out.read_bytes() == first


class TestSpecFileMode:
    def test_batch_render(self, capsys, tmp_path, profiles_csv, sweep_csv):
        doc = [
            {"kind": "profiles", "input": str(profiles_csv),
             "output": str(tmp_path / "p.png")},
            {"kind": "Mtilde-heatmap", "input": str(sweep_csv),
             "output": str(tmp_path / "h.png")},
        ]
        spec_path = tmp_path / "figs.yaml"
        spec_path.write_text(yaml.safe_dump(doc))
        code, stdout, _ = run(capsys, "--spec", str(spec_path))
        assert code == 0
        assert (tmp_path / "p.png").exists()
        assert (tmp_path / "h.png").exists()
        assert stdout.count("wrote") == 2

    def test_spec_and_flags_conflict(self, capsys, tmp_path, profiles_csv):
        spec_path = tmp_path / "figs.yaml"
        spec_path.write_text(
            yaml.safe_dump(
                {"kind": "profiles", "input": str(profiles_csv),
                 "output": str(tmp_path / "p.png")}
            )
        )
        code, _, stderr = run(capsys, "--spec", str(spec_path), "--kind", "density")
        assert code == 1
        assert "cannot be combined" in stderr

    def test_bad_spec_file(self, capsys, tmp_path):
        spec_path = tmp_path / "bad.yaml"
        spec_path.write_text("kind: [unclosed")
        code, _, stderr = run(capsys, "--spec", str(spec_path))
        assert code == 1
        assert "invalid YAML" in stderr


class TestParserBehaviour:
    def test_unknown_kind_exits_one(self):
        with pytest.raises(SystemExit) as exc:
            main(["--kind", "scatter", "--input", "a", "--output", "b.png"])
        assert exc.value.code == 1

    def test_unknown_flag_exits_one(self):
        with pytest.raises(SystemExit) as exc:
            main(["--nope"])
        assert exc.value.code == 1

    def test_version(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["--version"])
        assert exc.value.code == 0
        assert __version__ in capsys.readouterr().out
