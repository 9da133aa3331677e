import math
from pathlib import Path

import pytest
from pydantic import ValidationError

from nu_lgi.config import RunConfig, format_config, parse_config, parse_grid
from nu_lgi.errors import ConfigError

CONFIGS = Path(__file__).resolve().parent.parent / "configs"


def read_config(name):
    return (CONFIGS / name).read_text(encoding="utf-8")


def test_figure_config_parses_with_units():
    cfg = parse_config(read_config("fig2.cfg"))
    p = cfg.params()
    assert p.theta == pytest.approx(0.187 * math.pi)
    assert p.dm2 == pytest.approx(7.54e-5)
    assert p.v_cc == 2.0
    assert p.phi == pytest.approx(math.pi / 4)
    k = cfg.coefficients()
    assert (k.c11, k.c22, k.c33, k.c12) == (0.1, 0.1, 0.1, 0.1)
    assert cfg.protocol.tau == 0.1
    assert cfg.scan.phi_envelope is False
    assert any("kossakowski.c11" in note for note in cfg.notes)


def test_defaults_without_a_file():
    cfg = parse_config("")
    assert cfg.params().v_cc == 2.0
    assert cfg.coefficients().is_zero
    assert cfg.output.precision == 12
    assert cfg.output.column_list("delta_k3") == ("delta_k3",)
    assert cfg.output.column_list("k3_pair") == ("k3_majorana",)


def test_aliases_must_agree():
    text = "[kossakowski]\nc11 = 0.1\nc22 = 0.1\nc12 = 0.05\nc21 = 0.06\n"
    with pytest.raises(ConfigError) as info:
        parse_config(text)
    assert info.value.line == 5
    assert info.value.field == "kossakowski.c21"
    assert "conflicting" in str(info.value)


def test_duplicate_key_is_rejected_with_its_line():
    with pytest.raises(ConfigError) as info:
        parse_config("[physics]\nv_cc = 1\nv_cc = 2\n")
    assert info.value.line == 3
    assert str(info.value).startswith("line 3: duplicate key")


@pytest.mark.parametrize(
    "text, line",
    [
        ("[physicks]\n", 1),
        ("[physics]\nmass = 1\n", 2),
        ("theta = 0.1\n", 1),
        ("[physics]\ntheta 0.1\n", 2),
        ("[physics]\nv_cc = 2 eV # inline comments are not stripped\n", 2),
        ("[physics]\nenergy = 1 mev\n", 2),
        ("[scan]\nworkers = many\n", 2),
        ("[scan]\nphi_envelope = maybe\n", 2),
    ],
)
def test_malformed_lines_report_their_line(text, line):
    with pytest.raises(ConfigError) as info:
        parse_config(text)
    assert info.value.line == line


def test_positivity_bound_failure_names_the_pair():
    text = "# comment\n[kossakowski]\nc11 = 0.1\nc22 = 0.1\nc12 = 0.3\n"
    with pytest.raises(ConfigError) as info:
        parse_config(text)
    assert info.value.line == 3
    assert "|c12| = 0.3 exceeds bound 0.1" in str(info.value)


def test_model_validation_errors_are_translated():
    with pytest.raises(ConfigError) as info:
        parse_config("[output]\nprecision = 18\n")
    assert info.value.field == "output.precision"
    assert info.value.line == 2
    with pytest.raises(ConfigError) as info:
        parse_config("[scan]\ngrid = 0:1\n")
    assert info.value.field == "scan.grid"
    with pytest.raises(ConfigError):
        parse_config("[protocol]\ntau = 0\n")
    with pytest.raises(ConfigError):
        parse_config("[physics]\nenergy = 0 eV\n")


def test_overrides_apply_after_the_file():
    cfg = parse_config(read_config("fig1.cfg"), ["physics.v_cc=5 eV", "scan.workers=3", "physics.v_cc=6 eV"])
    assert cfg.params().v_cc == 6.0
    assert cfg.scan.workers == 3
    with pytest.raises(ConfigError):
        parse_config("", ["v_cc=5"])
    with pytest.raises(ConfigError):
        parse_config("", ["physics.mass=5"])


def test_grid_bounds_accept_pi():
    grid = parse_grid("0:2pi:65")
    assert grid.stop == pytest.approx(2 * math.pi)
    assert grid.count == 65
    assert parse_grid("1:20:77").points()[0] == 1.0


def test_format_round_trip():
    for name in ("fig1.cfg", "fig2.cfg", "fig3.cfg"):
        cfg = parse_config(read_config(name), ["output.csv=out.csv"])
        again = parse_config(format_config(cfg))
        assert again.model_dump(exclude={"notes"}) == cfg.model_dump(exclude={"notes"})


def test_scan_spec_from_config():
    cfg = parse_config(read_config("fig2.cfg"), ["scan.phi_envelope=true"])
    spec = cfg.scan_spec("v_cc")
    assert spec.phi_envelope is True
    assert spec.objective == "abs_delta"
    assert spec.grid.count == 200
    assert spec.base.coefficients.c12 == 0.1
    assert cfg.scan_spec("phi").phi_envelope is False
    assert cfg.default_grid("c12").stop == pytest.approx(0.1)


def test_run_config_is_frozen():
    cfg = RunConfig()
    with pytest.raises(ValidationError):
        cfg.protocol.tau = 1.0  # type: ignore[misc]


def test_readme_config_example_parses():
    readme = (Path(__file__).resolve().parent.parent / "README.md").read_text(encoding="utf-8")
    block = readme.split("## Config files", 1)[1].split("Bare numbers", 1)[0]
    text = "\n".join(line[4:] for line in block.splitlines() if line.startswith("    ")) + "\n"
    cfg = parse_config(text)
    assert cfg.scan.mode == "delta_k3"
    assert cfg.scan.phi_envelope is False
    assert cfg.coefficients().c12 == 0.1
    assert cfg.params().theta == pytest.approx(0.187 * math.pi)
