import pytest

from tetramer.config import OUT_DIR_ENV, get_preset, load_config, mu_b_over_kb, output_dir, presets, resolve_output


def test_defaults():
    assert mu_b_over_kb() == pytest.approx(0.67171)
    ps = presets()
    assert set(ps) == {"a", "b", "c"}
    assert (ps["b"].J_over_kB, ps["b"].J1_over_kB, ps["b"].g) == (45, 4.5, 2.2)


def test_unknown_preset():
    with pytest.raises(KeyError):
        get_preset("z")


def test_user_override(tmp_path):
    f = tmp_path / "c.toml"
    f.write_text('[presets.a]\nJ1 = 30.0\n[presets.d]\nJ = 1.0\nJ1 = 2.0\ng = 2.0\n')
    cfg = load_config(f)
    assert get_preset("a", cfg).J1_over_kB == 30 and get_preset("a", cfg).J_over_kB == 45
    assert get_preset("d", cfg).g == 2.0
    assert load_config()["presets"]["a"]["J1"] == 45


def test_bad_g(tmp_path):
    f = tmp_path / "c.toml"
    f.write_text('[presets.a]\ng = -1.0\n')
    with pytest.raises(ValueError):
        presets(load_config(f))


def test_env_override_output_dir(monkeypatch, tmp_path):
    monkeypatch.delenv(OUT_DIR_ENV, raising=False)
    assert str(output_dir()) == "."
    monkeypatch.setenv(OUT_DIR_ENV, str(tmp_path))
    assert output_dir() == tmp_path
    assert resolve_output("x.csv") == tmp_path / "x.csv"
    assert str(resolve_output("/abs/x.csv")) == "/abs/x.csv"
