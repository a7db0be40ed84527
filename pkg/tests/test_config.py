import json

from pytest import approx, mark, raises

from hblab.config import DEFAULT_CONFIG, THREADS_ENV, load_config, merge
from hblab.errors import UsageError
from hblab.util import Target, parse_complex, parse_param, parse_target


def test_defaults(monkeypatch):
    monkeypatch.delenv(THREADS_ENV, raising=False)
    config = load_config()
    assert config == DEFAULT_CONFIG
    assert config is not DEFAULT_CONFIG
    config["grid"]["angular_count"] = 8
    assert DEFAULT_CONFIG["grid"]["angular_count"] == 512


def test_merge_is_nested():
    config = merge({"grid": {"a": 1, "b": 2}, "tol": 1}, {"grid": {"b": 3}, "tol": 2})
    assert config == {"grid": {"a": 1, "b": 3}, "tol": 2}


def test_later_files_override(tmp_path, monkeypatch):
    monkeypatch.delenv(THREADS_ENV, raising=False)
    first = tmp_path / "first.json"
    first.write_text(json.dumps({"order": 32, "grid": {"rmax_exp": 12}}))
    second = tmp_path / "second.toml"
    second.write_text("order = 48\n\n[grid]\nangular_count = 64\n")
    config = load_config([str(first), str(second)])
    assert config["order"] == 48
    assert config["grid"] == {"angular_count": 64, "refine_depth": 5, "rmax_exp": 12, "divergence_ratio": 10.0}


@mark.parametrize(
    "name, content",
    [("bad.json", "{order: 1"), ("bad.toml", "order = "), ("list.json", "[1, 2]"), ("unknown.json", '{"colour": "red"}')],
)
def test_bad_config_files(tmp_path, name, content):
    path = tmp_path / name
    path.write_text(content)
    with raises(UsageError):
        load_config([str(path)])


def test_missing_config_file(tmp_path):
    with raises(UsageError):
        load_config([str(tmp_path / "absent.json")])


def test_threads_from_environment(monkeypatch):
    monkeypatch.setenv(THREADS_ENV, "4")
    assert load_config()["threads"] == 4
    monkeypatch.setenv(THREADS_ENV, "none")
    with raises(UsageError):
        load_config()
    monkeypatch.setenv(THREADS_ENV, "0")
    with raises(UsageError):
        load_config()


@mark.parametrize(
    "text, value", [("0.5", 0.5), ("0.5j", 0.5j), ("0.5i", 0.5j), ("-0.3+0.1i", -0.3 + 0.1j), ("1e-3-2j", 1e-3 - 2j), (" 0.2 ", 0.2)]
)
def test_parse_complex(text, value):
    assert parse_complex(text) == approx(value)


def test_parse_complex_rejects_garbage():
    with raises(UsageError):
        parse_complex("half")


def test_parse_param():
    assert parse_param(" p = 2.5") == ("p", "2.5")
    with raises(UsageError):
        parse_param("p")
    with raises(UsageError):
        parse_param("=2")


def test_parse_target():
    config = dict(DEFAULT_CONFIG)
    assert parse_target("ex22:p=2.5", config) == [Target("ex22", {"p": "2.5"})]
    assert parse_target("ex22", config, [("p", "4"), ("t", "0.5")]) == [Target("ex22", {"p": "4"})]
    assert parse_target("shear:b=0.3", config)[0].label == "shear:b=0.3"
    with raises(UsageError):
        parse_target("ex22:p=1", config)
    with raises(UsageError):
        parse_target("unknown", config)


def test_random_targets_expand():
    config = dict(DEFAULT_CONFIG, seed=10)
    targets = parse_target("random:count=3", config)
    assert [t.params["seed"] for t in targets] == ["10", "11", "12"]
    assert all(t.params["degree"] == "4" for t in targets)
    assert len(parse_target("random", config)) == config["random_count"]
    assert parse_target("random:seed=5", config)[0].params["seed"] == "5"
    with raises(UsageError):
        parse_target("random:seed=5,count=2", config)
    with raises(UsageError):
        parse_target("random:count=many", config)
