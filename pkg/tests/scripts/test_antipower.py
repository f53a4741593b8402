import pytest
from apw.scripts.antipower import cli as antipower_cli


@pytest.fixture(scope="function")
def antipower(cli):
    def func(args, **kwargs):
        return cli(antipower_cli, args, **kwargs)

    return func


def test_antipower(antipower, data_dir):
    result = antipower([
        data_dir / "thue_morse.sub", "--seed", "0", "-n", "0", "-k", "3",
        "--ell-max", "64"
    ])
    assert result.output == "min_ell=5 ratio=1.667\n"


def test_antipower_not_found(antipower, data_dir):
    result = antipower([
        data_dir / "alternating.sub", "-n", "5", "-k", "3", "--ell-max", "64"
    ])
    assert result.output == "min_ell=none ratio=none\n"


def test_antipower_cantor_run(antipower, data_dir):
    result = antipower([
        data_dir / "cantor.sub", "-n", "27", "-k", "2", "--ell-max", "27"
    ])
    assert result.output == "min_ell=14 ratio=7.000\n"


def test_antipower_invalid_k(antipower, data_dir):
    result = antipower(
        [data_dir / "thue_morse.sub", "-k", "0", "--ell-max", "8"],
        success=False
    )
    assert result.exit_code == 2
