import pytest
from click.testing import CliRunner


@pytest.fixture()
def runner():
    # Newer versions of click always keep stderr apart and drop the flag.
    try:
        return CliRunner(mix_stderr=False)
    except TypeError:
        return CliRunner()


@pytest.fixture()
def settings_path(tmpdir):
    """
    Returns a function that writes a YAML settings file and returns its path.
    """
    def write(yaml_text):
        path = tmpdir.join("curvedim.yml")
        path.write(yaml_text)
        return str(path)

    return write


@pytest.fixture()
def twisted_cubic_path(tmpdir):
    path = tmpdir.join("twisted_cubic.res")
    path.write(
        "# the twisted cubic\n"
        "ambient P3\n"
        "level 0: 3 x -2\n"
        "level 1: 2 x -3\n"
    )
    return str(path)
