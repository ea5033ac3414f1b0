import os
import shlex
import subprocess
import sys

import pytest

from parrondo_qwalk import datafile


COIN_A = '2.395,0.513,0.909'
COIN_B = '2.611,1.176,2.313'


def run(*args, env=None):
    """Run the package CLI and capture its output."""
    command = [sys.executable, '-m', 'parrondo_qwalk']
    command.extend(str(arg) for arg in args)
    environment = {**os.environ, **(env or {})}
    return subprocess.run(
        command,
        capture_output=True,
        text=True,
        env=environment,
    )


def test_version():
    result = run('-V')
    assert result.returncode == 0
    assert result.stdout.startswith('parrondo_qwalk ')


def test_no_mode():
    assert run().returncode == 2


def test_run_abb(tmp_path):
    """The winning sequence drifts right after 100 steps."""
    path = tmp_path / 'abb.csv'
    result = run(
        'run',
        '--sequence', 'ABB',
        '--coin-a', COIN_A,
        '--coin-b', COIN_B,
        '--phi', '1.570796',
        '--steps', 100,
        '--theta', '0.785398',
        '--varphi', '4.712389',
        '--out', path,
    )
    assert result.returncode == 0, result.stderr
    metadata, columns, rows = datafile.read_csv(path)
    assert columns == ['step', 'expected_position', 'delta_p', 'entropy']
    assert len(rows) == 100
    assert [int(row[0]) for row in rows] == list(range(1, 101))
    assert float(rows[-1][1]) > 0
    assert metadata['sequence'] == 'ABB'
    assert metadata['phi'] == '1.570796'
    assert metadata['steps'] == '100'


def test_run_defaults(tmp_path):
    """The initial coin defaults to the balanced state."""
    path = tmp_path / 'one.csv'
    result = run(
        'run',
        '--sequence', 'A',
        '--coin-a', '0,0,0',
        '--coin-b', '0,0,0',
        '--phi', '0',
        '--steps', 1,
        '--out', path,
    )
    assert result.returncode == 0, result.stderr
    metadata, _, rows = datafile.read_csv(path)
    assert len(rows) == 1
    assert rows[0][0] == '1'
    assert float(rows[0][1]) == pytest.approx(0.0, abs=1e-15)
    assert abs(float(rows[0][3]) - 1.0) < 1e-12
    assert float(metadata['theta']) == pytest.approx(0.7853981633974483)


def test_run_json(tmp_path):
    path = tmp_path / 'walk.json'
    result = run(
        'run',
        '--sequence', 'AB',
        '--coin-a', COIN_A,
        '--coin-b', COIN_B,
        '--phi', '90d',
        '--steps', 5,
        '--format', 'json',
        '--out', path,
    )
    assert result.returncode == 0, result.stderr
    metadata = datafile.read_metadata(path)
    assert metadata['phi'] == '90d'


def test_missing_flag(tmp_path):
    """Missing required flags are usage errors that name the flag."""
    result = run(
        'run',
        '--sequence', 'ABB',
        '--coin-a', COIN_A,
        '--coin-b', COIN_B,
        '--steps', 10,
        '--out', tmp_path / 'x.csv',
    )
    assert result.returncode == 2
    assert '--phi' in result.stderr
    assert not (tmp_path / 'x.csv').exists()


def test_invalid_values(tmp_path):
    """Invalid physics values are usage errors."""
    common = ['--coin-a', COIN_A, '--coin-b', COIN_B, '--steps', 3]
    bad_sequence = run(
        'run', '--sequence', 'ABC', '--phi', '0', *common,
        '--out', tmp_path / 'x.csv',
    )
    assert bad_sequence.returncode == 2
    assert 'error' in bad_sequence.stderr
    bad_theta = run(
        'run', '--sequence', 'A', '--phi', '0', '--theta', '4', *common,
        '--out', tmp_path / 'y.csv',
    )
    assert bad_theta.returncode == 2


def test_reproduce_from_metadata(tmp_path):
    """The recorded command regenerates the file byte for byte."""
    first = tmp_path / 'first.csv'
    result = run(
        'run',
        '--sequence', 'ABB',
        '--coin-a', COIN_A,
        '--coin-b', '150d,67.4d,132.5d',
        '--phi', '3.14',
        '--steps', 12,
        '--out', first,
    )
    assert result.returncode == 0, result.stderr
    command = datafile.read_metadata(first)['command']
    second = tmp_path / 'second.csv'
    again = run(*shlex.split(command), '--out', second)
    assert again.returncode == 0, again.stderr
    assert first.read_bytes() == second.read_bytes()


def test_sweep_unknown_preset(tmp_path):
    result = run('sweep', '--preset', 'fig-9', '--out', tmp_path / 'x.csv')
    assert result.returncode == 2
    assert 'phase-scan' in result.stderr


def test_sweep_preset_conflict(tmp_path):
    """A preset fixes the physics parameters."""
    result = run(
        'sweep',
        '--preset', 'beta-scan',
        '--phi', '0',
        '--out', tmp_path / 'x.csv',
    )
    assert result.returncode == 2
    assert '--phi' in result.stderr


def test_custom_sweep(tmp_path):
    """A two-panel custom sweep writes one row per panel and point."""
    path = tmp_path / 'sweep.csv'
    svg = tmp_path / 'sweep.svg'
    result = run(
        'sweep',
        '--sequences', 'A,ABB',
        '--coin-a', COIN_A,
        '--coin-b', COIN_B,
        '--phi', '0',
        '--steps', 6,
        '--axis', 'phi:0:3.141592653589793:4',
        '--out', path,
        '--svg', svg,
        '--threads', 2,
        '-v',
    )
    assert result.returncode == 0, result.stderr
    assert 'Wrote 8 rows' in result.stderr
    metadata, columns, rows = datafile.read_csv(path)
    assert columns[:2] == ['sequence', 'phi']
    assert len(rows) == 8
    assert metadata['axis1'] == 'phi in [0.0, 3.141592653589793], 4 points'
    assert svg.exists()


def test_sweep_missing_axis(tmp_path):
    result = run(
        'sweep',
        '--sequences', 'A',
        '--coin-a', COIN_A,
        '--coin-b', COIN_B,
        '--phi', '0',
        '--steps', 6,
        '--out', tmp_path / 'x.csv',
    )
    assert result.returncode == 2
    assert '--axis' in result.stderr


def test_config_file(tmp_path):
    """Command-line flags override the configuration file."""
    cfg = tmp_path / 'sweep.cfg'
    cfg.write_text(
        "# two-axis sweep\n"
        "sequences = AB\n"
        f"coin_a = {COIN_A}\n"
        f"coin_b = {COIN_B}\n"
        "phi = 0\n"
        "steps = 4\n"
        "axis = theta:0:1:2\n"
        "axis = varphi:0:1:3\n"
        "record = full_series\n"
    )
    path = tmp_path / 'sweep.csv'
    result = run(
        'sweep',
        '--config', cfg,
        '--phi', '1.0',
        '--out', path,
    )
    assert result.returncode == 0, result.stderr
    metadata, columns, rows = datafile.read_csv(path)
    assert metadata['phi'] == '1.0'
    assert columns[:4] == ['sequence', 'theta', 'varphi', 'step']
    assert len(rows) == 2 * 3 * 4
    single = tmp_path / 'single.csv'
    result = run(
        'sweep',
        '--config', cfg,
        '--axis', 'phi:0:1:2',
        '--out', single,
    )
    assert result.returncode == 0, result.stderr
    _, columns, rows = datafile.read_csv(single)
    assert columns[1] == 'phi'
    assert len(rows) == 2 * 4


def test_config_zero_values(tmp_path):
    """A zero angle and a single step from the file reach the walk."""
    cfg = tmp_path / 'run.cfg'
    cfg.write_text(
        "sequence = A\n"
        "coin_a = 0,0,0\n"
        "coin_b = 0,0,0\n"
        "phi = 0\n"
        "theta = 0\n"
        "steps = 1\n"
    )
    path = tmp_path / 'up.csv'
    result = run('run', '--config', cfg, '--out', path)
    assert result.returncode == 0, result.stderr
    metadata, _, rows = datafile.read_csv(path)
    assert metadata['theta'] == '0'
    assert metadata['phi'] == '0'
    assert len(rows) == 1
    assert float(rows[0][1]) == 1.0


def test_config_missing(tmp_path):
    result = run(
        'sweep',
        '--config', tmp_path / 'missing.cfg',
        '--out', tmp_path / 'x.csv',
    )
    assert result.returncode == 1
    assert 'does not exist' in result.stderr


def test_classical_analytic():
    """The unbiased analysis shows the 5/13 stationary weight."""
    result = run('classical', '--analytic', '--c', '0')
    assert result.returncode == 0, result.stderr
    assert '0.384615' in result.stdout
    assert 'game A expected value = 0.0' in result.stdout


def test_classical_bias_range():
    result = run('classical', '--analytic', '--c', '0.2')
    assert result.returncode == 2
    assert '0.1' in result.stderr


def test_classical_simulation(tmp_path):
    """Seeded simulations are reproducible."""
    paths = [tmp_path / 'one.csv', tmp_path / 'two.csv']
    for path in paths:
        result = run(
            'classical',
            '--c', '0.005',
            '--sequence', 'ABB',
            '--steps', 200,
            '--trials', 500,
            '--seed', 3,
            '--out', path,
        )
        assert result.returncode == 0, result.stderr
    assert paths[0].read_bytes() == paths[1].read_bytes()
    metadata, columns, rows = datafile.read_csv(paths[0])
    assert columns == ['step', 'mean_capital', 'stderr']
    assert len(rows) == 200
    assert metadata['extension'] == 'True'
    assert float(metadata['p_b2']) == pytest.approx(0.745)
    missing = run('classical', '--c', '0', '--sequence', 'A', '--steps', 5)
    assert missing.returncode == 2
    assert '--trials' in missing.stderr


@pytest.mark.slow
def test_thread_independence(tmp_path):
    """Full-series tables do not depend on the worker count or the run."""
    outputs = []
    for threads in (1, 4, 8, 4):
        path = tmp_path / f"phase-{len(outputs)}.csv"
        result = run(
            'sweep',
            '--preset', 'phase-scan',
            '--threads', threads,
            '--out', path,
        )
        assert result.returncode == 0, result.stderr
        outputs.append(path.read_bytes())
    assert all(output == outputs[0] for output in outputs)
    _, columns, rows = datafile.read_csv(tmp_path / 'phase-0.csv')
    assert columns[:3] == ['sequence', 'phi', 'step']
    assert len(rows) == 4 * 128 * 100


def test_threads_variable(tmp_path):
    """The environment supplies the default worker count."""
    path = tmp_path / 'x.csv'
    args = [
        'sweep',
        '--sequences', 'A',
        '--coin-a', COIN_A,
        '--coin-b', COIN_B,
        '--phi', '0',
        '--steps', 3,
        '--axis', 'phi:0:1:2',
        '--out', path,
        '-v',
    ]
    result = run(*args, env={'PARRONDO_QWALK_THREADS': '2'})
    assert result.returncode == 0, result.stderr
    assert 'with 2 worker(s)' in result.stderr
    bad = run(*args, env={'PARRONDO_QWALK_THREADS': 'many'})
    assert bad.returncode == 2


@pytest.mark.slow
def test_report(tmp_path):
    """The report writes a table and a figure per preset."""
    directory = tmp_path / 'report'
    result = run(
        'report',
        '--out-dir', directory,
        '--presets', 'beta-scan', 'gamma-scan',
    )
    assert result.returncode == 0, result.stderr
    for name in ('beta-scan', 'gamma-scan'):
        metadata = datafile.read_metadata(directory / f"{name}.csv")
        assert metadata['command'] == f"sweep --preset {name}"
        assert metadata['preset'] == name
        assert (directory / f"{name}.svg").exists()
